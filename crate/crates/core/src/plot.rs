//! SVG pictures of rank-two fans: `SL_3` drawn in the plane `Σ x_i = 0`
//! with the coordinate directions at 120°, `Sp_4` in its own coordinates.

use std::collections::BTreeSet;
use std::fmt::Write;

use num::BigRational;

use crate::error::{Error, Result};
use crate::rational::{int, to_f64};
use crate::weights_fans::{Fan, GroupTag};

const SIZE: f64 = 400.0;
const RADIUS: f64 = 180.0;

/// Lift of chart coordinates `(a, b)` to a point of the apartment.
fn lift(group: GroupTag, a: i64, b: i64) -> Vec<BigRational> {
    match group {
        GroupTag::Sl(_) => vec![int(a), int(b), int(0)],
        GroupTag::Sp(_) => vec![int(a), int(b)],
    }
}

/// Planar picture of an apartment point.
fn project(group: GroupTag, x: &[f64]) -> (f64, f64) {
    match group {
        GroupTag::Sl(_) => {
            let h = 3f64.sqrt() / 2.0;
            (x[0] - 0.5 * x[1] - 0.5 * x[2], h * (x[1] - x[2]))
        }
        GroupTag::Sp(_) => (x[0], x[1]),
    }
}

fn check_rank(group: GroupTag) -> Result<()> {
    match group {
        GroupTag::Sl(3) | GroupTag::Sp(2) => Ok(()),
        GroupTag::Sl(n) => Err(Error::UnsupportedRank(n - 1)),
        GroupTag::Sp(n) => Err(Error::UnsupportedRank(n)),
    }
}

/// Boundary rays of the maximal cones, as primitive chart vectors.
pub fn rays(fan: &Fan) -> Result<BTreeSet<(i64, i64)>> {
    let group = fan.group();
    check_rank(group)?;
    let mut out = BTreeSet::new();
    for cone in fan.cones().values() {
        for f in cone.functionals() {
            let (g0, g1) = (f[0], f[1]);
            for (a, b) in [(-g1, g0), (g1, -g0)] {
                if (a, b) != (0, 0) && cone.contains(&lift(group, a, b)) {
                    let d = num::integer::gcd(a, b);
                    out.insert((a / d, b / d));
                }
            }
        }
    }
    Ok(out)
}

fn unit(group: GroupTag, a: i64, b: i64) -> (f64, f64) {
    let x: Vec<f64> = lift(group, a, b).iter().map(to_f64).collect();
    let (u, v) = project(group, &x);
    let len = (u * u + v * v).sqrt();
    (u / len, v / len)
}

/// The fan's boundary rays, one label per maximal cone at the mean of its
/// rays, and optional overlay points (apartment coordinates) drawn as dots
/// scaled so that `extent` reaches the edge of the figure.
pub fn fan_svg(fan: &Fan, overlay: &[Vec<BigRational>], extent: i64) -> Result<String> {
    let group = fan.group();
    let rays = rays(fan)?;
    let c = SIZE / 2.0;
    let mut s = String::new();
    writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#).unwrap();
    writeln!(s, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#).unwrap();
    for &(a, b) in &rays {
        let (u, v) = unit(group, a, b);
        writeln!(
            s,
            r#"<line x1="{c:.3}" y1="{c:.3}" x2="{:.3}" y2="{:.3}" stroke="black" stroke-width="1.5"><title>({a},{b})</title></line>"#,
            c + RADIUS * u,
            c - RADIUS * v
        )
        .unwrap();
    }
    for (mu, cone) in fan.cones() {
        let inside: Vec<(f64, f64)> = rays
            .iter()
            .filter(|&&(a, b)| cone.contains(&lift(group, a, b)))
            .map(|&(a, b)| unit(group, a, b))
            .collect();
        let (mut u, mut v) = inside.iter().fold((0.0, 0.0), |acc, p| (acc.0 + p.0, acc.1 + p.1));
        let len = (u * u + v * v).sqrt();
        if len > 1e-9 {
            u /= len;
            v /= len;
        }
        let label: Vec<String> = mu.coords().iter().map(i64::to_string).collect();
        writeln!(
            s,
            r#"<text x="{:.3}" y="{:.3}" font-family="monospace" font-size="12" text-anchor="middle">({})</text>"#,
            c + 0.6 * RADIUS * u,
            c - 0.6 * RADIUS * v,
            label.join(",")
        )
        .unwrap();
    }
    let scale = RADIUS / extent.max(1) as f64;
    for x in overlay {
        let (u, v) = project(group, &x.iter().map(to_f64).collect::<Vec<_>>());
        writeln!(s, r#"<circle cx="{:.3}" cy="{:.3}" r="2.5" fill="crimson"/>"#, c + scale * u, c - scale * v).unwrap();
    }
    s.push_str("</svg>\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights_fans::{fan_f_rho, weights_identity_sl, weights_irrep_sl, weights_standard_sp};
    use crate::tableaux::Partition;

    #[test]
    fn sl3_identity_has_three_rays_at_120_degrees() {
        let fan = fan_f_rho(&weights_identity_sl(3));
        let r = rays(&fan).unwrap();
        assert_eq!(r.len(), 3);
        let dirs: Vec<(f64, f64)> = r.iter().map(|&(a, b)| unit(GroupTag::Sl(3), a, b)).collect();
        for i in 0..3 {
            for j in i + 1..3 {
                let dot = dirs[i].0 * dirs[j].0 + dirs[i].1 * dirs[j].1;
                assert!((dot + 0.5).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn sp4_standard_has_four_diagonal_rays() {
        let fan = fan_f_rho(&weights_standard_sp(2));
        let r: Vec<_> = rays(&fan).unwrap().into_iter().collect();
        assert_eq!(r, vec![(-1, -1), (-1, 1), (1, -1), (1, 1)]);
    }

    #[test]
    fn adjoint_sl3_has_six_rays() {
        let lambda = Partition::new(vec![2, 1, 0]).unwrap();
        let fan = fan_f_rho(&weights_irrep_sl(&lambda, 3).unwrap());
        assert_eq!(rays(&fan).unwrap().len(), 6);
    }

    #[test]
    fn higher_rank_rejected() {
        let fan = fan_f_rho(&weights_identity_sl(4));
        assert_eq!(fan_svg(&fan, &[], 1), Err(Error::UnsupportedRank(3)));
    }

    #[test]
    fn svg_is_deterministic() {
        let fan = fan_f_rho(&weights_standard_sp(2));
        let a = fan_svg(&fan, &[vec![int(1), int(1)]], 2).unwrap();
        assert_eq!(a, fan_svg(&fan, &[vec![int(1), int(1)]], 2).unwrap());
        assert_eq!(a.matches("<line").count(), 4);
        assert_eq!(a.matches("<text").count(), 4);
    }
}
