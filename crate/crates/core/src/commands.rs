//! Command implementations behind the binary. Each takes parsed arguments
//! and returns the JSON (or SVG) document to print.

use std::collections::BTreeSet;

use num::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::apartment::ApartmentPoint;
use crate::compactification::{boundary_stabilizes, sp_boundary_point, sp_boundary_stabilizes, BoundaryPoint, FanDirection};
use crate::error::{Error, Result};
use crate::matrix::FieldMatrix;
use crate::plot::fan_svg;
use crate::rational::{format_rational, parse_rational};
use crate::sampling;
use crate::suites::{self, Rep, SuiteParams, SuiteReport};
use crate::symplectic::{is_symplectic, sp_stabilizer_membership, SpApartmentPoint};
use crate::tableaux::{schur_eval, Partition};
use crate::tropical::{tropicalize, valuation_inequality_oracle, TropVector};
use crate::valued_field::FieldSpec;
use crate::weights_fans::{fan_f_rho, skeleton_member, trop_hypersurface_member, weights_standard_sp};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    Sln,
    Sp2n,
}

/// Global options shared by every subcommand.
#[derive(Debug, Clone, Copy)]
pub struct Context {
    pub spec: FieldSpec,
    pub group: Group,
    pub seed: Option<u64>,
}

impl Context {
    fn seed(&self) -> Result<u64> {
        self.seed
            .ok_or_else(|| Error::Parse("--seed is required for randomized runs".into()))
    }
}

/// Inline JSON, or else the path of a file holding it.
pub fn load_json(arg: &str) -> Result<Value> {
    if let Ok(v) = serde_json::from_str(arg) {
        return Ok(v);
    }
    let text = std::fs::read_to_string(arg)
        .map_err(|e| Error::Parse(format!("`{arg}` is neither JSON nor a readable file: {e}")))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{arg}: {e}")))
}

pub fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad list entry `{t}` in `{s}`"))))
        .collect()
}

pub fn parse_rationals(s: &str) -> Result<Vec<BigRational>> {
    s.split(',').map(|t| parse_rational(t.trim())).collect()
}

/// Representation from `--rep` with its `--n` or `--lambda`.
pub fn parse_rep(kind: &str, n: Option<usize>, lambda: Option<&str>) -> Result<Rep> {
    let need_n = || n.ok_or_else(|| Error::Parse(format!("--rep {kind} needs --n")));
    match kind {
        "identity" => Ok(Rep::Identity(need_n()?)),
        "sp" => Ok(Rep::Sp(need_n()?)),
        "schur" => {
            let parts: Vec<usize> = parse_list(lambda.ok_or_else(|| Error::Parse("--rep schur needs --lambda".into()))?)?;
            let n = n.unwrap_or(parts.len());
            Ok(Rep::Schur(Partition::new(parts)?, n))
        }
        other => Err(Error::Parse(format!("unknown representation `{other}`, expected identity, sp or schur"))),
    }
}

fn check_group(ctx: &Context, g: &FieldMatrix) -> Result<()> {
    match ctx.group {
        Group::Sln if !g.has_determinant_one() => Err(Error::DeterminantNotOne),
        Group::Sp2n if !is_symplectic(g)? => Err(Error::NotSymplectic),
        _ => Ok(()),
    }
}

/// With one matrix: the stabilization predicate, the tropical matrix and the
/// image of the point. With several: the tropicalization of the product and
/// the composite of the tropicalizations applied to the point, which need
/// not agree.
pub fn cmd_stabilize(ctx: &Context, matrices: &[Value], point: &Value, boundary: bool) -> Result<Value> {
    let gs: Vec<FieldMatrix> = matrices
        .iter()
        .map(|m| FieldMatrix::from_json(ctx.spec, m))
        .collect::<Result<_>>()?;
    if gs.is_empty() {
        return Err(Error::Parse("at least one matrix is required".into()));
    }
    if gs.len() > 1 {
        return composite(&gs, point);
    }
    let g = &gs[0];
    check_group(ctx, g)?;
    let trop = tropicalize(g)?;
    if boundary {
        if ctx.group == Group::Sp2n {
            return Err(Error::Parse("use boundary-stabilize with --direction for sp2n boundary points".into()));
        }
        return boundary_report(g, &BoundaryPoint::from_json(point)?);
    }
    match ctx.group {
        Group::Sln => {
            let x = ApartmentPoint::from_json(point)?;
            let tx = x.to_trop_vector();
            let image = trop.apply(&tx)?;
            Ok(json!({
                "field": ctx.spec.to_json(),
                "group": "sln",
                "matrix": g.to_json(),
                "point": x.to_json(),
                "tropical_matrix": trop.to_json(),
                "image": image.to_json(),
                "stabilizes": image == tx,
                "valuation_oracle": valuation_inequality_oracle(g, &tx)?,
            }))
        }
        Group::Sp2n => {
            let x = SpApartmentPoint::from_json(point)?;
            let tx = TropVector::from_rationals(crate::symplectic::embed_point(&x).coords());
            let image = trop.apply(&tx)?;
            Ok(json!({
                "field": ctx.spec.to_json(),
                "group": "sp2n",
                "matrix": g.to_json(),
                "point": x.to_json(),
                "embedded_point": tx.to_json(),
                "tropical_matrix": trop.to_json(),
                "image": image.to_json(),
                "stabilizes": sp_stabilizer_membership(g, &x)?,
            }))
        }
    }
}

fn composite(gs: &[FieldMatrix], point: &Value) -> Result<Value> {
    let x = TropVector::from_json(point)?;
    let mut product = gs[0].clone();
    for g in &gs[1..] {
        product = product.mul(g)?;
    }
    let of_product = tropicalize(&product)?.apply(&x)?;
    let mut step = x.clone();
    for g in gs.iter().rev() {
        step = tropicalize(g)?.apply(&step)?;
    }
    Ok(json!({
        "point": x.to_json(),
        "product": product.to_json(),
        "product_tropical": tropicalize(&product)?.to_json(),
        "tropical_of_product": of_product.to_json(),
        "composite_of_tropicals": step.to_json(),
        "agree": of_product == step,
    }))
}

fn boundary_report(g: &FieldMatrix, b: &BoundaryPoint) -> Result<Value> {
    let trop = tropicalize(g)?;
    let image = trop.apply(b.coords())?;
    Ok(json!({
        "matrix": g.to_json(),
        "point": b.to_json(),
        "stratum": b.stratum(),
        "tropical_matrix": trop.to_json(),
        "image": image.to_json(),
        "stabilizes": boundary_stabilizes(g, b)?,
        "block_oracle": crate::compactification::block_condition_oracle(g, b)?,
    }))
}

/// Boundary stabilization. For `sln` the point is a boundary point; for
/// `sp2n` it is an apartment point together with a fan direction of the
/// standard representation.
pub fn cmd_boundary_stabilize(ctx: &Context, matrix: &Value, point: &Value, direction: Option<&str>) -> Result<Value> {
    let g = FieldMatrix::from_json(ctx.spec, matrix)?;
    check_group(ctx, &g)?;
    match ctx.group {
        Group::Sln => boundary_report(&g, &BoundaryPoint::from_json(point)?),
        Group::Sp2n => {
            let x = SpApartmentPoint::from_json(point)?;
            let fan = fan_f_rho(&weights_standard_sp(x.rank()));
            let d = match direction {
                Some(c) => FanDirection::from_point(&fan, &parse_rationals(c)?)?,
                None => FanDirection::trivial(&fan),
            };
            let b = sp_boundary_point(&x, &d)?;
            Ok(json!({
                "matrix": g.to_json(),
                "point": x.to_json(),
                "direction": d.point().iter().map(format_rational).collect::<Vec<_>>(),
                "cone": d.cone().functionals().iter().collect::<Vec<_>>(),
                "boundary_point": b.to_json(),
                "stratum": b.stratum(),
                "stabilizes": sp_boundary_stabilizes(&g, &x, &d)?,
            }))
        }
    }
}

/// Options of `verify`; suites ignore what they do not use.
#[derive(Debug, Clone)]
pub struct VerifyArgs {
    pub suite: String,
    pub n: usize,
    pub count: usize,
    pub points: usize,
    pub rep: Option<Rep>,
}

pub fn cmd_verify(ctx: &Context, args: &VerifyArgs) -> Result<SuiteReport> {
    let seed = ctx.seed()?;
    let rep = args.rep.clone().unwrap_or(match ctx.group {
        Group::Sln => Rep::Identity(args.n),
        Group::Sp2n => Rep::Sp(args.n),
    });
    let name = match (args.suite.as_str(), ctx.group) {
        ("prop24" | "parahoric", Group::Sp2n) => "sp",
        (s, _) => s,
    };
    let params = SuiteParams { spec: ctx.spec, n: args.n, count: args.count, points: args.points, seed, rep };
    suites::run_suite(name, &params)
}

pub fn cmd_fan(rep: &Rep) -> Result<Value> {
    let rho = rep.character()?;
    let fan = fan_f_rho(&rho);
    let mut out = fan.to_json();
    out["rep"] = rep.to_json();
    out["count"] = json!(fan.len());
    Ok(out)
}

pub fn cmd_schur(lambda: &Partition, z: &[BigRational]) -> Result<Value> {
    let s = schur_eval(lambda, z)?;
    Ok(json!({
        "lambda": lambda.parts(),
        "z": z.iter().map(format_rational).collect::<Vec<_>>(),
        "tableaux": format_rational(&s.tableaux),
        "bialternant": s.bialternant.as_ref().map(format_rational),
        "agree": s.agree(),
    }))
}

fn sample_points(dim: usize, count: usize, seed: u64) -> Vec<Vec<BigRational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|k| {
            if k % 2 == 0 {
                sampling::rational_vector(dim, 1, 3, &mut rng)
            } else {
                sampling::rational_vector(dim, 6, 3, &mut rng)
            }
        })
        .collect()
}

/// Sampled points with their hypersurface and skeleton membership.
pub fn cmd_hypersurface(ctx: &Context, rep: &Rep, sample: usize) -> Result<Value> {
    let seed = ctx.seed()?;
    let rho = rep.character()?;
    let fan = fan_f_rho(&rho);
    let samples: Vec<Value> = sample_points(rho.group().dim(), sample, seed)
        .into_iter()
        .map(|x| {
            json!({
                "x": x.iter().map(format_rational).collect::<Vec<_>>(),
                "hypersurface": trop_hypersurface_member(&rho, ctx.spec, &x),
                "skeleton": skeleton_member(&fan, &x),
            })
        })
        .collect();
    let agree = samples.iter().all(|s| s["hypersurface"] == s["skeleton"]);
    let hits = samples.iter().filter(|s| s["hypersurface"] == json!(true)).count();
    Ok(json!({
        "rep": rep.to_json(),
        "p": ctx.spec.p(),
        "seed": seed,
        "count": sample,
        "on_hypersurface": hits,
        "agree": agree,
        "samples": samples,
    }))
}

/// SVG of a rank-two fan, with sampled hypersurface points when `sample > 0`.
pub fn cmd_plot(ctx: &Context, rep: &Rep, sample: usize) -> Result<String> {
    let rho = rep.character()?;
    let fan = fan_f_rho(&rho);
    let extent = 3;
    let overlay: Vec<Vec<BigRational>> = if sample == 0 {
        Vec::new()
    } else {
        let seed = ctx.seed()?;
        sample_points(rho.group().dim(), sample, seed)
            .into_iter()
            .filter(|x| trop_hypersurface_member(&rho, ctx.spec, x))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    };
    fan_svg(&fan, &overlay, extent)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(group: Group) -> Context {
        Context { spec: FieldSpec::qp(2).unwrap(), group, seed: Some(1) }
    }

    #[test]
    fn identity_fixes_origin() {
        let out = cmd_stabilize(&ctx(Group::Sln), &[json!([["1", "0"], ["0", "1"]])], &json!(["0", "0"]), false).unwrap();
        assert_eq!(out["stabilizes"], json!(true));
        assert_eq!(out["image"], json!(["0/1", "0/1"]));
    }

    #[test]
    fn composite_shows_non_action() {
        let g = json!([["1", "1"], ["0", "1"]]);
        let h = json!([["1", "0"], ["-1", "1"]]);
        let out = cmd_stabilize(&ctx(Group::Sln), &[g, h], &json!(["1", "0"]), false).unwrap();
        assert_eq!(out["tropical_of_product"], json!(["0/1", "1/1"]));
        assert_eq!(out["composite_of_tropicals"], json!(["1/1", "1/1"]));
        assert_eq!(out["agree"], json!(false));
    }

    #[test]
    fn boundary_upper_unipotent() {
        let g = json!([["1", "1"], ["0", "1"]]);
        let out = cmd_stabilize(&ctx(Group::Sln), &[g], &json!(["0", "-inf"]), true).unwrap();
        assert_eq!(out["stabilizes"], json!(true));
    }

    #[test]
    fn determinant_checked() {
        let g = json!([["2", "0"], ["0", "1"]]);
        let r = cmd_stabilize(&ctx(Group::Sln), &[g], &json!(["0", "0"]), false);
        assert_eq!(r, Err(Error::DeterminantNotOne));
    }

    #[test]
    fn seed_required() {
        let c = Context { seed: None, ..ctx(Group::Sln) };
        let args = VerifyArgs { suite: "semiring".into(), n: 2, count: 1, points: 1, rep: None };
        assert!(matches!(cmd_verify(&c, &args), Err(Error::Parse(_))));
    }

    #[test]
    fn fan_counts() {
        assert_eq!(cmd_fan(&Rep::Identity(4)).unwrap()["count"], json!(4));
        assert_eq!(cmd_fan(&Rep::Sp(2)).unwrap()["count"], json!(4));
        let schur = parse_rep("schur", None, Some("2,1,0")).unwrap();
        assert_eq!(cmd_fan(&schur).unwrap()["count"], json!(6));
    }

    #[test]
    fn hypersurface_is_reproducible() {
        let c = ctx(Group::Sln);
        let a = cmd_hypersurface(&c, &Rep::Identity(3), 50).unwrap();
        assert_eq!(a, cmd_hypersurface(&c, &Rep::Identity(3), 50).unwrap());
        assert_eq!(a["agree"], json!(true));
    }
}
