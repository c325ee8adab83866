//! The compactified apartment of the identity representation of `SL_n` as
//! `(Q_{-∞}^n ∖ {(-∞, …, -∞)}) / ~`, its strata, boundary points reached
//! along fan directions, and tropical stabilizers of boundary points.

use std::collections::BTreeSet;
use std::fmt;

use num::{BigRational, Zero};
use serde_json::Value;

use crate::apartment::ApartmentPoint;
use crate::error::{Error, Result};
use crate::matrix::FieldMatrix;
use crate::symplectic::{embed_vector, is_symplectic, SpApartmentPoint};
use crate::tropical::{stabilizes_tropically, TropScalar, TropVector};
use crate::valued_field::Valuation;
use crate::weights_fans::{Cone, Fan, GroupTag};

/// Indices of the finite entries.
pub fn stratum(x: &TropVector) -> Result<BTreeSet<usize>> {
    let s: BTreeSet<usize> = x
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.is_finite())
        .map(|(i, _)| i)
        .collect();
    if s.is_empty() {
        return Err(Error::AllInfinite);
    }
    Ok(s)
}

/// A point of the compactified apartment, stored with the entry at the
/// smallest finite index equal to `0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundaryPoint {
    coords: TropVector,
}

impl BoundaryPoint {
    pub fn new(coords: TropVector) -> Result<Self> {
        let first = *stratum(&coords)?.first().expect("nonempty");
        let anchor = coords.entries()[first].as_finite().expect("finite").clone();
        Ok(BoundaryPoint { coords: coords.shift(&-anchor) })
    }

    /// The interior point `x` (full stratum).
    pub fn from_apartment(x: &ApartmentPoint) -> Self {
        Self::new(x.to_trop_vector()).expect("finite")
    }

    /// `x_i` for `i ∈ I` and `-∞` elsewhere.
    pub fn restrict(x: &[BigRational], stratum: &BTreeSet<usize>) -> Result<Self> {
        Self::new(TropVector::new(
            x.iter()
                .enumerate()
                .map(|(i, c)| {
                    if stratum.contains(&i) {
                        TropScalar::Finite(c.clone())
                    } else {
                        TropScalar::NegInf
                    }
                })
                .collect(),
        ))
    }

    pub fn coords(&self) -> &TropVector {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn stratum(&self) -> BTreeSet<usize> {
        stratum(&self.coords).expect("checked at construction")
    }

    pub fn is_interior(&self) -> bool {
        self.stratum().len() == self.dim()
    }

    /// `w · b` for the permutation `e_i ↦ e_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out = self.coords.entries().to_vec();
        for (i, e) in self.coords.entries().iter().enumerate() {
            out[perm[i]] = e.clone();
        }
        Self::new(TropVector::new(out)).expect("same stratum size")
    }

    pub fn to_json(&self) -> Value {
        self.coords.to_json()
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        Self::new(TropVector::from_json(value)?)
    }
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.coords.fmt(f)
    }
}

/// A face of a fan together with a point of its relative interior.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanDirection {
    cone: Cone,
    point: Vec<BigRational>,
}

impl FanDirection {
    /// The smallest face of `fan` containing `c`, with `c` as its interior
    /// point.
    pub fn from_point(fan: &Fan, c: &[BigRational]) -> Result<Self> {
        if c.len() != fan.group().dim() {
            return Err(Error::InvalidDirection(format!(
                "direction has {} coordinates, the apartment needs {}",
                c.len(),
                fan.group().dim()
            )));
        }
        let point = fan.group().normalize_point(c);
        let cone = fan.face_containing(&point);
        debug_assert!(cone.in_relative_interior(&point));
        Ok(FanDirection { cone, point })
    }

    /// Checks that `c` lies in the relative interior of `cone`.
    pub fn new(cone: Cone, c: &[BigRational]) -> Result<Self> {
        if c.len() != cone.group().dim() {
            return Err(Error::InvalidDirection("dimension mismatch".into()));
        }
        let point = cone.group().normalize_point(c);
        if !cone.in_relative_interior(&point) {
            return Err(Error::InvalidDirection("point is not in the relative interior of the cone".into()));
        }
        Ok(FanDirection { cone, point })
    }

    /// The zero cone.
    pub fn trivial(fan: &Fan) -> Self {
        Self::from_point(fan, &vec![BigRational::zero(); fan.group().dim()]).expect("right size")
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn point(&self) -> &[BigRational] {
        &self.point
    }

    pub fn group(&self) -> GroupTag {
        self.cone.group()
    }
}

fn argmax(values: &[BigRational]) -> BTreeSet<usize> {
    let max = values.iter().max().expect("nonempty");
    (0..values.len()).filter(|&i| &values[i] == max).collect()
}

/// The limit of `x + s·c` as `s → ∞`: the coordinates `x_i` for the indices
/// `i` where `a_i(c)` is maximal, and `-∞` elsewhere.
pub fn boundary_point_from_direction(x: &ApartmentPoint, d: &FanDirection) -> Result<BoundaryPoint> {
    if d.group() != GroupTag::Sl(x.dim()) {
        return Err(Error::InvalidDirection(format!(
            "expected a direction in the SL_{} apartment",
            x.dim()
        )));
    }
    BoundaryPoint::restrict(x.coords(), &argmax(d.point()))
}

/// Whether `g` fixes the boundary point `b` tropically, with `-∞` entries
/// following `-∞ + a = -∞`.
pub fn boundary_stabilizes(g: &FieldMatrix, b: &BoundaryPoint) -> Result<bool> {
    if g.size() != b.dim() {
        return Err(Error::DimensionMismatch { expected: g.size(), found: b.dim() });
    }
    if !g.has_determinant_one() {
        return Err(Error::DeterminantNotOne);
    }
    stabilizes_tropically(g, b.coords())
}

/// The block form of boundary stabilization: `g_ij = 0` for `i ∉ I`,
/// `j ∈ I`, and for `i ∈ I` the maximum of `-v(g_ij) + x_j` over `j ∈ I`
/// is attained and equals `x_i`.
pub fn block_condition_oracle(g: &FieldMatrix, b: &BoundaryPoint) -> Result<bool> {
    if g.size() != b.dim() {
        return Err(Error::DimensionMismatch { expected: g.size(), found: b.dim() });
    }
    if !g.has_determinant_one() {
        return Err(Error::DeterminantNotOne);
    }
    let stratum = b.stratum();
    let x = b.coords().entries();
    for i in 0..g.size() {
        if !stratum.contains(&i) {
            if stratum.iter().any(|&j| !g.get(i, j).is_zero()) {
                return Ok(false);
            }
            continue;
        }
        let xi = x[i].as_finite().expect("finite on the stratum");
        let mut attained = false;
        for &j in &stratum {
            let Valuation::Finite(v) = g.get(i, j).valuation() else {
                continue;
            };
            let xj = x[j].as_finite().expect("finite on the stratum");
            let term = xj - BigRational::from_integer(v.into());
            if &term > xi {
                return Ok(false);
            }
            attained |= &term == xi;
        }
        if !attained {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The embedded boundary point of `Sp_2n` reached from `x` along `d`:
/// embed `x` and `c`, keep the coordinates where the weights
/// `a_1, …, a_n, -a_n, …, -a_1` are maximal on `c`.
pub fn sp_boundary_point(x: &SpApartmentPoint, d: &FanDirection) -> Result<BoundaryPoint> {
    if d.group() != GroupTag::Sp(x.rank()) {
        return Err(Error::InvalidDirection(format!(
            "expected a direction in the Sp_{} apartment",
            2 * x.rank()
        )));
    }
    BoundaryPoint::restrict(&embed_vector(x.coords()), &argmax(&embed_vector(d.point())))
}

pub fn sp_boundary_stabilizes(g: &FieldMatrix, x: &SpApartmentPoint, d: &FanDirection) -> Result<bool> {
    if !is_symplectic(g)? {
        return Err(Error::NotSymplectic);
    }
    let b = sp_boundary_point(x, d)?;
    boundary_stabilizes(g, &b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use crate::symplectic::root_element;
    use crate::valued_field::{FieldElement, FieldSpec};
    use crate::weights_fans::{fan_f_rho, weights_identity_sl, weights_standard_sp};

    fn q2() -> FieldSpec {
        FieldSpec::qp(2).unwrap()
    }

    fn tv(entries: &[Option<i64>]) -> TropVector {
        TropVector::new(
            entries
                .iter()
                .map(|e| e.map_or(TropScalar::NegInf, |v| TropScalar::Finite(int(v))))
                .collect(),
        )
    }

    #[test]
    fn strata() {
        assert_eq!(stratum(&tv(&[Some(0), None, Some(3)])).unwrap(), BTreeSet::from([0, 2]));
        assert_eq!(stratum(&tv(&[Some(1), Some(2)])).unwrap(), BTreeSet::from([0, 1]));
        assert_eq!(stratum(&tv(&[None, Some(0)])).unwrap(), BTreeSet::from([1]));
        assert_eq!(stratum(&tv(&[None, None])), Err(Error::AllInfinite));
    }

    #[test]
    fn canonical_form() {
        let a = BoundaryPoint::new(tv(&[None, Some(3), Some(5)])).unwrap();
        let b = BoundaryPoint::new(tv(&[None, Some(0), Some(2)])).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.coords(), &tv(&[None, Some(0), Some(2)]));
    }

    #[test]
    fn directions() {
        let fan = fan_f_rho(&weights_identity_sl(3));
        let x = ApartmentPoint::from_integers(&[1, 0, -1]);
        let d = FanDirection::from_point(&fan, &[int(2), int(-1), int(-1)]).unwrap();
        assert_eq!(
            boundary_point_from_direction(&x, &d).unwrap().coords(),
            &tv(&[Some(0), None, None])
        );
        let d12 = FanDirection::from_point(&fan, &[int(1), int(1), int(-2)]).unwrap();
        assert_eq!(
            boundary_point_from_direction(&ApartmentPoint::origin(3), &d12).unwrap().coords(),
            &tv(&[Some(0), Some(0), None])
        );
        assert_eq!(d12.cone().dimension(), 1);
        let zero = FanDirection::trivial(&fan);
        assert_eq!(boundary_point_from_direction(&x, &zero).unwrap(), BoundaryPoint::from_apartment(&x));

        let sp_fan = fan_f_rho(&weights_standard_sp(3));
        let wrong = FanDirection::trivial(&sp_fan);
        assert!(matches!(boundary_point_from_direction(&x, &wrong), Err(Error::InvalidDirection(_))));
        assert!(FanDirection::new(d.cone().clone(), &[int(1), int(1), int(-2)]).is_err());
    }

    #[test]
    fn upper_triangular_fixes_the_corner() {
        let b = BoundaryPoint::new(tv(&[Some(0), None])).unwrap();
        let p = FieldElement::uniformizer(q2());
        let u = FieldMatrix::elementary(q2(), 2, 0, 1, p.inv().unwrap());
        assert!(boundary_stabilizes(&u, &b).unwrap());
        assert!(block_condition_oracle(&u, &b).unwrap());
        let l = FieldMatrix::elementary(q2(), 2, 1, 0, p.clone());
        assert!(!boundary_stabilizes(&l, &b).unwrap());
        assert!(!block_condition_oracle(&l, &b).unwrap());
        let t = FieldMatrix::diagonal(q2(), &[p.clone(), p.inv().unwrap()]);
        assert!(!boundary_stabilizes(&t, &b).unwrap());
        assert!(!block_condition_oracle(&t, &b).unwrap());
        let id = FieldMatrix::identity(q2(), 2);
        assert!(boundary_stabilizes(&id, &b).unwrap());
        let not_sl = FieldMatrix::diagonal(q2(), &[p.clone(), p]);
        assert_eq!(boundary_stabilizes(&not_sl, &b), Err(Error::DeterminantNotOne));
    }

    #[test]
    fn sp_boundary_examples() {
        let fan = fan_f_rho(&weights_standard_sp(2));
        let d = FanDirection::from_point(&fan, &[int(1), int(0)]).unwrap();
        let b = sp_boundary_point(&SpApartmentPoint::origin(2), &d).unwrap();
        assert_eq!(b.coords(), &tv(&[Some(0), None, None, None]));

        let fan1 = fan_f_rho(&weights_standard_sp(1));
        let ray = FanDirection::from_point(&fan1, &[int(1)]).unwrap();
        let b1 = sp_boundary_point(&SpApartmentPoint::origin(1), &ray).unwrap();
        assert_eq!(b1.coords(), &tv(&[Some(0), None]));
        let a = FieldElement::from_integer(q2(), 3);
        let up = root_element(q2(), 1, 0, 1, &a);
        assert!(sp_boundary_stabilizes(&up, &SpApartmentPoint::origin(1), &ray).unwrap());
        let down = root_element(q2(), 1, 1, 0, &a);
        assert!(!sp_boundary_stabilizes(&down, &SpApartmentPoint::origin(1), &ray).unwrap());

        let x = SpApartmentPoint::new(vec![rat(1, 3), rat(-1, 2)]);
        let trivial = FanDirection::trivial(&fan);
        let g = root_element(q2(), 2, 1, 0, &FieldElement::uniformizer(q2()));
        assert_eq!(
            sp_boundary_stabilizes(&g, &x, &trivial).unwrap(),
            crate::symplectic::sp_stabilizer_membership(&g, &x).unwrap()
        );
    }

    #[test]
    fn finitely_many_steps_do_not_determine_the_limit() {
        // g = [[1,0],[p^30,1]] fixes x + s·c for 0 ≤ s ≤ 10 but not the limit
        // (0, -inf): the limit needs every large s, not a finite range
        let spec = q2();
        let mut g = FieldMatrix::identity(spec, 2);
        g.set(1, 0, FieldElement::uniformizer_power(spec, 30));
        let x = ApartmentPoint::origin(2);
        let c = ApartmentPoint::new(vec![int(1), int(-1)]).unwrap();
        for s in 0..=10 {
            let y = x.add_scaled(&int(s), &c).unwrap();
            assert_eq!(crate::apartment::stabilizer_membership(&g, &y), Ok(true));
        }
        let fan = fan_f_rho(&weights_identity_sl(2));
        let d = FanDirection::from_point(&fan, &[int(1), int(-1)]).unwrap();
        let b = boundary_point_from_direction(&x, &d).unwrap();
        assert_eq!(b.stratum(), BTreeSet::from([0]));
        assert_eq!(boundary_stabilizes(&g, &b), Ok(false));
        let far = x.add_scaled(&int(16), &c).unwrap();
        assert_eq!(crate::apartment::stabilizer_membership(&g, &far), Ok(false));
    }
}
