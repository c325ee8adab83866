//! Weights of representations of `SL_n` and `Sp_2n`, the cones
//! `C_Δ(ρ)` and their fan, weight polytopes and tropical character
//! hypersurfaces.
//!
//! For `SL_n` the apartment is `R^n / R(1, …, 1)`; weights are stored with
//! last coordinate `0` and evaluated on sum-zero representatives, and cone
//! functionals are stored as coprime sum-zero integer vectors so that they
//! are well defined on classes.

use std::collections::{BTreeMap, BTreeSet};

use num::integer::gcd;
use num::{BigRational, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::polyhedral::{implicit_equalities, is_feasible, Constraint, Relation};
use crate::rational::int;
use crate::tableaux::{contents, Partition};
use crate::valued_field::{FieldElement, FieldSpec, Valuation};
use crate::weyl::{WeylElement, WeylType};

pub use crate::tableaux::{kostka, schur_bialternant, schur_eval, schur_tableaux, SchurValue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupTag {
    Sl(usize),
    Sp(usize),
}

impl GroupTag {
    /// Number of apartment coordinates: `n` for both `SL_n` and `Sp_2n`.
    pub fn dim(self) -> usize {
        match self {
            GroupTag::Sl(n) | GroupTag::Sp(n) => n,
        }
    }

    pub fn weyl_type(self) -> WeylType {
        match self {
            GroupTag::Sl(_) => WeylType::A,
            GroupTag::Sp(_) => WeylType::C,
        }
    }

    pub fn weyl_group(self) -> Vec<WeylElement> {
        WeylElement::all(self.weyl_type(), self.dim())
    }

    fn canonical_weight(self, mut coords: Vec<i64>) -> Weight {
        assert_eq!(coords.len(), self.dim());
        if let GroupTag::Sl(_) = self {
            let last = *coords.last().expect("n ≥ 1");
            coords.iter_mut().for_each(|c| *c -= last);
        }
        Weight(coords)
    }

    /// Coprime integer form; sum-zero for `SL_n`. Zero stays zero.
    fn canonical_functional(self, f: &[i64]) -> Vec<i64> {
        let mut v: Vec<i64> = match self {
            GroupTag::Sl(n) => {
                let s: i64 = f.iter().sum();
                f.iter().map(|&a| n as i64 * a - s).collect()
            }
            GroupTag::Sp(_) => f.to_vec(),
        };
        let g = v.iter().fold(0i64, |acc, &a| gcd(acc, a));
        if g > 1 {
            v.iter_mut().for_each(|a| *a /= g);
        }
        v
    }

    /// The sum-zero representative for `SL_n`; unchanged for `Sp_2n`.
    pub fn normalize_point(self, x: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(x.len(), self.dim(), "point dimension");
        match self {
            GroupTag::Sl(n) => {
                let mean = x.iter().sum::<BigRational>() / int(n as i64);
                x.iter().map(|c| c - &mean).collect()
            }
            GroupTag::Sp(_) => x.to_vec(),
        }
    }

    /// A regular point of the dominant Weyl chamber.
    fn regular_point(self) -> Vec<BigRational> {
        match self {
            GroupTag::Sl(n) => (0..n).map(|i| int(n as i64 - 1 - 2 * i as i64)).collect(),
            GroupTag::Sp(n) => (0..n).map(|i| int((n - i) as i64)).collect(),
        }
    }

    fn check(self, w: &WeylElement) -> Result<()> {
        if w.kind() != self.weyl_type() || w.rank() != self.dim() {
            return Err(Error::TypeMismatch);
        }
        Ok(())
    }

    pub fn to_json(self) -> Value {
        match self {
            GroupTag::Sl(n) => json!({"group": "sln", "n": n}),
            GroupTag::Sp(n) => json!({"group": "sp2n", "n": n}),
        }
    }
}

fn pair(f: &[i64], x: &[BigRational]) -> BigRational {
    f.iter().zip(x).map(|(&a, b)| BigRational::from_integer(a.into()) * b).sum()
}

/// Integer weight in the coordinates `a_1, …, a_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// `μ(x)`; `x` must be normalized for `SL_n`.
    pub fn pair(&self, x: &[BigRational]) -> BigRational {
        pair(&self.0, x)
    }

    pub fn to_json(&self) -> Value {
        json!(self.0)
    }
}

/// `f_ρ = Σ c_μ μ`: weights with their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedCharacter {
    group: GroupTag,
    weights: BTreeMap<Weight, u64>,
}

impl WeightedCharacter {
    /// Multiplicities of repeated weights add up; zero multiplicities are
    /// dropped.
    pub fn new(group: GroupTag, weights: impl IntoIterator<Item = (Vec<i64>, u64)>) -> Self {
        let mut map = BTreeMap::new();
        for (w, c) in weights {
            if c > 0 {
                *map.entry(group.canonical_weight(w)).or_insert(0) += c;
            }
        }
        WeightedCharacter { group, weights: map }
    }

    pub fn group(&self) -> GroupTag {
        self.group
    }

    pub fn weights(&self) -> &BTreeMap<Weight, u64> {
        &self.weights
    }

    pub fn multiplicity(&self, mu: &Weight) -> u64 {
        self.weights.get(mu).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> u64 {
        self.weights.values().sum()
    }

    /// The weight maximizing the pairing with a regular dominant point.
    pub fn dominant_weight(&self) -> Weight {
        let x = self.group.regular_point();
        self.weights
            .keys()
            .max_by_key(|w| w.pair(&x))
            .expect("nonempty character")
            .clone()
    }

    pub fn act(&self, w: &WeylElement, mu: &Weight) -> Result<Weight> {
        self.group.check(w)?;
        Ok(self.group.canonical_weight(w.act(&mu.0)))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "group": self.group.to_json(),
            "weights": self.weights.iter().map(|(w, c)| json!({"weight": w.to_json(), "multiplicity": c})).collect::<Vec<_>>(),
        })
    }
}

/// `{a_1, …, a_n}`, each of multiplicity one.
pub fn weights_identity_sl(n: usize) -> WeightedCharacter {
    WeightedCharacter::new(
        GroupTag::Sl(n),
        (0..n).map(|i| ((0..n).map(|j| i64::from(i == j)).collect(), 1)),
    )
}

/// `{±a_1, …, ±a_n}`, each of multiplicity one.
pub fn weights_standard_sp(n: usize) -> WeightedCharacter {
    let unit = |i: usize, s: i64| (0..n).map(|j| if i == j { s } else { 0 }).collect::<Vec<_>>();
    WeightedCharacter::new(
        GroupTag::Sp(n),
        (0..n).flat_map(|i| [(unit(i, 1), 1), (unit(i, -1), 1)]),
    )
}

/// Weights of the `SL_n` representation with highest weight `λ`: content
/// `μ` with multiplicity the Kostka number `K_{λμ}`.
pub fn weights_irrep_sl(lambda: &Partition, n: usize) -> Result<WeightedCharacter> {
    let cs = contents(lambda, n)?;
    Ok(WeightedCharacter::new(
        GroupTag::Sl(n),
        cs.into_iter()
            .map(|(mu, k)| (mu.into_iter().map(|m| m as i64).collect(), k)),
    ))
}

/// Cone given by `ℓ(x) ≥ 0` for finitely many integer functionals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cone {
    group: GroupTag,
    functionals: BTreeSet<Vec<i64>>,
}

impl Cone {
    pub fn new(group: GroupTag, functionals: impl IntoIterator<Item = Vec<i64>>) -> Self {
        let functionals = functionals
            .into_iter()
            .map(|f| group.canonical_functional(&f))
            .filter(|f| f.iter().any(|&a| a != 0))
            .collect();
        Cone { group, functionals }
    }

    /// The whole apartment.
    pub fn everything(group: GroupTag) -> Self {
        Cone { group, functionals: BTreeSet::new() }
    }

    pub fn group(&self) -> GroupTag {
        self.group
    }

    pub fn functionals(&self) -> &BTreeSet<Vec<i64>> {
        &self.functionals
    }

    pub fn contains(&self, x: &[BigRational]) -> bool {
        self.functionals.iter().all(|f| pair(f, x) >= BigRational::zero())
    }

    /// `w · C = {w x : x ∈ C}`, whose functionals are `w · ℓ`.
    pub fn act(&self, w: &WeylElement) -> Result<Cone> {
        self.group.check(w)?;
        Ok(Cone::new(self.group, self.functionals.iter().map(|f| w.act(f))))
    }

    pub fn intersect(&self, other: &Cone) -> Cone {
        assert_eq!(self.group, other.group);
        Cone {
            group: self.group,
            functionals: self.functionals.union(&other.functionals).cloned().collect(),
        }
    }

    fn list(&self) -> Vec<Vec<i64>> {
        self.functionals.iter().cloned().collect()
    }

    /// Functionals vanishing identically on the cone.
    pub fn implicit_equalities(&self) -> Vec<Vec<i64>> {
        let fs = self.list();
        implicit_equalities(&fs, self.group.dim())
            .into_iter()
            .map(|k| fs[k].clone())
            .collect()
    }

    /// In the cone, and strictly positive on every functional that is not an
    /// implicit equality.
    pub fn in_relative_interior(&self, x: &[BigRational]) -> bool {
        let eq: BTreeSet<Vec<i64>> = self.implicit_equalities().into_iter().collect();
        self.functionals.iter().all(|f| {
            let v = pair(f, x);
            if eq.contains(f) {
                v.is_zero()
            } else {
                v > BigRational::zero()
            }
        })
    }

    /// Dimension of the cone as a subset of the apartment: the ambient
    /// dimension minus the rank of the implicit equalities.
    pub fn dimension(&self) -> usize {
        let eq = self.implicit_equalities();
        let ambient = match self.group {
            GroupTag::Sl(n) => n - 1,
            GroupTag::Sp(n) => n,
        };
        ambient - rank(&eq)
    }
}

fn rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| int(x)).collect())
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = &a[i][c] / &a[r][c];
                for k in c..cols {
                    let d = &f * &a[r][k];
                    a[i][k] -= d;
                }
            }
        }
        r += 1;
    }
    r
}

/// Maximal cones of `ℱ_ρ` keyed by their vertex weight `μ_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    group: GroupTag,
    cones: BTreeMap<Weight, Cone>,
}

impl Fan {
    pub fn group(&self) -> GroupTag {
        self.group
    }

    pub fn cones(&self) -> &BTreeMap<Weight, Cone> {
        &self.cones
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    pub fn vertices(&self) -> BTreeSet<Weight> {
        self.cones.keys().cloned().collect()
    }

    /// Maximal cones containing `x`.
    pub fn cones_containing(&self, x: &[BigRational]) -> Vec<(&Weight, &Cone)> {
        let x = self.group.normalize_point(x);
        self.cones.iter().filter(|(_, c)| c.contains(&x)).collect()
    }

    /// The smallest face of the fan containing `x`: the intersection of the
    /// maximal cones through `x`.
    pub fn face_containing(&self, x: &[BigRational]) -> Cone {
        self.cones_containing(x)
            .into_iter()
            .fold(Cone::everything(self.group), |acc, (_, c)| acc.intersect(c))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "group": self.group.to_json(),
            "vertices": self.cones.keys().map(Weight::to_json).collect::<Vec<_>>(),
            "cones": self.cones.iter().map(|(w, c)| json!({
                "vertex": w.to_json(),
                "inequalities": c.functionals().iter().collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// `C_Δ(ρ) = {x : μ_0(x) ≥ μ(x) for all weights μ}` with `μ_0 = w · μ_dom`.
pub fn cone_c_delta(rho: &WeightedCharacter, w: &WeylElement) -> Result<Cone> {
    let mu0 = rho.act(w, &rho.dominant_weight())?;
    Ok(cone_at_vertex(rho, &mu0))
}

fn cone_at_vertex(rho: &WeightedCharacter, mu0: &Weight) -> Cone {
    Cone::new(
        rho.group,
        rho.weights
            .keys()
            .filter(|mu| *mu != mu0)
            .map(|mu| mu0.0.iter().zip(&mu.0).map(|(a, b)| a - b).collect()),
    )
}

/// The maximal cones `C_Δ(ρ)` over all bases, deduplicated by vertex weight.
pub fn fan_f_rho(rho: &WeightedCharacter) -> Fan {
    let mut cones = BTreeMap::new();
    let dom = rho.dominant_weight();
    for w in rho.group.weyl_group() {
        let mu0 = rho.act(&w, &dom).expect("matching type");
        cones.entry(mu0.clone()).or_insert_with(|| cone_at_vertex(rho, &mu0));
    }
    Fan { group: rho.group, cones }
}

/// `W · μ`.
pub fn weyl_orbit(rho: &WeightedCharacter, mu: &Weight) -> BTreeSet<Weight> {
    rho.group
        .weyl_group()
        .iter()
        .map(|w| rho.act(w, mu).expect("matching type"))
        .collect()
}

/// Whether some `x` has `μ(x) > μ'(x)` for every other weight `μ'`.
pub fn is_vertex(rho: &WeightedCharacter, mu: &Weight) -> bool {
    if !rho.weights.contains_key(mu) {
        return false;
    }
    let group = rho.group;
    let constraints: Vec<Constraint> = rho
        .weights
        .keys()
        .filter(|other| *other != mu)
        .map(|other| {
            let f: Vec<i64> = mu.0.iter().zip(&other.0).map(|(a, b)| a - b).collect();
            Constraint::homogeneous(&group.canonical_functional(&f), Relation::Gt)
        })
        .collect();
    is_feasible(&constraints, group.dim())
}

pub fn vertices_of_polytope(rho: &WeightedCharacter) -> BTreeSet<Weight> {
    rho.weights.keys().filter(|mu| is_vertex(rho, mu)).cloned().collect()
}

/// `μ(x) ≥ μ'(x)` for every weight `μ'`: membership in the normal cone of
/// the vertex `μ`.
pub fn normal_cone_member(rho: &WeightedCharacter, mu: &Weight, x: &[BigRational]) -> Result<bool> {
    if !is_vertex(rho, mu) {
        return Err(Error::NotAVertex);
    }
    let x = rho.group.normalize_point(x);
    let value = mu.pair(&x);
    Ok(rho.weights.keys().all(|other| other.pair(&x) <= value))
}

/// Whether `max_μ (-v_p(c_μ) + μ(x))` is attained at least twice, with the
/// multiplicities `c_μ` read in `Q` with the `p`-adic valuation of `spec`.
pub fn trop_hypersurface_member(rho: &WeightedCharacter, spec: FieldSpec, x: &[BigRational]) -> bool {
    let q = FieldSpec::qp(spec.p()).expect("prime");
    let x = rho.group.normalize_point(x);
    let terms: Vec<BigRational> = rho
        .weights
        .iter()
        .map(|(mu, &c)| {
            let v = match FieldElement::from_integer(q, c as i64).valuation() {
                Valuation::Finite(v) => v,
                Valuation::Infinite => unreachable!("multiplicities are positive"),
            };
            mu.pair(&x) - int(v)
        })
        .collect();
    let max = terms.iter().max().expect("nonempty character");
    terms.iter().filter(|t| *t == max).count() >= 2
}

/// Whether `x` lies in at least two maximal cones of the fan.
pub fn skeleton_member(fan: &Fan, x: &[BigRational]) -> bool {
    fan.cones_containing(x).len() >= 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    fn q(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&a| int(a)).collect()
    }

    #[test]
    fn identity_and_standard_characters() {
        let id3 = weights_identity_sl(3);
        assert_eq!(id3.dimension(), 3);
        assert_eq!(id3.dominant_weight(), w(&[1, 0, 0]));
        let sp2 = weights_standard_sp(2);
        assert_eq!(sp2.dimension(), 4);
        assert_eq!(sp2.dominant_weight(), w(&[1, 0]));
        for mu in sp2.weights().keys() {
            let neg: Vec<i64> = mu.coords().iter().map(|a| -a).collect();
            assert_eq!(sp2.multiplicity(&w(&neg)), 1);
        }
    }

    #[test]
    fn adjoint_character() {
        let lambda = Partition::new(vec![2, 1, 0]).unwrap();
        let adj = weights_irrep_sl(&lambda, 3).unwrap();
        assert_eq!(adj.dimension(), 8);
        assert_eq!(adj.weights().len(), 7);
        assert_eq!(adj.multiplicity(&w(&[0, 0, 0])), 2);
        let verts = vertices_of_polytope(&adj);
        assert_eq!(verts.len(), 6);
        assert!(!verts.contains(&w(&[0, 0, 0])));
        assert_eq!(verts, weyl_orbit(&adj, &adj.dominant_weight()));
        assert_eq!(
            weights_irrep_sl(&Partition::new(vec![1, 0]).unwrap(), 2).unwrap(),
            weights_identity_sl(2)
        );
    }

    #[test]
    fn cone_examples() {
        let id3 = weights_identity_sl(3);
        let gamma1 = cone_c_delta(&id3, &WeylElement::identity(WeylType::A, 3)).unwrap();
        assert_eq!(gamma1, Cone::new(GroupTag::Sl(3), [vec![1, -1, 0], vec![1, 0, -1]]));
        assert!(gamma1.contains(&q(&[2, -1, -1])));
        assert!(!gamma1.contains(&q(&[-1, 2, -1])));

        let sp2 = weights_standard_sp(2);
        let g1p = cone_c_delta(&sp2, &WeylElement::identity(WeylType::C, 2)).unwrap();
        assert_eq!(g1p, Cone::new(GroupTag::Sp(2), [vec![2, 0], vec![1, -1], vec![1, 1]]));
        assert!(matches!(
            cone_c_delta(&sp2, &WeylElement::identity(WeylType::A, 2)),
            Err(Error::TypeMismatch)
        ));

        // highest weight 3a_1 + 2a_2 + a_3: the Weyl cone
        let ex = weights_irrep_sl(&Partition::new(vec![3, 2, 1]).unwrap(), 3).unwrap();
        let c = cone_c_delta(&ex, &WeylElement::identity(WeylType::A, 3)).unwrap();
        let weyl_cone = Cone::new(GroupTag::Sl(3), [vec![1, -1, 0], vec![0, 1, -1]]);
        for x in [q(&[2, 1, -3]), q(&[1, 1, -2]), q(&[1, 2, -3]), q(&[3, -2, -1])] {
            assert_eq!(c.contains(&x), weyl_cone.contains(&x));
        }
    }

    #[test]
    fn fan_counts() {
        for n in 2..=5 {
            assert_eq!(fan_f_rho(&weights_identity_sl(n)).len(), n);
        }
        for n in 1..=3 {
            assert_eq!(fan_f_rho(&weights_standard_sp(n)).len(), 2 * n);
        }
        let ex = weights_irrep_sl(&Partition::new(vec![3, 2, 1]).unwrap(), 3).unwrap();
        assert_eq!(fan_f_rho(&ex).len(), 6);
    }

    #[test]
    fn equivariance_of_cones() {
        let sp3 = weights_standard_sp(3);
        let all = WeylElement::all(WeylType::C, 3);
        for a in all.iter().step_by(7) {
            for b in all.iter().step_by(11) {
                let lhs = cone_c_delta(&sp3, &a.compose(b)).unwrap();
                let rhs = cone_c_delta(&sp3, b).unwrap().act(a).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn normal_cones() {
        let id3 = weights_identity_sl(3);
        assert!(normal_cone_member(&id3, &w(&[1, 0, 0]), &q(&[3, 0, 0])).unwrap());
        assert!(normal_cone_member(&id3, &w(&[0, 1, 0]), &q(&[0, 0, 0])).unwrap());
        let adj = weights_irrep_sl(&Partition::new(vec![2, 1, 0]).unwrap(), 3).unwrap();
        assert_eq!(normal_cone_member(&adj, &w(&[0, 0, 0]), &q(&[0, 0, 0])), Err(Error::NotAVertex));
    }

    #[test]
    fn hypersurface_examples() {
        let id2 = weights_identity_sl(2);
        let q2 = FieldSpec::qp(2).unwrap();
        assert!(!trop_hypersurface_member(&id2, q2, &[rat(1, 3), rat(-1, 3)]));
        assert!(trop_hypersurface_member(&id2, q2, &q(&[0, 0])));

        let id3 = weights_identity_sl(3);
        let fan = fan_f_rho(&id3);
        assert!(skeleton_member(&fan, &q(&[1, 1, -2])));
        assert!(!skeleton_member(&fan, &q(&[2, -1, -1])));
        // unnormalized representatives give the same answer
        assert!(skeleton_member(&fan, &q(&[5, 5, 2])));
    }

    #[test]
    fn cone_dimensions() {
        let sp2 = weights_standard_sp(2);
        let fan = fan_f_rho(&sp2);
        for c in fan.cones().values() {
            assert_eq!(c.dimension(), 2);
        }
        let ray = fan.face_containing(&q(&[1, 1]));
        assert_eq!(ray.dimension(), 1);
        assert!(ray.in_relative_interior(&q(&[2, 2])));
        assert!(!ray.in_relative_interior(&q(&[0, 0])));
        assert_eq!(fan.face_containing(&q(&[0, 0])).dimension(), 0);
    }
}
