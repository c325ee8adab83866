//! The max-plus semiring on `Q ∪ {-∞}`, tropical vectors and matrices, and
//! tropical stabilization of points by matrices over a valued field.

use std::fmt;

use num::{BigRational, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::matrix::FieldMatrix;
use crate::rational::{format_rational, parse_rational};
use crate::valued_field::{FieldElement, FieldSpec, Valuation};

/// Element of `Q ∪ {-∞}`. The derived order puts `NegInf` below every
/// finite value, so `max` is tropical addition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TropScalar {
    NegInf,
    Finite(BigRational),
}

impl TropScalar {
    pub fn finite(q: BigRational) -> Self {
        TropScalar::Finite(q)
    }

    /// The multiplicative unit `0`.
    pub fn one() -> Self {
        TropScalar::Finite(BigRational::zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, TropScalar::Finite(_))
    }

    pub fn as_finite(&self) -> Option<&BigRational> {
        match self {
            TropScalar::Finite(q) => Some(q),
            TropScalar::NegInf => None,
        }
    }

    /// `-v(a)`, with `0 ↦ -∞`.
    pub fn neg_valuation(a: &FieldElement) -> Self {
        match a.valuation() {
            Valuation::Infinite => TropScalar::NegInf,
            Valuation::Finite(v) => TropScalar::Finite(BigRational::from_integer((-v).into())),
        }
    }

    pub fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        match value {
            Value::String(s) if s.trim() == "-inf" => Ok(TropScalar::NegInf),
            Value::String(s) => Ok(TropScalar::Finite(parse_rational(s)?)),
            Value::Number(n) => n
                .as_i64()
                .map(|v| TropScalar::Finite(BigRational::from_integer(v.into())))
                .ok_or_else(|| Error::Parse(format!("non-integer number {n}"))),
            other => Err(Error::Parse(format!("expected \"-inf\" or \"num/den\", got {other}"))),
        }
    }
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropScalar::NegInf => write!(f, "-inf"),
            TropScalar::Finite(q) => write!(f, "{}", format_rational(q)),
        }
    }
}

/// `a ⊕ b = max(a, b)`.
pub fn trop_add(a: &TropScalar, b: &TropScalar) -> TropScalar {
    a.max(b).clone()
}

/// `a ⊙ b = a + b`, with `-∞` absorbing.
pub fn trop_mul(a: &TropScalar, b: &TropScalar) -> TropScalar {
    match (a, b) {
        (TropScalar::Finite(x), TropScalar::Finite(y)) => TropScalar::Finite(x + y),
        _ => TropScalar::NegInf,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TropVector(Vec<TropScalar>);

impl TropVector {
    pub fn new(entries: Vec<TropScalar>) -> Self {
        TropVector(entries)
    }

    pub fn from_rationals(coords: &[BigRational]) -> Self {
        TropVector(coords.iter().cloned().map(TropScalar::Finite).collect())
    }

    pub fn entries(&self) -> &[TropScalar] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_all_infinite(&self) -> bool {
        self.0.iter().all(|e| !e.is_finite())
    }

    /// `a ⊙ x`, adding `a` to every finite entry.
    pub fn shift(&self, a: &BigRational) -> Self {
        let a = TropScalar::Finite(a.clone());
        TropVector(self.0.iter().map(|e| trop_mul(&a, e)).collect())
    }

    /// The finite entries, or the index of the first `-∞`.
    pub fn finite_coords(&self) -> Result<Vec<BigRational>> {
        self.0
            .iter()
            .enumerate()
            .map(|(i, e)| e.as_finite().cloned().ok_or(Error::InfiniteCoordinate(i)))
            .collect()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.0.iter().map(TropScalar::to_json).collect())
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        value
            .as_array()
            .ok_or_else(|| Error::Parse("vector must be a JSON array".into()))?
            .iter()
            .map(TropScalar::from_json)
            .collect::<Result<Vec<_>>>()
            .map(TropVector)
    }
}

impl fmt::Display for TropVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", cells.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TropMatrix {
    n: usize,
    entries: Vec<TropScalar>,
}

impl TropMatrix {
    pub fn from_rows(rows: Vec<Vec<TropScalar>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            entries.extend(row);
        }
        Ok(TropMatrix { n, entries })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &TropScalar {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[TropScalar]> {
        self.entries.chunks(self.n.max(1))
    }

    /// Max-plus matrix-vector product `y_i = max_j (M_ij + x_j)`.
    pub fn apply(&self, x: &TropVector) -> Result<TropVector> {
        if x.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: x.len() });
        }
        Ok(TropVector(
            self.rows()
                .map(|row| {
                    row.iter()
                        .zip(x.entries())
                        .map(|(m, xj)| trop_mul(m, xj))
                        .max()
                        .unwrap_or(TropScalar::NegInf)
                })
                .collect(),
        ))
    }

    pub fn fixes(&self, x: &TropVector) -> Result<bool> {
        Ok(self.apply(x)? == *x)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows()
                .map(|r| Value::Array(r.iter().map(TropScalar::to_json).collect()))
                .collect(),
        )
    }
}

impl fmt::Display for TropMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Same as [`tropicalize`] without the invertibility check.
pub fn tropicalize_entries(g: &FieldMatrix) -> TropMatrix {
    TropMatrix {
        n: g.size(),
        entries: g.entries().map(|(_, e)| TropScalar::neg_valuation(e)).collect(),
    }
}

/// Entrywise `-v`, with zero entries mapped to `-∞`.
pub fn tropicalize(g: &FieldMatrix) -> Result<TropMatrix> {
    if g.determinant().is_zero() {
        return Err(Error::SingularMatrix);
    }
    Ok(tropicalize_entries(g))
}

pub fn trop_matvec(m: &TropMatrix, x: &TropVector) -> Result<TropVector> {
    m.apply(x)
}

/// Whether `g_trop · x = x`. Entries of `x` may be `-∞`, but not all of them.
pub fn stabilizes_tropically(g: &FieldMatrix, x: &TropVector) -> Result<bool> {
    if x.len() != g.size() {
        return Err(Error::DimensionMismatch { expected: g.size(), found: x.len() });
    }
    if x.is_all_infinite() {
        return Err(Error::AllInfinite);
    }
    tropicalize(g)?.fixes(x)
}

/// Independent check of tropical stabilization for `det g = 1`:
/// `v(g_ij) + x_i - x_j >= 0` for all `i, j`, which says that `t^{-1} g t`
/// is integral for a diagonal `t` with `-v(t_i) = x_i`.
pub fn valuation_inequality_oracle(g: &FieldMatrix, x: &TropVector) -> Result<bool> {
    if x.len() != g.size() {
        return Err(Error::DimensionMismatch { expected: g.size(), found: x.len() });
    }
    if !g.has_determinant_one() {
        return Err(Error::DeterminantNotOne);
    }
    let coords = x.finite_coords()?;
    Ok(g.entries().all(|((i, j), e)| match e.valuation() {
        Valuation::Infinite => true,
        Valuation::Finite(v) => BigRational::from_integer(v.into()) + &coords[i] - &coords[j] >= BigRational::zero(),
    }))
}

/// The 2x2 matrices `g = [[1,1],[0,1]]` and `h = [[1,0],[-1,1]]` whose
/// tropicalizations do not compose: `(gh)_trop ≠ g_trop ∘ h_trop`.
pub fn non_action_witness(spec: FieldSpec) -> (FieldMatrix, FieldMatrix) {
    let g = FieldMatrix::from_integers(spec, &[&[1, 1], &[0, 1]]).unwrap();
    let h = FieldMatrix::from_integers(spec, &[&[1, 0], &[-1, 1]]).unwrap();
    (g, h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use proptest::prelude::*;

    fn fin(n: i64) -> TropScalar {
        TropScalar::Finite(int(n))
    }

    fn vector(v: &[i64]) -> TropVector {
        TropVector(v.iter().map(|&c| fin(c)).collect())
    }

    #[test]
    fn scalar_examples() {
        assert_eq!(trop_add(&fin(3), &TropScalar::NegInf), fin(3));
        assert_eq!(trop_mul(&fin(5), &TropScalar::NegInf), TropScalar::NegInf);
        assert_eq!(trop_mul(&fin(2), &fin(3)), fin(5));
    }

    #[test]
    fn tropicalize_examples() {
        let q3 = FieldSpec::qp(3).unwrap();
        let (g, _) = non_action_witness(q3);
        let t = tropicalize(&g).unwrap();
        assert_eq!(
            t,
            TropMatrix::from_rows(vec![vec![fin(0), fin(0)], vec![TropScalar::NegInf, fin(0)]]).unwrap()
        );

        let id = tropicalize(&FieldMatrix::identity(q3, 3)).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { fin(0) } else { TropScalar::NegInf };
                assert_eq!(*id.get(i, j), expected);
            }
        }

        let p = FieldElement::uniformizer(q3);
        let m = FieldMatrix::from_rows(
            q3,
            vec![
                vec![p.clone(), p.inv().unwrap()],
                vec![FieldElement::zero(q3), FieldElement::one(q3)],
            ],
        )
        .unwrap();
        assert_eq!(
            tropicalize(&m).unwrap(),
            TropMatrix::from_rows(vec![vec![fin(-1), fin(1)], vec![TropScalar::NegInf, fin(0)]]).unwrap()
        );

        let singular = FieldMatrix::from_integers(q3, &[&[1, 1], &[1, 1]]).unwrap();
        assert_eq!(tropicalize(&singular), Err(Error::SingularMatrix));
    }

    #[test]
    fn non_action_at_one_zero() {
        let q2 = FieldSpec::qp(2).unwrap();
        let (g, h) = non_action_witness(q2);
        let gh = tropicalize(&g.mul(&h).unwrap()).unwrap();
        let (gt, ht) = (tropicalize(&g).unwrap(), tropicalize(&h).unwrap());
        let x = vector(&[1, 0]);
        assert_eq!(gh.apply(&x).unwrap(), vector(&[0, 1]));
        assert_eq!(gt.apply(&ht.apply(&x).unwrap()).unwrap(), vector(&[1, 1]));
    }

    #[test]
    fn stabilization_examples() {
        let q5 = FieldSpec::qp(5).unwrap();
        let id = FieldMatrix::identity(q5, 2);
        assert!(stabilizes_tropically(&id, &vector(&[7, -2])).unwrap());

        let p = FieldElement::uniformizer(q5);
        let t = FieldMatrix::diagonal(q5, &[p.clone(), p.inv().unwrap()]);
        assert!(!stabilizes_tropically(&t, &vector(&[0, 0])).unwrap());
        assert_eq!(tropicalize(&t).unwrap().apply(&vector(&[0, 0])).unwrap(), vector(&[-1, 1]));

        let w = FieldMatrix::from_integers(q5, &[&[0, 1], &[-1, 0]]).unwrap();
        assert!(stabilizes_tropically(&w, &vector(&[0, 0])).unwrap());

        assert_eq!(
            stabilizes_tropically(&id, &vector(&[0, 0, 0])),
            Err(Error::DimensionMismatch { expected: 2, found: 3 })
        );
        assert_eq!(
            stabilizes_tropically(&id, &TropVector::new(vec![TropScalar::NegInf; 2])),
            Err(Error::AllInfinite)
        );
    }

    #[test]
    fn oracle_examples() {
        let q3 = FieldSpec::qp(3).unwrap();
        let id = FieldMatrix::identity(q3, 2);
        assert!(valuation_inequality_oracle(&id, &vector(&[4, 1])).unwrap());

        let inv_p = FieldElement::uniformizer(q3).inv().unwrap();
        let u = FieldMatrix::elementary(q3, 2, 0, 1, inv_p);
        assert!(!valuation_inequality_oracle(&u, &vector(&[0, 0])).unwrap());
        assert!(valuation_inequality_oracle(&u, &vector(&[1, 0])).unwrap());
        assert_eq!(
            stabilizes_tropically(&u, &vector(&[1, 0])).unwrap(),
            valuation_inequality_oracle(&u, &vector(&[1, 0])).unwrap()
        );

        let two = FieldMatrix::diagonal(q3, &[FieldElement::from_integer(q3, 2), FieldElement::one(q3)]);
        assert_eq!(valuation_inequality_oracle(&two, &vector(&[0, 0])), Err(Error::DeterminantNotOne));
        let half = TropVector::new(vec![TropScalar::NegInf, fin(0)]);
        assert_eq!(valuation_inequality_oracle(&id, &half), Err(Error::InfiniteCoordinate(0)));
    }

    #[test]
    fn json_forms() {
        let v = TropVector::new(vec![fin(0), TropScalar::NegInf, TropScalar::Finite(rat(3, 2))]);
        let j = v.to_json();
        assert_eq!(j, serde_json::json!(["0/1", "-inf", "3/2"]));
        assert_eq!(TropVector::from_json(&j).unwrap(), v);
        assert!(TropVector::from_json(&serde_json::json!(["inf"])).is_err());
    }

    fn scalar() -> impl Strategy<Value = TropScalar> {
        prop_oneof![
            1 => Just(TropScalar::NegInf),
            4 => (-20i64..20, 1i64..7).prop_map(|(n, d)| TropScalar::Finite(rat(n, d))),
        ]
    }

    proptest! {
        #[test]
        fn semiring_laws(a in scalar(), b in scalar(), c in scalar()) {
            prop_assert_eq!(trop_add(&a, &b), trop_add(&b, &a));
            prop_assert_eq!(trop_add(&trop_add(&a, &b), &c), trop_add(&a, &trop_add(&b, &c)));
            prop_assert_eq!(trop_add(&a, &a), a.clone());
            prop_assert_eq!(trop_mul(&a, &b), trop_mul(&b, &a));
            prop_assert_eq!(trop_mul(&trop_mul(&a, &b), &c), trop_mul(&a, &trop_mul(&b, &c)));
            prop_assert_eq!(
                trop_mul(&a, &trop_add(&b, &c)),
                trop_add(&trop_mul(&a, &b), &trop_mul(&a, &c))
            );
            prop_assert_eq!(trop_add(&a, &TropScalar::NegInf), a.clone());
            prop_assert_eq!(trop_mul(&a, &TropScalar::NegInf), TropScalar::NegInf);
            prop_assert_eq!(trop_mul(&a, &TropScalar::one()), a.clone());
        }

        #[test]
        fn matvec_is_homogeneous(
            m in prop::collection::vec(scalar(), 9),
            x in prop::collection::vec(scalar(), 3),
            a in (-10i64..10, 1i64..5),
        ) {
            let m = TropMatrix::from_rows(m.chunks(3).map(<[_]>::to_vec).collect()).unwrap();
            let x = TropVector::new(x);
            let a = rat(a.0, a.1);
            prop_assert_eq!(m.apply(&x.shift(&a)).unwrap(), m.apply(&x).unwrap().shift(&a));
        }
    }
}
