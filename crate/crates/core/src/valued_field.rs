//! Exact arithmetic in two complete discretely valued fields:
//! the rationals with the `p`-adic valuation, and rational functions
//! `F_p(T)` with the `T`-adic valuation.
//!
//! Both fields share one element type. Higher modules only use the
//! valuation, the residue map and the field operations, so they never look
//! at the representation.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, Integer, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldKind {
    /// `Q` with the `p`-adic valuation.
    PadicRationals,
    /// `F_p(T)` with the `T`-adic valuation.
    RationalFunctions,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    kind: FieldKind,
    p: u64,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    pub fn new(kind: FieldKind, p: u64) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec { kind, p })
    }

    pub fn qp(p: u64) -> Result<Self> {
        Self::new(FieldKind::PadicRationals, p)
    }

    pub fn fpt(p: u64) -> Result<Self> {
        Self::new(FieldKind::RationalFunctions, p)
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    /// Residue characteristic.
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn to_json(&self) -> Value {
        let kind = match self.kind {
            FieldKind::PadicRationals => "Qp",
            FieldKind::RationalFunctions => "FpT",
        };
        json!({ "kind": kind, "p": self.p })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid field spec {value}"));
        let p = value.get("p").and_then(Value::as_u64).ok_or_else(bad)?;
        match value.get("kind").and_then(Value::as_str) {
            Some("Qp") => Self::qp(p),
            Some("FpT") => Self::fpt(p),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::PadicRationals => write!(f, "Q (v_{})", self.p),
            FieldKind::RationalFunctions => write!(f, "F_{}(T) (v_T)", self.p),
        }
    }
}

/// Value of a discrete valuation. `Infinite` is reserved for zero and
/// compares above every integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Valuation::Infinite
    }
}

impl Add for Valuation {
    type Output = Valuation;
    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "+inf"),
        }
    }
}

/// Element of the residue field `F_p`, canonically in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    p: u64,
}

impl Residue {
    pub fn new(value: u64, p: u64) -> Self {
        Residue { value: value % p, p }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        assert_eq!(self.p, rhs.p);
        Residue::new(self.value + rhs.value, self.p)
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        assert_eq!(self.p, rhs.p);
        Residue::new(mul_mod(self.value, rhs.value, self.p), self.p)
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

/// Polynomial over `F_p`, coefficients low degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    fn constant(p: u64, c: u64) -> Self {
        Self::new(p, vec![c])
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn lead(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    /// Order of vanishing at `T = 0`.
    fn ord(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    fn scale(&self, c: u64) -> Self {
        Self::new(self.p, self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect())
    }

    fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            self.p,
            (0..len).map(|i| self.coeff(i) + other.coeff(i)).collect(),
        )
    }

    fn neg(&self) -> Self {
        Self::new(
            self.p,
            self.coeffs.iter().map(|&c| (self.p - c) % self.p).collect(),
        )
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(self.p, vec![]);
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, self.p)) % self.p;
            }
        }
        Self::new(self.p, out)
    }

    fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let p = self.p;
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = inv_mod(divisor.lead(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; self.coeffs.len().saturating_sub(d).max(1)];
        while rem.len() > d && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = mul_mod(rem[top], lead_inv, p);
            if c != 0 {
                quot[top - d] = c;
                for (k, &b) in divisor.coeffs.iter().enumerate() {
                    let idx = top - d + k;
                    rem[idx] = (rem[idx] + p - mul_mod(c, b, p)) % p;
                }
            }
            rem.pop();
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        (Self::new(p, quot), Self::new(p, rem))
    }

    fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(inv_mod(self.lead(), self.p))
    }

    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn to_json(&self) -> Value {
        let map: serde_json::Map<String, Value> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(deg, &c)| (deg.to_string(), json!(c)))
            .collect();
        Value::Object(map)
    }

    fn from_json(p: u64, value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse(format!("polynomial must be an object, got {value}")))?;
        let mut coeffs = BTreeMap::new();
        for (deg, c) in obj {
            let deg: usize = deg
                .parse()
                .map_err(|_| Error::Parse(format!("bad degree `{deg}`")))?;
            let c = c
                .as_u64()
                .filter(|&c| c < p)
                .ok_or_else(|| Error::Parse(format!("coefficient {c} not in 0..{p}")))?;
            coeffs.insert(deg, c);
        }
        let len = coeffs.keys().next_back().map_or(0, |d| d + 1);
        let mut dense = vec![0u64; len];
        for (deg, c) in coeffs {
            dense[deg] = c;
        }
        Ok(Self::new(p, dense))
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (deg, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "T")?,
                (1, c) => write!(f, "{c}T")?,
                (d, 1) => write!(f, "T^{d}")?,
                (d, c) => write!(f, "{c}T^{d}")?,
            }
        }
        Ok(())
    }
}

/// `num / den` in lowest terms with the lowest nonzero coefficient of `den`
/// equal to 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct RationalFunction {
    num: FpPoly,
    den: FpPoly,
}

impl RationalFunction {
    fn new(num: FpPoly, den: FpPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let p = num.p;
        if num.is_zero() {
            return Ok(RationalFunction { num, den: FpPoly::constant(p, 1) });
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let low = den.coeff(den.ord().expect("nonzero denominator"));
        let s = inv_mod(low, p);
        Ok(RationalFunction { num: num.scale(s), den: den.scale(s) })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Rational(BigRational),
    Function(RationalFunction),
}

/// Element of `Q` (with `v_p`) or of `F_p(T)` (with `v_T`), tagged with
/// its field. Always stored in lowest terms.
///
/// The arithmetic operators panic when the operands come from different
/// fields; that is a programming error, not a data error.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    spec: FieldSpec,
    repr: Repr,
}

impl FieldElement {
    pub fn zero(spec: FieldSpec) -> Self {
        Self::from_integer(spec, 0)
    }

    pub fn one(spec: FieldSpec) -> Self {
        Self::from_integer(spec, 1)
    }

    pub fn from_integer(spec: FieldSpec, n: i64) -> Self {
        let repr = match spec.kind {
            FieldKind::PadicRationals => Repr::Rational(BigRational::from_integer(n.into())),
            FieldKind::RationalFunctions => {
                let c = n.rem_euclid(spec.p as i64) as u64;
                Repr::Function(
                    RationalFunction::new(
                        FpPoly::constant(spec.p, c),
                        FpPoly::constant(spec.p, 1),
                    )
                    .expect("nonzero denominator"),
                )
            }
        };
        FieldElement { spec, repr }
    }

    /// Image of a rational number. In `F_p(T)` this fails when `p` divides
    /// the denominator.
    pub fn from_rational(spec: FieldSpec, q: &BigRational) -> Result<Self> {
        match spec.kind {
            FieldKind::PadicRationals => Ok(FieldElement { spec, repr: Repr::Rational(q.clone()) }),
            FieldKind::RationalFunctions => {
                let n = bigint_mod(q.numer(), spec.p);
                let d = bigint_mod(q.denom(), spec.p);
                let num = FpPoly::constant(spec.p, n);
                let den = FpPoly::constant(spec.p, d);
                Ok(FieldElement { spec, repr: Repr::Function(RationalFunction::new(num, den)?) })
            }
        }
    }

    /// `num / den` in `F_p(T)`, coefficients listed from degree 0 upwards.
    pub fn from_polynomials(spec: FieldSpec, num: &[u64], den: &[u64]) -> Result<Self> {
        if spec.kind != FieldKind::RationalFunctions {
            return Err(Error::FieldMismatch);
        }
        let f = RationalFunction::new(
            FpPoly::new(spec.p, num.to_vec()),
            FpPoly::new(spec.p, den.to_vec()),
        )?;
        Ok(FieldElement { spec, repr: Repr::Function(f) })
    }

    /// The uniformizer: `p` in `Q`, `T` in `F_p(T)`.
    pub fn uniformizer(spec: FieldSpec) -> Self {
        match spec.kind {
            FieldKind::PadicRationals => Self::from_integer(spec, spec.p as i64),
            FieldKind::RationalFunctions => Self::from_polynomials(spec, &[0, 1], &[1]).unwrap(),
        }
    }

    /// `pi^k` for any integer `k`.
    pub fn uniformizer_power(spec: FieldSpec, k: i64) -> Self {
        let pi = Self::uniformizer(spec);
        let mut acc = Self::one(spec);
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &pi;
        }
        if k < 0 {
            acc.inv().expect("pi is a unit of K")
        } else {
            acc
        }
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rational(q) => q.is_zero(),
            Repr::Function(f) => f.num.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one(self.spec)
    }

    pub fn valuation(&self) -> Valuation {
        match &self.repr {
            Repr::Rational(q) => {
                if q.is_zero() {
                    return Valuation::Infinite;
                }
                let p = BigInt::from(self.spec.p);
                let count = |n: &BigInt| {
                    let mut n = n.abs();
                    let mut k = 0i64;
                    loop {
                        let (quot, rem) = n.div_rem(&p);
                        if !rem.is_zero() {
                            return k;
                        }
                        n = quot;
                        k += 1;
                    }
                };
                Valuation::Finite(count(q.numer()) - count(q.denom()))
            }
            Repr::Function(f) => match f.num.ord() {
                None => Valuation::Infinite,
                Some(a) => Valuation::Finite(a as i64 - f.den.ord().unwrap() as i64),
            },
        }
    }

    pub fn is_integral(&self) -> bool {
        self.valuation() >= Valuation::Finite(0)
    }

    /// Reduction to the residue field; defined on the ring of integers.
    pub fn residue(&self) -> Result<Residue> {
        let p = self.spec.p;
        match self.valuation() {
            Valuation::Infinite => Ok(Residue::new(0, p)),
            Valuation::Finite(v) if v < 0 => Err(Error::DomainError(v)),
            Valuation::Finite(v) if v > 0 => Ok(Residue::new(0, p)),
            Valuation::Finite(_) => match &self.repr {
                Repr::Rational(q) => {
                    let n = bigint_mod(q.numer(), p);
                    let d = bigint_mod(q.denom(), p);
                    Ok(Residue::new(mul_mod(n, inv_mod(d, p), p), p))
                }
                Repr::Function(f) => {
                    let n = f.num.coeff(0);
                    let d = f.den.coeff(0);
                    Ok(Residue::new(mul_mod(n, inv_mod(d, p), p), p))
                }
            },
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let repr = match &self.repr {
            Repr::Rational(q) => Repr::Rational(q.recip()),
            Repr::Function(f) => Repr::Function(RationalFunction::new(f.den.clone(), f.num.clone())?),
        };
        Ok(FieldElement { spec: self.spec, repr })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    /// The underlying rational, for elements of `Q`.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rational(q) => Some(q),
            Repr::Function(_) => None,
        }
    }

    pub fn to_json(&self) -> Value {
        match &self.repr {
            Repr::Rational(q) => Value::String(format_rational(q)),
            Repr::Function(f) => json!({ "num": f.num.to_json(), "den": f.den.to_json() }),
        }
    }

    /// Accepts the JSON encodings produced by [`FieldElement::to_json`].
    /// Plain JSON integers are accepted in both fields.
    pub fn from_json(spec: FieldSpec, value: &Value) -> Result<Self> {
        if let Some(n) = value.as_i64() {
            return Ok(Self::from_integer(spec, n));
        }
        match spec.kind {
            FieldKind::PadicRationals => {
                let text = value
                    .as_str()
                    .ok_or_else(|| Error::Parse(format!("expected \"num/den\", got {value}")))?;
                Self::from_rational(spec, &parse_rational(text)?)
            }
            FieldKind::RationalFunctions => {
                if let Some(text) = value.as_str() {
                    return Self::from_rational(spec, &parse_rational(text)?);
                }
                let num = value
                    .get("num")
                    .ok_or_else(|| Error::Parse(format!("missing `num` in {value}")))?;
                let den = value.get("den").cloned().unwrap_or_else(|| json!({"0": 1}));
                let f = RationalFunction::new(
                    FpPoly::from_json(spec.p, num)?,
                    FpPoly::from_json(spec.p, &den)?,
                )?;
                Ok(FieldElement { spec, repr: Repr::Function(f) })
            }
        }
    }

    fn combine(
        &self,
        other: &Self,
        on_q: impl Fn(&BigRational, &BigRational) -> BigRational,
        on_f: impl Fn(&RationalFunction, &RationalFunction) -> RationalFunction,
    ) -> Self {
        assert_eq!(self.spec, other.spec, "field mismatch: {} vs {}", self.spec, other.spec);
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(on_q(a, b)),
            (Repr::Function(a), Repr::Function(b)) => Repr::Function(on_f(a, b)),
            _ => unreachable!("representation follows the field kind"),
        };
        FieldElement { spec: self.spec, repr }
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.combine(
            rhs,
            |a, b| a + b,
            |a, b| {
                let num = a.num.mul(&b.den).add(&b.num.mul(&a.den));
                RationalFunction::new(num, a.den.mul(&b.den)).unwrap()
            },
        )
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.combine(
            rhs,
            |a, b| a * b,
            |a, b| RationalFunction::new(a.num.mul(&b.num), a.den.mul(&b.den)).unwrap(),
        )
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let repr = match &self.repr {
            Repr::Rational(q) => Repr::Rational(-q),
            Repr::Function(f) => Repr::Function(RationalFunction { num: f.num.neg(), den: f.den.clone() }),
        };
        FieldElement { spec: self.spec, repr }
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        &self + &rhs
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        &self - &rhs
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        &self * &rhs
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rational(q) => write!(f, "{q}"),
            Repr::Function(r) => {
                if r.den.degree() == Some(0) {
                    write!(f, "{}", r.num)
                } else {
                    write!(f, "({})/({})", r.num, r.den)
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    fn q(spec: FieldSpec, n: i64, d: i64) -> FieldElement {
        FieldElement::from_rational(spec, &rat(n, d)).unwrap()
    }

    #[test]
    fn padic_valuations() {
        let q2 = FieldSpec::qp(2).unwrap();
        let q3 = FieldSpec::qp(3).unwrap();
        let q5 = FieldSpec::qp(5).unwrap();
        assert_eq!(q(q2, 12, 1).valuation(), Valuation::Finite(2));
        assert_eq!(q(q3, 0, 1).valuation(), Valuation::Infinite);
        assert_eq!(q(q5, 1, 25).valuation(), Valuation::Finite(-2));
        assert_eq!(q(q5, -50, 3).valuation(), Valuation::Finite(2));
    }

    #[test]
    fn residues() {
        let q5 = FieldSpec::qp(5).unwrap();
        assert_eq!(q(q5, 7, 2).residue().unwrap().value(), 1);
        let q3 = FieldSpec::qp(3).unwrap();
        assert_eq!(FieldElement::one(q3).residue().unwrap().value(), 1);
        assert_eq!(q(q5, -1, 1).residue().unwrap().value(), 4);
        assert!(matches!(q(q5, 1, 5).residue(), Err(Error::DomainError(-1))));

        let f2 = FieldSpec::fpt(2).unwrap();
        let a = FieldElement::from_polynomials(f2, &[1, 1], &[1, 1, 1]).unwrap();
        assert_eq!(a.valuation(), Valuation::Finite(0));
        assert_eq!(a.residue().unwrap().value(), 1);
    }

    #[test]
    fn arithmetic_examples() {
        let q2 = FieldSpec::qp(2).unwrap();
        assert!((q(q2, 1, 2) + q(q2, 1, 2)).is_one());

        let f3 = FieldSpec::fpt(3).unwrap();
        let t = FieldElement::uniformizer(f3);
        assert!((&t * &t.inv().unwrap()).is_one());

        let q5 = FieldSpec::qp(5).unwrap();
        assert_eq!(q(q5, 2, 3).inv().unwrap(), q(q5, 3, 2));
        assert_eq!(FieldElement::zero(q5).inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn rational_function_normal_form() {
        let f5 = FieldSpec::fpt(5).unwrap();
        // (T^2 - 1)/(2T - 2) = (T + 1)/2 = 3T + 3
        let a = FieldElement::from_polynomials(f5, &[4, 0, 1], &[3, 2]).unwrap();
        let b = FieldElement::from_polynomials(f5, &[3, 3], &[1]).unwrap();
        assert_eq!(a, b);
        // denominator T^2 (lowest coefficient of T^2 * 3 is 3, scaled to 1)
        let c = FieldElement::from_polynomials(f5, &[1], &[0, 0, 3]).unwrap();
        assert_eq!(c.valuation(), Valuation::Finite(-2));
        assert_eq!(c.to_json(), json!({"num": {"0": 2}, "den": {"2": 1}}));
    }

    #[test]
    fn uniformizer_powers_hit_every_valuation() {
        for spec in [FieldSpec::qp(3).unwrap(), FieldSpec::fpt(2).unwrap()] {
            for k in -4..=4 {
                assert_eq!(
                    FieldElement::uniformizer_power(spec, k).valuation(),
                    Valuation::Finite(k)
                );
            }
        }
    }

    #[test]
    fn json_round_trip_and_errors() {
        let q7 = FieldSpec::qp(7).unwrap();
        let a = q(q7, -14, 9);
        assert_eq!(a.to_json(), json!("-14/9"));
        assert_eq!(FieldElement::from_json(q7, &a.to_json()).unwrap(), a);
        assert_eq!(FieldElement::from_json(q7, &json!(3)).unwrap(), q(q7, 3, 1));

        let f3 = FieldSpec::fpt(3).unwrap();
        let b = FieldElement::from_polynomials(f3, &[1, 2], &[0, 1]).unwrap();
        assert_eq!(FieldElement::from_json(f3, &b.to_json()).unwrap(), b);
        assert!(FieldElement::from_json(f3, &json!({"num": {"0": 5}})).is_err());

        assert_eq!(FieldSpec::from_json(&json!({"kind": "FpT", "p": 3})).unwrap(), f3);
        assert_eq!(FieldSpec::qp(4), Err(Error::NotPrime(4)));
        assert_eq!(FieldSpec::qp(1), Err(Error::NotPrime(1)));
    }

    fn rational_fn(p: u64) -> impl Strategy<Value = FieldElement> {
        let spec = FieldSpec::fpt(p).unwrap();
        (
            prop::collection::vec(0..p, 0..4),
            prop::collection::vec(0..p, 1..4),
        )
            .prop_filter_map("zero denominator", move |(n, d)| {
                FieldElement::from_polynomials(spec, &n, &d).ok()
            })
    }

    fn padic(p: u64) -> impl Strategy<Value = FieldElement> {
        let spec = FieldSpec::qp(p).unwrap();
        (-200i64..200, 1i64..200).prop_map(move |(n, d)| q(spec, n, d))
    }

    fn either_field() -> impl Strategy<Value = (FieldElement, FieldElement)> {
        prop_oneof![
            (padic(2), padic(2)),
            (padic(5), padic(5)),
            (rational_fn(3), rational_fn(3)),
            (rational_fn(2), rational_fn(2)),
        ]
    }

    proptest! {
        #[test]
        fn valuation_is_multiplicative((a, b) in either_field()) {
            prop_assert_eq!((&a * &b).valuation(), a.valuation() + b.valuation());
        }

        #[test]
        fn ultrametric((a, b) in either_field()) {
            let (va, vb) = (a.valuation(), b.valuation());
            let vs = (&a + &b).valuation();
            prop_assert!(vs >= va.min(vb));
            if va != vb {
                prop_assert_eq!(vs, va.min(vb));
            }
        }

        #[test]
        fn residue_is_a_ring_map((a, b) in either_field()) {
            prop_assume!(a.is_integral() && b.is_integral());
            let (ra, rb) = (a.residue().unwrap(), b.residue().unwrap());
            prop_assert_eq!((&a + &b).residue().unwrap(), ra + rb);
            prop_assert_eq!((&a * &b).residue().unwrap(), ra * rb);
            prop_assert_eq!(ra.is_zero(), a.valuation() > Valuation::Finite(0));
        }

        #[test]
        fn field_axioms((a, b) in either_field()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!(&a.div(&b).unwrap() * &b, a.clone());
            }
        }
    }
}
