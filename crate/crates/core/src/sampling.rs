//! Random generators for field elements, group elements and apartment
//! points. Everything is driven by a caller-supplied RNG so that runs are
//! reproducible from a seed.

use num::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::apartment::MonomialMatrix;
use crate::matrix::FieldMatrix;
use crate::rational::ceil_to_i64;
use crate::symplectic::{self, SpApartmentPoint};
use crate::tropical::TropVector;
use crate::valued_field::{FieldElement, FieldKind, FieldSpec};
use crate::weyl::{permutations, WeylElement, WeylType};

/// A random element of `O_K`. Small numerators and denominators prime to
/// `p` (or to `T`), times a random small power of the uniformizer.
pub fn integral_element<R: Rng + ?Sized>(spec: FieldSpec, rng: &mut R) -> FieldElement {
    let p = spec.p();
    let base = match spec.kind() {
        FieldKind::PadicRationals => {
            let num: i64 = rng.gen_range(-9..=9);
            let den = loop {
                let d: u64 = rng.gen_range(1..=9);
                if !d.is_multiple_of(p) {
                    break d;
                }
            };
            FieldElement::from_rational(spec, &BigRational::new(num.into(), (den as i64).into()))
                .expect("nonzero denominator")
        }
        FieldKind::RationalFunctions => {
            let num: Vec<u64> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(0..p)).collect();
            let den = vec![rng.gen_range(1..p), rng.gen_range(0..p)];
            FieldElement::from_polynomials(spec, &num, &den).expect("nonzero denominator")
        }
    };
    if rng.gen_bool(0.3) {
        &base * &FieldElement::uniformizer_power(spec, rng.gen_range(1..=2))
    } else {
        base
    }
}

/// A random element of `O_K^×`: nonzero residue plus `π · O_K`.
pub fn unit<R: Rng + ?Sized>(spec: FieldSpec, rng: &mut R) -> FieldElement {
    let r = FieldElement::from_integer(spec, rng.gen_range(1..spec.p()) as i64);
    let tail = &FieldElement::uniformizer(spec) * &integral_element(spec, rng);
    &r + &tail
}

/// A nonzero element of valuation exactly `k`.
pub fn element_of_valuation<R: Rng + ?Sized>(spec: FieldSpec, k: i64, rng: &mut R) -> FieldElement {
    &unit(spec, rng) * &FieldElement::uniformizer_power(spec, k)
}

/// A random element of `π^k O_K`; zero with small probability.
pub fn element_with_min_valuation<R: Rng + ?Sized>(spec: FieldSpec, k: i64, rng: &mut R) -> FieldElement {
    if rng.gen_bool(0.1) {
        return FieldElement::zero(spec);
    }
    &integral_element(spec, rng) * &FieldElement::uniformizer_power(spec, k)
}

/// A random nonzero element with valuation in `lo..=hi`.
pub fn element<R: Rng + ?Sized>(spec: FieldSpec, lo: i64, hi: i64, rng: &mut R) -> FieldElement {
    element_of_valuation(spec, rng.gen_range(lo..=hi), rng)
}

fn random_pair<R: Rng + ?Sized>(n: usize, rng: &mut R) -> (usize, usize) {
    let i = rng.gen_range(0..n);
    let j = (i + rng.gen_range(1..n)) % n;
    (i, j)
}

/// Unit diagonal matrix of determinant one.
pub fn unit_torus<R: Rng + ?Sized>(spec: FieldSpec, n: usize, rng: &mut R) -> FieldMatrix {
    let mut diag: Vec<FieldElement> = (0..n - 1).map(|_| unit(spec, rng)).collect();
    let prod = diag.iter().fold(FieldElement::one(spec), |acc, u| &acc * u);
    diag.push(prod.inv().expect("unit"));
    FieldMatrix::diagonal(spec, &diag)
}

/// `diag(π^{k_1}, …, π^{k_n}) · (unit torus)` with `Σ k_i = 0`, `|k_i| ≤ bound`
/// for all but the last exponent.
pub fn torus_element<R: Rng + ?Sized>(spec: FieldSpec, n: usize, bound: i64, rng: &mut R) -> FieldMatrix {
    let mut ks: Vec<i64> = (0..n - 1).map(|_| rng.gen_range(-bound..=bound)).collect();
    ks.push(-ks.iter().sum::<i64>());
    let diag: Vec<FieldElement> = ks.iter().map(|&k| FieldElement::uniformizer_power(spec, k)).collect();
    FieldMatrix::diagonal(spec, &diag)
        .mul(&unit_torus(spec, n, rng))
        .expect("same size")
}

/// Signed permutation matrix of determinant one.
pub fn weyl_matrix<R: Rng + ?Sized>(spec: FieldSpec, n: usize, rng: &mut R) -> FieldMatrix {
    let perm = permutations(n).choose(rng).expect("n ≥ 1").clone();
    MonomialMatrix::signed_permutation(spec, perm)
        .expect("valid permutation")
        .to_matrix()
}

/// A word of length `len` in integral elementary matrices, signed
/// permutations and unit tori: an element of `SL_n(O_K)`.
pub fn integral_sl<R: Rng + ?Sized>(spec: FieldSpec, n: usize, len: usize, rng: &mut R) -> FieldMatrix {
    let mut g = FieldMatrix::identity(spec, n);
    for _ in 0..len {
        let step = match rng.gen_range(0..8) {
            0 => weyl_matrix(spec, n, rng),
            1 => unit_torus(spec, n, rng),
            _ => {
                let (i, j) = random_pair(n, rng);
                FieldMatrix::elementary(spec, n, i, j, integral_element(spec, rng))
            }
        };
        g = g.mul(&step).expect("same size");
    }
    g
}

/// A random element of `SL_n(K)`: an integral word, `t w t^{-1}`, `t w` or
/// `w t w'` for integral words `w, w'` and torus elements `t`.
pub fn sl_element<R: Rng + ?Sized>(spec: FieldSpec, n: usize, rng: &mut R) -> FieldMatrix {
    let len = rng.gen_range(1..=2 * n + 2);
    let w = integral_sl(spec, n, len, rng);
    let t = torus_element(spec, n, 2, rng);
    match rng.gen_range(0..4) {
        0 => w,
        1 => t.conjugate(&w).expect("invertible"),
        2 => t.mul(&w).expect("same size"),
        _ => {
            let w2 = integral_sl(spec, n, len, rng);
            w.mul(&t).and_then(|m| m.mul(&w2)).expect("same size")
        }
    }
}

/// A random element of `SL_n(K)` with at least one non-integral entry.
pub fn non_integral_sl<R: Rng + ?Sized>(spec: FieldSpec, n: usize, rng: &mut R) -> FieldMatrix {
    loop {
        let g = sl_element(spec, n, rng);
        if !g.is_integral() {
            return g;
        }
    }
}

/// A random rational with denominator at most `max_den` and absolute value
/// at most `range`.
pub fn rational<R: Rng + ?Sized>(max_den: i64, range: i64, rng: &mut R) -> BigRational {
    let den = rng.gen_range(1..=max_den);
    let num = rng.gen_range(-range * den..=range * den);
    BigRational::new(num.into(), den.into())
}

pub fn rational_vector<R: Rng + ?Sized>(n: usize, max_den: i64, range: i64, rng: &mut R) -> Vec<BigRational> {
    (0..n).map(|_| rational(max_den, range, rng)).collect()
}

pub fn trop_point<R: Rng + ?Sized>(n: usize, max_den: i64, range: i64, rng: &mut R) -> TropVector {
    TropVector::from_rationals(&rational_vector(n, max_den, range, rng))
}

/// An element of the stabilizer of `x`: a word in `E_ij(a)` with
/// `v(a) ≥ x_j - x_i`, unit tori and, for pairs on a common wall, the
/// monomial `e_i ↦ t e_j`, `e_j ↦ -t^{-1} e_i` with `v(t) = x_i - x_j`.
pub fn stabilizer_element<R: Rng + ?Sized>(
    spec: FieldSpec,
    x: &[BigRational],
    len: usize,
    rng: &mut R,
) -> FieldMatrix {
    let n = x.len();
    let mut g = FieldMatrix::identity(spec, n);
    for _ in 0..len {
        let (i, j) = random_pair(n, rng);
        let diff = &x[i] - &x[j];
        let step = match rng.gen_range(0..6) {
            0 => unit_torus(spec, n, rng),
            1 if diff.is_integer() => {
                let t = element_of_valuation(spec, diff.to_integer().try_into().expect("small"), rng);
                let mut m = FieldMatrix::identity(spec, n);
                m.set(i, i, FieldElement::zero(spec));
                m.set(j, j, FieldElement::zero(spec));
                m.set(j, i, t.clone());
                m.set(i, j, -&t.inv().expect("nonzero"));
                m
            }
            _ => {
                let k = ceil_to_i64(&(&x[j] - &x[i]));
                FieldMatrix::elementary(spec, n, i, j, element_with_min_valuation(spec, k, rng))
            }
        };
        g = g.mul(&step).expect("same size");
    }
    g
}

/// Uniformly random Weyl group element of the given type and rank.
pub fn weyl_element<R: Rng + ?Sized>(kind: WeylType, n: usize, rng: &mut R) -> WeylElement {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    match kind {
        WeylType::A => WeylElement::permutation(perm),
        WeylType::C => {
            let signs = (0..n).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
            WeylElement::signed_permutation(perm, signs)
        }
    }
}

fn sp_unit_torus<R: Rng + ?Sized>(spec: FieldSpec, n: usize, rng: &mut R) -> FieldMatrix {
    let s: Vec<FieldElement> = (0..n).map(|_| unit(spec, rng)).collect();
    symplectic::torus_element(spec, &s).expect("units")
}

/// Symplectic torus element with exponents in `-bound..=bound`.
pub fn sp_torus<R: Rng + ?Sized>(spec: FieldSpec, n: usize, bound: i64, rng: &mut R) -> FieldMatrix {
    let s: Vec<FieldElement> = (0..n)
        .map(|_| element_of_valuation(spec, rng.gen_range(-bound..=bound), rng))
        .collect();
    symplectic::torus_element(spec, &s).expect("nonzero")
}

/// A word in integral root elements, Weyl monomials and unit tori: an
/// element of `Sp_2n(O_K)`.
pub fn sp_integral<R: Rng + ?Sized>(spec: FieldSpec, n: usize, len: usize, rng: &mut R) -> FieldMatrix {
    let mut g = FieldMatrix::identity(spec, 2 * n);
    for _ in 0..len {
        let step = match rng.gen_range(0..8) {
            0 => symplectic::weyl_monomial(spec, &weyl_element(WeylType::C, n, rng))
                .expect("type C")
                .to_matrix(),
            1 => sp_unit_torus(spec, n, rng),
            _ => {
                let (i, j) = random_pair(2 * n, rng);
                symplectic::root_element(spec, n, i, j, &integral_element(spec, rng))
            }
        };
        g = g.mul(&step).expect("same size");
    }
    g
}

/// A random element of `Sp_2n(K)`, built like [`sl_element`] from
/// symplectic pieces.
pub fn sp_element<R: Rng + ?Sized>(spec: FieldSpec, n: usize, rng: &mut R) -> FieldMatrix {
    let len = rng.gen_range(1..=2 * n + 2);
    let w = sp_integral(spec, n, len, rng);
    let t = sp_torus(spec, n, 2, rng);
    match rng.gen_range(0..4) {
        0 => w,
        1 => t.conjugate(&w).expect("invertible"),
        2 => t.mul(&w).expect("same size"),
        _ => {
            let w2 = sp_integral(spec, n, len, rng);
            w.mul(&t).and_then(|m| m.mul(&w2)).expect("same size")
        }
    }
}

/// An element of the stabilizer of `x` in `Sp_2n(K)`: root elements whose
/// valuation clears the embedded coordinate differences, and unit tori.
pub fn sp_stabilizer_element<R: Rng + ?Sized>(
    spec: FieldSpec,
    x: &SpApartmentPoint,
    len: usize,
    rng: &mut R,
) -> FieldMatrix {
    let n = x.rank();
    let y = symplectic::embed_vector(x.coords());
    let mut g = FieldMatrix::identity(spec, 2 * n);
    for _ in 0..len {
        let step = if rng.gen_range(0..5) == 0 {
            sp_unit_torus(spec, n, rng)
        } else {
            let (i, j) = random_pair(2 * n, rng);
            let k = ceil_to_i64(&(&y[j] - &y[i]));
            symplectic::root_element(spec, n, i, j, &element_with_min_valuation(spec, k, rng))
        };
        g = g.mul(&step).expect("same size");
    }
    g
}
