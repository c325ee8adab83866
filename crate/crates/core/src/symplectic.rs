//! `Sp_2n` for the form `Ψ = [[0, J], [-J, 0]]` with `J` the antidiagonal
//! `n x n` matrix of ones, its apartment `R^n`, and the embedding into the
//! `SL_2n` apartment `x ↦ (x_1, …, x_n, -x_n, …, -x_1)`.
//!
//! Stabilizers are computed by tropical stabilization of the embedded
//! point; on the star of the origin they are cross-checked against the
//! flag condition on the reduction, reusing the `SL_2n` machinery.

use num::{BigRational, Signed, Zero};
use serde_json::Value;

use crate::apartment::{
    coordinate_partition, in_star_of_origin, reduction_stabilizes_flag, ApartmentPoint,
    MonomialMatrix, WallPosition,
};
use crate::error::{Error, Result};
use crate::matrix::FieldMatrix;
use crate::rational::{floor_to_i64, is_integer};
use crate::tropical::stabilizes_tropically;
use crate::valued_field::{FieldElement, FieldSpec};
use crate::weyl::{WeylElement, WeylType};

/// Index paired with `i` by the form: `2n - 1 - i` (0-based).
pub fn partner(n: usize, i: usize) -> usize {
    2 * n - 1 - i
}

/// `Ψ(e_i, e_{partner(i)})`: `+1` in the first half, `-1` in the second.
fn form_sign(n: usize, i: usize) -> i64 {
    if i < n {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticForm {
    n: usize,
    psi: FieldMatrix,
}

impl SymplecticForm {
    pub fn new(spec: FieldSpec, n: usize) -> Self {
        let psi = FieldMatrix::from_fn(spec, 2 * n, |i, j| {
            if j == partner(n, i) {
                FieldElement::from_integer(spec, form_sign(n, i))
            } else {
                FieldElement::zero(spec)
            }
        });
        SymplecticForm { n, psi }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &FieldMatrix {
        &self.psi
    }

    /// The antidiagonal `J` (`J_ij = 1` iff `i + j = n - 1`, 0-based).
    pub fn antidiagonal(spec: FieldSpec, n: usize) -> FieldMatrix {
        FieldMatrix::from_fn(spec, n, |i, j| FieldElement::from_integer(spec, i64::from(i + j + 1 == n)))
    }
}

fn even_half(m: &FieldMatrix) -> Result<usize> {
    if !m.size().is_multiple_of(2) || m.size() == 0 {
        return Err(Error::DimensionMismatch { expected: m.size() + 1, found: m.size() });
    }
    Ok(m.size() / 2)
}

/// `ᵗM Ψ M = Ψ`.
pub fn is_symplectic(m: &FieldMatrix) -> Result<bool> {
    let n = even_half(m)?;
    let psi = SymplecticForm::new(m.spec(), n).psi;
    Ok(m.transpose().mul(&psi)?.mul(m)? == psi)
}

/// Reflection in the antidiagonal: `M†_{i,j} = M_{n+1-j, n+1-i}`.
pub fn dagger(m: &FieldMatrix) -> FieldMatrix {
    let n = m.size();
    FieldMatrix::from_fn(m.spec(), n, |i, j| m.get(n - 1 - j, n - 1 - i).clone())
}

fn block(m: &FieldMatrix, row: usize, col: usize) -> FieldMatrix {
    let n = m.size() / 2;
    FieldMatrix::from_fn(m.spec(), n, |i, j| m.get(row * n + i, col * n + j).clone())
}

fn sub(a: &FieldMatrix, b: &FieldMatrix) -> FieldMatrix {
    FieldMatrix::from_fn(a.spec(), a.size(), |i, j| a.get(i, j) - b.get(i, j))
}

/// The block form of the symplectic condition for `[[A, B], [C, D]]`:
/// `A†D - C†B = 1`, `A†C = C†A`, `B†D = D†B`.
pub fn satisfies_block_criterion(m: &FieldMatrix) -> Result<bool> {
    let n = even_half(m)?;
    let (a, b, c, d) = (block(m, 0, 0), block(m, 0, 1), block(m, 1, 0), block(m, 1, 1));
    let (ad, bd, cd) = (dagger(&a), dagger(&b), dagger(&c));
    let first = sub(&ad.mul(&d)?, &cd.mul(&b)?) == FieldMatrix::identity(m.spec(), n);
    Ok(first && ad.mul(&c)? == cd.mul(&a)? && bd.mul(&d)? == dagger(&d).mul(&b)?)
}

/// `diag(s_1, …, s_n, s_n^{-1}, …, s_1^{-1})`.
pub fn torus_element(spec: FieldSpec, s: &[FieldElement]) -> Result<FieldMatrix> {
    let mut diag: Vec<FieldElement> = s.to_vec();
    for x in s.iter().rev() {
        diag.push(x.inv()?);
    }
    Ok(FieldMatrix::diagonal(spec, &diag))
}

/// Root subgroup element `I + a·X` for the root vector
/// `X = E_ij - ε_i ε_j E_{j'i'}` (or `X = E_{ii'}` when `j = i'`), where
/// `i'` is the partner index and `ε = ±1` the form sign.
pub fn root_element(spec: FieldSpec, n: usize, i: usize, j: usize, a: &FieldElement) -> FieldMatrix {
    assert!(i != j && i < 2 * n && j < 2 * n);
    let mut m = FieldMatrix::identity(spec, 2 * n);
    m.set(i, j, a.clone());
    if j != partner(n, i) {
        let (ip, jp) = (partner(n, i), partner(n, j));
        let c = form_sign(n, i) * form_sign(n, j);
        let entry = if c > 0 { -a } else { a.clone() };
        m.set(jp, ip, entry);
    }
    m
}

/// Monomial matrix of a signed permutation: `e_i ↦ e_{σ(i)}` and
/// `e_{i'} ↦ e_{σ(i)'}` for sign `+1`; `e_i ↦ e_{σ(i)'}` and
/// `e_{i'} ↦ -e_{σ(i)}` for sign `-1`.
pub fn weyl_monomial(spec: FieldSpec, w: &WeylElement) -> Result<MonomialMatrix> {
    if w.kind() != WeylType::C {
        return Err(Error::TypeMismatch);
    }
    let n = w.rank();
    let mut perm = vec![0; 2 * n];
    let mut scalars = vec![FieldElement::one(spec); 2 * n];
    for i in 0..n {
        let (target, ip) = (w.perm()[i], partner(n, i));
        if w.signs()[i] > 0 {
            perm[i] = target;
            perm[ip] = partner(n, target);
        } else {
            perm[i] = partner(n, target);
            perm[ip] = target;
            scalars[ip] = FieldElement::from_integer(spec, -1);
        }
    }
    MonomialMatrix::new(perm, scalars)
}

/// Point `Σ x_i η_i` of the `Sp_2n` apartment; no constraint on the
/// coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpApartmentPoint {
    coords: Vec<BigRational>,
}

impl SpApartmentPoint {
    pub fn new(coords: Vec<BigRational>) -> Self {
        SpApartmentPoint { coords }
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn origin(n: usize) -> Self {
        Self::new(vec![BigRational::zero(); n])
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn add_scaled(&self, s: &BigRational, c: &SpApartmentPoint) -> Self {
        Self::new(self.coords.iter().zip(&c.coords).map(|(a, b)| a + s * b).collect())
    }

    pub fn act(&self, w: &WeylElement) -> Self {
        Self::new(w.act(&self.coords))
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coords
                .iter()
                .map(|c| Value::String(crate::rational::format_rational(c)))
                .collect(),
        )
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let arr = value
            .as_array()
            .ok_or_else(|| Error::Parse("point must be a JSON array".into()))?;
        arr.iter()
            .map(|v| match v {
                Value::String(s) => crate::rational::parse_rational(s),
                Value::Number(n) => n
                    .as_i64()
                    .map(|i| BigRational::from_integer(i.into()))
                    .ok_or_else(|| Error::Parse(format!("non-integer number {n}"))),
                other => Err(Error::Parse(format!("bad coordinate {other}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

impl AsRef<[BigRational]> for SpApartmentPoint {
    fn as_ref(&self) -> &[BigRational] {
        &self.coords
    }
}

/// `(x_1, …, x_n) ↦ (x_1, …, x_n, -x_n, …, -x_1)`.
pub fn embed_vector(coords: &[BigRational]) -> Vec<BigRational> {
    coords.iter().cloned().chain(coords.iter().rev().map(|c| -c)).collect()
}

pub fn embed_point(x: &SpApartmentPoint) -> ApartmentPoint {
    // the embedded vector already has coordinate sum zero
    ApartmentPoint::new(embed_vector(&x.coords)).expect("nonempty")
}

/// Whether a symplectic `g` fixes `x`: `g` stabilizes the embedded point
/// tropically.
pub fn sp_stabilizer_membership(g: &FieldMatrix, x: &SpApartmentPoint) -> Result<bool> {
    if !is_symplectic(g)? {
        return Err(Error::NotSymplectic);
    }
    if g.size() != 2 * x.rank() {
        return Err(Error::DimensionMismatch { expected: g.size(), found: 2 * x.rank() });
    }
    stabilizes_tropically(g, &embed_point(x).to_trop_vector())
}

/// `|2 x_i| < 1` and `|x_i ± x_j| < 1`.
pub fn in_sp_star_of_origin(coords: &[BigRational]) -> bool {
    let one = BigRational::from_integer(1.into());
    coords.iter().all(|a| {
        coords
            .iter()
            .all(|b| (a - b).abs() < one && (a + b).abs() < one)
    })
}

/// Integral `g` whose reduction lies in the parabolic attached to the
/// position of `x` in the star of the origin.
pub fn sp_parahoric_oracle(g: &FieldMatrix, x: &SpApartmentPoint) -> Result<bool> {
    if !is_symplectic(g)? {
        return Err(Error::NotSymplectic);
    }
    if g.size() != 2 * x.rank() {
        return Err(Error::DimensionMismatch { expected: g.size(), found: 2 * x.rank() });
    }
    if !in_sp_star_of_origin(&x.coords) {
        return Err(Error::OutOfStar);
    }
    let embedded = embed_vector(&x.coords);
    debug_assert!(in_star_of_origin(&embedded));
    reduction_stabilizes_flag(g, &coordinate_partition(&embedded))
}

/// Positions of `2x_i` and of `x_i - x_j`, `x_i + x_j` (`i < j`) relative to
/// the integers: the walls of the `C_n` arrangement.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpFaceAddress(Vec<WallPosition>);

pub fn sp_face_address(x: &SpApartmentPoint) -> SpFaceAddress {
    let pos = |d: BigRational| {
        let m = floor_to_i64(&d);
        if is_integer(&d) {
            WallPosition::OnWall(m)
        } else {
            WallPosition::Between(m)
        }
    };
    let c = &x.coords;
    let mut out = Vec::new();
    for i in 0..c.len() {
        out.push(pos(&c[i] + &c[i]));
        for j in i + 1..c.len() {
            out.push(pos(&c[i] - &c[j]));
            out.push(pos(&c[i] + &c[j]));
        }
    }
    SpFaceAddress(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::apartment::{face_address, normalizer_action};
    use crate::rational::rat;

    fn q2() -> FieldSpec {
        FieldSpec::qp(2).unwrap()
    }

    #[test]
    fn form_shape() {
        let psi = SymplecticForm::new(q2(), 2);
        let expected = FieldMatrix::from_integers(
            q2(),
            &[&[0, 0, 0, 1], &[0, 0, 1, 0], &[0, -1, 0, 0], &[-1, 0, 0, 0]],
        )
        .unwrap();
        assert_eq!(psi.matrix(), &expected);
        assert_eq!(psi.matrix().transpose(), FieldMatrix::from_fn(q2(), 4, |i, j| -psi.matrix().get(i, j)));
    }

    #[test]
    fn symplectic_examples() {
        assert!(is_symplectic(&FieldMatrix::identity(q2(), 4)).unwrap());
        let p = FieldElement::uniformizer(q2());
        let s3 = FieldElement::from_integer(q2(), 3);
        let t = torus_element(q2(), &[p.clone(), s3]).unwrap();
        assert!(is_symplectic(&t).unwrap());

        // C = E_11 is not fixed by the dagger, so A†C = C† A fails
        let mut bad = FieldMatrix::identity(q2(), 4);
        bad.set(2, 0, FieldElement::one(q2()));
        assert!(!satisfies_block_criterion(&bad).unwrap());
        assert!(!is_symplectic(&bad).unwrap());

        assert!(matches!(
            is_symplectic(&FieldMatrix::identity(q2(), 3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn root_elements_and_weyl_elements_are_symplectic() {
        let a = FieldElement::from_integer(q2(), 5);
        for n in 1..=3 {
            for i in 0..2 * n {
                for j in 0..2 * n {
                    if i == j {
                        continue;
                    }
                    let m = root_element(q2(), n, i, j, &a);
                    assert!(is_symplectic(&m).unwrap(), "root ({i},{j}) n={n}");
                    assert!(satisfies_block_criterion(&m).unwrap());
                }
            }
            for w in WeylElement::all(WeylType::C, n) {
                let m = weyl_monomial(q2(), &w).unwrap().to_matrix();
                assert!(is_symplectic(&m).unwrap());
            }
        }
    }

    #[test]
    fn dagger_examples() {
        let m = FieldMatrix::from_integers(q2(), &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(dagger(&m), FieldMatrix::from_integers(q2(), &[&[4, 2], &[3, 1]]).unwrap());
        assert_eq!(dagger(&dagger(&m)), m);
        let id = FieldMatrix::identity(q2(), 3);
        assert_eq!(dagger(&id), id);
        let n = FieldMatrix::from_integers(q2(), &[&[0, 1], &[5, -2]]).unwrap();
        assert_eq!(dagger(&m.mul(&n).unwrap()), dagger(&n).mul(&dagger(&m)).unwrap());
        let j = SymplecticForm::antidiagonal(q2(), 2);
        assert_eq!(dagger(&m), j.mul(&m.transpose()).unwrap().mul(&j).unwrap());
    }

    #[test]
    fn embedding_examples() {
        assert_eq!(embed_point(&SpApartmentPoint::origin(2)), ApartmentPoint::origin(4));
        assert_eq!(
            embed_point(&SpApartmentPoint::from_integers(&[1, 0])),
            ApartmentPoint::from_integers(&[1, 0, 0, -1])
        );
        let x = SpApartmentPoint::new(vec![rat(1, 2), rat(1, 3)]);
        assert_eq!(embed_vector(x.coords()), vec![rat(1, 2), rat(1, 3), rat(-1, 3), rat(-1, 2)]);
    }

    #[test]
    fn stabilizer_examples() {
        let p = FieldElement::uniformizer(q2());
        let t = torus_element(q2(), &[p.clone(), FieldElement::one(q2())]).unwrap();
        let origin = SpApartmentPoint::origin(2);
        assert!(!sp_stabilizer_membership(&t, &origin).unwrap());
        assert!(!sp_stabilizer_membership(&t, &SpApartmentPoint::from_integers(&[1, 0])).unwrap());
        let inv_p = p.inv().unwrap();
        let u = root_element(q2(), 2, 0, 3, &inv_p);
        assert!(!sp_stabilizer_membership(&u, &origin).unwrap());
        // v(a) = -1 ≥ x_4' - x_1' = -2 x_1 needs x_1 ≥ 1/2
        assert!(sp_stabilizer_membership(&u, &SpApartmentPoint::new(vec![rat(1, 2), rat(0, 1)])).unwrap());

        let not_sp = FieldMatrix::elementary(q2(), 4, 0, 1, FieldElement::one(q2()));
        assert_eq!(sp_stabilizer_membership(&not_sp, &origin), Err(Error::NotSymplectic));
    }

    #[test]
    fn iwahori_in_sp4() {
        let x = SpApartmentPoint::new(vec![rat(1, 4), rat(1, 8)]);
        let p = FieldElement::uniformizer(q2());
        let one = FieldElement::one(q2());
        for i in 0..4 {
            for j in 0..4 {
                if i == j {
                    continue;
                }
                for a in [&one, &p] {
                    let g = root_element(q2(), 2, i, j, a);
                    let expected = i < j || a == &p;
                    assert_eq!(sp_stabilizer_membership(&g, &x).unwrap(), expected);
                    assert_eq!(sp_parahoric_oracle(&g, &x).unwrap(), expected);
                }
            }
        }
        let far = SpApartmentPoint::new(vec![rat(1, 2), rat(0, 1)]);
        assert_eq!(sp_parahoric_oracle(&FieldMatrix::identity(q2(), 4), &far), Err(Error::OutOfStar));
    }

    #[test]
    fn weyl_action_matches_monomial_action() {
        let x = SpApartmentPoint::new(vec![rat(1, 3), rat(-5, 2), rat(2, 1)]);
        for w in WeylElement::all(WeylType::C, 3) {
            let m = weyl_monomial(q2(), &w).unwrap();
            assert_eq!(normalizer_action(&m, &embed_point(&x)).unwrap(), embed_point(&x.act(&w)));
        }
    }

    #[test]
    fn sp_address_matches_embedded_address() {
        let pts = [
            vec![rat(1, 4), rat(1, 8)],
            vec![rat(1, 5), rat(1, 9)],
            vec![rat(1, 2), rat(0, 1)],
            vec![rat(3, 4), rat(1, 4)],
            vec![rat(7, 10), rat(3, 10)],
        ];
        for a in &pts {
            for b in &pts {
                let (xa, xb) = (SpApartmentPoint::new(a.clone()), SpApartmentPoint::new(b.clone()));
                assert_eq!(
                    sp_face_address(&xa) == sp_face_address(&xb),
                    face_address(&embed_point(&xa)) == face_address(&embed_point(&xb))
                );
            }
        }
    }
}
