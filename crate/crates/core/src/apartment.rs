//! The standard apartment of `SL_n` as the tropical torus `R^n / R(1,…,1)`.
//!
//! Points are kept in the representative with coordinate sum zero. The
//! module covers the action of monomial matrices, the affine hyperplane
//! arrangement `x_i - x_j ∈ Z`, and two descriptions of point stabilizers:
//! tropical stabilization, and (on the star of the origin) integrality plus
//! a flag condition on the reduction modulo the uniformizer.

use num::{BigRational, Signed, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::matrix::FieldMatrix;
use crate::rational::{floor_to_i64, format_rational, is_integer, parse_rational};
use crate::tropical::{stabilizes_tropically, TropVector};
use crate::valued_field::{FieldElement, FieldSpec, Valuation};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ApartmentPoint {
    coords: Vec<BigRational>,
}

impl ApartmentPoint {
    /// Any representative; it is shifted to coordinate sum zero.
    pub fn new(coords: Vec<BigRational>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::DimensionMismatch { expected: 1, found: 0 });
        }
        let n = BigRational::from_integer(coords.len().into());
        let mean = coords.iter().fold(BigRational::zero(), |a, c| a + c) / n;
        Ok(ApartmentPoint { coords: coords.into_iter().map(|c| c - &mean).collect() })
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| BigRational::from_integer(c.into())).collect())
            .expect("nonempty")
    }

    pub fn origin(n: usize) -> Self {
        ApartmentPoint { coords: vec![BigRational::zero(); n] }
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn to_trop_vector(&self) -> TropVector {
        TropVector::from_rationals(&self.coords)
    }

    /// `self + s * c`.
    pub fn add_scaled(&self, s: &BigRational, c: &ApartmentPoint) -> Result<Self> {
        if c.dim() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: c.dim() });
        }
        Self::new(self.coords.iter().zip(&c.coords).map(|(a, b)| a + s * b).collect())
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.coords.iter().map(|c| Value::String(format_rational(c))).collect())
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let coords = value
            .as_array()
            .ok_or_else(|| Error::Parse("point must be a JSON array".into()))?
            .iter()
            .map(|v| match v {
                Value::String(s) => parse_rational(s),
                Value::Number(n) => n
                    .as_i64()
                    .map(|i| BigRational::from_integer(i.into()))
                    .ok_or_else(|| Error::Parse(format!("non-integer number {n}"))),
                other => Err(Error::Parse(format!("bad coordinate {other}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(coords)
    }
}

impl AsRef<[BigRational]> for ApartmentPoint {
    fn as_ref(&self) -> &[BigRational] {
        &self.coords
    }
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

fn is_permutation(perm: &[usize]) -> bool {
    let mut seen = vec![false; perm.len()];
    perm.iter().all(|&p| p < perm.len() && !std::mem::replace(&mut seen[p], true))
}

/// Element of the normalizer of the diagonal torus: `e_i ↦ t_i e_{σ(i)}`,
/// with determinant `sign(σ) ∏ t_i = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialMatrix {
    perm: Vec<usize>,
    scalars: Vec<FieldElement>,
}

impl MonomialMatrix {
    pub fn new(perm: Vec<usize>, scalars: Vec<FieldElement>) -> Result<Self> {
        if perm.len() != scalars.len() {
            return Err(Error::DimensionMismatch { expected: perm.len(), found: scalars.len() });
        }
        if !is_permutation(&perm) {
            return Err(Error::Parse(format!("{perm:?} is not a permutation")));
        }
        let spec = scalars.first().map(FieldElement::spec).ok_or(Error::DimensionMismatch {
            expected: 1,
            found: 0,
        })?;
        let det = scalars.iter().fold(
            FieldElement::from_integer(spec, permutation_sign(&perm)),
            |acc, t| &acc * t,
        );
        if !det.is_one() {
            return Err(Error::DeterminantNotOne);
        }
        Ok(MonomialMatrix { perm, scalars })
    }

    /// The permutation matrix of `perm` with the first scalar set to the
    /// sign of `perm`, so that the determinant is 1.
    pub fn signed_permutation(spec: FieldSpec, perm: Vec<usize>) -> Result<Self> {
        let mut scalars = vec![FieldElement::one(spec); perm.len()];
        if let Some(first) = scalars.first_mut() {
            *first = FieldElement::from_integer(spec, permutation_sign(&perm));
        }
        Self::new(perm, scalars)
    }

    pub fn torus(diag: Vec<FieldElement>) -> Result<Self> {
        Self::new((0..diag.len()).collect(), diag)
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    pub fn scalars(&self) -> &[FieldElement] {
        &self.scalars
    }

    pub fn to_matrix(&self) -> FieldMatrix {
        let spec = self.scalars[0].spec();
        let n = self.perm.len();
        let mut m = FieldMatrix::from_fn(spec, n, |_, _| FieldElement::zero(spec));
        for (i, t) in self.scalars.iter().enumerate() {
            m.set(self.perm[i], i, t.clone());
        }
        m
    }
}

/// `ν(t) = (-v(t_1), …, -v(t_n))` for a diagonal `t` of determinant 1.
pub fn translation_point(t: &FieldMatrix) -> Result<ApartmentPoint> {
    if t.entries().any(|((i, j), e)| i != j && !e.is_zero()) {
        return Err(Error::NotDiagonal);
    }
    if !t.has_determinant_one() {
        return Err(Error::DeterminantNotOne);
    }
    let coords = (0..t.size())
        .map(|i| match t.get(i, i).valuation() {
            Valuation::Finite(v) => BigRational::from_integer((-v).into()),
            Valuation::Infinite => unreachable!("det 1 excludes zero diagonal entries"),
        })
        .collect();
    ApartmentPoint::new(coords)
}

/// Affine action of `N(K)`: coordinate `i` moves to position `σ(i)` and is
/// translated by `-v(t_i)`.
pub fn normalizer_action(n: &MonomialMatrix, x: &ApartmentPoint) -> Result<ApartmentPoint> {
    if n.perm.len() != x.dim() {
        return Err(Error::DimensionMismatch { expected: n.perm.len(), found: x.dim() });
    }
    let mut out = vec![BigRational::zero(); x.dim()];
    for (i, (xi, t)) in x.coords.iter().zip(&n.scalars).enumerate() {
        let v = t.valuation().finite().expect("monomial scalars are nonzero");
        out[n.perm[i]] = xi - BigRational::from_integer(v.into());
    }
    ApartmentPoint::new(out)
}

/// Position of `x_i - x_j` relative to the walls `x_i - x_j = m`, `m ∈ Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WallPosition {
    OnWall(i64),
    /// Strictly between `m` and `m + 1`.
    Between(i64),
}

/// For every pair `i < j` (lexicographic), the position of `x_i - x_j`.
/// Two points share an address exactly when they lie in the relative
/// interior of the same face.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceAddress {
    n: usize,
    pairs: Vec<WallPosition>,
}

impl FaceAddress {
    pub fn positions(&self) -> impl Iterator<Item = ((usize, usize), WallPosition)> + '_ {
        let n = self.n;
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .zip(self.pairs.iter().copied())
    }

    pub fn position(&self, i: usize, j: usize) -> WallPosition {
        assert!(i < j && j < self.n);
        self.positions().find(|&(ij, _)| ij == (i, j)).map(|(_, w)| w).unwrap()
    }

    pub fn is_vertex(&self) -> bool {
        self.pairs.iter().all(|w| matches!(w, WallPosition::OnWall(_)))
    }

    pub fn is_alcove(&self) -> bool {
        self.pairs.iter().all(|w| matches!(w, WallPosition::Between(_)))
    }
}

pub fn face_address(x: &ApartmentPoint) -> FaceAddress {
    let n = x.dim();
    let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let d = &x.coords[i] - &x.coords[j];
            let m = floor_to_i64(&d);
            pairs.push(if is_integer(&d) { WallPosition::OnWall(m) } else { WallPosition::Between(m) });
        }
    }
    FaceAddress { n, pairs }
}

/// Ordered set partition of `{0, …, n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrderedPartition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Self {
        OrderedPartition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn size(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Block index of every element.
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0; self.size()];
        for (b, block) in self.blocks.iter().enumerate() {
            for &i in block {
                out[i] = b;
            }
        }
        out
    }

    /// Every ordered set partition of `{0, …, n-1}`.
    pub fn all(n: usize) -> Vec<OrderedPartition> {
        fn extend(i: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<OrderedPartition>) {
            if i == n {
                out.push(OrderedPartition::new(blocks.clone()));
                return;
            }
            for b in 0..blocks.len() {
                blocks[b].push(i);
                extend(i + 1, n, blocks, out);
                blocks[b].pop();
            }
            for pos in 0..=blocks.len() {
                blocks.insert(pos, vec![i]);
                extend(i + 1, n, blocks, out);
                blocks.remove(pos);
            }
        }
        let mut out = Vec::new();
        extend(0, n, &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        out
    }

    /// A point of the face of the star of the origin labelled by this
    /// partition: block `k` gets coordinate `-k / (n + 1)`.
    pub fn star_point(&self) -> ApartmentPoint {
        let n = self.size() as i64;
        let block_of = self.block_of();
        ApartmentPoint::new(
            block_of
                .iter()
                .map(|&b| BigRational::new((-(b as i64)).into(), (n + 1).into()))
                .collect(),
        )
        .expect("nonempty")
    }
}

/// Groups equal coordinates, blocks ordered by decreasing coordinate.
pub fn coordinate_partition(coords: &[BigRational]) -> OrderedPartition {
    let mut values: Vec<&BigRational> = coords.iter().collect();
    values.sort_by(|a, b| b.cmp(a));
    values.dedup();
    OrderedPartition::new(
        values
            .into_iter()
            .map(|v| (0..coords.len()).filter(|&i| coords[i] == *v).collect())
            .collect(),
    )
}

/// `|x_i - x_j| < 1` for all `i, j`.
pub fn in_star_of_origin(coords: &[BigRational]) -> bool {
    let one = BigRational::from_integer(1.into());
    coords
        .iter()
        .all(|a| coords.iter().all(|b| (a - b).abs() < one))
}

/// Whether `g ∈ SL_n(K)` fixes `x`; computed as tropical stabilization.
pub fn stabilizer_membership(g: &FieldMatrix, x: &ApartmentPoint) -> Result<bool> {
    if !g.has_determinant_one() {
        return Err(Error::DeterminantNotOne);
    }
    stabilizes_tropically(g, &x.to_trop_vector())
}

/// Whether the reduction of an integral `g` stabilizes the flag
/// `V_1 ⊂ V_2 ⊂ …`, where `V_k` is spanned by the basis vectors in the
/// first `k` blocks. Returns `false` for non-integral `g`.
pub fn reduction_stabilizes_flag(g: &FieldMatrix, flag: &OrderedPartition) -> Result<bool> {
    if flag.size() != g.size() {
        return Err(Error::DimensionMismatch { expected: g.size(), found: flag.size() });
    }
    if !g.is_integral() {
        return Ok(false);
    }
    let n = g.size();
    let mut in_subspace = vec![false; n];
    for block in flag.blocks() {
        for &j in block {
            in_subspace[j] = true;
        }
        for (j, _) in in_subspace.iter().enumerate().filter(|(_, &s)| s) {
            // column j is the image of e_j under the reduction
            for (i, _) in in_subspace.iter().enumerate().filter(|(_, &s)| !s) {
                if !g.get(i, j).residue()?.is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Parahoric description of the stabilizer of `x ∈ Star(0)`: `g` is
/// integral and its reduction stabilizes the coordinate flag of `x`.
pub fn parahoric_oracle(g: &FieldMatrix, x: &ApartmentPoint) -> Result<bool> {
    if !g.has_determinant_one() {
        return Err(Error::DeterminantNotOne);
    }
    if !in_star_of_origin(x.coords()) {
        return Err(Error::OutOfStar);
    }
    reduction_stabilizes_flag(g, &coordinate_partition(x.coords()))
}
