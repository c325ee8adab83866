//! Square matrices over a [`FieldSpec`] with exact Gaussian elimination.

use std::fmt;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::valued_field::{FieldElement, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldMatrix {
    spec: FieldSpec,
    n: usize,
    entries: Vec<FieldElement>,
}

impl FieldMatrix {
    pub fn from_rows(spec: FieldSpec, rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            for e in row {
                if e.spec() != spec {
                    return Err(Error::FieldMismatch);
                }
                entries.push(e);
            }
        }
        Ok(FieldMatrix { spec, n, entries })
    }

    /// Convenience constructor from integer entries.
    pub fn from_integers(spec: FieldSpec, rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            spec,
            rows.iter()
                .map(|r| r.iter().map(|&v| FieldElement::from_integer(spec, v)).collect())
                .collect(),
        )
    }

    pub fn from_fn(spec: FieldSpec, n: usize, mut f: impl FnMut(usize, usize) -> FieldElement) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let e = f(i, j);
                assert_eq!(e.spec(), spec, "field mismatch");
                entries.push(e);
            }
        }
        FieldMatrix { spec, n, entries }
    }

    pub fn identity(spec: FieldSpec, n: usize) -> Self {
        Self::from_fn(spec, n, |i, j| {
            FieldElement::from_integer(spec, i64::from(i == j))
        })
    }

    pub fn diagonal(spec: FieldSpec, diag: &[FieldElement]) -> Self {
        Self::from_fn(spec, diag.len(), |i, j| {
            if i == j {
                diag[i].clone()
            } else {
                FieldElement::zero(spec)
            }
        })
    }

    /// `I + a * E_ij` for `i != j`.
    pub fn elementary(spec: FieldSpec, n: usize, i: usize, j: usize, a: FieldElement) -> Self {
        assert_ne!(i, j);
        let mut m = Self::identity(spec, n);
        m.set(i, j, a);
        m
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: FieldElement) {
        assert_eq!(value.spec(), self.spec, "field mismatch");
        self.entries[i * self.n + j] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[FieldElement]> {
        self.entries.chunks(self.n.max(1))
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &FieldElement)> {
        let n = self.n;
        self.entries.iter().enumerate().map(move |(k, e)| ((k / n, k % n), e))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.spec, self.n, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        if self.spec != other.spec {
            return Err(Error::FieldMismatch);
        }
        let zero = FieldElement::zero(self.spec);
        Ok(Self::from_fn(self.spec, self.n, |i, j| {
            (0..self.n).fold(zero.clone(), |acc, k| {
                let (a, b) = (self.get(i, k), other.get(k, j));
                if a.is_zero() || b.is_zero() {
                    acc
                } else {
                    &acc + &(a * b)
                }
            })
        }))
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(FieldElement::is_integral)
    }

    /// Determinant by row reduction.
    pub fn determinant(&self) -> FieldElement {
        let n = self.n;
        let mut a: Vec<Vec<FieldElement>> = self.rows().map(<[_]>::to_vec).collect();
        let mut det = FieldElement::one(self.spec);
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return FieldElement::zero(self.spec);
            };
            if pivot != col {
                a.swap(pivot, col);
                det = -&det;
            }
            det = &det * &a[col][col];
            let inv = a[col][col].inv().expect("pivot is nonzero");
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] * &inv;
                for c in col..n {
                    let delta = &factor * &a[col][c];
                    a[r][c] = &a[r][c] - &delta;
                }
            }
        }
        det
    }

    pub fn has_determinant_one(&self) -> bool {
        self.determinant().is_one()
    }

    /// Gauss-Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let spec = self.spec;
        let mut a: Vec<Vec<FieldElement>> = self.rows().map(<[_]>::to_vec).collect();
        let mut inv: Vec<Vec<FieldElement>> =
            Self::identity(spec, n).rows().map(<[_]>::to_vec).collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(Error::SingularMatrix)?;
            a.swap(pivot, col);
            inv.swap(pivot, col);
            let s = a[col][col].inv()?;
            for c in 0..n {
                a[col][c] = &a[col][c] * &s;
                inv[col][c] = &inv[col][c] * &s;
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                for c in 0..n {
                    let da = &factor * &a[col][c];
                    a[r][c] = &a[r][c] - &da;
                    let di = &factor * &inv[col][c];
                    inv[r][c] = &inv[r][c] - &di;
                }
            }
        }
        Self::from_rows(spec, inv)
    }

    /// `self * other * self^{-1}`.
    pub fn conjugate(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.mul(&self.inverse()?)
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows()
                .map(|r| Value::Array(r.iter().map(FieldElement::to_json).collect()))
                .collect(),
        )
    }

    pub fn from_json(spec: FieldSpec, value: &Value) -> Result<Self> {
        let rows = value
            .as_array()
            .ok_or_else(|| Error::Parse("matrix must be an array of rows".into()))?;
        let rows = rows
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Parse("matrix row must be an array".into()))?
                    .iter()
                    .map(|e| FieldElement::from_json(spec, e))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(spec, rows)
    }
}

impl fmt::Display for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
