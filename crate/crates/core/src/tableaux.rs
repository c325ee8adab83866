//! Semistandard Young tableaux, Kostka numbers and Schur polynomials.

use std::collections::BTreeMap;

use num::{BigRational, One, Zero};

use crate::error::{Error, Result};
use crate::rational::determinant;

/// `λ_1 ≥ λ_2 ≥ … ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition);
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.iter().filter(|&&p| p > 0).count()
    }

    /// `(1, 0, …, 0)` with `n` entries.
    pub fn standard(n: usize) -> Self {
        let mut parts = vec![0; n];
        parts[0] = 1;
        Partition(parts)
    }

    /// Parts padded with zeros (or trimmed of zeros) to exactly `n` entries.
    pub fn padded(&self, n: usize) -> Result<Vec<usize>> {
        if self.length() > n {
            return Err(Error::TooManyParts { parts: self.length(), n });
        }
        let mut parts: Vec<usize> = self.0.iter().copied().filter(|&p| p > 0).collect();
        parts.resize(n, 0);
        Ok(parts)
    }

    /// All partitions of `m` with at most `n` parts, padded to length `n`.
    pub fn all(m: usize, n: usize) -> Vec<Partition> {
        fn go(m: usize, max: usize, slots: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if slots == 0 {
                if m == 0 {
                    out.push(Partition(prefix.clone()));
                }
                return;
            }
            for p in (0..=m.min(max)).rev() {
                prefix.push(p);
                go(m - p, p, slots - 1, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(m, m, n, &mut Vec::new(), &mut out);
        out
    }
}

/// Calls `f` on every semistandard tableau of the given shape with entries
/// in `0..n`: rows weakly increase, columns strictly increase. With
/// `content`, only tableaux using entry `k` exactly `content[k]` times.
pub fn for_each_ssyt(shape: &[usize], n: usize, content: Option<&[usize]>, mut f: impl FnMut(&[Vec<usize>])) {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut tableau: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut remaining: Vec<usize> = match content {
        Some(c) => c.to_vec(),
        None => vec![usize::MAX; n],
    };

    fn fill(
        k: usize,
        cells: &[(usize, usize)],
        n: usize,
        tableau: &mut Vec<Vec<usize>>,
        remaining: &mut Vec<usize>,
        f: &mut dyn FnMut(&[Vec<usize>]),
    ) {
        if k == cells.len() {
            f(tableau);
            return;
        }
        let (r, c) = cells[k];
        let lo_row = if c > 0 { tableau[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { tableau[r - 1][c] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..n {
            if remaining[v] == 0 {
                continue;
            }
            remaining[v] -= 1;
            tableau[r][c] = v;
            fill(k + 1, cells, n, tableau, remaining, f);
            remaining[v] += 1;
        }
    }

    fill(0, &cells, n, &mut tableau, &mut remaining, &mut f);
}

/// Number of semistandard tableaux of shape `λ` and content `μ`.
pub fn kostka(lambda: &Partition, mu: &[usize]) -> Result<u64> {
    let total: usize = mu.iter().sum();
    if lambda.size() != total {
        return Err(Error::WeightMismatch { lambda: lambda.size(), mu: total });
    }
    if lambda.length() > mu.len() {
        return Ok(0);
    }
    let mut count = 0;
    for_each_ssyt(lambda.parts(), mu.len(), Some(mu), |_| count += 1);
    Ok(count)
}

/// Content distribution of the tableaux of shape `λ` in `n` letters:
/// `μ ↦ K_{λμ}`, zero entries omitted.
pub fn contents(lambda: &Partition, n: usize) -> Result<BTreeMap<Vec<usize>, u64>> {
    let shape = lambda.padded(n)?;
    let mut out = BTreeMap::new();
    for_each_ssyt(&shape, n, None, |t| {
        let mut mu = vec![0; n];
        for v in t.iter().flatten() {
            mu[*v] += 1;
        }
        *out.entry(mu).or_insert(0) += 1;
    });
    Ok(out)
}

fn power(z: &BigRational, k: usize) -> BigRational {
    num::pow::pow(z.clone(), k)
}

/// `S_λ(z)` as the sum over tableaux of `Π z_{T(c)}`.
pub fn schur_tableaux(lambda: &Partition, z: &[BigRational]) -> Result<BigRational> {
    let mut total = BigRational::zero();
    for (mu, k) in contents(lambda, z.len())? {
        let monomial = mu
            .iter()
            .zip(z)
            .fold(BigRational::one(), |acc, (&e, zi)| acc * power(zi, e));
        total += monomial * BigRational::from_integer((k as i64).into());
    }
    Ok(total)
}

/// `S_λ(z) = det(z_j^{λ_i + n - i}) / det(z_j^{n - i})`.
pub fn schur_bialternant(lambda: &Partition, z: &[BigRational]) -> Result<BigRational> {
    let n = z.len();
    let parts = lambda.padded(n)?;
    for i in 0..n {
        if z[i + 1..].contains(&z[i]) {
            return Err(Error::RepeatedValues);
        }
    }
    let matrix = |shift: &dyn Fn(usize) -> usize| -> Vec<Vec<BigRational>> {
        (0..n).map(|i| z.iter().map(|zj| power(zj, shift(i))).collect()).collect()
    };
    let num = determinant(&matrix(&|i| parts[i] + n - 1 - i));
    let den = determinant(&matrix(&|i| n - 1 - i));
    Ok(num / den)
}

/// Both evaluations of `S_λ(z)`; the bialternant is absent when two
/// arguments coincide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurValue {
    pub tableaux: BigRational,
    pub bialternant: Option<BigRational>,
}

impl SchurValue {
    pub fn agree(&self) -> bool {
        self.bialternant.as_ref().is_none_or(|b| b == &self.tableaux)
    }
}

pub fn schur_eval(lambda: &Partition, z: &[BigRational]) -> Result<SchurValue> {
    let tableaux = schur_tableaux(lambda, z)?;
    let bialternant = match schur_bialternant(lambda, z) {
        Ok(v) => Some(v),
        Err(Error::RepeatedValues) => None,
        Err(e) => return Err(e),
    };
    Ok(SchurValue { tableaux, bialternant })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&part(&[2, 1, 0]), &[1, 1, 1]).unwrap(), 2);
        assert_eq!(kostka(&part(&[3, 1]), &[3, 1]).unwrap(), 1);
        assert_eq!(kostka(&part(&[1, 0, 0]), &[0, 1, 0]).unwrap(), 1);
        assert_eq!(kostka(&part(&[2, 2]), &[1, 1, 1, 1]).unwrap(), 2);
        assert_eq!(kostka(&part(&[3, 2, 1]), &[2, 2, 2]).unwrap(), 2);
        assert!(matches!(kostka(&part(&[2]), &[1]), Err(Error::WeightMismatch { .. })));
    }

    #[test]
    fn dimensions() {
        let dim = |p: &[usize], n| contents(&part(p), n).unwrap().values().sum::<u64>();
        assert_eq!(dim(&[2, 1, 0], 3), 8);
        assert_eq!(dim(&[3, 2, 1], 3), 8);
        assert_eq!(dim(&[2], 3), 6);
        assert_eq!(dim(&[1, 1], 4), 6);
        assert!(matches!(contents(&part(&[1, 1, 1]), 2), Err(Error::TooManyParts { .. })));
    }

    #[test]
    fn schur_examples() {
        let z = [int(1), int(2)];
        let v = schur_eval(&part(&[2, 1]), &z).unwrap();
        assert_eq!(v.tableaux, int(6));
        assert!(v.agree());
        let w = [rat(1, 2), int(-3), int(5)];
        assert_eq!(schur_tableaux(&Partition::standard(3), &w).unwrap(), rat(5, 2));
        assert_eq!(schur_bialternant(&part(&[1]), &[int(2), int(2)]), Err(Error::RepeatedValues));
    }

    #[test]
    fn partitions_enumerated() {
        assert_eq!(Partition::all(4, 4).len(), 5);
        assert_eq!(Partition::all(6, 2).len(), 4);
        assert!(Partition::new(vec![1, 2]).is_err());
    }
}
