//! Helpers for exact rationals and their `"num/den"` text form.

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"a/b"` or `"a"` (surrounding whitespace allowed).
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("`{text}` is not a rational number"));
    match text.split_once('/') {
        Some((n, d)) => {
            let num: BigInt = n.trim().parse().map_err(|_| bad())?;
            let den: BigInt = d.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(BigRational::new(num, den))
        }
        None => Ok(BigRational::from_integer(text.parse().map_err(|_| bad())?)),
    }
}

/// Always emits the `"num/den"` form, also for integers.
pub fn format_rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn floor_to_i64(q: &BigRational) -> i64 {
    let f = q.floor().to_integer();
    i64::try_from(f).expect("floor does not fit in i64")
}

pub fn is_integer(q: &BigRational) -> bool {
    q.denom().is_one()
}

/// The smallest integer `>= q`.
pub fn ceil_to_i64(q: &BigRational) -> i64 {
    let c = q.ceil().to_integer();
    i64::try_from(c).expect("ceil does not fit in i64")
}

pub fn to_f64(q: &BigRational) -> f64 {
    use num::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

/// Determinant of a square rational matrix by row reduction.
pub fn determinant(rows: &[Vec<BigRational>]) -> BigRational {
    let n = rows.len();
    let mut a = rows.to_vec();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= &a[col][col];
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &a[col][col];
            for c in col..n {
                let delta = &factor * &a[col][c];
                a[r][c] -= delta;
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(parse_rational(" -7 ").unwrap(), int(-7));
        assert_eq!(format_rational(&int(2)), "2/1");
        assert_eq!(format_rational(&rat(-1, 3)), "-1/3");
        assert_eq!(determinant(&[vec![int(0), int(2)], vec![int(3), rat(1, 2)]]), int(-6));
        assert!(matches!(parse_rational("1/0"), Err(Error::DivisionByZero)));
        assert!(matches!(parse_rational("x"), Err(Error::Parse(_))));
    }

    #[test]
    fn rounding() {
        assert_eq!(floor_to_i64(&rat(-1, 2)), -1);
        assert_eq!(ceil_to_i64(&rat(-1, 2)), 0);
        assert_eq!(ceil_to_i64(&rat(1, 3)), 1);
    }
}
