//! The named polynomial families: Gaussian polynomials, q-Kaplansky numbers,
//! the Reiner–Stanton differences and the q-Catalan polynomials.
//!
//! Gaussian polynomials come from a process-wide table filled row by row
//! with `[n, m] = [n-1, m-1] + q^m [n-1, m]`. Each row is computed once,
//! under the write lock, so concurrent callers see the same values a
//! sequential run would.

use std::sync::{LazyLock, RwLock};

use crate::error::{Error, Result};
use crate::partitions::BoxShape;
use crate::polynomial::IntPoly;

static GAUSSIAN_ROWS: LazyLock<RwLock<Vec<Vec<IntPoly>>>> =
    LazyLock::new(|| RwLock::new(vec![vec![IntPoly::one()]]));

/// The Gaussian polynomial `[n, m]`; zero when `m < 0`, `m > n` or `n < 0`.
pub fn gaussian(n: i64, m: i64) -> IntPoly {
    if n < 0 || m < 0 || m > n {
        return IntPoly::zero();
    }
    let (n, m) = (n as usize, m as usize);
    {
        let rows = GAUSSIAN_ROWS.read().unwrap_or_else(|e| e.into_inner());
        if let Some(row) = rows.get(n) {
            return row[m].clone();
        }
    }
    let mut rows = GAUSSIAN_ROWS.write().unwrap_or_else(|e| e.into_inner());
    while rows.len() <= n {
        let prev = rows.last().expect("table starts with row 0");
        let k = prev.len();
        let row: Vec<IntPoly> = (0..=k)
            .map(|j| {
                let diag = if j == 0 {
                    IntPoly::zero()
                } else {
                    prev[j - 1].clone()
                };
                match prev.get(j) {
                    Some(up) => diag + up.shift(j),
                    None => diag,
                }
            })
            .collect();
        rows.push(row);
    }
    rows[n][m].clone()
}

/// `[n, m]` as the weight generating function of partitions in an
/// `m × (n - m)` box, by exhaustive enumeration.
pub fn gaussian_oracle(n: i64, m: i64) -> Result<IntPoly> {
    if n < 0 || m < 0 || m > n {
        return Err(Error::OutOfRange(format!(
            "partition oracle needs 0 <= m <= n, got n={n}, m={m}"
        )));
    }
    let shape = BoxShape::new(m as usize, (n - m) as usize);
    let mut counts = vec![0u64; shape.rows * shape.cols + 1];
    for p in shape.partitions() {
        counts[p.weight()] += 1;
    }
    Ok(IntPoly::from_coeffs(
        counts.into_iter().map(Into::into).collect(),
    ))
}

fn check_kaplansky_range(n: i64, m: i64) -> Result<()> {
    if n >= 1 && (0..=n).contains(&m) {
        Ok(())
    } else {
        Err(Error::OutOfRange(format!(
            "K_q(n, m) needs n >= 1 and 0 <= m <= n, got n={n}, m={m}"
        )))
    }
}

/// `K_q(n, m) = q^m [n, m] + [n-1, m-1]`.
pub fn kaplansky(n: i64, m: i64) -> Result<IntPoly> {
    check_kaplansky_range(n, m)?;
    Ok(gaussian(n, m).shift(m as usize) + gaussian(n - 1, m - 1))
}

/// `K_q(n, m)` from its defining quotient `(1 - q^{n+m}) [n, m] / (1 - q^n)`.
pub fn kaplansky_by_division(n: i64, m: i64) -> Result<IntPoly> {
    check_kaplansky_range(n, m)?;
    let numer = IntPoly::one_minus_q_pow((n + m) as usize) * gaussian(n, m);
    numer.exact_div(&IntPoly::one_minus_q_pow(n as usize))
}

/// `F_{n,m}(q) = [n+m, m] - q^n [n+m-2, m-2]`.
pub fn reiner_stanton(n: i64, m: i64) -> Result<IntPoly> {
    if n < 0 || m < 0 {
        return Err(Error::OutOfRange(format!(
            "F_(n,m) needs n, m >= 0, got n={n}, m={m}"
        )));
    }
    Ok(gaussian(n + m, m) - gaussian(n + m - 2, m - 2).shift(n as usize))
}

/// `C_n(q) = (1 - q) [2n, n] / (1 - q^{n+1})`.
pub fn q_catalan(n: i64) -> Result<IntPoly> {
    if n < 0 {
        return Err(Error::OutOfRange(format!("C_n(q) needs n >= 0, got {n}")));
    }
    let numer = IntPoly::one_minus_q_pow(1) * gaussian(2 * n, n);
    numer.exact_div(&IntPoly::one_minus_q_pow((n + 1) as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    const K62: [i64; 11] = [1, 1, 2, 2, 3, 2, 3, 2, 2, 1, 1];

    #[test]
    fn gaussian_examples() {
        for n in 0..6 {
            assert_eq!(gaussian(n, 0), IntPoly::one());
        }
        assert_eq!(gaussian(4, 2), p(&[1, 1, 2, 1, 1]));
        assert!(gaussian(3, 5).is_zero());
        assert!(gaussian(3, -1).is_zero());
        assert!(gaussian(-1, -1).is_zero());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(gaussian_oracle(2, 1), Ok(p(&[1, 1])));
        assert_eq!(gaussian_oracle(7, 7), Ok(IntPoly::one()));
        assert_eq!(gaussian_oracle(4, 2), Ok(p(&[1, 1, 2, 1, 1])));
        assert!(matches!(gaussian_oracle(3, 4), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn kaplansky_examples() {
        assert_eq!(kaplansky(6, 2), Ok(p(&K62)));
        assert_eq!(kaplansky(5, 0), Ok(IntPoly::one()));
        assert_eq!(kaplansky(2, 1), Ok(p(&[1, 1, 1])));
        assert!(matches!(kaplansky(0, 0), Err(Error::OutOfRange(_))));
        assert!(matches!(kaplansky(3, 4), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn kaplansky_division_examples() {
        assert_eq!(kaplansky_by_division(2, 1), Ok(p(&[1, 1, 1])));
        assert_eq!(kaplansky_by_division(4, 4), Ok(p(&[1, 0, 0, 0, 1])));
        assert_eq!(kaplansky_by_division(6, 2), Ok(p(&K62)));
    }

    #[test]
    fn reiner_stanton_examples() {
        assert_eq!(reiner_stanton(3, 0), Ok(IntPoly::one()));
        assert_eq!(reiner_stanton(2, 2), Ok(p(&[1, 1, 1, 1, 1])));
        assert_eq!(reiner_stanton(2, 2), kaplansky(3, 2));
    }

    #[test]
    fn q_catalan_examples() {
        assert_eq!(q_catalan(0), Ok(IntPoly::one()));
        assert_eq!(q_catalan(1), Ok(IntPoly::one()));
        assert_eq!(q_catalan(2), Ok(p(&[1, 0, 1])));
        assert_eq!(q_catalan(3), Ok(p(&[1, 0, 1, 1, 1, 0, 1])));
    }

    #[test]
    fn concurrent_table_growth_is_consistent() {
        let handles: Vec<_> = (0..8)
            .map(|t| std::thread::spawn(move || gaussian(30 + t, 12)))
            .collect();
        let got: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (t, g) in got.iter().enumerate() {
            let n = 30 + t as i64;
            assert_eq!(g, &(gaussian(n - 1, 11) + gaussian(n - 1, 12).shift(12)));
        }
    }
}
