//! Differences of products of Gaussian polynomials and of q-Kaplansky
//! numbers, plus the polynomial identities that reduce the q-Kaplansky
//! difference to Gaussian ones.
//!
//! All Gaussian factors use the zero convention of [`gaussian`], so a
//! factor such as `[M, m-1]` with `m = 1` or `[N, l+1]` with `l + 1 > N`
//! needs no special handling.

use crate::error::{Error, Result};
use crate::polynomial::IntPoly;
use crate::qseries::{gaussian, kaplansky};

/// Parameters `(M, N, m, l)` of `[M, m][N, l] - q^r [M, m-1][N, l+1]`,
/// validated against `1 <= m <= l < N` and `M - m >= N - l >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiffSpec {
    left_n: usize,
    right_n: usize,
    left_k: usize,
    right_k: usize,
}

impl DiffSpec {
    /// Arguments in the order `(M, N, m, l)`.
    pub fn new(big_m: usize, big_n: usize, m: usize, l: usize) -> Result<Self> {
        let ok = 1 <= m && m <= l && l < big_n && big_m >= m && big_m - m >= big_n - l;
        if !ok {
            return Err(Error::InvalidSpec(format!(
                "need 1 <= m <= l < N and M-m >= N-l >= 1, got (M,N,m,l) = ({big_m},{big_n},{m},{l})"
            )));
        }
        Ok(Self {
            left_n: big_m,
            right_n: big_n,
            left_k: m,
            right_k: l,
        })
    }

    /// `(M, N, m, l)`.
    pub fn params(&self) -> (usize, usize, usize, usize) {
        (self.left_n, self.right_n, self.left_k, self.right_k)
    }

    /// `M - N + 2l - 2m + 2`: the largest shift with a nonnegativity
    /// guarantee, equal to the degree gap between the two products.
    pub fn max_shift(&self) -> usize {
        let (big_m, big_n, m, l) = self.params();
        big_m + 2 * l + 2 - big_n - 2 * m
    }

    /// All valid specs with `M, N <= max`, ordered by `(M, N, m, l)`.
    pub fn all_up_to(max: usize) -> Vec<DiffSpec> {
        let mut out = Vec::new();
        for big_m in 1..=max {
            for big_n in 1..=max {
                for m in 1..=big_m {
                    for l in m..big_n {
                        if let Ok(s) = DiffSpec::new(big_m, big_n, m, l) {
                            out.push(s);
                        }
                    }
                }
            }
        }
        out
    }

    /// The two products `[M, m][N, l]` and `[M, m-1][N, l+1]`.
    pub fn products(&self) -> (IntPoly, IntPoly) {
        let (big_m, big_n, m, l) = self.params();
        gaussian_products(big_m as i64, big_n as i64, m as i64, l as i64)
    }
}

fn gaussian_products(big_m: i64, big_n: i64, m: i64, l: i64) -> (IntPoly, IntPoly) {
    (
        gaussian(big_m, m) * gaussian(big_n, l),
        gaussian(big_m, m - 1) * gaussian(big_n, l + 1),
    )
}

/// `[M, m][N, l] - q^r [M, m-1][N, l+1]` for arbitrary integer arguments,
/// without range validation. Out-of-range Gaussian factors are zero.
pub fn product_difference(big_m: i64, big_n: i64, m: i64, l: i64, r: usize) -> IntPoly {
    let (a, b) = gaussian_products(big_m, big_n, m, l);
    a - b.shift(r)
}

/// `D_q(M, N, m, l)`.
pub fn d_poly(spec: &DiffSpec) -> IntPoly {
    d_poly_shifted(spec, 0)
}

/// `D_q^r(M, N, m, l)`. Any `r` is accepted; nonnegativity holds for
/// `r <= spec.max_shift()`.
pub fn d_poly_shifted(spec: &DiffSpec, r: usize) -> IntPoly {
    let (a, b) = spec.products();
    a - b.shift(r)
}

fn check_kaplansky_diff(n: i64, m: i64, l: i64) -> Result<()> {
    if 1 <= m && m <= l && l < n {
        Ok(())
    } else {
        Err(Error::InvalidSpec(format!(
            "need 1 <= m <= l < n, got (n,m,l) = ({n},{m},{l})"
        )))
    }
}

/// `K_q(n, m) K_q(n, l) - q^r K_q(n, m-1) K_q(n, l+1)`.
pub fn kaplansky_diff(n: i64, m: i64, l: i64, r: usize) -> Result<IntPoly> {
    check_kaplansky_diff(n, m, l)?;
    let first = kaplansky(n, m)? * kaplansky(n, l)?;
    let second = kaplansky(n, m - 1)? * kaplansky(n, l + 1)?;
    Ok(first - second.shift(r))
}

/// Checks the two identities behind the nonnegativity of
/// [`kaplansky_diff`] for `0 <= r <= 2l - 2m + 2`:
///
/// ```text
/// K-diff = D^r(n,n,m,l) + q^n D^r(n-1,n,m-1,l) + q^n D^r(n,n-1,m,l-1)
///          + q^{2n} D^r(n-1,n-1,m-1,l-1)
///
/// q^n D^s(n-1,n-1,m-1,l-1) + D^s(n,n-1,m,l-1)
///     = D^s(n-1,n-1,m-1,l-1) + q^m D^{s-1}(n,n-1,m,l-1),   s = 2l-2m+2
/// ```
pub fn verify_decomposition(n: i64, m: i64, l: i64, r: usize) -> Result<bool> {
    check_kaplansky_diff(n, m, l)?;
    let s = (2 * (l - m) + 2) as usize;
    if r > s {
        return Err(Error::InvalidSpec(format!(
            "shift {r} exceeds 2l-2m+2 = {s}"
        )));
    }
    let nu = n as usize;
    let d = product_difference;

    let lhs = kaplansky_diff(n, m, l, r)?;
    let rhs = d(n, n, m, l, r)
        + d(n - 1, n, m - 1, l, r).shift(nu)
        + d(n, n - 1, m, l - 1, r).shift(nu)
        + d(n - 1, n - 1, m - 1, l - 1, r).shift(2 * nu);
    if lhs != rhs {
        return Ok(false);
    }

    let corner = d(n - 1, n - 1, m - 1, l - 1, s);
    let remainder = corner.shift(nu) + d(n, n - 1, m, l - 1, s);
    let regrouped = corner + d(n, n - 1, m, l - 1, s - 1).shift(m as usize);
    Ok(remainder == regrouped)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(big_m: usize, big_n: usize, m: usize, l: usize) -> DiffSpec {
        DiffSpec::new(big_m, big_n, m, l).unwrap()
    }

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn spec_validation() {
        assert!(DiffSpec::new(2, 2, 1, 1).is_ok());
        assert!(DiffSpec::new(2, 2, 0, 1).is_err());
        assert!(DiffSpec::new(2, 2, 2, 1).is_err());
        assert!(DiffSpec::new(3, 3, 1, 3).is_err());
        // M - m < N - l
        assert!(DiffSpec::new(2, 5, 1, 2).is_err());
        assert_eq!(spec(2, 2, 1, 1).max_shift(), 2);
    }

    #[test]
    fn d_poly_examples() {
        assert_eq!(d_poly(&spec(2, 2, 1, 1)), p(&[0, 2, 1]));
        assert!(d_poly(&spec(4, 4, 2, 2)).is_nonnegative());
    }

    #[test]
    fn d_poly_shifted_examples() {
        let s = spec(2, 2, 1, 1);
        assert_eq!(d_poly_shifted(&s, 0), d_poly(&s));
        assert_eq!(d_poly_shifted(&s, 2), p(&[1, 2]));
        let over = d_poly_shifted(&s, 3);
        assert_eq!(over, p(&[1, 2, 1, -1]));
        assert_eq!(over.first_negative(), Some(3));
    }

    #[test]
    fn second_product_vanishes_past_the_top() {
        // l + 1 > N cannot occur for a valid spec, so probe it through the
        // unchecked difference
        let diff = product_difference(4, 3, 2, 3, 0);
        assert_eq!(diff, gaussian(4, 2) * gaussian(3, 3));
    }

    #[test]
    fn kaplansky_diff_examples() {
        assert_eq!(kaplansky_diff(2, 1, 1, 2), Ok(p(&[1, 2, 2, 2])));
        let over = kaplansky_diff(2, 1, 1, 3).unwrap();
        assert_eq!(over.first_negative(), Some(5));
        assert!(matches!(
            kaplansky_diff(3, 2, 1, 0),
            Err(Error::InvalidSpec(_))
        ));
        assert!(matches!(
            kaplansky_diff(3, 1, 3, 0),
            Err(Error::InvalidSpec(_))
        ));
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(verify_decomposition(2, 1, 1, 0), Ok(true));
        assert_eq!(verify_decomposition(4, 1, 2, 3), Ok(true));
        assert_eq!(verify_decomposition(5, 2, 3, 4), Ok(true));
        assert!(verify_decomposition(5, 2, 3, 5).is_err());
    }
}
