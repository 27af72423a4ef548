//! Dense polynomials in `q` with arbitrary-precision integer coefficients.
//!
//! [`IntPoly`] is the value type every other module computes with. The
//! coefficient vector is kept normalized: the last stored coefficient is
//! nonzero, and the zero polynomial stores nothing.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Polynomial in `q`; `coeffs()[i]` is the coefficient of `q^i`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// Binary ring operation accepted by [`IntPoly::combine`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Add,
    Sub,
    Mul,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * q^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        Self { coeffs }
    }

    /// `1 - q^k`.
    pub fn one_minus_q_pow(k: usize) -> Self {
        Self::one() - Self::monomial(1, k)
    }

    /// `1 + q^k`.
    pub fn one_plus_q_pow(k: usize) -> Self {
        Self::one() + Self::monomial(1, k)
    }

    /// Builds a polynomial from coefficients in ascending order, stripping
    /// trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `q^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn combine(&self, other: &IntPoly, op: Op) -> IntPoly {
        match op {
            Op::Add => self + other,
            Op::Sub => self - other,
            Op::Mul => self * other,
        }
    }

    /// Multiplication by `q^r`.
    pub fn shift(&self, r: usize) -> IntPoly {
        if self.is_zero() || r == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); r];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Exact quotient `self / d` in `Z[q]`.
    ///
    /// Fails with [`Error::NonDivisible`] when the long division over the
    /// integers leaves a remainder, including the case where a leading
    /// coefficient does not divide evenly.
    pub fn exact_div(&self, d: &IntPoly) -> Result<IntPoly> {
        let d_deg = d.degree().ok_or(Error::DivisionByZero)?;
        let Some(p_deg) = self.degree() else {
            return Ok(IntPoly::zero());
        };
        if p_deg < d_deg {
            return Err(Error::NonDivisible);
        }
        let lead = &d.coeffs[d_deg];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); p_deg - d_deg + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + d_deg];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NonDivisible);
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                if !dc.is_zero() {
                    rem[k + j] -= &q * dc;
                }
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonDivisible);
        }
        Ok(IntPoly::from_coeffs(quot))
    }

    /// Index of the first negative coefficient, if any.
    pub fn first_negative(&self) -> Option<usize> {
        self.coeffs.iter().position(Signed::is_negative)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.first_negative().is_none()
    }

    /// Palindromic test `c_i = c_{d-i}`.
    pub fn is_symmetric(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let c = &self.coeffs;
        Ok(c.iter().eq(c.iter().rev()))
    }

    /// Returns the witness of non-unimodality, or `None` when the coefficients
    /// weakly rise and then weakly fall.
    ///
    /// The witness is the valley: the index just before the first strict
    /// ascent that follows a strict descent. For `K_q(6,2)` this is index 5.
    pub fn unimodality_violation(&self) -> Result<Option<usize>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut descended = false;
        for (i, w) in self.coeffs.windows(2).enumerate() {
            if w[1] < w[0] {
                descended = true;
            } else if w[1] > w[0] && descended {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    pub fn is_unimodal(&self) -> Result<bool> {
        Ok(self.unimodality_violation()?.is_none())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (i, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}q")?,
                (_, true) => write!(f, "q^{i}")?,
                (_, false) => write!(f, "{mag}q^{i}")?,
            }
        }
        Ok(())
    }
}

fn zip_with(a: &IntPoly, b: &IntPoly, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> IntPoly {
    let zero = BigInt::zero();
    let len = a.coeffs.len().max(b.coeffs.len());
    let coeffs = (0..len)
        .map(|i| {
            f(
                a.coeffs.get(i).unwrap_or(&zero),
                b.coeffs.get(i).unwrap_or(&zero),
            )
        })
        .collect();
    IntPoly::from_coeffs(coeffs)
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $method:ident),*) => {$(
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: &IntPoly) -> IntPoly {
                (&self).$method(rhs)
            }
        }
        impl $tr<IntPoly> for &IntPoly {
            type Output = IntPoly;
            fn $method(self, rhs: IntPoly) -> IntPoly {
                self.$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}
