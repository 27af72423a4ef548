//! Exact arithmetic and bounded verification for q-Kaplansky numbers.
//!
//! `K_q(n, m) = q^m [n, m] + [n-1, m-1]` is a q-analogue of the count of
//! `m`-subsets of a cycle of length `n + m` with no two adjacent elements.
//! This crate computes it and its relatives with arbitrary-precision
//! coefficients, enumerates the binary word families whose `inv` and `maj`
//! statistics produce it, implements the bijections between those
//! families, and sweeps finite parameter ranges for counterexamples to the
//! surrounding identities and inequalities.
//!
//! ```
//! use qkaplansky::{kaplansky, IntPoly};
//!
//! let k = kaplansky(6, 2)?;
//! assert_eq!(k, IntPoly::from_i64s(&[1, 1, 2, 2, 3, 2, 3, 2, 2, 1, 1]));
//! assert!(k.is_symmetric()?);
//! assert!(!k.is_unimodal()?);
//! # Ok::<(), qkaplansky::Error>(())
//! ```
//!
//! The [`checker`] module is the entry point for sweeps.

pub mod bijections;
pub mod checker;
pub mod error;
pub mod logconcavity;
pub mod partitions;
pub mod polynomial;
pub mod qseries;
pub mod words;

pub use checker::{run_all, run_check, Bounds, CheckId, CheckReport, Checker, Outcome, Profile};
pub use error::{Error, Result};
pub use logconcavity::{d_poly, d_poly_shifted, kaplansky_diff, verify_decomposition, DiffSpec};
pub use partitions::{butler_inject, BoxShape, Partition};
pub use polynomial::IntPoly;
pub use qseries::{
    gaussian, gaussian_oracle, kaplansky, kaplansky_by_division, q_catalan, reiner_stanton,
};
pub use words::{BinaryWord, FamilyKind, Statistic, WordFamily};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/words.md")]
    mod words {}
    #[doc = include_str!("../../../book/src/bijections.md")]
    mod bijections {}
    #[doc = include_str!("../../../book/src/logconcavity.md")]
    mod logconcavity {}
    #[doc = include_str!("../../../book/src/catalan.md")]
    mod catalan {}
    #[doc = include_str!("../../../book/src/checks.md")]
    mod checks {}
}
