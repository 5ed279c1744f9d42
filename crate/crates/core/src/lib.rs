//! Exact machinery for non-symmetric Cauchy kernels and the last-passage
//! percolation laws they encode.
//!
//! The crate is organized around the objects the identities live on:
//!
//! - [`weyl`]: weak compositions, partitions, the symmetric group with its
//!   Bruhat order, bubble-sort operators and the Coxeter monoid.
//! - [`poly`]: exact sparse integer polynomials in two variable families,
//!   divided differences, Demazure characters/atoms, truncated kernels.
//! - [`crystal`]: semistandard tableaux, Kashiwara operators, keys,
//!   Demazure crystals and atoms, the arrow-reversing involution,
//!   dilatation into tensor powers.
//! - [`rsk`]: the column-insertion RSK bijection on nonnegative integer
//!   matrices, its inverse, and the percolation statistic.
//! - [`kernel`]: staircase/truncated/augmented shapes, reading words,
//!   the two μ̃ algorithms, and coefficient-exact identity verifiers.
//! - [`lpp`]: geometric sampling, exact laws, brute-force and Monte Carlo
//!   estimation with goodness-of-fit comparison.

pub mod crystal;
mod error;
pub mod exec;
pub mod kernel;
pub mod lpp;
pub mod poly;
pub mod rsk;
pub mod weyl;

pub use error::Error;

/// Hard cap on the symmetric group rank for exhaustive features.
///
/// Everything downstream indexes simple reflections with small integers;
/// the cap keeps factorial enumerations honest instead of silently slow.
pub const MAX_RANK: usize = 16;

/// Crystals larger than this are refused rather than generated.
pub const MAX_CRYSTAL_VERTICES: usize = 1_000_000;
