//! Exact computations with diagonally quasi-symmetric functions.
//!
//! The crate covers the combinatorics of bicompositions, sparse rational
//! polynomials in two sets of variables, the diagonal and Hivert actions
//! of the symmetric group, the Hopf algebra `DQSym` with its free dual
//! `DNSym`, power-sum symmetric functions for Frobenius characteristics,
//! and bigraded Hilbert matrices of the associated quotient spaces.

pub mod action;
pub mod bicomp;
pub mod checks;
pub mod dnsym;
pub mod dqsym;
pub mod error;
pub mod lincomb;
pub mod linalg;
pub mod poly;
pub mod quotient;
pub mod series;
pub mod symfun;

pub use bicomp::{Bicomposition, Bivector, Composition};
pub use error::{Error, Result};
pub use num_rational::BigRational;

/// Bidegree `(x-degree, y-degree)`.
pub type Bidegree = (u32, u32);
