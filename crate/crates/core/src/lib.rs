//! Vanishing flats of functions over GF(2^n).
//!
//! A 2-dimensional flat `{x1, x2, x3, x4}` of GF(2^n) vanishes for `f` when
//! `f(x1) + f(x2) + f(x3) + f(x4) = 0`. This crate enumerates and counts
//! vanishing flats, evaluates closed-form counts for power functions,
//! handles Dembowski-Ostrom polynomials through their linearized
//! derivatives, builds and checks covers from Gold permutations, and
//! relates vanishing flats to low-weight codewords of two-zero codes.
//!
//! Field elements are `u32` values whose bits are coefficients in the
//! polynomial basis; every function takes its [`FieldSpec`] explicitly.

pub mod boolfunc;
pub mod covers;
pub mod cycliccode;
pub mod dopoly;
pub mod error;
pub mod gf2n;
pub mod linalg;
pub mod sample;
pub mod vflats;

pub use boolfunc::{DifferentialSpectrum, FunctionTable};
pub use covers::{AffineSubspace, Cover};
pub use dopoly::DOPolynomial;
pub use error::{Error, Result};
pub use gf2n::{kloosterman, FieldElement, FieldSpec, LogTables};
pub use linalg::{AffineMap, BinaryMatrix};
pub use vflats::{Flat, PartialQuadrupleSystem, PowerFamily};
