//! Exact arithmetic in the Clifford algebra Cℓ₂ over ℚ and its quadratic
//! extensions.
//!
//! - [`element`]: the algebra itself, involutions, the maps H and G, inverses.
//! - [`rep`], [`matrix`], [`spectrum`]: 4×4 and 2×2 matrix representations,
//!   exact rational matrices with a full-rank-factorization pseudo-inverse,
//!   and the spectra of `L(a) − R(b)` and `L(a) − R(b)U`.
//! - [`mp`]: the closed-form Moore-Penrose inverse.
//! - [`solvers`]: complete solution sets of `axb = d`, `ax = xb`, `ax = x̄b`.
//! - [`equivalence`]: canonical forms, similarity and pseudosimilarity with witnesses.
//! - [`cli`]: literal parsing, rendering and the `cl2` command dispatcher.

pub mod cli;
pub mod element;
pub mod equivalence;
pub mod error;
pub mod matrix;
pub mod mp;
pub mod rep;
pub mod scalar;
pub mod solvers;
pub mod spectrum;

pub use element::{Cl2Element, ComplexPart, ComplexSplit};
pub use error::{Error, Result};
pub use matrix::{mp_oracle, RatMatrix};
pub use scalar::Scalar;
pub use solvers::SolutionSet;
