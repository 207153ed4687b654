//! Exact-arithmetic kernel for ternary (3-)Lie algebras: structure
//! constants and the Fundamental Identity, classical Yang–Baxter
//! residuals for r-matrices, induced coproducts and local-cocycle
//! bialgebra checks, and pseudo-metric double constructions with full
//! Manin-triple verification.
//!
//! Everything is computed over exact rationals; symbolic parameters are
//! carried as sparse multivariate polynomials, so every reported
//! identity is a proof, not an approximation.  The generic modules work
//! over any commutative ring implementing [`ring::Ring`]; the aliases
//! at the crate root fix the two concrete coefficient types used
//! throughout: [`Scalar`] (polynomials over ℚ) and [`Rational`].

// Keeps the README's library example compiling: `cargo test` runs its
// code block as a doctest.
#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
pub struct ReadmeDoctests;

pub mod algebra;
pub mod catalog;
pub mod cocycle;
pub mod cybe;
pub mod double;
pub mod error;
pub mod json;
pub mod linalg;
pub mod ring;
pub mod scalar;
pub mod tensor;

pub use algebra::{FiReport, Representation, ThreeLieAlgebra};
pub use catalog::CatalogId;
pub use error::{Error, Result};
pub use ring::{IntegralDomain, Ring};
pub use scalar::{Rational, Scalar};
pub use tensor::{RMatrix, Tensor};

/// Ternary algebra with symbolic-polynomial coefficients.
pub type Algebra = ThreeLieAlgebra<Scalar>;

/// Ternary algebra with plain rational coefficients.
pub type RationalAlgebra = ThreeLieAlgebra<Rational>;
