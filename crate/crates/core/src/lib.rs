//! Exact structure-constant computations for (non-commutative) Hom-Poisson
//! algebras.
//!
//! The core types are generic over an exact [`Scalar`] field; the aliases at
//! the crate root fix it to arbitrary-precision rationals, which is what the
//! catalog, the spec files and the CLI use.

pub mod algebra;
pub mod catalog;
pub mod check;
pub mod construct;
pub mod error;
pub mod linalg;
pub mod poly;
pub mod power;
pub mod report;
pub mod scalar;
pub mod specfile;
pub mod witness;

pub use error::{Error, Result};
pub use scalar::{parse_scalar, Scalar};

/// Arbitrary-precision rational numbers, always in lowest terms.
pub type Rational = num_rational::BigRational;
/// Machine-word rationals; exact until an intermediate overflows.
pub type SmallRational = num_rational::Rational64;

pub type Vector = linalg::Vector<Rational>;
pub type LinearMap = linalg::LinearMap<Rational>;
pub type Trilinear = linalg::Trilinear<Rational>;
pub type HomAlgebra = algebra::HomAlgebra<Rational>;
pub type HomPoissonAlgebra = algebra::HomPoissonAlgebra<Rational>;
pub type Polynomial = poly::Polynomial<Rational>;
pub type Substitution = poly::Substitution<Rational>;
pub type CheckReport = report::CheckReport<Rational>;
