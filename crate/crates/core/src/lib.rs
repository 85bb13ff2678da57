//! Exact computation of the duality between period-polynomial relations among
//! Poisson brackets in the double shuffle Lie algebra and linear relations among
//! odd-component double zeta values.
//!
//! The algebraic containers ([`NcPoly`], [`Matrix`]) are generic over any
//! [`Scalar`]; every construction that reproduces a published number works over
//! [`Rational`], and the aliases below name those concrete instantiations.

pub mod error;
pub mod lie;
pub mod linalg;
pub mod matrices;
pub mod numeric;
pub mod period;
pub mod poly;
pub mod regularization;
pub mod relations;
pub mod scalar;
pub mod words;

pub use error::{Error, Result};
pub use linalg::Matrix;
pub use poly::NcPoly;
pub use scalar::Scalar;
pub use words::{Composition, Letter, Word};

/// Exact arbitrary-precision fraction, always stored reduced.
pub type Rational = num_rational::BigRational;

/// Noncommutative polynomial in `x`, `y` with rational coefficients.
pub type QPoly = NcPoly<Rational>;

/// Dense exact-rational matrix.
pub type RatMatrix = Matrix<Rational>;

/// Dense exact-rational column vector.
pub type RatVector = Vec<Rational>;

/// Floating-point instantiations, useful for quick numerical experiments.
pub type F64Poly = NcPoly<f64>;
pub type F64Matrix = Matrix<f64>;
