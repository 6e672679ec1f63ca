//! Exact arithmetic: rationals, dense matrices, univariate and sparse
//! multivariate polynomials, characteristic polynomials, real-root isolation
//! and randomized identity testing.

pub mod charpoly;
pub mod identity;
pub mod matrix;
pub mod mpoly;
pub mod poly;
pub mod quotient;
pub mod roots;
pub mod scalar;

pub use charpoly::{char_poly, char_poly_coeffs};
pub use identity::{identity_test, IdentityVerdict};
pub use matrix::Matrix;
pub use mpoly::MPoly;
pub use poly::Poly;
pub use roots::{real_roots, RealRoot, RootReport};
pub use scalar::{format_rational, int, parse_rational, rat, Approx, Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum NumError {
    #[error("not a rational number: {0:?}")]
    BadRational(String),
    #[error("the zero polynomial has no well-defined roots")]
    ZeroPolynomial,
    #[error("degree bound must be positive, got {0}")]
    InvalidDegreeBound(i64),
    #[error("identity test needs at least one trial")]
    NoTrials,
}
