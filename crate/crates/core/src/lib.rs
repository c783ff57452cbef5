//! Exact computation of Kostant homology for the cominuscule-type parabolics
//! of `gl_{n+k}` and of the orthogonal and symplectic algebras with Levi
//! `gl_m`: Betti tables, graded characters, equidistribution blocks,
//! determinantal cross-checks and closed dimension products.
//!
//! Arithmetic is generic over a [`Scalar`] field; the concrete aliases below
//! fix big rationals, which is what every higher layer uses.

pub mod characters;
pub mod error;
pub mod homology;
pub mod laurent;
pub mod partitions;
pub mod report;
pub mod scalar;
pub mod subsets;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Exact rational scalars.
pub type Rational = num_rational::BigRational;
/// Laurent polynomials over the rationals.
pub type Poly = laurent::LaurentPoly<Rational>;
/// Polynomial matrices over the rationals.
pub type Matrix = laurent::PolyMatrix<Rational>;

/// `n` as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `num/den` as a rational.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
