//! Coefficient fields.

use num_traits::{FromPrimitive, Num};
use std::fmt::{Debug, Display};
use std::ops::Neg;

/// A coefficient field. Division must be exact, so in practice this is a
/// rational type such as [`num_rational::BigRational`] or
/// [`num_rational::Rational64`].
pub trait Scalar:
    Num + Neg<Output = Self> + FromPrimitive + Clone + Debug + Display + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Num + Neg<Output = Self> + FromPrimitive + Clone + Debug + Display + Send + Sync + 'static
{
}

/// `c` from a machine integer.
pub fn from_int<C: Scalar>(v: i64) -> C {
    C::from_i64(v).expect("scalar must represent machine integers")
}
