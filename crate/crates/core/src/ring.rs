//! Scalar abstraction for the whole crate.
//!
//! Everything downstream (tensors, brackets, residuals, linear algebra) is
//! generic over a commutative [`Ring`]. The canonical instantiations are
//! [`crate::Rational`] for purely numeric work and [`crate::Scalar`] when
//! symbolic parameters are in play.

use std::fmt::{Debug, Display};
use std::ops::{Neg, Sub};

use num_traits::{One, Zero};

/// Commutative ring of coefficients. Blanket-implemented for every type with
/// the listed arithmetic bounds, so downstream code never names a concrete
/// scalar unless it has to.
pub trait Ring:
    Clone + PartialEq + Debug + Display + Zero + One + Neg<Output = Self> + Sub<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone + PartialEq + Debug + Display + Zero + One + Neg<Output = T> + Sub<Output = T>
{
}

/// Ring without zero divisors in which exact quotients are computable.
///
/// `exact_div` returns `None` when `rhs` is zero or does not divide `self`
/// exactly; fraction-free elimination relies on the guarantee that divisions
/// it requests are exact.
pub trait IntegralDomain: Ring {
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
}

impl IntegralDomain for num_rational::BigRational {
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self / rhs)
        }
    }
}
