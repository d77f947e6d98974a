//! The scalar field the whole crate is generic over.
//!
//! Every algorithm here decides linear independence by exact zero tests, so
//! the intended instantiation is an exact field. [`crate::Rational`]
//! (arbitrary precision fractions) is the one used by the CLI, the fixtures
//! and the spec-file formats. Fixed-width ratios such as `Ratio<i64>` also
//! satisfy the bound and are fine for small inputs, but may overflow.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// An exact, totally ordered field element usable as a matrix entry.
///
/// The order is only used to sort weights deterministically.
pub trait Scalar:
    Num + Neg<Output = Self> + FromPrimitive + Clone + Ord + Hash + Debug + Display + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every field contains the integers")
    }
}

impl<T> Scalar for T where
    T: Num + Neg<Output = T> + FromPrimitive + Clone + Ord + Hash + Debug + Display + Send + Sync + 'static
{
}

/// `a * b` without consuming either side.
#[inline]
pub(crate) fn mul<T: Scalar>(a: &T, b: &T) -> T {
    a.clone() * b.clone()
}

/// Dot product of two equally long slices.
pub(crate) fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| {
        if x.is_zero() || y.is_zero() {
            acc
        } else {
            acc + mul(x, y)
        }
    })
}
