//! Integer scalar bounds shared by the exact instances.
//!
//! Every instance that stores numbers is generic over its integer type so
//! that randomized checks can run on machine words while the defaults use
//! arbitrary precision. Floating point types are deliberately not
//! admissible: they do not satisfy [`num_integer::Integer`].

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact integer type usable as the coordinate type of an instance.
pub trait Scalar:
    Integer
    + Clone
    + Debug
    + Display
    + FromStr
    + Hash
    + ToPrimitive
    + FromPrimitive
    + Send
    + Sync
    + 'static
{
}

impl<T> Scalar for T where
    T: Integer
        + Clone
        + Debug
        + Display
        + FromStr
        + Hash
        + ToPrimitive
        + FromPrimitive
        + Send
        + Sync
        + 'static
{
}

/// A [`Scalar`] with negatives, needed by group instances.
pub trait SignedScalar: Scalar + Signed {}

impl<T: Scalar + Signed> SignedScalar for T {}

/// Converts an exponent into the scalar type.
///
/// # Panics
/// If `n` does not fit, which only happens for machine-word scalars.
pub(crate) fn from_exponent<N: Scalar>(n: u64) -> N {
    N::from_u64(n).expect("exponent does not fit in the scalar type")
}

/// Converts a computed exponent back to `u64`.
///
/// # Panics
/// If the exponent exceeds `u64::MAX`. Such exponents cannot be used to
/// build powers anyway.
pub(crate) fn to_exponent<N: Scalar>(n: &N) -> u64 {
    n.to_u64().expect("exponent exceeds u64")
}
