//! Exponent scalar abstraction.
//!
//! Monomials and ideals are generic over the unsigned integer type that
//! stores each exponent. Arithmetic is exact: additions are checked and an
//! overflowing product is reported rather than wrapped.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{CheckedAdd, NumCast, PrimInt, Unsigned};
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Unsigned integer usable as a monomial exponent.
pub trait Exponent:
    PrimInt
    + Unsigned
    + CheckedAdd
    + Hash
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + Serialize
    + DeserializeOwned
    + 'static
{
    fn from_u64(value: u64) -> Option<Self> {
        <Self as NumCast>::from(value)
    }

    fn as_u64(self) -> u64 {
        self.to_u64().expect("unsigned exponent fits in u64")
    }
}

impl<T> Exponent for T where
    T: PrimInt
        + Unsigned
        + CheckedAdd
        + Hash
        + Debug
        + Display
        + Default
        + Send
        + Sync
        + Serialize
        + DeserializeOwned
        + 'static
{
}
