//! Exact integer scalars.
//!
//! Every index and closed form in this crate is generic over an [`ExactInt`]. Arbitrary
//! precision ([`num_bigint::BigInt`]) never overflows; fixed-width types (`i64`, `i128`) go
//! through [`Checked`], which turns any wraparound into an [`Overflow`] error instead.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Sub};

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, Signed};
use thiserror::Error;

/// Arithmetic left the range of the chosen scalar type.
#[derive(Error, Debug, Clone, Copy, PartialEq, Eq)]
#[error("integer overflow in exact arithmetic")]
pub struct Overflow;

/// Signed exact integer usable as an index value.
pub trait ExactInt:
    Clone
    + Debug
    + Display
    + Ord
    + Signed
    + FromPrimitive
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + Send
    + Sync
    + 'static
{
}

impl<T> ExactInt for T where
    T: Clone
        + Debug
        + Display
        + Ord
        + Signed
        + FromPrimitive
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + Send
        + Sync
        + 'static
{
}

/// An integer expression that remembers whether any step overflowed.
///
/// Operators are implemented for owned values and references so polynomial formulas can be
/// written close to their mathematical form; the overflow flag is sticky.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checked<T>(Option<T>);

impl<T: ExactInt> Checked<T> {
    pub fn new(value: T) -> Self {
        Checked(Some(value))
    }

    pub fn zero() -> Self {
        Checked(Some(T::zero()))
    }

    pub fn int(value: i64) -> Self {
        Checked(T::from_i64(value))
    }

    pub fn count(value: usize) -> Self {
        Checked(T::from_usize(value))
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Checked::int(1);
        for _ in 0..exp {
            acc = acc * self;
        }
        acc
    }

    pub fn value(self) -> Result<T, Overflow> {
        self.0.ok_or(Overflow)
    }
}

impl<T: ExactInt> std::iter::Sum for Checked<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Checked::zero(), |acc, x| acc + x)
    }
}

macro_rules! checked_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<T: ExactInt> $trait<&Checked<T>> for &Checked<T> {
            type Output = Checked<T>;
            fn $method(self, rhs: &Checked<T>) -> Checked<T> {
                match (&self.0, &rhs.0) {
                    (Some(a), Some(b)) => Checked(a.$checked(b)),
                    _ => Checked(None),
                }
            }
        }
        impl<T: ExactInt> $trait<Checked<T>> for Checked<T> {
            type Output = Checked<T>;
            fn $method(self, rhs: Checked<T>) -> Checked<T> {
                (&self).$method(&rhs)
            }
        }
        impl<T: ExactInt> $trait<&Checked<T>> for Checked<T> {
            type Output = Checked<T>;
            fn $method(self, rhs: &Checked<T>) -> Checked<T> {
                (&self).$method(rhs)
            }
        }
        impl<T: ExactInt> $trait<Checked<T>> for &Checked<T> {
            type Output = Checked<T>;
            fn $method(self, rhs: Checked<T>) -> Checked<T> {
                self.$method(&rhs)
            }
        }
        impl<T: ExactInt> $trait<i64> for &Checked<T> {
            type Output = Checked<T>;
            fn $method(self, rhs: i64) -> Checked<T> {
                self.$method(&Checked::int(rhs))
            }
        }
        impl<T: ExactInt> $trait<i64> for Checked<T> {
            type Output = Checked<T>;
            fn $method(self, rhs: i64) -> Checked<T> {
                (&self).$method(&Checked::int(rhs))
            }
        }
        impl<T: ExactInt> $trait<&Checked<T>> for i64 {
            type Output = Checked<T>;
            fn $method(self, rhs: &Checked<T>) -> Checked<T> {
                (&Checked::int(self)).$method(rhs)
            }
        }
        impl<T: ExactInt> $trait<Checked<T>> for i64 {
            type Output = Checked<T>;
            fn $method(self, rhs: Checked<T>) -> Checked<T> {
                (&Checked::int(self)).$method(&rhs)
            }
        }
    };
}

checked_binop!(Add, add, checked_add);
checked_binop!(Sub, sub, checked_sub);
checked_binop!(Mul, mul, checked_mul);
