//! Exact integer arithmetic behind every integral computation.
//!
//! Algorithms are written once against [`Int`] and run first on `i64` with
//! checked operations; on overflow they are rerun on `BigInt`.

use std::cmp::Ordering;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Raised by the `i64` instance when an intermediate value does not fit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Overflow;

pub trait Int: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_bigint(v: &BigInt) -> Option<Self>;
    fn to_bigint(&self) -> BigInt;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    /// Compares absolute values.
    fn abs_cmp(&self, other: &Self) -> Ordering;
    fn is_unit(&self) -> bool;
    fn add(&self, other: &Self) -> Result<Self, Overflow>;
    fn sub(&self, other: &Self) -> Result<Self, Overflow>;
    fn mul(&self, other: &Self) -> Result<Self, Overflow>;
    fn neg(&self) -> Result<Self, Overflow>;
    /// Quotient rounded toward zero, so the remainder is smaller than the divisor.
    fn quot(&self, other: &Self) -> Result<Self, Overflow>;
    fn rem(&self, other: &Self) -> Result<Self, Overflow>;

    /// `self - q·other`.
    fn sub_mul(&self, q: &Self, other: &Self) -> Result<Self, Overflow> {
        self.sub(&q.mul(other)?)
    }

    fn abs(&self) -> Result<Self, Overflow> {
        if self.is_negative() {
            self.neg()
        } else {
            Ok(self.clone())
        }
    }
}

impl Int for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        v.to_i64()
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn abs_cmp(&self, other: &Self) -> Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn add(&self, other: &Self) -> Result<Self, Overflow> {
        self.checked_add(*other).ok_or(Overflow)
    }
    fn sub(&self, other: &Self) -> Result<Self, Overflow> {
        self.checked_sub(*other).ok_or(Overflow)
    }
    fn mul(&self, other: &Self) -> Result<Self, Overflow> {
        self.checked_mul(*other).ok_or(Overflow)
    }
    fn neg(&self) -> Result<Self, Overflow> {
        self.checked_neg().ok_or(Overflow)
    }
    fn quot(&self, other: &Self) -> Result<Self, Overflow> {
        self.checked_div(*other).ok_or(Overflow)
    }
    fn rem(&self, other: &Self) -> Result<Self, Overflow> {
        self.checked_rem(*other).ok_or(Overflow)
    }
}

impl Int for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn abs_cmp(&self, other: &Self) -> Ordering {
        self.magnitude().cmp(other.magnitude())
    }
    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }
    fn add(&self, other: &Self) -> Result<Self, Overflow> {
        Ok(self + other)
    }
    fn sub(&self, other: &Self) -> Result<Self, Overflow> {
        Ok(self - other)
    }
    fn mul(&self, other: &Self) -> Result<Self, Overflow> {
        Ok(self * other)
    }
    fn neg(&self) -> Result<Self, Overflow> {
        Ok(-self)
    }
    fn quot(&self, other: &Self) -> Result<Self, Overflow> {
        Ok(self / other)
    }
    fn rem(&self, other: &Self) -> Result<Self, Overflow> {
        Ok(self % other)
    }
}

/// Runs `small` on `i64` inputs when they fit and it does not overflow,
/// otherwise `big`.
pub(crate) fn with_fallback<R>(
    fits: bool,
    small: impl FnOnce() -> Result<R, Overflow>,
    big: impl FnOnce() -> R,
) -> R {
    if fits {
        if let Ok(r) = small() {
            return r;
        }
    }
    big()
}
