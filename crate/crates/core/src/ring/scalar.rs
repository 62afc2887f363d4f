use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Coefficient scalar for the polynomial and series types.
///
/// The counting layer instantiates this with [`BigRational`] so that every
/// identity holds exactly; `f32`/`f64` are supported for approximate use of
/// the arithmetic core.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// The exact value `numer / denom`, or its closest representable
    /// approximation.
    fn from_big_ratio(numer: &BigInt, denom: &BigInt) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_big_ratio(&BigInt::from(n), &BigInt::one())
    }
}

impl Scalar for BigRational {
    fn from_big_ratio(numer: &BigInt, denom: &BigInt) -> Self {
        BigRational::new(numer.clone(), denom.clone())
    }
}

impl Scalar for f64 {
    fn from_big_ratio(numer: &BigInt, denom: &BigInt) -> Self {
        BigRational::new(numer.clone(), denom.clone())
            .to_f64()
            .unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {
    fn from_big_ratio(numer: &BigInt, denom: &BigInt) -> Self {
        BigRational::new(numer.clone(), denom.clone())
            .to_f32()
            .unwrap_or(f32::NAN)
    }
}
