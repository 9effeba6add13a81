//! Coefficient types the cyclotomic arithmetic can run over.
//!
//! Exact results always use [`Rational`](crate::Rational). The floating point
//! instantiations exist for quick approximate evaluation and for comparing the
//! exact path against an independent numeric route.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive};

/// A commutative ring of coefficients.
///
/// `EXACT` types are compared with `is_zero`; inexact ones with a magnitude
/// threshold relative to the data they came from. Division is only used when
/// `FIELD` is set.
pub trait Scalar:
    Clone + Debug + Display + PartialEq + Num + Neg<Output = Self> + Send + Sync + 'static
{
    const EXACT: bool;

    const FIELD: bool;

    fn from_i64(v: i64) -> Self;

    fn from_bigint(v: &BigInt) -> Self;

    /// Absolute value as an `f64`, used for tolerance checks on inexact types.
    fn magnitude(&self) -> f64;

    fn mul_ref(&self, other: &Self) -> Self;

    fn add_assign_ref(&mut self, other: &Self);

    fn sub_assign_ref(&mut self, other: &Self);

    /// Whether `self` should be treated as zero next to values of size `scale`.
    fn is_negligible(&self, scale: f64) -> bool {
        if Self::EXACT {
            self.is_zero()
        } else {
            self.magnitude() <= 1e-9 * scale.max(1.0)
        }
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    const FIELD: bool = true;

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }

    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
}

/// Integers suffice whenever no inverse is taken, which is the case for the
/// rescaled sums in the engine.
impl Scalar for BigInt {
    const EXACT: bool = true;

    const FIELD: bool = false;

    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn from_bigint(v: &BigInt) -> Self {
        v.clone()
    }

    fn magnitude(&self) -> f64 {
        self.abs().to_f64().unwrap_or(f64::INFINITY)
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }

    fn sub_assign_ref(&mut self, other: &Self) {
        *self -= other;
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            const EXACT: bool = false;

            const FIELD: bool = true;

            fn from_i64(v: i64) -> Self {
                v as $t
            }

            fn from_bigint(v: &BigInt) -> Self {
                v.to_f64().unwrap_or(f64::NAN) as $t
            }

            fn magnitude(&self) -> f64 {
                self.abs() as f64
            }

            fn mul_ref(&self, other: &Self) -> Self {
                self * other
            }

            fn add_assign_ref(&mut self, other: &Self) {
                *self += other;
            }

            fn sub_assign_ref(&mut self, other: &Self) {
                *self -= other;
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);
