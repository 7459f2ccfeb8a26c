//! Fixed-precision binary floating point and complex arithmetic.
//!
//! [`Real`] wraps a binary `FBig` that always carries an explicit precision in
//! bits; binary operations produce the larger precision of their operands.
//! Constructors take the precision, so integer-valued inputs never end up at
//! the narrow precision of their own bit length.

mod cmatrix;
mod complex;

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::IBig;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

pub use cmatrix::CMatrix;
pub use complex::Complex;

/// Default working precision in bits.
pub const DEFAULT_PRECISION_BITS: u32 = 256;

type Float = FBig<HalfEven>;

#[derive(Clone, PartialEq)]
pub struct Real(Float);

pub(crate) fn to_ibig(x: &BigInt) -> IBig {
    IBig::from_le_bytes(&x.to_signed_bytes_le())
}

pub(crate) fn from_ibig(x: &IBig) -> BigInt {
    BigInt::from_signed_bytes_le(&x.to_le_bytes())
}

impl Real {
    pub fn zero(prec: u32) -> Self {
        Self::from_i64(0, prec)
    }

    pub fn one(prec: u32) -> Self {
        Self::from_i64(1, prec)
    }

    pub fn from_i64(x: i64, prec: u32) -> Self {
        Self(Float::from(IBig::from(x)).with_precision(prec as usize).value())
    }

    pub fn from_int(x: &BigInt, prec: u32) -> Self {
        Self(Float::from(to_ibig(x)).with_precision(prec as usize).value())
    }

    /// Finite `f64` values convert exactly (before rounding to `prec`).
    pub fn from_f64(x: f64, prec: u32) -> Self {
        let f = Float::try_from(x).expect("finite f64");
        Self(f.with_precision(prec as usize).value())
    }

    /// `2^k`
    pub fn pow2(k: i64, prec: u32) -> Self {
        Self(Float::from_parts(IBig::from(1u8), k as isize).with_precision(prec as usize).value())
    }

    pub fn precision(&self) -> u32 {
        self.0.precision() as u32
    }

    /// Re-rounds to a new precision (extending is exact).
    pub fn with_precision(&self, prec: u32) -> Self {
        Self(self.0.clone().with_precision(prec as usize).value())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().value()
    }

    pub fn is_zero(&self) -> bool {
        self.0.repr().is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.repr().significand() < &IBig::ZERO
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn sqrt(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Self(self.0.context().sqrt(self.0.repr()).value())
    }

    /// Nearest integer (ties to even).
    pub fn round_to_int(&self) -> BigInt {
        from_ibig(&self.0.round().to_int().value())
    }

    /// Base-2 logarithm of `|x|`, approximately; `-inf` for zero.
    pub fn log2_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let sig = from_ibig(self.0.repr().significand()).abs();
        let exp = self.0.repr().exponent() as i64;
        let shift = sig.bits() as i64 - 53;
        let top = if shift > 0 { sig >> shift as usize } else { sig << (-shift) as usize };
        let m = top.to_f64().unwrap_or(f64::NAN);
        num_traits::Float::log2(m) + (shift + exp) as f64
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    /// Decimal rendering with `digits` significant digits.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        let d = self.0.to_decimal().value().with_precision(digits).value();
        alloc::format!("{}", d)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal_string(20))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = (self.precision() as f64 * 0.30103) as usize;
        write!(f, "{}", self.to_decimal_string(digits.max(1)))
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-self.0)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-&self.0)
    }
}

macro_rules! real_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                Real(&self.0 $op &rhs.0)
            }
        }
        impl $tr<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                Real(self.0 $op rhs.0)
            }
        }
        impl $tr<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                Real(self.0 $op &rhs.0)
            }
        }
        impl $tr<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                Real(&self.0 $op rhs.0)
            }
        }
    };
}

real_binop!(Add, add, +);
real_binop!(Sub, sub, -);
real_binop!(Mul, mul, *);
real_binop!(Div, div, /);
