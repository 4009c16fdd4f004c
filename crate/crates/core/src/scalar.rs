//! Exact rationals.
//!
//! Values live in an `i64` ratio while they fit and spill into big integers
//! on overflow, so the common small-denominator case stays allocation free.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, Debug)]
enum Repr {
    Small(Rational64),
    Big(BigRational),
}

/// Arbitrary-precision rational in canonical reduced form.
#[derive(Clone, Debug)]
pub struct ExactScalar(Repr);

fn big(r: &Rational64) -> BigRational {
    BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar(Repr::Small(Rational64::zero()))
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        ExactScalar(Repr::Small(Rational64::from_integer(n)))
    }

    /// `n / d`; panics on a zero denominator.
    pub fn ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        ExactScalar(Repr::Small(Rational64::new(n, d)))
    }

    pub fn from_bigs(n: BigInt, d: BigInt) -> Self {
        assert!(!d.is_zero(), "zero denominator");
        Self::from_big(BigRational::new(n, d))
    }

    fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => ExactScalar(Repr::Small(Rational64::new_raw(n, d))),
            _ => ExactScalar(Repr::Big(r)),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(r) => big(r),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(r) => BigInt::from(*r.numer()),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(r) => BigInt::from(*r.denom()),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_zero(),
            Repr::Big(r) => r.is_zero(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_integer(),
            Repr::Big(r) => r.is_integer(),
        }
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(r) => r.numer().signum() as i32,
            Repr::Big(r) => {
                if r.is_zero() {
                    0
                } else if r.is_positive() {
                    1
                } else {
                    -1
                }
            }
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Self {
        Self::one() / self
    }

    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small(r) => *r.numer() as f64 / *r.denom() as f64,
            Repr::Big(r) => r.to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Largest integer not above the value.
    pub fn floor(&self) -> BigInt {
        self.to_big().floor().to_integer()
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident, $op:tt) => {
        impl<'a, 'b> $tr<&'b ExactScalar> for &'a ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &'b ExactScalar) -> ExactScalar {
                if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
                    if let Some(r) = a.$checked(b) {
                        return ExactScalar(Repr::Small(r));
                    }
                }
                ExactScalar::from_big(self.to_big() $op rhs.to_big())
            }
        }
        impl $tr<ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                (&self).$method(&rhs)
            }
        }
        impl<'b> $tr<&'b ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &'b ExactScalar) -> ExactScalar {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<ExactScalar> for &'a ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add, +);
binop!(Sub, sub, checked_sub, -);
binop!(Mul, mul, checked_mul, *);

impl<'a, 'b> Div<&'b ExactScalar> for &'a ExactScalar {
    type Output = ExactScalar;
    fn div(self, rhs: &'b ExactScalar) -> ExactScalar {
        assert!(!rhs.is_zero(), "division by zero");
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
            if let Some(r) = a.checked_div(b) {
                return ExactScalar(Repr::Small(r));
            }
        }
        ExactScalar::from_big(self.to_big() / rhs.to_big())
    }
}
impl Div<ExactScalar> for ExactScalar {
    type Output = ExactScalar;
    fn div(self, rhs: ExactScalar) -> ExactScalar {
        &self / &rhs
    }
}
impl<'b> Div<&'b ExactScalar> for ExactScalar {
    type Output = ExactScalar;
    fn div(self, rhs: &'b ExactScalar) -> ExactScalar {
        &self / rhs
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        match &self.0 {
            Repr::Small(r) if *r.numer() != i64::MIN => ExactScalar(Repr::Small(-r)),
            _ => ExactScalar::from_big(-self.to_big()),
        }
    }
}
impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        *self = &*self + rhs;
    }
}
impl AddAssign for ExactScalar {
    fn add_assign(&mut self, rhs: ExactScalar) {
        *self = &*self + &rhs;
    }
}
impl SubAssign<&ExactScalar> for ExactScalar {
    fn sub_assign(&mut self, rhs: &ExactScalar) {
        *self = &*self - rhs;
    }
}
impl SubAssign for ExactScalar {
    fn sub_assign(&mut self, rhs: ExactScalar) {
        *self = &*self - &rhs;
    }
}

impl Sum for ExactScalar {
    fn sum<I: Iterator<Item = ExactScalar>>(iter: I) -> Self {
        iter.fold(ExactScalar::zero(), |a, b| a + b)
    }
}
impl<'a> Sum<&'a ExactScalar> for ExactScalar {
    fn sum<I: Iterator<Item = &'a ExactScalar>>(iter: I) -> Self {
        iter.fold(ExactScalar::zero(), |a, b| a + b)
    }
}

impl PartialEq for ExactScalar {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a == b,
            _ => self.to_big() == other.to_big(),
        }
    }
}
impl Eq for ExactScalar {}

impl PartialOrd for ExactScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for ExactScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl From<i64> for ExactScalar {
    fn from(n: i64) -> Self {
        ExactScalar::from_int(n)
    }
}
impl From<usize> for ExactScalar {
    fn from(n: usize) -> Self {
        ExactScalar::from_bigs(BigInt::from(n), BigInt::one())
    }
}
impl From<BigInt> for ExactScalar {
    fn from(n: BigInt) -> Self {
        ExactScalar::from_bigs(n, BigInt::one())
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (n, d) = (self.numer(), self.denom());
        if d.is_one() {
            write!(f, "{n}")
        } else {
            write!(f, "{n}/{d}")
        }
    }
}

#[derive(Serialize, Deserialize)]
struct Wire {
    num: String,
    den: String,
}

impl Serialize for ExactScalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        Wire { num: self.numer().to_string(), den: self.denom().to_string() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ExactScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let w = Wire::deserialize(d)?;
        let n: BigInt = w.num.parse().map_err(serde::de::Error::custom)?;
        let den: BigInt = w.den.parse().map_err(serde::de::Error::custom)?;
        if den.is_zero() {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(ExactScalar::from_bigs(n, den))
    }
}
