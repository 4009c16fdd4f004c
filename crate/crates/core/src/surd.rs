//! Quadratic surds `x + y·√d` with rational `x`, `y` and a non-negative integer `d`.
//!
//! Used for Φ, α and the j₁ bound so that comparisons against rationals stay exact.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::scalar::ExactScalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadSurd {
    pub x: ExactScalar,
    pub y: ExactScalar,
    #[serde(serialize_with = "ser_big")]
    pub d: BigInt,
}

fn ser_big<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

impl QuadSurd {
    pub fn rational(x: ExactScalar) -> Self {
        QuadSurd { x, y: ExactScalar::zero(), d: BigInt::zero() }
    }

    pub fn new(x: ExactScalar, y: ExactScalar, d: BigInt) -> Self {
        assert!(!d.is_negative(), "negative radicand");
        QuadSurd { x, y, d }
    }

    /// `√r` for a non-negative rational `r`, written as `(1/den)·√(num·den)`.
    pub fn sqrt_of(r: &ExactScalar) -> Self {
        assert!(r.signum() >= 0, "negative radicand");
        let (n, den) = (r.numer(), r.denom());
        QuadSurd {
            x: ExactScalar::zero(),
            y: ExactScalar::from_bigs(1.into(), den.clone()),
            d: n * den,
        }
    }

    fn radical_vanishes(&self) -> bool {
        self.y.is_zero() || self.d.is_zero()
    }

    pub fn signum(&self) -> i32 {
        let sx = self.x.signum();
        if self.radical_vanishes() {
            return sx;
        }
        let sy = self.y.signum();
        if sx == 0 || sx == sy {
            return sy;
        }
        // Opposite signs: compare x² with y²·d.
        let lhs = &self.x * &self.x;
        let rhs = &(&self.y * &self.y) * &ExactScalar::from(self.d.clone());
        match lhs.cmp(&rhs) {
            Ordering::Greater => sx,
            Ordering::Less => sy,
            Ordering::Equal => 0,
        }
    }

    fn radicand_for(&self, other: &QuadSurd) -> BigInt {
        match (self.radical_vanishes(), other.radical_vanishes()) {
            (true, _) => other.d.clone(),
            (_, true) => self.d.clone(),
            _ => {
                assert_eq!(self.d, other.d, "mixed radicands");
                self.d.clone()
            }
        }
    }

    pub fn add(&self, other: &QuadSurd) -> QuadSurd {
        let d = self.radicand_for(other);
        QuadSurd { x: &self.x + &other.x, y: &self.y + &other.y, d }
    }

    pub fn sub(&self, other: &QuadSurd) -> QuadSurd {
        let d = self.radicand_for(other);
        QuadSurd { x: &self.x - &other.x, y: &self.y - &other.y, d }
    }

    pub fn mul(&self, other: &QuadSurd) -> QuadSurd {
        let d = self.radicand_for(other);
        let dd = ExactScalar::from(d.clone());
        let x = &(&self.x * &other.x) + &(&(&self.y * &other.y) * &dd);
        let y = &(&self.x * &other.y) + &(&self.y * &other.x);
        QuadSurd { x, y, d }
    }

    pub fn scale(&self, k: &ExactScalar) -> QuadSurd {
        QuadSurd { x: &self.x * k, y: &self.y * k, d: self.d.clone() }
    }

    /// Conjugate `x − y√d`.
    pub fn conj(&self) -> QuadSurd {
        QuadSurd { x: self.x.clone(), y: -&self.y, d: self.d.clone() }
    }

    /// `x² − y²d`.
    pub fn norm(&self) -> ExactScalar {
        &(&self.x * &self.x) - &(&(&self.y * &self.y) * &ExactScalar::from(self.d.clone()))
    }

    pub fn recip(&self) -> QuadSurd {
        let n = self.norm();
        assert!(!n.is_zero(), "surd has zero norm");
        self.conj().scale(&n.recip())
    }

    pub fn div(&self, other: &QuadSurd) -> QuadSurd {
        self.mul(&other.recip())
    }

    pub fn pow(&self, e: u32) -> QuadSurd {
        let mut acc = QuadSurd { x: ExactScalar::one(), y: ExactScalar::zero(), d: self.d.clone() };
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn cmp_surd(&self, other: &QuadSurd) -> Ordering {
        self.sub(other).signum().cmp(&0)
    }

    pub fn cmp_rational(&self, r: &ExactScalar) -> Ordering {
        self.sub(&QuadSurd::rational(r.clone())).signum().cmp(&0)
    }

    pub fn to_f64(&self) -> f64 {
        let d = self.d.to_f64().unwrap_or(f64::INFINITY);
        self.x.to_f64() + self.y.to_f64() * d.sqrt()
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radical_vanishes() {
            write!(f, "{}", self.x)
        } else {
            write!(f, "{} + {}*sqrt({})", self.x, self.y, self.d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64, y: i64, d: i64) -> QuadSurd {
        QuadSurd::new(ExactScalar::from_int(x), ExactScalar::from_int(y), d.into())
    }

    #[test]
    fn sign_analysis() {
        assert_eq!(q(3, -1, 5).signum(), 1); // 3 - 2.236
        assert_eq!(q(2, -1, 5).signum(), -1);
        assert_eq!(q(-3, 1, 9).signum(), 0);
        assert_eq!(q(0, 0, 7).signum(), 0);
    }

    #[test]
    fn golden_ratio_identities() {
        let half = ExactScalar::ratio(1, 2);
        let phi = QuadSurd::new(half.clone(), half, 5.into());
        // φ² = φ + 1
        let lhs = phi.mul(&phi);
        let rhs = phi.add(&QuadSurd::rational(ExactScalar::one()));
        assert_eq!(lhs.cmp_surd(&rhs), Ordering::Equal);
        assert!((phi.to_f64() - 1.618_033_988_75).abs() < 1e-10);
        let inv = phi.recip();
        assert_eq!(inv.cmp_surd(&phi.sub(&QuadSurd::rational(ExactScalar::one()))), Ordering::Equal);
    }

    #[test]
    fn sqrt_of_rational() {
        let s = QuadSurd::sqrt_of(&ExactScalar::ratio(1, 5));
        assert!((s.to_f64() - 0.447_213_595_5).abs() < 1e-9);
        assert_eq!(s.mul(&s).cmp_rational(&ExactScalar::ratio(1, 5)), Ordering::Equal);
    }
}
