//! Scalar abstraction: exact arbitrary-precision rationals and f64.
//!
//! The float backend compares against a fixed tolerance `EPS` (relative once
//! magnitudes exceed 1); the rational backend decides every comparison
//! exactly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Default float tolerance for equality and sign tests.
pub const EPS: f64 = 1e-9;

/// Width multiplier of the near-parabolic warning band around |tr| = 2.
pub const WARN_BAND: f64 = 10.0;

pub trait Scalar:
    Clone + PartialEq + PartialOrd + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    /// Exact embedding of a finite float (dyadic rational).
    fn from_f64(v: f64) -> Self;
    /// Conversion from an exact rational (lossless for the exact backend).
    fn from_rat(r: &Rat) -> Self;

    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn div(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn abs(&self) -> Self;

    fn to_f64(&self) -> f64;
    fn is_finite(&self) -> bool;

    /// Sign in {-1, 0, +1}; float backend treats |x| <= EPS as zero.
    fn sign_eps(&self) -> i8;

    /// Equality up to EPS (relative where magnitudes exceed 1); exact on rationals.
    fn eq_eps(&self, rhs: &Self) -> bool;
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_int(n: i64) -> Self {
        n as f64
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }
    fn from_f64(v: f64) -> Self {
        v
    }
    fn from_rat(r: &Rat) -> Self {
        r.to_f64()
    }

    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    fn to_f64(&self) -> f64 {
        *self
    }
    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }

    fn sign_eps(&self) -> i8 {
        if f64::abs(*self) <= EPS {
            0
        } else if *self > 0.0 {
            1
        } else {
            -1
        }
    }

    fn eq_eps(&self, rhs: &Self) -> bool {
        let scale = f64::max(1.0, f64::max(f64::abs(*self), f64::abs(*rhs)));
        f64::abs(self - rhs) <= EPS * scale
    }
}

/// Exact arbitrary-precision rational scalar.
#[derive(Clone, PartialEq, PartialOrd, Debug)]
pub struct Rat(pub BigRational);

impl Rat {
    pub fn new(num: i64, den: i64) -> Self {
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let num: BigInt = n.trim().parse().ok()?;
            let den: BigInt = d.trim().parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(Rat(BigRational::new(num, den)))
        } else {
            let num: BigInt = s.parse().ok()?;
            Some(Rat(BigRational::from_integer(num)))
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Scalar for Rat {
    const EXACT: bool = true;

    fn zero() -> Self {
        Rat(BigRational::zero())
    }
    fn one() -> Self {
        Rat(BigRational::one())
    }
    fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }
    fn from_ratio(num: i64, den: i64) -> Self {
        Rat::new(num, den)
    }
    fn from_f64(v: f64) -> Self {
        Rat(BigRational::from_float(v).expect("finite float"))
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }

    fn add(&self, rhs: &Self) -> Self {
        Rat(&self.0 + &rhs.0)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Rat(&self.0 - &rhs.0)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Rat(&self.0 * &rhs.0)
    }
    fn div(&self, rhs: &Self) -> Self {
        Rat(&self.0 / &rhs.0)
    }
    fn neg(&self) -> Self {
        Rat(-&self.0)
    }
    fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
    fn is_finite(&self) -> bool {
        true
    }

    fn sign_eps(&self) -> i8 {
        if self.0.is_zero() {
            0
        } else if self.0.is_positive() {
            1
        } else {
            -1
        }
    }

    fn eq_eps(&self, rhs: &Self) -> bool {
        self.0 == rhs.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parse_roundtrip() {
        let r = Rat::parse("-5/3").unwrap();
        assert_eq!(r, Rat::new(-5, 3));
        assert_eq!(r.to_string(), "-5/3");
        assert_eq!(Rat::parse("7").unwrap().to_string(), "7");
        assert!(Rat::parse("1/0").is_none());
    }

    #[test]
    fn float_eps_semantics() {
        assert_eq!((1e-10f64).sign_eps(), 0);
        assert!(1.0f64.eq_eps(&(1.0 + 1e-10)));
        // relative tolerance for large magnitudes
        assert!(1e6f64.eq_eps(&(1e6 + 1e-4)));
        assert!(!1.0f64.eq_eps(&1.001));
    }

    #[test]
    fn rational_arithmetic_exact() {
        let a = Rat::new(1, 3);
        let b = Rat::new(1, 6);
        assert_eq!(a.add(&b), Rat::new(1, 2));
        assert_eq!(a.sub(&b), b);
        assert_eq!(a.mul(&b), Rat::new(1, 18));
        assert_eq!(a.div(&b), Rat::from_int(2));
        assert_eq!(Rat::new(-2, 4), Rat::new(-1, 2));
    }
}
