//! Exact rationals for toughness values and the pipeline's thresholds.
//!
//! Text form is `num/den` (or a bare integer when parsing). Comparisons never
//! touch floating point.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational {0:?}: expected NUM/DEN with DEN > 0")]
pub struct ParseRationalError(pub String);

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    /// `num/den`, reduced. Panics when `den == 0`.
    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn integer(v: i64) -> Rational {
        Rational::new(v, 1)
    }

    pub fn from_usize(v: usize) -> Rational {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }

    /// `a / b` for counts, as used by toughness ratios. Panics when `b == 0`.
    pub fn ratio(a: usize, b: usize) -> Rational {
        assert!(b != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(a), BigInt::from(b)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn floor(&self) -> BigInt {
        self.0.numer().div_floor(self.0.denom())
    }

    /// `⌊self⌋` as a machine integer, saturating at the ends.
    pub fn floor_usize(&self) -> usize {
        let f = self.floor();
        if f.is_negative() {
            0
        } else {
            f.to_usize().unwrap_or(usize::MAX)
        }
    }

    pub fn add(&self, other: &Rational) -> Rational {
        Rational(&self.0 + &other.0)
    }

    pub fn sub(&self, other: &Rational) -> Rational {
        Rational(&self.0 - &other.0)
    }

    pub fn mul(&self, other: &Rational) -> Rational {
        Rational(&self.0 * &other.0)
    }

    /// Panics on division by zero.
    pub fn div(&self, other: &Rational) -> Rational {
        assert!(!other.0.is_zero(), "division by zero");
        Rational(&self.0 / &other.0)
    }

    pub fn mul_usize(&self, k: usize) -> Rational {
        Rational(&self.0 * BigInt::from(k))
    }

    /// Compares with the count `k` without allocating a new rational.
    pub fn cmp_usize(&self, k: usize) -> Ordering {
        self.0.numer().cmp(&(self.0.denom() * BigInt::from(k)))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Rational, ParseRationalError> {
        let err = || ParseRationalError(s.to_string());
        let trimmed = s.trim();
        let (num, den) = match trimmed.split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (trimmed, "1"),
        };
        let num: BigInt = num.parse().map_err(|_| err())?;
        let den: BigInt = den.parse().map_err(|_| err())?;
        if !den.is_positive() {
            return Err(err());
        }
        Ok(Rational(BigRational::new(num, den)))
    }
}
