//! Exact nonnegative rationals used as the magnitude part of a multisign number.
//!
//! Values are kept in lowest terms with a positive denominator, so derived
//! equality and hashing coincide with numeric equality. There is no way to
//! build a negative magnitude: direction lives in the sign, never here.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Magnitude(Ratio<BigUint>);

impl Magnitude {
    pub fn zero() -> Self {
        Magnitude(Ratio::zero())
    }

    pub fn one() -> Self {
        Magnitude(Ratio::one())
    }

    pub fn from_integer(n: u64) -> Self {
        Magnitude(Ratio::from_integer(BigUint::from(n)))
    }

    /// Builds `numer / denom` reduced to lowest terms.
    pub fn new(numer: impl Into<BigUint>, denom: impl Into<BigUint>) -> Result<Self> {
        let (numer, denom) = (numer.into(), denom.into());
        if denom.is_zero() {
            return Err(Error::InvalidMagnitude(format!("{numer}/0")));
        }
        Ok(Magnitude(Ratio::new(numer, denom)))
    }

    pub fn from_ratio(r: Ratio<BigUint>) -> Self {
        Magnitude(r)
    }

    pub fn as_ratio(&self) -> &Ratio<BigUint> {
        &self.0
    }

    pub fn numer(&self) -> &BigUint {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigUint {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// Cancellation difference: the unique `c` with `other + c = self`.
    pub fn checked_sub(&self, other: &Magnitude) -> Result<Magnitude> {
        if self < other {
            return Err(Error::Underflow {
                minuend: self.clone(),
                subtrahend: other.clone(),
            });
        }
        Ok(Magnitude(&self.0 - &other.0))
    }

    pub fn inverse(&self) -> Result<Magnitude> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        Ok(Magnitude(self.0.recip()))
    }
}

impl Default for Magnitude {
    fn default() -> Self {
        Magnitude::zero()
    }
}

impl PartialOrd for Magnitude {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Magnitude {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl Add for &Magnitude {
    type Output = Magnitude;

    fn add(self, rhs: &Magnitude) -> Magnitude {
        Magnitude(&self.0 + &rhs.0)
    }
}

impl Add for Magnitude {
    type Output = Magnitude;

    fn add(self, rhs: Magnitude) -> Magnitude {
        Magnitude(self.0 + rhs.0)
    }
}

impl Mul for &Magnitude {
    type Output = Magnitude;

    fn mul(self, rhs: &Magnitude) -> Magnitude {
        Magnitude(&self.0 * &rhs.0)
    }
}

impl Mul for Magnitude {
    type Output = Magnitude;

    fn mul(self, rhs: Magnitude) -> Magnitude {
        Magnitude(self.0 * rhs.0)
    }
}

impl From<u64> for Magnitude {
    fn from(n: u64) -> Self {
        Magnitude::from_integer(n)
    }
}

impl fmt::Display for Magnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Magnitude {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_digits(s: &str) -> Option<BigUint> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigUint::parse_bytes(s.as_bytes(), 10)
}

/// Accepts `p`, `p/q` and terminating decimals such as `0.5` or `2.25`.
impl FromStr for Magnitude {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let invalid = || Error::InvalidMagnitude(text.to_string());
        if let Some((numer, denom)) = text.split_once('/') {
            let numer = parse_digits(numer).ok_or_else(invalid)?;
            let denom = parse_digits(denom).ok_or_else(invalid)?;
            return Magnitude::new(numer, denom).map_err(|_| invalid());
        }
        if let Some((whole, frac)) = text.split_once('.') {
            let whole = parse_digits(whole).ok_or_else(invalid)?;
            let frac_value = parse_digits(frac).ok_or_else(invalid)?;
            let scale = num_traits::pow(BigUint::from(10u32), frac.len());
            let numer = whole * &scale + frac_value;
            return Magnitude::new(numer, scale);
        }
        let n = parse_digits(text).ok_or_else(invalid)?;
        Ok(Magnitude(Ratio::from_integer(n)))
    }
}
