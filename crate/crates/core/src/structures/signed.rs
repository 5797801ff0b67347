use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::{BigInt, Sign as BigSign};
use num_rational::{BigRational, Ratio};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::magnitude::Magnitude;
use crate::number::MultisignNumber;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    Negative,
    Zero,
    Positive,
}

/// An ordinary signed rational: the image of a two-sign multisign number.
///
/// Arithmetic goes through `num_rational::BigRational`, independently of the
/// multisign case analysis, so it can serve as the reference side when the
/// bridge is checked.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedRational {
    polarity: Polarity,
    magnitude: Magnitude,
}

impl SignedRational {
    pub fn new(polarity: Polarity, magnitude: Magnitude) -> Result<Self> {
        if (polarity == Polarity::Zero) != magnitude.is_zero() {
            return Err(Error::InvalidSignedRational(format!(
                "{polarity:?} with magnitude {magnitude}"
            )));
        }
        Ok(SignedRational {
            polarity,
            magnitude,
        })
    }

    pub fn zero() -> Self {
        SignedRational {
            polarity: Polarity::Zero,
            magnitude: Magnitude::zero(),
        }
    }

    pub fn polarity(&self) -> Polarity {
        self.polarity
    }

    pub fn magnitude(&self) -> &Magnitude {
        &self.magnitude
    }

    pub fn to_rational(&self) -> BigRational {
        let sign = match self.polarity {
            Polarity::Negative => BigSign::Minus,
            Polarity::Zero => BigSign::NoSign,
            Polarity::Positive => BigSign::Plus,
        };
        let numer = BigInt::from_biguint(sign, self.magnitude.numer().clone());
        let denom = BigInt::from(self.magnitude.denom().clone());
        Ratio::new(numer, denom)
    }

    pub fn from_rational(r: &BigRational) -> Self {
        let polarity = if r.is_zero() {
            Polarity::Zero
        } else if r.is_negative() {
            Polarity::Negative
        } else {
            Polarity::Positive
        };
        let abs = r.abs();
        let magnitude = Magnitude::from_ratio(Ratio::new(
            abs.numer().magnitude().clone(),
            abs.denom().magnitude().clone(),
        ));
        SignedRational {
            polarity,
            magnitude,
        }
    }
}

impl Add for &SignedRational {
    type Output = SignedRational;

    fn add(self, rhs: &SignedRational) -> SignedRational {
        SignedRational::from_rational(&(self.to_rational() + rhs.to_rational()))
    }
}

impl Mul for &SignedRational {
    type Output = SignedRational;

    fn mul(self, rhs: &SignedRational) -> SignedRational {
        SignedRational::from_rational(&(self.to_rational() * rhs.to_rational()))
    }
}

impl fmt::Display for SignedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.polarity == Polarity::Negative {
            f.write_str("-")?;
        }
        write!(f, "{}", self.magnitude)
    }
}

impl fmt::Debug for SignedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses an optional `+`/`-` followed by a magnitude literal.
impl FromStr for SignedRational {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let (negative, body) = match trimmed.as_bytes().first() {
            Some(b'-') => (true, &trimmed[1..]),
            Some(b'+') => (false, &trimmed[1..]),
            _ => (false, trimmed),
        };
        let magnitude: Magnitude = body
            .parse()
            .map_err(|_| Error::InvalidSignedRational(text.to_string()))?;
        let polarity = match (magnitude.is_zero(), negative) {
            (true, _) => Polarity::Zero,
            (false, true) => Polarity::Negative,
            (false, false) => Polarity::Positive,
        };
        Ok(SignedRational {
            polarity,
            magnitude,
        })
    }
}

/// The isomorphism from the two-sign carrier: `^1 a ↦ a`, `^2 a ↦ -a`,
/// `^0 0 ↦ 0`.
pub fn to_signed(x: &MultisignNumber) -> Result<SignedRational> {
    if x.signs_count() != 2 {
        return Err(Error::NotTwoSigns(x.signs_count()));
    }
    let polarity = match x.sign().index() {
        0 => Polarity::Zero,
        1 => Polarity::Positive,
        _ => Polarity::Negative,
    };
    Ok(SignedRational {
        polarity,
        magnitude: x.abs(),
    })
}

/// Inverse of [`to_signed`].
pub fn from_signed(r: &SignedRational) -> MultisignNumber {
    let d = match r.polarity {
        Polarity::Zero => 0,
        Polarity::Positive => 1,
        Polarity::Negative => 2,
    };
    MultisignNumber::make(2, d, r.magnitude.clone()).expect("polarity and magnitude agree on zero")
}
