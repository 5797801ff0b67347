//! Multisign numbers `^d p`: a magnitude paired with one of `s` signs.
//!
//! Sign `0` belongs to the additive identity alone, so a value has magnitude
//! zero exactly when its sign is zero. Every value carries its own sign count
//! and operations between different carriers are rejected.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::magnitude::Magnitude;

/// Sign index. `0` is reserved for the additive identity; nonzero signs run
/// over `1..=s` for a carrier with `s` signs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Sign(u32);

impl Sign {
    pub const ZERO: Sign = Sign(0);
    pub const ONE: Sign = Sign(1);

    pub const fn new(index: u32) -> Self {
        Sign(index)
    }

    pub const fn index(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Composes two nonzero signs the way `⊗` does: `i + j - 1`, wrapping by `s`.
///
/// This is addition in the cyclic group of order `s` once sign `d` is
/// identified with residue `d - 1`.
pub fn sign_compose(i: Sign, j: Sign, s: u32) -> Result<Sign> {
    if s == 0 {
        return Err(Error::InvalidSignCount);
    }
    for k in [i, j] {
        if k.is_zero() || k.0 > s {
            return Err(Error::SignOutOfRange {
                sign: k.0 as i64,
                signs: s,
            });
        }
    }
    let raw = u64::from(i.0) + u64::from(j.0) - 1;
    let wrapped = if raw > u64::from(s) {
        raw - u64::from(s)
    } else {
        raw
    };
    Ok(Sign(wrapped as u32))
}

/// An element `^d p` of the multisign set with `s` signs.
///
/// Field order matters: derived ordering sorts by sign count, then sign, then
/// magnitude, which is the canonical listing order used everywhere.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultisignNumber {
    signs: u32,
    sign: Sign,
    magnitude: Magnitude,
}

impl MultisignNumber {
    /// Builds `^d p` in the carrier with `s` signs.
    ///
    /// A zero magnitude normalizes to `^0 0` whatever `d` is (provided `d` is
    /// in range). Sign `0` with a nonzero magnitude is rejected.
    pub fn make(s: u32, d: i64, p: Magnitude) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidSignCount);
        }
        if d < 0 || d > i64::from(s) {
            return Err(Error::SignOutOfRange { sign: d, signs: s });
        }
        if p.is_zero() {
            return Ok(Self::zero(s));
        }
        if d == 0 {
            return Err(Error::ZeroSignNonzeroMagnitude(p));
        }
        Ok(MultisignNumber {
            signs: s,
            sign: Sign(d as u32),
            magnitude: p,
        })
    }

    /// `^0 0`, the additive identity. Panics if `s` is zero.
    pub fn zero(s: u32) -> Self {
        assert!(s >= 1, "a carrier needs at least one sign");
        MultisignNumber {
            signs: s,
            sign: Sign::ZERO,
            magnitude: Magnitude::zero(),
        }
    }

    /// `^1 1`, the multiplicative identity. Panics if `s` is zero.
    pub fn one(s: u32) -> Self {
        assert!(s >= 1, "a carrier needs at least one sign");
        MultisignNumber {
            signs: s,
            sign: Sign::ONE,
            magnitude: Magnitude::one(),
        }
    }

    pub fn signs_count(&self) -> u32 {
        self.signs
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn magnitude(&self) -> &Magnitude {
        &self.magnitude
    }

    /// Absolute value: the magnitude component.
    pub fn abs(&self) -> Magnitude {
        self.magnitude.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.sign.is_zero()
    }

    fn same_carrier(&self, other: &Self) -> Result<()> {
        if self.signs != other.signs {
            return Err(Error::SignCountMismatch {
                left: self.signs,
                right: other.signs,
            });
        }
        Ok(())
    }

    /// Multisign addition `⊕`.
    ///
    /// Equal signs add magnitudes. Different signs cancel, the larger
    /// magnitude keeping its sign; equal magnitudes annihilate to `^0 0`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_carrier(other)?;
        let s = self.signs;
        if self.sign == other.sign {
            return Ok(MultisignNumber {
                signs: s,
                sign: self.sign,
                magnitude: &self.magnitude + &other.magnitude,
            });
        }
        let (big, small) = match self.magnitude.cmp(&other.magnitude) {
            std::cmp::Ordering::Equal => return Ok(Self::zero(s)),
            std::cmp::Ordering::Greater => (self, other),
            std::cmp::Ordering::Less => (other, self),
        };
        Ok(MultisignNumber {
            signs: s,
            sign: big.sign,
            magnitude: big.magnitude.checked_sub(&small.magnitude)?,
        })
    }

    /// Multisign multiplication `⊗`: magnitudes multiply, signs compose
    /// cyclically, and `^0 0` absorbs.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_carrier(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.signs));
        }
        Ok(MultisignNumber {
            signs: self.signs,
            sign: sign_compose(self.sign, other.sign, self.signs)?,
            magnitude: &self.magnitude * &other.magnitude,
        })
    }

    /// Every `y` with `self ⊕ y = ^0 0`.
    ///
    /// A nonzero value has exactly `s - 1` of them (same magnitude, any other
    /// nonzero sign); `^0 0` is its own unique inverse.
    pub fn additive_inverses(&self) -> SolutionSet {
        if self.is_zero() {
            return SolutionSet::from_iter([self.clone()]);
        }
        (1..=self.signs)
            .filter(|&j| j != self.sign.0)
            .map(|j| MultisignNumber {
                signs: self.signs,
                sign: Sign(j),
                magnitude: self.magnitude.clone(),
            })
            .collect()
    }

    /// The unique `y` with `self ⊗ y = ^1 1`.
    pub fn mul_inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let sign = if self.sign == Sign::ONE {
            Sign::ONE
        } else {
            Sign(self.signs + 2 - self.sign.0)
        };
        Ok(MultisignNumber {
            signs: self.signs,
            sign,
            magnitude: self.magnitude.inverse()?,
        })
    }
}

impl fmt::Display for MultisignNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            f.write_str("0")
        } else {
            write!(f, "^{} {}", self.sign, self.magnitude)
        }
    }
}

impl fmt::Debug for MultisignNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (s={})", self.signs)
    }
}

/// All solutions `x` of `x ⊗ a ⊕ b = ^0 0`, for nonzero `a`.
///
/// With `b` nonzero the solutions are `^k |b| ⊗ a⁻¹` for every nonzero sign
/// `k ≠ sign(b)`; with `b = ^0 0` only `x = ^0 0` works.
pub fn solve_linear(a: &MultisignNumber, b: &MultisignNumber) -> Result<SolutionSet> {
    a.same_carrier(b)?;
    if a.is_zero() {
        return Err(Error::ZeroCoefficient);
    }
    if b.is_zero() {
        return Ok(SolutionSet::from_iter([b.clone()]));
    }
    let a_inv = a.mul_inverse()?;
    b.additive_inverses()
        .iter()
        .map(|target| target.mul(&a_inv))
        .collect()
}

/// A complete, deduplicated set of solutions in canonical (ascending) order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolutionSet {
    solutions: BTreeSet<MultisignNumber>,
    complete: bool,
}

impl SolutionSet {
    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    /// Every solver here enumerates the full set, so this is always true for
    /// sets they return.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn contains(&self, x: &MultisignNumber) -> bool {
        self.solutions.contains(x)
    }

    pub fn iter(&self) -> impl Iterator<Item = &MultisignNumber> {
        self.solutions.iter()
    }

    pub fn to_vec(&self) -> Vec<MultisignNumber> {
        self.solutions.iter().cloned().collect()
    }
}

impl FromIterator<MultisignNumber> for SolutionSet {
    fn from_iter<I: IntoIterator<Item = MultisignNumber>>(iter: I) -> Self {
        SolutionSet {
            solutions: iter.into_iter().collect(),
            complete: true,
        }
    }
}

impl IntoIterator for SolutionSet {
    type Item = MultisignNumber;
    type IntoIter = std::collections::btree_set::IntoIter<MultisignNumber>;

    fn into_iter(self) -> Self::IntoIter {
        self.solutions.into_iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(s: u32, d: i64, p: &str) -> MultisignNumber {
        MultisignNumber::make(s, d, p.parse().unwrap()).unwrap()
    }

    fn z(s: u32) -> MultisignNumber {
        MultisignNumber::zero(s)
    }

    #[test]
    fn make_examples() {
        let x = n(3, 2, "5");
        assert_eq!((x.signs_count(), x.sign().index()), (3, 2));
        assert_eq!(x.magnitude(), &"5".parse::<Magnitude>().unwrap());
        assert_eq!(n(3, 2, "0"), z(3));
        assert_eq!(
            MultisignNumber::make(3, 4, Magnitude::one()),
            Err(Error::SignOutOfRange { sign: 4, signs: 3 })
        );
        assert_eq!(
            MultisignNumber::make(3, -1, Magnitude::one()),
            Err(Error::SignOutOfRange { sign: -1, signs: 3 })
        );
        assert!(matches!(
            MultisignNumber::make(3, 0, Magnitude::one()),
            Err(Error::ZeroSignNonzeroMagnitude(_))
        ));
        assert_eq!(n(3, 0, "0"), z(3));
        assert_eq!(
            MultisignNumber::make(0, 0, Magnitude::zero()),
            Err(Error::InvalidSignCount)
        );
    }

    #[test]
    fn add_examples() {
        assert_eq!(n(2, 1, "1").add(&n(2, 1, "1/2")).unwrap(), n(2, 1, "3/2"));
        assert_eq!(n(3, 1, "1").add(&n(3, 3, "1")).unwrap(), z(3));
        assert_eq!(n(3, 2, "3").add(&n(3, 1, "1")).unwrap(), n(3, 2, "2"));
        assert_eq!(n(3, 1, "1").add(&n(3, 2, "3")).unwrap(), n(3, 2, "2"));
        assert_eq!(
            n(3, 1, "1").add(&n(4, 1, "1")),
            Err(Error::SignCountMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn mul_examples() {
        assert_eq!(n(2, 1, "2").mul(&n(2, 2, "3")).unwrap(), n(2, 2, "6"));
        assert_eq!(n(3, 3, "2").mul(&n(3, 2, "1")).unwrap(), n(3, 1, "2"));
        assert_eq!(n(3, 3, "2").mul(&n(3, 1, "1")).unwrap(), n(3, 3, "2"));
        assert_eq!(n(2, 1, "2").mul(&n(2, 1, "1/2")).unwrap(), n(2, 1, "1"));
        for i in 1..=5 {
            let x = n(5, i, "7/3");
            assert_eq!(x.mul(&MultisignNumber::one(5)).unwrap(), x);
            assert_eq!(x.mul(&z(5)).unwrap(), z(5));
        }
    }

    #[test]
    fn abs_examples() {
        assert_eq!(n(3, 2, "5").abs().to_string(), "5");
        assert_eq!(z(3).abs(), Magnitude::zero());
        assert_eq!(n(3, 3, "2/7").abs().to_string(), "2/7");
    }

    #[test]
    fn sign_compose_examples() {
        for j in 1..=4 {
            assert_eq!(sign_compose(Sign::ONE, Sign(j), 4).unwrap(), Sign(j));
        }
        assert_eq!(sign_compose(Sign(3), Sign(2), 3).unwrap(), Sign(1));
        assert_eq!(sign_compose(Sign(2), Sign(2), 3).unwrap(), Sign(3));
        assert!(sign_compose(Sign(0), Sign(2), 3).is_err());
        assert!(sign_compose(Sign(4), Sign(2), 3).is_err());
    }

    #[test]
    fn sign_compose_matches_modular_form() {
        for s in 1..=7u32 {
            for i in 1..=s {
                for j in 1..=s {
                    let modular = 1 + ((i - 1) + (j - 1)) % s;
                    assert_eq!(sign_compose(Sign(i), Sign(j), s).unwrap(), Sign(modular));
                }
            }
        }
    }

    #[test]
    fn additive_inverse_examples() {
        let inv = n(3, 1, "1").additive_inverses();
        assert_eq!(inv.to_vec(), vec![n(3, 2, "1"), n(3, 3, "1")]);
        assert_eq!(z(5).additive_inverses().to_vec(), vec![z(5)]);
        let x = n(2, 2, "3/4");
        let inv = x.additive_inverses();
        assert_eq!(inv.to_vec(), vec![n(2, 1, "3/4")]);
        assert_eq!(x.add(&inv.to_vec()[0]).unwrap(), z(2));
        // one sign: nonzero values have no additive inverse at all
        assert!(n(1, 1, "2").additive_inverses().is_empty());
    }

    #[test]
    fn mul_inverse_examples() {
        assert_eq!(n(4, 1, "2").mul_inverse().unwrap(), n(4, 1, "1/2"));
        let x = n(3, 2, "4");
        let y = x.mul_inverse().unwrap();
        assert_eq!(y, n(3, 3, "1/4"));
        assert_eq!(x.mul(&y).unwrap(), MultisignNumber::one(3));
        let x = n(5, 5, "2/3");
        let y = x.mul_inverse().unwrap();
        assert_eq!(y, n(5, 2, "3/2"));
        assert_eq!(x.mul(&y).unwrap(), MultisignNumber::one(5));
        assert_eq!(z(3).mul_inverse(), Err(Error::ZeroInverse));
    }

    #[test]
    fn solve_linear_examples() {
        let sols = solve_linear(&n(3, 1, "2"), &n(3, 1, "2")).unwrap();
        assert_eq!(sols.to_vec(), vec![n(3, 2, "1"), n(3, 3, "1")]);
        assert!(sols.is_complete());

        let sols = solve_linear(&n(4, 1, "1"), &z(4)).unwrap();
        assert_eq!(sols.to_vec(), vec![z(4)]);

        assert_eq!(
            solve_linear(&z(3), &n(3, 1, "1")),
            Err(Error::ZeroCoefficient)
        );
    }

    #[test]
    fn solve_linear_matches_brute_force() {
        let a = n(3, 2, "1/2");
        let b = n(3, 3, "2");
        let sols = solve_linear(&a, &b).unwrap();
        assert_eq!(sols.len(), 2);
        // grid containing the expected magnitude |b| / |a| = 4
        let mags = ["0", "1/4", "1/2", "1", "2", "4", "8"];
        let mut found = Vec::new();
        for d in 0..=3 {
            for m in mags {
                let Ok(x) = MultisignNumber::make(3, d, m.parse().unwrap()) else {
                    continue;
                };
                if x.mul(&a).unwrap().add(&b).unwrap().is_zero() && !found.contains(&x) {
                    found.push(x);
                }
            }
        }
        found.sort();
        assert_eq!(found, sols.to_vec());
    }

    #[test]
    fn non_associative_witness() {
        let (x, y, w) = (n(3, 1, "1"), n(3, 2, "1"), n(3, 3, "1"));
        let left = x.add(&y).unwrap().add(&w).unwrap();
        let right = x.add(&y.add(&w).unwrap()).unwrap();
        assert_eq!(left, n(3, 3, "1"));
        assert_eq!(right, n(3, 1, "1"));
    }

    #[test]
    fn display() {
        assert_eq!(z(3).to_string(), "0");
        assert_eq!(n(3, 2, "3/2").to_string(), "^2 3/2");
    }
}
