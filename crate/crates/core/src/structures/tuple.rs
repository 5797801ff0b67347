use std::fmt;

use crate::error::{Error, Result};
use crate::number::MultisignNumber;

/// A fixed-length vector of multisign numbers, each slot living in its own
/// carrier. The shape `(s₁, …, s_z)` is read off the slots.
///
/// Tuples combine only with tuples of identical shape; addition and
/// multiplication act slot by slot.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultisignTuple {
    slots: Vec<MultisignNumber>,
}

impl MultisignTuple {
    pub fn new(slots: Vec<MultisignNumber>) -> Result<Self> {
        if slots.is_empty() {
            return Err(Error::EmptyTuple);
        }
        Ok(MultisignTuple { slots })
    }

    /// `0_T = (^0 0, …, ^0 0)`.
    pub fn zero(shape: &[u32]) -> Result<Self> {
        Self::filled(shape, MultisignNumber::zero)
    }

    /// `1_T = (^1 1, …, ^1 1)`.
    pub fn one(shape: &[u32]) -> Result<Self> {
        Self::filled(shape, MultisignNumber::one)
    }

    fn filled(shape: &[u32], f: fn(u32) -> MultisignNumber) -> Result<Self> {
        if shape.contains(&0) {
            return Err(Error::InvalidSignCount);
        }
        Self::new(shape.iter().map(|&s| f(s)).collect())
    }

    pub fn shape(&self) -> Vec<u32> {
        self.slots
            .iter()
            .map(MultisignNumber::signs_count)
            .collect()
    }

    pub fn slots(&self) -> &[MultisignNumber] {
        &self.slots
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.slots.iter().all(MultisignNumber::is_zero)
    }

    fn zip_with(
        &self,
        other: &Self,
        op: impl Fn(&MultisignNumber, &MultisignNumber) -> Result<MultisignNumber>,
    ) -> Result<Self> {
        let shape = self.shape();
        if shape != other.shape() {
            return Err(Error::ShapeMismatch {
                left: shape,
                right: other.shape(),
            });
        }
        let slots = self
            .slots
            .iter()
            .zip(&other.slots)
            .map(|(x, y)| op(x, y))
            .collect::<Result<_>>()?;
        Ok(MultisignTuple { slots })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, MultisignNumber::add)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, MultisignNumber::mul)
    }

    /// Cartesian product of the per-slot additive inverse sets, in
    /// lexicographic order.
    ///
    /// A nonzero slot with `s` signs contributes `s - 1` choices and a zero
    /// slot contributes exactly one (itself), so the count is
    /// `∏ (s_t - 1)` only when every slot is nonzero.
    pub fn additive_inverses(&self) -> Vec<MultisignTuple> {
        let mut acc: Vec<Vec<MultisignNumber>> = vec![Vec::new()];
        for slot in &self.slots {
            let choices = slot.additive_inverses().to_vec();
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    choices.iter().map(move |c| {
                        let mut next = prefix.clone();
                        next.push(c.clone());
                        next
                    })
                })
                .collect();
        }
        acc.into_iter()
            .map(|slots| MultisignTuple { slots })
            .collect()
    }

    /// Componentwise multiplicative inverse; fails if any slot is `^0 0`.
    pub fn mul_inverse(&self) -> Result<Self> {
        let zeros: Vec<usize> = self
            .slots
            .iter()
            .enumerate()
            .filter(|(_, x)| x.is_zero())
            .map(|(t, _)| t)
            .collect();
        if !zeros.is_empty() {
            return Err(Error::NonInvertibleTuple { slots: zeros });
        }
        let slots = self
            .slots
            .iter()
            .map(MultisignNumber::mul_inverse)
            .collect::<Result<_>>()?;
        Ok(MultisignTuple { slots })
    }
}

impl fmt::Display for MultisignTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (t, slot) in self.slots.iter().enumerate() {
            if t > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{slot}")?;
        }
        if self.slots.len() == 1 {
            f.write_str(",")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MultisignTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} shape {:?}", self.shape())
    }
}
