use std::collections::BTreeSet;
use std::fmt;

use crate::number::MultisignNumber;
use crate::structures::MultisignTuple;

/// The operations a law check needs from the values it sweeps.
///
/// All elements of one universe share a carrier, so the binary operations
/// here are total.
pub trait Carrier: Clone + Ord + fmt::Display + fmt::Debug + Send + Sync {
    fn plus(&self, other: &Self) -> Self;

    fn times(&self, other: &Self) -> Self;

    fn is_additive_identity(&self) -> bool;

    fn additive_identity(&self) -> Self;

    fn multiplicative_identity(&self) -> Self;

    /// Whether signed associativity constrains this triple: at most two
    /// distinct sign labels (counting `0`) among the operands, slot by slot.
    fn signed_assoc_applies(x: &Self, y: &Self, z: &Self) -> bool;

    /// Enumerated additive inverses.
    fn additive_inverses(&self) -> Vec<Self>;

    /// How many additive inverses the structure theory predicts.
    fn predicted_inverse_count(&self) -> usize;

    fn mul_inverse(&self) -> Option<Self>;
}

fn at_most_two_labels(x: &MultisignNumber, y: &MultisignNumber, z: &MultisignNumber) -> bool {
    let labels: BTreeSet<u32> = [x, y, z].iter().map(|v| v.sign().index()).collect();
    labels.len() <= 2
}

impl Carrier for MultisignNumber {
    fn plus(&self, other: &Self) -> Self {
        self.add(other).expect("operands share a carrier")
    }

    fn times(&self, other: &Self) -> Self {
        self.mul(other).expect("operands share a carrier")
    }

    fn is_additive_identity(&self) -> bool {
        self.is_zero()
    }

    fn additive_identity(&self) -> Self {
        MultisignNumber::zero(self.signs_count())
    }

    fn multiplicative_identity(&self) -> Self {
        MultisignNumber::one(self.signs_count())
    }

    fn signed_assoc_applies(x: &Self, y: &Self, z: &Self) -> bool {
        at_most_two_labels(x, y, z)
    }

    fn additive_inverses(&self) -> Vec<Self> {
        MultisignNumber::additive_inverses(self).to_vec()
    }

    fn predicted_inverse_count(&self) -> usize {
        if self.is_zero() {
            1
        } else {
            self.signs_count() as usize - 1
        }
    }

    fn mul_inverse(&self) -> Option<Self> {
        MultisignNumber::mul_inverse(self).ok()
    }
}

impl Carrier for MultisignTuple {
    fn plus(&self, other: &Self) -> Self {
        self.add(other).expect("operands share a shape")
    }

    fn times(&self, other: &Self) -> Self {
        self.mul(other).expect("operands share a shape")
    }

    fn is_additive_identity(&self) -> bool {
        self.is_zero()
    }

    fn additive_identity(&self) -> Self {
        MultisignTuple::zero(&self.shape()).expect("valid shape")
    }

    fn multiplicative_identity(&self) -> Self {
        MultisignTuple::one(&self.shape()).expect("valid shape")
    }

    fn signed_assoc_applies(x: &Self, y: &Self, z: &Self) -> bool {
        x.slots()
            .iter()
            .zip(y.slots())
            .zip(z.slots())
            .all(|((a, b), c)| at_most_two_labels(a, b, c))
    }

    fn additive_inverses(&self) -> Vec<Self> {
        MultisignTuple::additive_inverses(self)
    }

    fn predicted_inverse_count(&self) -> usize {
        self.slots()
            .iter()
            .map(Carrier::predicted_inverse_count)
            .product()
    }

    fn mul_inverse(&self) -> Option<Self> {
        MultisignTuple::mul_inverse(self).ok()
    }
}
