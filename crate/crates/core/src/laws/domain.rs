use std::collections::BTreeSet;

use crate::magnitude::Magnitude;
use crate::number::MultisignNumber;
use crate::structures::MultisignTuple;

use super::carrier::Carrier;
use super::LawError;

/// Shape and size of a swept domain, as reported alongside each verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomainSummary {
    pub shape: Vec<u32>,
    pub magnitudes: usize,
    pub universe: usize,
    pub triples: u64,
}

/// A finite carrier that the law checks can sweep exhaustively.
pub trait Universe: Sync {
    type Elem: Carrier;

    /// Every element, in canonical ascending order.
    fn elements(&self) -> Vec<Self::Elem>;

    /// The same domain with the reciprocal of every nonzero magnitude added,
    /// so multiplicative inverses of grid elements are on the grid.
    fn with_reciprocals(&self) -> Self
    where
        Self: Sized;

    fn shape(&self) -> Vec<u32>;

    fn magnitudes(&self) -> &[Magnitude];

    fn summary(&self) -> DomainSummary {
        let universe = self.elements().len();
        DomainSummary {
            shape: self.shape(),
            magnitudes: self.magnitudes().len(),
            universe,
            triples: (universe as u64).pow(3),
        }
    }

    fn has_nonzero_magnitude(&self) -> bool {
        self.magnitudes().iter().any(|m| !m.is_zero())
    }
}

fn canonical_grid(magnitudes: impl IntoIterator<Item = Magnitude>) -> Vec<Magnitude> {
    let mut grid: BTreeSet<Magnitude> = magnitudes.into_iter().collect();
    grid.insert(Magnitude::zero());
    grid.into_iter().collect()
}

fn reciprocal_grid(grid: &[Magnitude]) -> Vec<Magnitude> {
    let inverses = grid.iter().filter_map(|m| m.inverse().ok());
    canonical_grid(grid.iter().cloned().chain(inverses))
}

fn scalar_universe(s: u32, grid: &[Magnitude]) -> Vec<MultisignNumber> {
    let mut out = vec![MultisignNumber::zero(s)];
    for d in 1..=s {
        for m in grid.iter().filter(|m| !m.is_zero()) {
            out.push(MultisignNumber::make(s, i64::from(d), m.clone()).expect("d in 1..=s"));
        }
    }
    out
}

/// Scalar domain: `{^0 0} ∪ {^d m : d ∈ 1..=s, m ∈ grid, m ≠ 0}`.
///
/// The grid is deduplicated and always contains zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Domain {
    signs: u32,
    magnitudes: Vec<Magnitude>,
}

impl Domain {
    pub fn new(
        signs: u32,
        magnitudes: impl IntoIterator<Item = Magnitude>,
    ) -> Result<Self, LawError> {
        if signs == 0 {
            return Err(LawError::InvalidSignCount);
        }
        Ok(Domain {
            signs,
            magnitudes: canonical_grid(magnitudes),
        })
    }

    pub fn signs(&self) -> u32 {
        self.signs
    }
}

impl Universe for Domain {
    type Elem = MultisignNumber;

    fn elements(&self) -> Vec<MultisignNumber> {
        scalar_universe(self.signs, &self.magnitudes)
    }

    fn with_reciprocals(&self) -> Self {
        Domain {
            signs: self.signs,
            magnitudes: reciprocal_grid(&self.magnitudes),
        }
    }

    fn shape(&self) -> Vec<u32> {
        vec![self.signs]
    }

    fn magnitudes(&self) -> &[Magnitude] {
        &self.magnitudes
    }
}

/// Tuple domain: the Cartesian product of one scalar domain per slot, all
/// sharing a magnitude grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleDomain {
    shape: Vec<u32>,
    magnitudes: Vec<Magnitude>,
}

impl TupleDomain {
    pub fn new(
        shape: Vec<u32>,
        magnitudes: impl IntoIterator<Item = Magnitude>,
    ) -> Result<Self, LawError> {
        if shape.is_empty() || shape.contains(&0) {
            return Err(LawError::InvalidSignCount);
        }
        Ok(TupleDomain {
            shape,
            magnitudes: canonical_grid(magnitudes),
        })
    }
}

impl Universe for TupleDomain {
    type Elem = MultisignTuple;

    fn elements(&self) -> Vec<MultisignTuple> {
        let mut acc: Vec<Vec<MultisignNumber>> = vec![Vec::new()];
        for &s in &self.shape {
            let slot = scalar_universe(s, &self.magnitudes);
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    slot.iter().map(move |x| {
                        let mut next = prefix.clone();
                        next.push(x.clone());
                        next
                    })
                })
                .collect();
        }
        acc.into_iter()
            .map(|slots| MultisignTuple::new(slots).expect("shape is nonempty"))
            .collect()
    }

    fn with_reciprocals(&self) -> Self {
        TupleDomain {
            shape: self.shape.clone(),
            magnitudes: reciprocal_grid(&self.magnitudes),
        }
    }

    fn shape(&self) -> Vec<u32> {
        self.shape.clone()
    }

    fn magnitudes(&self) -> &[Magnitude] {
        &self.magnitudes
    }
}
