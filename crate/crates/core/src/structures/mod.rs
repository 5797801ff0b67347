//! Composite structures built on multisign numbers: heterogeneous tuples and
//! the two-sign bridge to ordinary signed rationals.

mod signed;
mod tuple;

pub use signed::{from_signed, to_signed, Polarity, SignedRational};
pub use tuple::MultisignTuple;
