//! Exact arithmetic over multisign numbers.
//!
//! A multisign number `^d p` pairs a nonnegative rational magnitude `p` with
//! one of `s` signs. Addition cancels across *any* pair of distinct signs, so
//! for `s ≥ 3` every nonzero value has `s - 1` additive inverses and addition
//! is associative only on triples using at most two sign labels.
//!
//! The crate provides the value types and operations, tuple carriers, the
//! `s = 2` bridge to signed rationals, an exhaustive law checker, an
//! expression language, and the `multisign` command-line front end.

pub mod cli;
pub mod error;
pub mod expr;
pub mod laws;
pub mod magnitude;
pub mod number;
pub mod structures;

pub use error::{Error, Result};
pub use magnitude::Magnitude;
pub use number::{sign_compose, solve_linear, MultisignNumber, Sign, SolutionSet};
pub use structures::{from_signed, to_signed, MultisignTuple, Polarity, SignedRational};
