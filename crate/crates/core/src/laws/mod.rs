//! Exhaustive verification of the algebraic laws of multisign arithmetic.
//!
//! Each check sweeps every operand pair or triple of a finite [`Universe`]
//! and reports a [`Verdict`] together with the first few counterexamples in
//! lexicographic operand order. Results are deterministic: the parallel and
//! sequential sweeps produce byte-identical reports.
//!
//! Addition is expected to associate only on triples with at most two sign
//! labels, so `full-assoc-add` *fails* for three or more signs; the
//! [`expected_verdict`] table records which verdict each law should reach.

mod carrier;
mod domain;
mod report;
pub mod sweep;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

pub use carrier::Carrier;
pub use domain::{Domain, DomainSummary, TupleDomain, Universe};
pub use report::{Counterexample, CounterexampleRecord, LawRecord, LawReport, Verdict};
pub use sweep::Execution;

use crate::number::MultisignNumber;
use crate::structures::{from_signed, to_signed, SignedRational};
use sweep::{digits, sweep, CaseOutcome, SweepResult};

pub const DEFAULT_TRIPLE_BUDGET: u64 = 2_000_000;
pub const DEFAULT_COUNTEREXAMPLE_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LawError {
    #[error("domain too large: {law} needs {required} cases, budget is {budget}")]
    DomainTooLarge {
        law: LawId,
        required: u64,
        budget: u64,
    },
    #[error("{law} needs exactly 2 signs, domain has shape {shape:?}")]
    WrongSignCount { law: LawId, shape: Vec<u32> },
    #[error("sign counts must be at least 1")]
    InvalidSignCount,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LawId {
    /// `(x⊕y)⊕z = x⊕(y⊕z)` on triples with at most two sign labels.
    SignedAssocAdd,
    /// `(x⊕y)⊕z = x⊕(y⊕z)` on triples containing the additive identity.
    IdentityAssocAdd,
    /// `(x⊕y)⊕z = x⊕(y⊕z)` on all triples.
    FullAssocAdd,
    FullAssocMul,
    CommAdd,
    CommMul,
    /// Left and right distributivity of `⊗` over `⊕`.
    Distributivity,
    /// Inverse counts: `s - 1` additive, one multiplicative.
    InverseStructure,
    /// Two-sign carrier against ordinary signed rationals.
    Isomorphism,
}

impl LawId {
    pub const ALL: [LawId; 9] = [
        LawId::SignedAssocAdd,
        LawId::IdentityAssocAdd,
        LawId::FullAssocAdd,
        LawId::FullAssocMul,
        LawId::CommAdd,
        LawId::CommMul,
        LawId::Distributivity,
        LawId::InverseStructure,
        LawId::Isomorphism,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LawId::SignedAssocAdd => "signed-assoc-add",
            LawId::IdentityAssocAdd => "identity-assoc-add",
            LawId::FullAssocAdd => "full-assoc-add",
            LawId::FullAssocMul => "full-assoc-mul",
            LawId::CommAdd => "comm-add",
            LawId::CommMul => "comm-mul",
            LawId::Distributivity => "distributivity",
            LawId::InverseStructure => "inverse-structure",
            LawId::Isomorphism => "isomorphism",
        }
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LawId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        LawId::ALL
            .into_iter()
            .find(|law| law.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = LawId::ALL.iter().map(|l| l.name()).collect();
                format!("unknown law `{s}` (expected one of: {})", names.join(", "))
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Op {
    Add,
    Mul,
}

#[derive(Clone, Copy, Debug)]
pub struct CheckConfig {
    /// Counterexamples kept per report (at least one is always kept).
    pub counterexample_cap: usize,
    /// Largest number of cases a single check may sweep.
    pub budget: u64,
    pub execution: Execution,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            counterexample_cap: DEFAULT_COUNTEREXAMPLE_CAP,
            budget: DEFAULT_TRIPLE_BUDGET,
            execution: Execution::default(),
        }
    }
}

/// The verdict each law should reach on a domain.
///
/// Everything holds except full associativity of `⊕`, which fails as soon as
/// some slot has three or more signs and the grid has a nonzero magnitude.
pub fn expected_verdict<U: Universe>(law: LawId, dom: &U) -> Verdict {
    match law {
        LawId::FullAssocAdd => {
            let three_signs = dom.shape().iter().any(|&s| s >= 3);
            if three_signs && dom.has_nonzero_magnitude() {
                Verdict::Fails
            } else {
                Verdict::Holds
            }
        }
        _ => Verdict::Holds,
    }
}

/// Laws that apply to a domain by default: everything, plus the isomorphism
/// check on scalar two-sign domains.
pub fn default_laws<U: SuiteUniverse>(dom: &U) -> Vec<LawId> {
    LawId::ALL
        .into_iter()
        .filter(|&law| law != LawId::Isomorphism || dom.supports_isomorphism())
        .collect()
}

fn ensure_budget(law: LawId, required: u64, cfg: &CheckConfig) -> Result<(), LawError> {
    if required > cfg.budget {
        return Err(LawError::DomainTooLarge {
            law,
            required,
            budget: cfg.budget,
        });
    }
    Ok(())
}

/// Counterexamples kept per law; at least one so a failing verdict always
/// comes with a witness.
fn cap(cfg: &CheckConfig) -> usize {
    cfg.counterexample_cap.max(1)
}

fn finish<U: Universe>(
    law: LawId,
    dom: &U,
    result: SweepResult<Counterexample<U::Elem>>,
) -> LawReport<U::Elem> {
    LawReport {
        law,
        domain: dom.summary(),
        checked: result.checked,
        verdict: if result.failed == 0 {
            Verdict::Holds
        } else {
            Verdict::Fails
        },
        failures: result.failed,
        counterexamples: result.kept,
    }
}

/// Sweeps all ordered triples of the universe. `case` returns `None` for
/// triples outside the law's scope.
fn triple_law<U, F>(
    law: LawId,
    dom: &U,
    cfg: &CheckConfig,
    case: F,
) -> Result<LawReport<U::Elem>, LawError>
where
    U: Universe,
    F: Fn(&U::Elem, &U::Elem, &U::Elem) -> CaseOutcome<Counterexample<U::Elem>> + Sync + Send,
{
    let elems = dom.elements();
    let n = elems.len() as u64;
    let count = n.pow(3);
    ensure_budget(law, count, cfg)?;
    let result = sweep(count, cfg.execution, cap(cfg), |idx| {
        let d = digits(idx, n, 3);
        case(&elems[d[0]], &elems[d[1]], &elems[d[2]])
    });
    Ok(finish(law, dom, result))
}

fn add_assoc_case<T: Carrier>(x: &T, y: &T, z: &T) -> Vec<Counterexample<T>> {
    let left = x.plus(y).plus(z);
    let right = x.plus(&y.plus(z));
    if left == right {
        vec![]
    } else {
        vec![Counterexample::new(
            vec![x.clone(), y.clone(), z.clone()],
            left,
            right,
        )]
    }
}

/// Signed associativity of `⊕`, checked under both readings of the label
/// condition: the literal one (at most two distinct labels, counting `0`) and,
/// reported as [`LawId::IdentityAssocAdd`], every triple containing `^0 0`.
pub fn check_signed_associativity_add<U: Universe>(
    dom: &U,
    cfg: &CheckConfig,
) -> Result<LawReport<U::Elem>, LawError> {
    triple_law(LawId::SignedAssocAdd, dom, cfg, |x, y, z| {
        U::Elem::signed_assoc_applies(x, y, z).then(|| add_assoc_case(x, y, z))
    })
}

pub fn check_identity_associativity_add<U: Universe>(
    dom: &U,
    cfg: &CheckConfig,
) -> Result<LawReport<U::Elem>, LawError> {
    triple_law(LawId::IdentityAssocAdd, dom, cfg, |x, y, z| {
        let has_identity = [x, y, z].iter().any(|v| v.is_additive_identity());
        has_identity.then(|| add_assoc_case(x, y, z))
    })
}

pub fn check_full_associativity<U: Universe>(
    op: Op,
    dom: &U,
    cfg: &CheckConfig,
) -> Result<LawReport<U::Elem>, LawError> {
    match op {
        Op::Add => triple_law(LawId::FullAssocAdd, dom, cfg, |x, y, z| {
            Some(add_assoc_case(x, y, z))
        }),
        Op::Mul => triple_law(LawId::FullAssocMul, dom, cfg, |x, y, z| {
            let left = x.times(y).times(z);
            let right = x.times(&y.times(z));
            Some(if left == right {
                vec![]
            } else {
                vec![Counterexample::new(
                    vec![x.clone(), y.clone(), z.clone()],
                    left,
                    right,
                )]
            })
        }),
    }
}

pub fn check_commutativity<U: Universe>(
    op: Op,
    dom: &U,
    cfg: &CheckConfig,
) -> Result<LawReport<U::Elem>, LawError> {
    let law = match op {
        Op::Add => LawId::CommAdd,
        Op::Mul => LawId::CommMul,
    };
    let elems = dom.elements();
    let n = elems.len() as u64;
    ensure_budget(law, n * n, cfg)?;
    let apply = |a: &U::Elem, b: &U::Elem| match op {
        Op::Add => a.plus(b),
        Op::Mul => a.times(b),
    };
    let result = sweep(n * n, cfg.execution, cap(cfg), |idx| {
        let d = digits(idx, n, 2);
        let (x, y) = (&elems[d[0]], &elems[d[1]]);
        let (left, right) = (apply(x, y), apply(y, x));
        Some(if left == right {
            vec![]
        } else {
            vec![Counterexample::new(vec![x.clone(), y.clone()], left, right)]
        })
    });
    Ok(finish(law, dom, result))
}

/// `x⊗(y⊕z) = (x⊗y)⊕(x⊗z)` and `(x⊕y)⊗z = (x⊗z)⊕(y⊗z)` on every triple.
pub fn check_distributivity<U: Universe>(
    dom: &U,
    cfg: &CheckConfig,
) -> Result<LawReport<U::Elem>, LawError> {
    triple_law(LawId::Distributivity, dom, cfg, |x, y, z| {
        let operands = || vec![x.clone(), y.clone(), z.clone()];
        let mut out = Vec::new();
        let left = x.times(&y.plus(z));
        let right = x.times(y).plus(&x.times(z));
        if left != right {
            out.push(Counterexample::new(operands(), left, right).with_note("left"));
        }
        let left = x.plus(y).times(z);
        let right = x.times(z).plus(&y.times(z));
        if left != right {
            out.push(Counterexample::new(operands(), left, right).with_note("right"));
        }
        Some(out)
    })
}

/// For every element, searches the universe for additive inverses and the
/// reciprocal-closed universe for multiplicative inverses, and compares what
/// it finds with the enumerated inverses and the predicted counts.
pub fn check_inverse_structure<U: Universe>(
    dom: &U,
    cfg: &CheckConfig,
) -> Result<LawReport<U::Elem>, LawError> {
    let law = LawId::InverseStructure;
    let elems = dom.elements();
    let extended = dom.with_reciprocals().elements();
    let n = elems.len() as u64;
    ensure_budget(law, n * (n + extended.len() as u64), cfg)?;
    let result = sweep(n, cfg.execution, cap(cfg), |idx| {
        let x = &elems[idx as usize];
        Some(inverse_case(x, &elems, &extended))
    });
    Ok(finish(law, dom, result))
}

fn inverse_case<T: Carrier>(x: &T, elems: &[T], extended: &[T]) -> Vec<Counterexample<T>> {
    let mut out = Vec::new();
    let zero = x.additive_identity();
    let one = x.multiplicative_identity();

    let found: BTreeSet<T> = elems
        .iter()
        .filter(|y| x.plus(y) == zero)
        .cloned()
        .collect();
    let claimed: BTreeSet<T> = x.additive_inverses().into_iter().collect();
    for y in found.symmetric_difference(&claimed) {
        let note = if found.contains(y) {
            "additive inverse missing from enumeration"
        } else {
            "enumerated additive inverse does not cancel"
        };
        out.push(
            Counterexample::new(vec![x.clone(), y.clone()], x.plus(y), zero.clone())
                .with_note(note),
        );
    }
    if found.len() != x.predicted_inverse_count() {
        out.push(
            Counterexample::new(vec![x.clone()], x.clone(), x.clone()).with_note(format!(
                "{} additive inverses found, {} predicted",
                found.len(),
                x.predicted_inverse_count()
            )),
        );
    }

    let found: Vec<&T> = extended.iter().filter(|y| x.times(y) == one).collect();
    match x.mul_inverse() {
        Some(inv) => {
            if found.len() != 1 || *found[0] != inv {
                let witness = found.first().map_or_else(|| inv.clone(), |y| (*y).clone());
                out.push(
                    Counterexample::new(vec![x.clone()], inv, witness).with_note(format!(
                        "{} multiplicative inverses found, expected exactly the enumerated one",
                        found.len()
                    )),
                );
            }
        }
        None => {
            if let Some(y) = found.first() {
                out.push(
                    Counterexample::new(vec![x.clone(), (*y).clone()], x.times(y), one.clone())
                        .with_note("element reported non-invertible has a multiplicative inverse"),
                );
            }
        }
    }
    out
}

/// `φ(x ⊕ y) = φ(x) + φ(y)` and `φ(x ⊗ y) = φ(x) · φ(y)` on every pair,
/// against signed-rational arithmetic, plus both round trips.
pub fn check_isomorphism_s2(
    dom: &Domain,
    cfg: &CheckConfig,
) -> Result<LawReport<MultisignNumber>, LawError> {
    let law = LawId::Isomorphism;
    if dom.signs() != 2 {
        return Err(LawError::WrongSignCount {
            law,
            shape: dom.shape(),
        });
    }
    let elems = dom.elements();
    let n = elems.len() as u64;
    ensure_budget(law, n * n, cfg)?;
    let phi = |x: &MultisignNumber| to_signed(x).expect("two-sign domain");
    let mut result = sweep(n * n, cfg.execution, cap(cfg), |idx| {
        let d = digits(idx, n, 2);
        let (x, y) = (&elems[d[0]], &elems[d[1]]);
        let mut out = Vec::new();
        let sum = x.add(y).expect("shared carrier");
        let image = &phi(x) + &phi(y);
        if phi(&sum) != image {
            out.push(
                Counterexample::new(vec![x.clone(), y.clone()], sum, from_signed(&image))
                    .with_note("add"),
            );
        }
        let product = x.mul(y).expect("shared carrier");
        let image = &phi(x) * &phi(y);
        if phi(&product) != image {
            out.push(
                Counterexample::new(vec![x.clone(), y.clone()], product, from_signed(&image))
                    .with_note("mul"),
            );
        }
        Some(out)
    });

    // round trips: Σ² → ℚ → Σ² on the universe, ℚ → Σ² → ℚ on ±grid
    for x in &elems {
        result.checked += 1;
        let back = from_signed(&phi(x));
        if &back != x {
            let found = Counterexample::new(vec![x.clone()], back, x.clone())
                .with_note("round trip from multisign");
            result.push(found, cap(cfg));
        }
    }
    for m in dom.magnitudes() {
        for text in [format!("{m}"), format!("-{m}")] {
            result.checked += 1;
            let r: SignedRational = text.parse().expect("grid magnitude literal");
            let x = from_signed(&r);
            if phi(&x) != r {
                let found = Counterexample::new(vec![x.clone()], x.clone(), x)
                    .with_note(format!("round trip from {r}"));
                result.push(found, cap(cfg));
            }
        }
    }
    Ok(finish(law, dom, result))
}

/// Extension point for checks that only make sense on some universes.
pub trait SuiteUniverse: Universe {
    /// Whether [`LawId::Isomorphism`] applies (a scalar two-sign domain).
    fn supports_isomorphism(&self) -> bool;

    fn isomorphism(&self, cfg: &CheckConfig) -> Result<LawReport<Self::Elem>, LawError>;
}

impl SuiteUniverse for Domain {
    fn supports_isomorphism(&self) -> bool {
        self.signs() == 2
    }

    fn isomorphism(&self, cfg: &CheckConfig) -> Result<LawReport<MultisignNumber>, LawError> {
        check_isomorphism_s2(self, cfg)
    }
}

impl SuiteUniverse for TupleDomain {
    fn supports_isomorphism(&self) -> bool {
        false
    }

    fn isomorphism(&self, _cfg: &CheckConfig) -> Result<LawReport<Self::Elem>, LawError> {
        Err(LawError::WrongSignCount {
            law: LawId::Isomorphism,
            shape: self.shape(),
        })
    }
}

pub fn check_law<U: SuiteUniverse>(
    law: LawId,
    dom: &U,
    cfg: &CheckConfig,
) -> Result<LawReport<U::Elem>, LawError> {
    match law {
        LawId::SignedAssocAdd => check_signed_associativity_add(dom, cfg),
        LawId::IdentityAssocAdd => check_identity_associativity_add(dom, cfg),
        LawId::FullAssocAdd => check_full_associativity(Op::Add, dom, cfg),
        LawId::FullAssocMul => check_full_associativity(Op::Mul, dom, cfg),
        LawId::CommAdd => check_commutativity(Op::Add, dom, cfg),
        LawId::CommMul => check_commutativity(Op::Mul, dom, cfg),
        LawId::Distributivity => check_distributivity(dom, cfg),
        LawId::InverseStructure => check_inverse_structure(dom, cfg),
        LawId::Isomorphism => dom.isomorphism(cfg),
    }
}

/// Runs each requested law in order. A failing check (e.g. budget exceeded)
/// yields an `Err` entry without stopping the rest of the suite.
pub fn run_law_suite<U: SuiteUniverse>(
    dom: &U,
    laws: &[LawId],
    cfg: &CheckConfig,
) -> Vec<Result<LawReport<U::Elem>, LawError>> {
    laws.iter().map(|&law| check_law(law, dom, cfg)).collect()
}

#[cfg(test)]
mod tests;
