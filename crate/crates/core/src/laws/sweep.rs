//! Index-space sweeps with an optional rayon backend.
//!
//! A sweep visits `0..count`, asks a closure for the outcome of each case and
//! returns the number of cases actually checked, the total number of
//! failures, and the first `keep` failures in case-index order. The parallel
//! and sequential paths return identical results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How a sweep is executed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Runs on the rayon pool when the `parallel` feature is enabled, and
    /// sequentially otherwise.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// Outcome of a single case: `None` when the case is filtered out, otherwise
/// the (possibly empty) list of failures it produced.
pub type CaseOutcome<T> = Option<Vec<T>>;

#[derive(Debug)]
pub struct SweepResult<T> {
    pub checked: u64,
    /// Every failure found, including those not kept.
    pub failed: u64,
    pub kept: Vec<T>,
}

impl<T> SweepResult<T> {
    /// Records one more failure found outside the sweep itself.
    pub fn push(&mut self, failure: T, keep: usize) {
        self.failed += 1;
        if self.kept.len() < keep {
            self.kept.push(failure);
        }
    }
}

pub fn sweep<T, F>(count: u64, execution: Execution, keep: usize, case: F) -> SweepResult<T>
where
    T: Send,
    F: Fn(u64) -> CaseOutcome<T> + Sync + Send,
{
    match execution {
        Execution::Sequential => sequential(count, keep, case),
        Execution::Parallel => parallel(count, keep, case),
    }
}

fn sequential<T, F>(count: u64, keep: usize, case: F) -> SweepResult<T>
where
    F: Fn(u64) -> CaseOutcome<T>,
{
    let mut result = SweepResult {
        checked: 0,
        failed: 0,
        kept: Vec::new(),
    };
    for idx in 0..count {
        if let Some(found) = case(idx) {
            result.checked += 1;
            for f in found {
                result.push(f, keep);
            }
        }
    }
    result
}

#[cfg(feature = "parallel")]
fn parallel<T, F>(count: u64, keep: usize, case: F) -> SweepResult<T>
where
    T: Send,
    F: Fn(u64) -> CaseOutcome<T> + Sync + Send,
{
    // each fold chunk sees ascending indices, so its first `keep` failures
    // are the lowest-indexed ones in that chunk
    let (checked, failed, mut indexed) = (0..count)
        .into_par_iter()
        .fold(
            || (0u64, 0u64, Vec::new()),
            |(mut checked, mut failed, mut acc), idx| {
                if let Some(found) = case(idx) {
                    checked += 1;
                    for f in found {
                        failed += 1;
                        if acc.len() < keep {
                            acc.push((idx, f));
                        }
                    }
                }
                (checked, failed, acc)
            },
        )
        .reduce(
            || (0, 0, Vec::new()),
            |(c1, f1, mut a1), (c2, f2, a2)| {
                a1.extend(a2);
                a1.sort_by_key(|(idx, _)| *idx);
                a1.truncate(keep);
                (c1 + c2, f1 + f2, a1)
            },
        );
    // stable: failures from one case keep their relative order
    indexed.sort_by_key(|(idx, _)| *idx);
    SweepResult {
        checked,
        failed,
        kept: indexed.into_iter().map(|(_, f)| f).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
fn parallel<T, F>(count: u64, keep: usize, case: F) -> SweepResult<T>
where
    F: Fn(u64) -> CaseOutcome<T>,
{
    sequential(count, keep, case)
}

/// Splits a flat index into `arity` digits of base `n`, most significant
/// first, so that index order is lexicographic order over operand tuples.
pub fn digits(mut idx: u64, n: u64, arity: usize) -> Vec<usize> {
    let mut out = vec![0; arity];
    for slot in out.iter_mut().rev() {
        *slot = (idx % n) as usize;
        idx /= n;
    }
    out
}
