//! Multisign expression language: parsing, evaluation, canonical printing and
//! grouping-sensitivity analysis.
//!
//! `+` / `⊕` is multisign addition and `*` / `⊗` multiplication. Evaluation
//! honours the grouping recorded in the tree (left-associative by default).
//! Because addition is not associative once three sign labels meet,
//! [`grouping_sensitivity`] enumerates every bracketing of each addition chain
//! and reports whether the value depends on it.

mod ast;
mod parser;

use std::collections::BTreeMap;
use std::collections::BTreeSet;

pub use ast::{Expr, ExprKind, Shape, Span, Value};
pub use parser::parse;

use crate::error::Error;
use crate::number::MultisignNumber;
use crate::structures::MultisignTuple;

/// Longest `⊕`-chain [`grouping_sensitivity`] will enumerate. The number of
/// bracketings of `n` operands is the Catalan number `C(n-1)`.
pub const MAX_CHAIN_OPERANDS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExprError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("at byte {offset}: {source}")]
    Semantic { offset: usize, source: Error },

    #[error("shape mismatch at byte {offset}: {message}")]
    ShapeMismatch { offset: usize, message: String },

    #[error("tuple nested inside a tuple at byte {offset}")]
    NestedTuple { offset: usize },

    #[error("evaluation failed: {0}")]
    Eval(Error),

    #[error("addition chain has {len} operands; grouping analysis is limited to {max}")]
    ChainTooLong { len: usize, max: usize },
}

impl ExprError {
    pub fn is_syntax(&self) -> bool {
        matches!(self, ExprError::Syntax { .. })
    }

    /// Byte offset of the problem in the source text, when known.
    pub fn offset(&self) -> Option<usize> {
        match self {
            ExprError::Syntax { offset, .. }
            | ExprError::Semantic { offset, .. }
            | ExprError::ShapeMismatch { offset, .. }
            | ExprError::NestedTuple { offset } => Some(*offset),
            _ => None,
        }
    }
}

/// Bottom-up evaluation following the tree's grouping exactly.
pub fn eval(e: &Expr) -> Result<Value, ExprError> {
    match &e.kind {
        ExprKind::Literal(x) => Ok(Value::Number(x.clone())),
        ExprKind::Tuple(items) => {
            let slots = items
                .iter()
                .map(|item| match eval(item)? {
                    Value::Number(x) => Ok(x),
                    Value::Tuple(_) => Err(ExprError::NestedTuple {
                        offset: item.span.start,
                    }),
                })
                .collect::<Result<Vec<_>, _>>()?;
            MultisignTuple::new(slots)
                .map(Value::Tuple)
                .map_err(ExprError::Eval)
        }
        ExprKind::Add(l, r) => eval(l)?.add(&eval(r)?).map_err(ExprError::Eval),
        ExprKind::Mul(l, r) => eval(l)?.mul(&eval(r)?).map_err(ExprError::Eval),
    }
}

/// Parses and evaluates in one step.
pub fn eval_str(text: &str, shape: &Shape) -> Result<Value, ExprError> {
    eval(&parse(text, shape)?)
}

/// Canonical text of an expression, with the fewest parentheses that keep
/// the tree's grouping under left-associative parsing.
pub fn format_expr(e: &Expr) -> String {
    let mut out = String::new();
    write_expr(e, &mut out);
    out
}

/// Canonical literal text of a value.
pub fn format_value(v: &Value) -> String {
    v.to_string()
}

fn write_expr(e: &Expr, out: &mut String) {
    let wrapped = |child: &Expr, out: &mut String| {
        out.push('(');
        write_expr(child, out);
        out.push(')');
    };
    match &e.kind {
        ExprKind::Literal(x) => out.push_str(&x.to_string()),
        ExprKind::Tuple(items) => {
            out.push('(');
            for (t, item) in items.iter().enumerate() {
                if t > 0 {
                    out.push_str(", ");
                }
                write_expr(item, out);
            }
            if items.len() == 1 {
                out.push(',');
            }
            out.push(')');
        }
        ExprKind::Add(l, r) => {
            write_expr(l, out);
            out.push_str(" + ");
            if matches!(r.kind, ExprKind::Add(..)) {
                wrapped(r, out);
            } else {
                write_expr(r, out);
            }
        }
        ExprKind::Mul(l, r) => {
            if matches!(l.kind, ExprKind::Add(..)) {
                wrapped(l, out);
            } else {
                write_expr(l, out);
            }
            out.push_str(" * ");
            if matches!(r.kind, ExprKind::Add(..) | ExprKind::Mul(..)) {
                wrapped(r, out);
            } else {
                write_expr(r, out);
            }
        }
    }
}

/// Every value an expression can take over all bracketings of its addition
/// chains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SensitivityReport {
    /// Value under the grouping written in the source.
    pub value: Value,
    pub distinct_values: BTreeSet<Value>,
    pub is_sensitive: bool,
    /// The written grouping and an alternative one with a different value.
    pub witness_groupings: Option<(Expr, Expr)>,
}

/// Enumerates all full parenthesizations of each maximal `⊕`-chain.
///
/// `⊗` is associative, so multiplication chains are evaluated as written.
pub fn grouping_sensitivity(e: &Expr) -> Result<SensitivityReport, ExprError> {
    let value = eval(e)?;
    let alternatives = alternatives(e)?;
    let witness = alternatives
        .iter()
        .find(|(v, _)| **v != value)
        .map(|(_, alt)| (e.clone(), alt.clone()));
    let distinct_values: BTreeSet<Value> = alternatives.into_keys().collect();
    Ok(SensitivityReport {
        value,
        is_sensitive: distinct_values.len() > 1,
        distinct_values,
        witness_groupings: witness,
    })
}

type Alternatives = BTreeMap<Value, Expr>;

fn combine(
    left: &Alternatives,
    right: &Alternatives,
    op: fn(&Value, &Value) -> crate::error::Result<Value>,
    build: fn(Expr, Expr) -> Expr,
    into: &mut Alternatives,
) -> Result<(), ExprError> {
    for (a, ea) in left {
        for (b, eb) in right {
            let v = op(a, b).map_err(ExprError::Eval)?;
            into.entry(v)
                .or_insert_with(|| build(ea.clone(), eb.clone()));
        }
    }
    Ok(())
}

fn chain_operands<'e>(e: &'e Expr, out: &mut Vec<&'e Expr>) {
    match &e.kind {
        ExprKind::Add(l, r) => {
            chain_operands(l, out);
            chain_operands(r, out);
        }
        _ => out.push(e),
    }
}

fn alternatives(e: &Expr) -> Result<Alternatives, ExprError> {
    match &e.kind {
        ExprKind::Literal(_) => Ok(BTreeMap::from([(eval(e)?, e.clone())])),
        ExprKind::Tuple(items) => {
            let mut partial: Vec<(Vec<MultisignNumber>, Vec<Expr>)> = vec![(vec![], vec![])];
            for item in items {
                let alts = alternatives(item)?;
                let mut next = Vec::new();
                for (values, exprs) in &partial {
                    for (v, ex) in &alts {
                        let Value::Number(x) = v else {
                            return Err(ExprError::NestedTuple {
                                offset: item.span.start,
                            });
                        };
                        let mut values = values.clone();
                        values.push(x.clone());
                        let mut exprs = exprs.clone();
                        exprs.push(ex.clone());
                        next.push((values, exprs));
                    }
                }
                partial = next;
            }
            let mut out = BTreeMap::new();
            for (values, exprs) in partial {
                let t = MultisignTuple::new(values).map_err(ExprError::Eval)?;
                out.entry(Value::Tuple(t))
                    .or_insert_with(|| Expr::new(ExprKind::Tuple(exprs), e.span));
            }
            Ok(out)
        }
        ExprKind::Mul(l, r) => {
            let mut out = BTreeMap::new();
            combine(
                &alternatives(l)?,
                &alternatives(r)?,
                Value::mul,
                Expr::mul,
                &mut out,
            )?;
            Ok(out)
        }
        ExprKind::Add(..) => {
            let mut operands = Vec::new();
            chain_operands(e, &mut operands);
            let n = operands.len();
            if n > MAX_CHAIN_OPERANDS {
                return Err(ExprError::ChainTooLong {
                    len: n,
                    max: MAX_CHAIN_OPERANDS,
                });
            }
            // table[i][j]: alternatives for operands i..=j
            let mut table: Vec<Vec<Alternatives>> = vec![vec![BTreeMap::new(); n]; n];
            for (i, op) in operands.iter().enumerate() {
                table[i][i] = alternatives(op)?;
            }
            for len in 2..=n {
                for i in 0..=n - len {
                    let j = i + len - 1;
                    let mut cell = BTreeMap::new();
                    for k in i..j {
                        combine(
                            &table[i][k],
                            &table[k + 1][j],
                            Value::add,
                            Expr::add,
                            &mut cell,
                        )?;
                    }
                    table[i][j] = cell;
                }
            }
            Ok(std::mem::take(&mut table[0][n - 1]))
        }
    }
}
