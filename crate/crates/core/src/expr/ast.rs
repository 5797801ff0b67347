use std::fmt;

use crate::error::{Error, Result};
use crate::number::MultisignNumber;
use crate::structures::MultisignTuple;

/// Byte range `[start, end)` in the source text.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        Span { start, end }
    }

    pub fn join(self, other: Span) -> Span {
        Span::new(self.start.min(other.start), self.end.max(other.end))
    }
}

/// Sign-count declaration for an expression: a single carrier, or one
/// carrier per tuple slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    Scalar(u32),
    Tuple(Vec<u32>),
}

impl Shape {
    pub fn of(value: &Value) -> Shape {
        match value {
            Value::Number(x) => Shape::Scalar(x.signs_count()),
            Value::Tuple(t) => Shape::Tuple(t.shape()),
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Scalar(s) => write!(f, "{s}"),
            Shape::Tuple(shape) => {
                let parts: Vec<String> = shape.iter().map(u32::to_string).collect();
                write!(f, "({})", parts.join(","))
            }
        }
    }
}

#[derive(Clone, Debug)]
pub enum ExprKind {
    Literal(MultisignNumber),
    Tuple(Vec<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
}

/// Expression tree. The tree shape records exactly the grouping written in
/// the source; nothing is reassociated.
///
/// Equality compares structure only and ignores spans.
#[derive(Clone, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl Expr {
    pub fn new(kind: ExprKind, span: Span) -> Self {
        Expr { kind, span }
    }

    pub fn literal(x: MultisignNumber) -> Self {
        Expr::new(ExprKind::Literal(x), Span::default())
    }

    pub fn tuple(items: Vec<Expr>) -> Self {
        Expr::new(ExprKind::Tuple(items), Span::default())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(l: Expr, r: Expr) -> Self {
        let span = l.span.join(r.span);
        Expr::new(ExprKind::Add(Box::new(l), Box::new(r)), span)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(l: Expr, r: Expr) -> Self {
        let span = l.span.join(r.span);
        Expr::new(ExprKind::Mul(Box::new(l), Box::new(r)), span)
    }

    /// Literal expression denoting a value.
    pub fn from_value(v: &Value) -> Self {
        match v {
            Value::Number(x) => Expr::literal(x.clone()),
            Value::Tuple(t) => Expr::tuple(t.slots().iter().cloned().map(Expr::literal).collect()),
        }
    }
}

impl PartialEq for ExprKind {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (ExprKind::Literal(a), ExprKind::Literal(b)) => a == b,
            (ExprKind::Tuple(a), ExprKind::Tuple(b)) => a == b,
            (ExprKind::Add(a1, a2), ExprKind::Add(b1, b2)) => a1 == b1 && a2 == b2,
            (ExprKind::Mul(a1, a2), ExprKind::Mul(b1, b2)) => a1 == b1 && a2 == b2,
            _ => false,
        }
    }
}

impl Eq for ExprKind {}

impl PartialEq for Expr {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Expr {}

/// Result of evaluating an expression.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Value {
    Number(MultisignNumber),
    Tuple(MultisignTuple),
}

impl Value {
    fn shape_vec(&self) -> Vec<u32> {
        match self {
            Value::Number(x) => vec![x.signs_count()],
            Value::Tuple(t) => t.shape(),
        }
    }

    fn mismatch(&self, other: &Value) -> Error {
        Error::ShapeMismatch {
            left: self.shape_vec(),
            right: other.shape_vec(),
        }
    }

    pub fn add(&self, other: &Value) -> Result<Value> {
        match (self, other) {
            (Value::Number(a), Value::Number(b)) => a.add(b).map(Value::Number),
            (Value::Tuple(a), Value::Tuple(b)) => a.add(b).map(Value::Tuple),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn mul(&self, other: &Value) -> Result<Value> {
        match (self, other) {
            (Value::Number(a), Value::Number(b)) => a.mul(b).map(Value::Number),
            (Value::Tuple(a), Value::Tuple(b)) => a.mul(b).map(Value::Tuple),
            _ => Err(self.mismatch(other)),
        }
    }
}

impl From<MultisignNumber> for Value {
    fn from(x: MultisignNumber) -> Self {
        Value::Number(x)
    }
}

impl From<MultisignTuple> for Value {
    fn from(t: MultisignTuple) -> Self {
        Value::Tuple(t)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Number(x) => write!(f, "{x}"),
            Value::Tuple(t) => write!(f, "{t}"),
        }
    }
}
