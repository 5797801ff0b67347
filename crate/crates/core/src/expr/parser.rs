//! Recursive-descent parser for multisign expressions.
//!
//! ```text
//! expr    := term (("+" | "⊕") term)*
//! term    := factor (("*" | "⊗") factor)*
//! factor  := literal | "(" expr ")" | tuple
//! tuple   := "(" expr "," [expr ("," expr)*] [","] ")"
//! literal := "^" digits ws? (magnitude | "(" magnitude ")") | "0"
//! magnitude := digits | digits "/" digits | digits "." digits
//! ```
//!
//! Both operators are left-associative and `*` binds tighter than `+`. A
//! parenthesis opens a tuple when a comma occurs at its top level.

use crate::error::Error;
use crate::magnitude::Magnitude;
use crate::number::MultisignNumber;

use super::ast::{Expr, ExprKind, Shape, Span};
use super::ExprError;

/// Sign context in force at a given point of the parse.
#[derive(Clone, Copy)]
enum Context<'a> {
    /// Literals live in a single carrier with this many signs.
    Scalar(u32),
    /// Top level of a tuple-shaped expression: only tuple literals may appear.
    Tuples(&'a [u32]),
}

pub fn parse(text: &str, shape: &Shape) -> Result<Expr, ExprError> {
    let ctx = match shape {
        Shape::Scalar(0) => {
            return Err(ExprError::Semantic {
                offset: 0,
                source: Error::InvalidSignCount,
            })
        }
        Shape::Tuple(v) if v.is_empty() || v.contains(&0) => {
            return Err(ExprError::Semantic {
                offset: 0,
                source: Error::InvalidSignCount,
            })
        }
        Shape::Scalar(s) => Context::Scalar(*s),
        Shape::Tuple(v) => Context::Tuples(v),
    };
    let mut p = Parser { src: text, pos: 0 };
    let expr = p.expr(ctx)?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.syntax(format!("unexpected `{}`", p.peek_char().unwrap_or(' '))));
    }
    Ok(expr)
}

struct Parser<'s> {
    src: &'s str,
    pos: usize,
}

impl<'s> Parser<'s> {
    fn rest(&self) -> &'s str {
        &self.src[self.pos..]
    }

    fn peek_char(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn syntax(&self, message: impl Into<String>) -> ExprError {
        ExprError::Syntax {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn eat_any(&mut self, options: &[char]) -> bool {
        self.skip_ws();
        match self.peek_char() {
            Some(c) if options.contains(&c) => {
                self.pos += c.len_utf8();
                true
            }
            _ => false,
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ExprError> {
        if self.eat_any(&[c]) {
            Ok(())
        } else {
            Err(match self.peek_char() {
                Some(found) => self.syntax(format!("expected `{c}`, found `{found}`")),
                None => self.syntax(format!("expected `{c}`, found end of input")),
            })
        }
    }

    fn expr(&mut self, ctx: Context) -> Result<Expr, ExprError> {
        let mut lhs = self.term(ctx)?;
        while self.eat_any(&['+', '⊕']) {
            let rhs = self.term(ctx)?;
            lhs = Expr::add(lhs, rhs);
        }
        Ok(lhs)
    }

    fn term(&mut self, ctx: Context) -> Result<Expr, ExprError> {
        let mut lhs = self.factor(ctx)?;
        while self.eat_any(&['*', '⊗']) {
            let rhs = self.factor(ctx)?;
            lhs = Expr::mul(lhs, rhs);
        }
        Ok(lhs)
    }

    fn factor(&mut self, ctx: Context) -> Result<Expr, ExprError> {
        self.skip_ws();
        let start = self.pos;
        match self.peek_char() {
            Some('(') => {
                if self.opens_tuple() {
                    self.tuple(ctx)
                } else {
                    self.pos += 1;
                    let inner = self.expr(ctx)?;
                    self.expect(')')?;
                    Ok(inner)
                }
            }
            Some('^') | Some('0'..='9') => {
                let lit = self.literal(ctx)?;
                match ctx {
                    Context::Scalar(_) => Ok(lit),
                    Context::Tuples(shape) => Err(ExprError::ShapeMismatch {
                        offset: start,
                        message: format!(
                            "scalar literal where a tuple of shape {shape:?} is expected"
                        ),
                    }),
                }
            }
            Some(c) => Err(self.syntax(format!("expected a literal, `(` or tuple, found `{c}`"))),
            None => Err(self.syntax("unexpected end of input")),
        }
    }

    /// Looks ahead from an opening parenthesis for a comma at depth zero
    /// before the matching close.
    fn opens_tuple(&self) -> bool {
        let mut depth = 0usize;
        for c in self.rest().chars().skip(1) {
            match c {
                '(' => depth += 1,
                ')' if depth == 0 => return false,
                ')' => depth -= 1,
                ',' if depth == 0 => return true,
                _ => {}
            }
        }
        false
    }

    fn tuple(&mut self, ctx: Context) -> Result<Expr, ExprError> {
        let start = self.pos;
        let shape = match ctx {
            Context::Tuples(shape) => shape,
            Context::Scalar(_) => {
                return Err(ExprError::ShapeMismatch {
                    offset: start,
                    message: "tuple literal in a scalar context".into(),
                })
            }
        };
        self.pos += 1;
        let mut items = Vec::new();
        loop {
            self.skip_ws();
            if !items.is_empty() && self.peek_char() == Some(')') {
                break;
            }
            let slot_signs = shape
                .get(items.len())
                .copied()
                .unwrap_or(shape[shape.len() - 1]);
            items.push(self.expr(Context::Scalar(slot_signs))?);
            if !self.eat_any(&[',']) {
                break;
            }
        }
        self.expect(')')?;
        if items.len() != shape.len() {
            return Err(ExprError::ShapeMismatch {
                offset: start,
                message: format!(
                    "tuple has {} slots, shape {shape:?} has {}",
                    items.len(),
                    shape.len()
                ),
            });
        }
        Ok(Expr::new(
            ExprKind::Tuple(items),
            Span::new(start, self.pos),
        ))
    }

    fn digits(&mut self) -> &'s str {
        let rest = self.rest();
        let len = rest.bytes().take_while(u8::is_ascii_digit).count();
        self.pos += len;
        &rest[..len]
    }

    fn magnitude(&mut self) -> Result<Magnitude, ExprError> {
        let start = self.pos;
        if self.digits().is_empty() {
            return Err(self.syntax("expected a magnitude"));
        }
        if let Some(sep @ ('/' | '.')) = self.peek_char() {
            self.pos += 1;
            if self.digits().is_empty() {
                return Err(self.syntax(format!("expected digits after `{sep}`")));
            }
        }
        let text = &self.src[start..self.pos];
        text.parse().map_err(|e| ExprError::Semantic {
            offset: start,
            source: e,
        })
    }

    fn literal(&mut self, ctx: Context) -> Result<Expr, ExprError> {
        let start = self.pos;
        let signs = match ctx {
            Context::Scalar(s) => s,
            Context::Tuples(shape) => shape[0],
        };
        if self.peek_char() != Some('^') {
            let m = self.magnitude()?;
            if !m.is_zero() {
                return Err(ExprError::Syntax {
                    offset: start,
                    message: format!("bare magnitude `{m}` needs a sign; write `^d {m}` or `0`"),
                });
            }
            let span = Span::new(start, self.pos);
            return Ok(Expr::new(
                ExprKind::Literal(MultisignNumber::zero(signs)),
                span,
            ));
        }
        self.pos += 1;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.syntax("expected a sign index after `^`"));
        }
        let sign: i64 = digits.parse().unwrap_or(i64::MAX);
        self.skip_ws();
        let magnitude = if self.peek_char() == Some('(') {
            self.pos += 1;
            self.skip_ws();
            let m = self.magnitude()?;
            self.expect(')')?;
            m
        } else {
            self.magnitude()?
        };
        let value =
            MultisignNumber::make(signs, sign, magnitude).map_err(|e| ExprError::Semantic {
                offset: start,
                source: e,
            })?;
        Ok(Expr::new(
            ExprKind::Literal(value),
            Span::new(start, self.pos),
        ))
    }
}
