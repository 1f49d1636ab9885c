//! Integer expressions in one variable `k`, such as `3*k+1` or `2*(k-1)`.
//!
//! Grammar (usual precedence, left associative):
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | number | 'k' | '(' expr ')'
//! ```

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SkeinError};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Node {
    Num(i64),
    Var,
    Neg(Box<Node>),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
}

impl Node {
    fn eval(&self, k: i64) -> Option<i64> {
        match self {
            Node::Num(v) => Some(*v),
            Node::Var => Some(k),
            Node::Neg(a) => a.eval(k)?.checked_neg(),
            Node::Add(a, b) => a.eval(k)?.checked_add(b.eval(k)?),
            Node::Sub(a, b) => a.eval(k)?.checked_sub(b.eval(k)?),
            Node::Mul(a, b) => a.eval(k)?.checked_mul(b.eval(k)?),
        }
    }
}

/// A parsed expression; keeps its source text for display.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct FamilyExpr {
    source: String,
    #[serde(skip)]
    root: Option<Node>,
}

impl FamilyExpr {
    pub fn parse(text: &str) -> Result<FamilyExpr> {
        let mut p = Parser { s: text.as_bytes(), pos: 0 };
        let root = p.expr()?;
        p.skip_ws();
        if p.pos < p.s.len() {
            return Err(p.error("unexpected character"));
        }
        Ok(FamilyExpr { source: text.trim().to_string(), root: Some(root) })
    }

    /// A constant expression.
    pub fn constant(v: i64) -> FamilyExpr {
        FamilyExpr { source: v.to_string(), root: Some(Node::Num(v)) }
    }

    pub fn eval(&self, k: i64) -> Result<i64> {
        self.root
            .as_ref()
            .expect("expressions are always parsed")
            .eval(k)
            .ok_or_else(|| SkeinError::Overflow(format!("{} at k = {k}", self.source)))
    }

    /// Evaluates and checks the result is at least `min`.
    pub fn eval_at_least(&self, k: i64, min: i64, what: &str) -> Result<usize> {
        let v = self.eval(k)?;
        if v < min {
            return Err(SkeinError::Unsupported(format!("{what} `{}` is {v} at k = {k}, below {min}", self.source)));
        }
        Ok(v as usize)
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// Whether the expression mentions `k`.
    pub fn is_constant(&self) -> bool {
        !self.source.contains('k')
    }
}

impl fmt::Display for FamilyExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

impl FromStr for FamilyExpr {
    type Err = SkeinError;
    fn from_str(s: &str) -> Result<Self> {
        FamilyExpr::parse(s)
    }
}

impl TryFrom<String> for FamilyExpr {
    type Error = SkeinError;
    fn try_from(s: String) -> Result<Self> {
        FamilyExpr::parse(&s)
    }
}

impl From<FamilyExpr> for String {
    fn from(e: FamilyExpr) -> String {
        e.source
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> SkeinError {
        SkeinError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Node> {
        let mut lhs = self.term()?;
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let rhs = self.term()?;
            lhs = if op == b'+' { Node::Add(lhs.into(), rhs.into()) } else { Node::Sub(lhs.into(), rhs.into()) };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Node> {
        let mut lhs = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            lhs = Node::Mul(lhs.into(), self.factor()?.into());
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Node> {
        match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                Ok(Node::Neg(self.factor()?.into()))
            }
            Some(b'k') => {
                self.pos += 1;
                Ok(Node::Var)
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
                text.parse()
                    .map(Node::Num)
                    .map_err(|_| SkeinError::Parse { pos: start, msg: "number too large".into() })
            }
            Some(_) => Err(self.error("expected a number, `k`, `-` or `(`")),
            None => Err(self.error("unexpected end of expression")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_and_sign() {
        let e = FamilyExpr::parse("3*k+1").unwrap();
        assert_eq!(e.eval(7).unwrap(), 22);
        assert_eq!(FamilyExpr::parse("2*(k-1)*-3").unwrap().eval(4).unwrap(), -18);
        assert_eq!(FamilyExpr::parse(" k - 2 - 3 ").unwrap().eval(10).unwrap(), 5);
        assert!(FamilyExpr::parse("8").unwrap().is_constant());
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            FamilyExpr::parse("k+").unwrap_err(),
            SkeinError::Parse { pos: 2, msg: "unexpected end of expression".into() }
        );
        assert!(matches!(FamilyExpr::parse("2*(k"), Err(SkeinError::Parse { pos: 4, .. })));
        assert!(matches!(FamilyExpr::parse("k k"), Err(SkeinError::Parse { pos: 2, .. })));
        assert!(matches!(FamilyExpr::parse("k/2"), Err(SkeinError::Parse { pos: 1, .. })));
    }

    #[test]
    fn overflow_is_reported() {
        let e = FamilyExpr::parse("k*k*k*k*k").unwrap();
        assert!(matches!(e.eval(1 << 20), Err(SkeinError::Overflow(_))));
    }
}
