//! Text notation for elements, point sets and element expressions.
//!
//! ```text
//! element  := "id" | "{" [item ("," item)*] "}"
//! item     := nat ">" nat | "-" nat
//! finset   := "{" [nat ("," nat)*] "}"
//! expr     := term ("*" term)*
//! term     := element | "inv(" expr ")" | "(" expr ")"
//! ```
//!
//! Whitespace between tokens is ignored.

use std::fmt;
use std::str::FromStr;

use crate::element::{PartialSelfmap, Point};
use crate::error::{Error, Result};
use crate::finset::FinSet;

impl fmt::Display for PartialSelfmap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("id");
        }
        f.write_str("{")?;
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            if first {
                first = false;
                Ok(())
            } else {
                f.write_str(", ")
            }
        };
        for (x, y) in self.moved() {
            sep(f)?;
            write!(f, "{x}>{y}")?;
        }
        for h in self.holes_set() {
            sep(f)?;
            write!(f, "-{h}")?;
        }
        f.write_str("}")
    }
}

impl FromStr for PartialSelfmap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        let el = p.element()?;
        p.finish()?;
        Ok(el)
    }
}

impl FromStr for FinSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        let set = p.finset()?;
        p.finish()?;
        Ok(set)
    }
}

/// Parses an element expression and evaluates it. `*` is left-associative.
pub fn eval_expr(s: &str) -> Result<PartialSelfmap> {
    let mut p = Parser::new(s);
    let v = p.expr()?;
    p.finish()?;
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok.as_bytes()) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.error(format!("expected `{tok}`"))
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(_) => self.error("unexpected trailing input"),
        }
    }

    fn nat(&mut self) -> Result<Point> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected a natural number");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        match digits.parse() {
            Ok(n) => Ok(n),
            Err(_) => Err(Error::Syntax {
                pos: start,
                msg: "number out of range".into(),
            }),
        }
    }

    fn element(&mut self) -> Result<PartialSelfmap> {
        if self.eat("id") {
            return Ok(PartialSelfmap::identity());
        }
        self.expect("{")?;
        let mut pairs = Vec::new();
        let mut holes = Vec::new();
        if !self.eat("}") {
            loop {
                if self.eat("-") {
                    holes.push(self.nat()?);
                } else {
                    let x = self.nat()?;
                    self.expect(">")?;
                    pairs.push((x, self.nat()?));
                }
                if self.eat("}") {
                    break;
                }
                self.expect(",")?;
            }
        }
        PartialSelfmap::make(pairs, holes)
    }

    fn finset(&mut self) -> Result<FinSet> {
        self.expect("{")?;
        let mut set = FinSet::new();
        if !self.eat("}") {
            loop {
                set.insert(self.nat()?);
                if self.eat("}") {
                    break;
                }
                self.expect(",")?;
            }
        }
        Ok(set)
    }

    fn expr(&mut self) -> Result<PartialSelfmap> {
        let mut acc = self.term()?;
        while self.eat("*") {
            let rhs = self.term()?;
            acc = acc.compose(&rhs);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<PartialSelfmap> {
        if self.eat("inv") {
            self.expect("(")?;
            let v = self.expr()?;
            self.expect(")")?;
            return Ok(v.inverse());
        }
        if self.eat("(") {
            let v = self.expr()?;
            self.expect(")")?;
            return Ok(v);
        }
        match self.peek() {
            Some(b'{') | Some(b'i') => self.element(),
            _ => self.error("expected an element, `inv(` or `(`"),
        }
    }
}
