//! Parser for linear combinations of string-group generators.
//!
//! ```text
//! expr := term (("+" | "-") term)*
//! term := [int ["*"]] ("x" index | "c") | "0"
//! ```
//!
//! Whitespace is ignored and a leading sign is allowed. The result comes
//! back in normal form. `LElement`'s `Display` produces text this parser
//! accepts.

use crate::error::{Error, Result};
use crate::lgroup::{LElement, WeightType};

pub fn parse_element(text: &str, p: &WeightType) -> Result<LElement> {
    let mut parser = Parser::new(text);
    let (raw, c) = parser.expr(p.len())?;
    p.try_normal_form(&raw, c)
}

/// Comma-separated generator list, e.g. `"x1-x2, 2*x1-x3"`. An empty or
/// blank string yields no generators.
pub fn parse_generators(text: &str, p: &WeightType) -> Result<Vec<LElement>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        out.push(parse_element(part, p).map_err(|e| shift(e, offset))?);
        offset += part.len() + 1;
    }
    Ok(out)
}

fn shift(e: Error, by: usize) -> Error {
    match e {
        Error::Syntax { pos, message } => Error::Syntax {
            pos: pos + by,
            message,
        },
        other => other,
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
        }
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

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            message: message.into(),
        }
    }

    fn expr(&mut self, t: usize) -> Result<(Vec<i64>, i64)> {
        let mut raw = vec![0i64; t];
        let mut c = 0i64;
        if self.peek().is_none() {
            return Err(self.err("empty expression"));
        }
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let (coef, sym) = self.term(t)?;
            let coef = coef
                .checked_mul(sign)
                .ok_or_else(|| Error::Overflow("coefficient".into()))?;
            let slot = match sym {
                Symbol::X(i) => &mut raw[i],
                Symbol::C => &mut c,
                Symbol::Zero => {
                    sign = 1;
                    if !self.next_sign(&mut sign)? {
                        break;
                    }
                    continue;
                }
            };
            *slot = slot
                .checked_add(coef)
                .ok_or_else(|| Error::Overflow("coefficient".into()))?;
            if !self.next_sign(&mut sign)? {
                break;
            }
        }
        Ok((raw, c))
    }

    /// Consumes `+`/`-` between terms; false at end of input.
    fn next_sign(&mut self, sign: &mut i64) -> Result<bool> {
        match self.peek() {
            None => Ok(false),
            Some(b'+') => {
                self.pos += 1;
                *sign = 1;
                Ok(true)
            }
            Some(b'-') => {
                self.pos += 1;
                *sign = -1;
                Ok(true)
            }
            Some(ch) => Err(self.err(format!("expected '+' or '-', found '{}'", ch as char))),
        }
    }

    fn term(&mut self, t: usize) -> Result<(i64, Symbol)> {
        let coef = self.integer()?;
        if coef.is_some() && self.peek() == Some(b'*') {
            self.pos += 1;
        }
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                let start = self.pos;
                let index = self
                    .integer()?
                    .ok_or_else(|| self.err("expected an index after 'x'"))?;
                let index = usize::try_from(index).unwrap_or(usize::MAX);
                if index == 0 || index > t {
                    let _ = start;
                    return Err(Error::IndexOutOfRange { index, len: t });
                }
                Ok((coef.unwrap_or(1), Symbol::X(index - 1)))
            }
            Some(b'c') => {
                self.pos += 1;
                Ok((coef.unwrap_or(1), Symbol::C))
            }
            _ => match coef {
                Some(0) => Ok((0, Symbol::Zero)),
                Some(_) => Err(self.err("integer term must be followed by a generator")),
                None => Err(self.err("expected a term")),
            },
        }
    }

    fn integer(&mut self) -> Result<Option<i64>> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits
            .parse::<i64>()
            .map(Some)
            .map_err(|_| Error::Overflow(digits.to_string()))
    }
}

enum Symbol {
    X(usize),
    C,
    Zero,
}
