//! ASCII surface syntax and display records for grossone numbers.
//!
//! ```text
//! number   := term (('+'|'-') term)* | '0'
//! term     := [sign] rational ['G' ['^' [sign] rational]] | [sign] 'G' ['^' [sign] rational]
//! rational := integer ['/' positive-integer]
//! ```
//!
//! Whitespace between tokens is ignored. A bare `G` is `G^1`; a term without
//! `G` is a `G^0` term.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::number::{GrossNumber, Rational, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: expected {expected}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub expected: String,
}

/// How a number is rendered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Style {
    /// Parseable `13G^2+11G+9` form.
    #[default]
    Ascii,
    /// Concatenated positional record, `13①^2 11①^1 9①^0`.
    Paper,
}

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
    /// Whether a `/` after an integer must start a fraction. The expression
    /// evaluator turns this off so `/` can also mean division.
    strict_fraction: bool,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str, strict_fraction: bool) -> Self {
        Self {
            src,
            pos: 0,
            strict_fraction,
        }
    }

    pub(crate) fn error(&self, expected: impl Into<String>) -> ParseError {
        ParseError {
            position: self.pos,
            expected: expected.into(),
        }
    }

    /// Next non-whitespace byte, without consuming it.
    pub(crate) fn peek(&mut self) -> Option<u8> {
        let rest = &self.src[self.pos..];
        let trimmed = rest.trim_start();
        self.pos += rest.len() - trimmed.len();
        trimmed.bytes().next()
    }

    pub(crate) fn eat(&mut self, byte: u8) -> bool {
        if self.peek() == Some(byte) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn sign(&mut self) -> bool {
        if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.peek();
        let digits = self.src[self.pos..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if digits == 0 {
            return Err(self.error("digit"));
        }
        let value = self.src[self.pos..self.pos + digits]
            .parse()
            .expect("ascii digits parse as an integer");
        self.pos += digits;
        Ok(value)
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let numer = self.integer()?;
        let checkpoint = self.pos;
        if !self.eat(b'/') {
            return Ok(Rational::from_integer(numer));
        }
        if !self.strict_fraction && !self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos = checkpoint;
            return Ok(Rational::from_integer(numer));
        }
        self.peek();
        let at = self.pos;
        let denom = self.integer().map_err(|_| self.error("positive integer"))?;
        if denom.is_zero() {
            return Err(ParseError {
                position: at,
                expected: "positive integer".into(),
            });
        }
        Ok(Rational::new(numer, denom))
    }

    fn power_suffix(&mut self) -> Result<Rational, ParseError> {
        if self.eat(b'^') {
            let negative = self.sign();
            let p = self.rational()?;
            Ok(if negative { -p } else { p })
        } else {
            Ok(Rational::one())
        }
    }

    /// An unsigned literal: `rational [G[^p]]` or `G[^p]`.
    pub(crate) fn literal(&mut self) -> Result<(Rational, Rational), ParseError> {
        if self.eat(b'G') {
            return Ok((Rational::one(), self.power_suffix()?));
        }
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {}
            _ => return Err(self.error("number or 'G'")),
        }
        let digit = self.rational()?;
        let power = if self.eat(b'G') {
            self.power_suffix()?
        } else {
            Rational::zero()
        };
        Ok((digit, power))
    }

    fn signed_term(&mut self) -> Result<(Rational, Rational), ParseError> {
        let negative = self.sign();
        let (digit, power) = self.literal()?;
        Ok((if negative { -digit } else { digit }, power))
    }
}

impl GrossNumber {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut cur = Cursor::new(text, true);
        let mut pairs = vec![cur.signed_term()?];
        loop {
            let negative = match cur.peek() {
                None => break,
                Some(b'+') => false,
                Some(b'-') => true,
                Some(_) => return Err(cur.error("'+', '-' or end of input")),
            };
            cur.pos += 1;
            let (digit, power) = cur.signed_term()?;
            pairs.push((if negative { -digit } else { digit }, power));
        }
        Ok(GrossNumber::canonicalize(pairs))
    }

    pub fn format(&self, style: Style) -> String {
        match style {
            Style::Ascii => self.to_string(),
            Style::Paper => {
                if self.is_zero() {
                    return "0".into();
                }
                self.terms()
                    .iter()
                    .map(|t| format!("{}①^{}", t.digit(), t.power()))
                    .collect::<Vec<_>>()
                    .join(" ")
            }
        }
    }
}

fn write_ascii_term(f: &mut fmt::Formatter<'_>, term: &Term, first: bool) -> fmt::Result {
    let digit = term.digit();
    if digit.is_negative() {
        f.write_str("-")?;
    } else if !first {
        f.write_str("+")?;
    }
    let magnitude = digit.abs();
    let power = term.power();
    if power.is_zero() {
        return write!(f, "{magnitude}");
    }
    if !magnitude.is_one() {
        write!(f, "{magnitude}")?;
    }
    f.write_str("G")?;
    if !power.is_one() {
        write!(f, "^{power}")?;
    }
    Ok(())
}

impl fmt::Display for GrossNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, term) in self.terms().iter().enumerate() {
            write_ascii_term(f, term, i == 0)?;
        }
        Ok(())
    }
}

impl FromStr for GrossNumber {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}
