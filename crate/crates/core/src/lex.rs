//! Lexicographic ranking of fixed-length count words.
//!
//! A word `(c_0, …, c_{w-1})` is encoded as `c_0①^{w-1} + … + c_{w-1}①^0`.
//! Because ① exceeds every finite count, numeric comparison of encodings is
//! exactly lexicographic comparison of the words, with no upper bound on the
//! counts. Any finite base β fails as soon as a later count reaches β.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

use crate::number::{GrossNumber, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexError {
    #[error("word must contain at least one count")]
    EmptyWord,
    #[error("words have different lengths ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("count {0:?} is negative")]
    NegativeCount(String),
    #[error("count {0:?} is not a non-negative integer")]
    InvalidCount(String),
    #[error("base must be at least 2")]
    InvalidBase,
    #[error("counterexample needs a word length of at least 2")]
    WordTooShort,
}

/// A non-empty sequence of unbounded non-negative counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    counts: Vec<BigUint>,
}

impl Word {
    pub fn new(counts: Vec<BigUint>) -> Result<Self, LexError> {
        if counts.is_empty() {
            return Err(LexError::EmptyWord);
        }
        Ok(Self { counts })
    }

    pub fn from_u64s(counts: &[u64]) -> Result<Self, LexError> {
        Self::new(counts.iter().copied().map(BigUint::from).collect())
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl FromStr for Word {
    type Err = LexError;

    /// Comma-separated counts, e.g. `"13,11,9"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Err(LexError::EmptyWord);
        }
        let counts = s
            .split(',')
            .map(|part| {
                let part = part.trim();
                let negative = part
                    .strip_prefix('-')
                    .is_some_and(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()));
                if negative {
                    return Err(LexError::NegativeCount(part.to_string()));
                }
                part.parse::<BigUint>()
                    .map_err(|_| LexError::InvalidCount(part.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(counts)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Encodes `word` with ① as the positional base.
pub fn encode(word: &Word) -> GrossNumber {
    let top = word.len() - 1;
    GrossNumber::canonicalize(word.counts.iter().enumerate().map(|(i, c)| {
        (
            Rational::from_integer(BigInt::from(c.clone())),
            Rational::from_integer(BigInt::from(top - i)),
        )
    }))
}

/// Plain lexicographic comparison: the first differing position decides.
pub fn lex_compare(a: &Word, b: &Word) -> Result<Ordering, LexError> {
    if a.len() != b.len() {
        return Err(LexError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(a.counts
        .iter()
        .zip(&b.counts)
        .map(|(x, y)| x.cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal))
}

/// The ordinary positional value of `word` in `base`.
pub fn encode_finite_base(word: &Word, base: &BigUint) -> Result<BigUint, LexError> {
    if *base < BigUint::from(2u32) {
        return Err(LexError::InvalidBase);
    }
    Ok(word
        .counts
        .iter()
        .fold(BigUint::zero(), |acc, c| acc * base + c))
}

/// A pair `(u, v)` with `u` lexicographically greater than `v` whose
/// base-`base` values are nevertheless ordered the other way.
///
/// `u = (2, 0, …, 0)` and `v = (1, base + 1, 0, …, 0)`, so that
/// `2β^{w-1} < β^{w-1} + (β + 1)β^{w-2}`.
pub fn finite_base_counterexample(base: &BigUint, length: usize) -> Result<(Word, Word), LexError> {
    if *base < BigUint::from(2u32) {
        return Err(LexError::InvalidBase);
    }
    if length < 2 {
        return Err(LexError::WordTooShort);
    }
    let mut u = vec![BigUint::zero(); length];
    u[0] = BigUint::from(2u32);
    let mut v = vec![BigUint::zero(); length];
    v[0] = BigUint::one();
    v[1] = base + 1u32;
    Ok((Word { counts: u }, Word { counts: v }))
}
