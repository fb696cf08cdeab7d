//! Infix expression evaluator over grossone literals.
//!
//! Literals follow the number grammar (`11G`, `1/2G^-1`, `G^2`); on top of
//! that the evaluator accepts `+ - * /`, unary signs, parentheses, and
//! implicit multiplication before a parenthesis (`G(G-11)`). A `/` directly
//! followed by digits is read as part of a fractional literal, so `1/2G` is
//! half of ①; write `1/(2G)` to divide by `2G`.

use thiserror::Error;

use crate::number::{ArithmeticError, GrossNumber};
use crate::text::{Cursor, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Arithmetic(#[from] ArithmeticError),
}

/// Evaluates `text`, dividing with a budget of `max_terms` quotient terms.
pub fn evaluate(text: &str, max_terms: usize) -> Result<GrossNumber, EvalError> {
    let mut parser = Parser {
        cur: Cursor::new(text, false),
        max_terms,
    };
    let value = parser.sum()?;
    if !parser.cur.at_end() {
        return Err(parser.cur.error("operator or end of input").into());
    }
    Ok(value)
}

struct Parser<'a> {
    cur: Cursor<'a>,
    max_terms: usize,
}

impl Parser<'_> {
    fn sum(&mut self) -> Result<GrossNumber, EvalError> {
        let mut acc = self.product()?;
        loop {
            if self.cur.eat(b'+') {
                acc = acc + self.product()?;
            } else if self.cur.eat(b'-') {
                acc = acc - self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<GrossNumber, EvalError> {
        let mut acc = self.unary()?;
        loop {
            if self.cur.eat(b'*') {
                acc = acc * self.unary()?;
            } else if self.cur.eat(b'/') {
                let divisor = self.unary()?;
                acc = acc.div_exact(&divisor, self.max_terms)?;
            } else if self.cur.peek() == Some(b'(') {
                acc = acc * self.primary()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<GrossNumber, EvalError> {
        if self.cur.eat(b'-') {
            Ok(-self.unary()?)
        } else if self.cur.eat(b'+') {
            self.unary()
        } else {
            self.primary()
        }
    }

    fn primary(&mut self) -> Result<GrossNumber, EvalError> {
        if self.cur.eat(b'(') {
            let inner = self.sum()?;
            if !self.cur.eat(b')') {
                return Err(self.cur.error("')'").into());
            }
            return Ok(inner);
        }
        let (digit, power) = self.cur.literal()?;
        Ok(GrossNumber::monomial(digit, power))
    }
}
