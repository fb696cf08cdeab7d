//! Exact arithmetic with grossone numbers and lexicographic medal ranking.
//!
//! A [`GrossNumber`] is a finite sum `c_m①^{p_m} + … + c_k①^{p_k}` with
//! rational grossdigits and grosspowers, where ① is an infinite unit larger
//! than every finite number. Encoding a count word with ① as the positional
//! base turns lexicographic comparison into ordinary numeric comparison,
//! which is how [`rank_r1`] computes the IOC medal table order.

pub mod expr;
pub mod lex;
pub mod medals;
pub mod number;
pub mod text;

pub use expr::{evaluate, EvalError};
pub use lex::{encode, encode_finite_base, finite_base_counterexample, lex_compare, LexError, Word};
pub use medals::{
    rank_per_capita, rank_per_gdp, rank_r1, rank_total, rank_weighted, CountryMedals, IocCode,
    RankError, RankedRow, RankedTable, Score, WeightSystem,
};
pub use number::{
    ArithmeticError, GrossNumber, NumberClass, Rational, Term, DEFAULT_MAX_QUOTIENT_TERMS,
};
pub use text::{ParseError, Style};
