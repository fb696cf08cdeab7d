//! Medal-table ranks.
//!
//! * R1: lexicographic gold/silver/bronze, scored as a grossone number.
//! * R2: total medals.
//! * R3 and variants: weighted medal points (3:2:1 by default).
//! * R4: medals per 10⁷ people.
//! * R5: medals per $100 billion of GDP.
//!
//! All scores are exact. Rank numbers follow competition ranking: rows with
//! identical scores share a number, and the next number counts every
//! strictly better row.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::lex::{encode, Word};
use crate::number::{GrossNumber, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RankError {
    #[error("medal table is empty")]
    EmptyTable,
    #[error("country code {0} appears more than once")]
    DuplicateCode(String),
    #[error("invalid IOC code {0:?}: expected three uppercase letters")]
    InvalidCode(String),
    #[error("all medal weights are zero")]
    AllZeroWeights,
    #[error("invalid weight system {0:?}")]
    InvalidWeights(String),
    #[error("{0}: population is missing")]
    MissingPopulation(String),
    #[error("{0}: GDP is missing")]
    MissingGdp(String),
    #[error("{0}: population must be positive")]
    InvalidPopulation(String),
    #[error("{0}: GDP must be positive")]
    InvalidGdp(String),
}

/// Three-letter uppercase IOC country code.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IocCode(String);

impl IocCode {
    pub fn new(code: &str) -> Result<Self, RankError> {
        if code.len() == 3 && code.bytes().all(|b| b.is_ascii_uppercase()) {
            Ok(Self(code.to_string()))
        } else {
            Err(RankError::InvalidCode(code.to_string()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for IocCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountryMedals {
    pub code: IocCode,
    pub name: String,
    pub gold: u64,
    pub silver: u64,
    pub bronze: u64,
    /// People.
    pub population: Option<u64>,
    /// US$ billions.
    pub gdp: Option<Rational>,
}

impl CountryMedals {
    pub fn new(code: &str, name: &str, gold: u64, silver: u64, bronze: u64) -> Result<Self, RankError> {
        Ok(Self {
            code: IocCode::new(code)?,
            name: name.to_string(),
            gold,
            silver,
            bronze,
            population: None,
            gdp: None,
        })
    }

    pub fn with_population(mut self, population: u64) -> Result<Self, RankError> {
        if population == 0 {
            return Err(RankError::InvalidPopulation(self.code.0));
        }
        self.population = Some(population);
        Ok(self)
    }

    pub fn with_gdp(mut self, gdp_billions: Rational) -> Result<Self, RankError> {
        if !gdp_billions.is_positive() {
            return Err(RankError::InvalidGdp(self.code.0));
        }
        self.gdp = Some(gdp_billions);
        Ok(self)
    }

    pub fn word(&self) -> Word {
        Word::from_u64s(&[self.gold, self.silver, self.bronze]).expect("three counts")
    }

    pub fn total(&self) -> Rational {
        int(self.gold) + int(self.silver) + int(self.bronze)
    }
}

fn int(n: u64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Non-negative medal weights, not all zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    gold: Rational,
    silver: Rational,
    bronze: Rational,
}

impl WeightSystem {
    pub fn new(gold: Rational, silver: Rational, bronze: Rational) -> Result<Self, RankError> {
        if [&gold, &silver, &bronze].iter().any(|w| w.is_negative()) {
            return Err(RankError::InvalidWeights(format!("{gold}:{silver}:{bronze}")));
        }
        if gold.is_zero() && silver.is_zero() && bronze.is_zero() {
            return Err(RankError::AllZeroWeights);
        }
        Ok(Self { gold, silver, bronze })
    }

    pub fn from_points(gold: u64, silver: u64, bronze: u64) -> Result<Self, RankError> {
        Self::new(int(gold), int(silver), int(bronze))
    }

    /// The 3:2:1 system used for R3.
    pub fn fibonacci() -> Self {
        Self::from_points(3, 2, 1).expect("valid weights")
    }

    /// Weight systems that have been used or proposed for medal tables.
    pub fn named() -> Vec<(&'static str, WeightSystem)> {
        [
            ("3:2:1", (3, 2, 1)),
            ("4:2:1", (4, 2, 1)),
            ("5:3:1", (5, 3, 1)),
            ("5:3:2", (5, 3, 2)),
            ("6:2:1", (6, 2, 1)),
            ("10:5:1", (10, 5, 1)),
        ]
        .into_iter()
        .map(|(name, (g, s, b))| (name, Self::from_points(g, s, b).expect("valid weights")))
        .collect()
    }

    pub fn gold(&self) -> &Rational {
        &self.gold
    }

    pub fn silver(&self) -> &Rational {
        &self.silver
    }

    pub fn bronze(&self) -> &Rational {
        &self.bronze
    }

    pub fn score(&self, c: &CountryMedals) -> Rational {
        &self.gold * int(c.gold) + &self.silver * int(c.silver) + &self.bronze * int(c.bronze)
    }
}

impl FromStr for WeightSystem {
    type Err = RankError;

    /// `"g:s:b"`, each a non-negative integer or fraction.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RankError::InvalidWeights(s.to_string());
        let parts = s
            .split(':')
            .map(|p| p.trim().parse::<Rational>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        match <[Rational; 3]>::try_from(parts) {
            Ok([g, sv, b]) => Self::new(g, sv, b),
            Err(_) => Err(bad()),
        }
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.gold, self.silver, self.bronze)
    }
}

/// A row's score under one rank method.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Score {
    /// R1 grossone encoding.
    Lexicographic(GrossNumber),
    /// R2/R3 medal points, shown exactly.
    Points(Rational),
    /// R4/R5 ratios, shown to one decimal.
    Ratio(Rational),
}

impl Score {
    pub fn as_gross(&self) -> GrossNumber {
        match self {
            Score::Lexicographic(g) => g.clone(),
            Score::Points(r) | Score::Ratio(r) => GrossNumber::from_rational(r.clone()),
        }
    }

    /// Human-facing value. Rounding here never feeds back into ordering.
    pub fn display(&self) -> String {
        match self {
            Score::Lexicographic(g) => g.to_string(),
            Score::Points(r) => r.to_string(),
            Score::Ratio(r) => round_half_up(r, 1),
        }
    }

    /// Exact value in the grossone ascii syntax.
    pub fn exact(&self) -> String {
        self.as_gross().to_string()
    }
}

impl Ord for Score {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Score::Lexicographic(a), Score::Lexicographic(b)) => a.cmp(b),
            (Score::Points(a), Score::Points(b)) | (Score::Ratio(a), Score::Ratio(b)) => a.cmp(b),
            _ => self.as_gross().cmp(&other.as_gross()),
        }
    }
}

impl PartialOrd for Score {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Decimal rendering of `value` rounded half away from zero.
pub fn round_half_up(value: &Rational, decimals: u32) -> String {
    let scale = BigInt::from(10u32).pow(decimals);
    let scaled = value.abs() * Rational::from_integer(scale.clone());
    let rounded = (scaled + Rational::new(1.into(), 2.into())).floor().to_integer();
    let (whole, frac) = rounded.div_rem(&scale);
    let sign = if value.is_negative() && !rounded.is_zero() { "-" } else { "" };
    if decimals == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{frac:0>width$}", width = decimals as usize)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedRow {
    pub rank: usize,
    pub country: CountryMedals,
    pub score: Score,
}

/// Countries ordered best first, with competition rank numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedTable {
    rows: Vec<RankedRow>,
}

impl RankedTable {
    pub fn rows(&self) -> &[RankedRow] {
        &self.rows
    }

    pub fn codes(&self) -> Vec<&str> {
        self.rows.iter().map(|r| r.country.code.as_str()).collect()
    }

    pub fn row(&self, code: &str) -> Option<&RankedRow> {
        self.rows.iter().find(|r| r.country.code.as_str() == code)
    }

    /// Maximal runs of rows sharing a rank number.
    pub fn tie_groups(&self) -> Vec<&[RankedRow]> {
        self.rows.chunk_by(|a, b| a.rank == b.rank).collect()
    }
}

#[derive(Clone, Copy)]
enum TieRule {
    /// Equal scores are listed by IOC code.
    Alphabetical,
    /// Equal scores are listed by gold, silver, bronze, then IOC code.
    MedalsThenCode,
}

fn rank_by<F>(table: &[CountryMedals], tie: TieRule, score: F) -> Result<RankedTable, RankError>
where
    F: Fn(&CountryMedals) -> Result<Score, RankError>,
{
    if table.is_empty() {
        return Err(RankError::EmptyTable);
    }
    let mut seen = HashSet::new();
    for c in table {
        if !seen.insert(&c.code) {
            return Err(RankError::DuplicateCode(c.code.0.clone()));
        }
    }
    let mut scored = table
        .iter()
        .map(|c| Ok((score(c)?, c)))
        .collect::<Result<Vec<_>, RankError>>()?;
    scored.sort_by(|(sa, a), (sb, b)| {
        sb.cmp(sa).then_with(|| match tie {
            TieRule::Alphabetical => Ordering::Equal,
            TieRule::MedalsThenCode => (b.gold, b.silver, b.bronze).cmp(&(a.gold, a.silver, a.bronze)),
        })
        .then_with(|| a.code.cmp(&b.code))
    });

    let mut rows: Vec<RankedRow> = Vec::with_capacity(scored.len());
    for (i, (score, country)) in scored.into_iter().enumerate() {
        let rank = match rows.last() {
            Some(prev) if prev.score == score => prev.rank,
            _ => i + 1,
        };
        rows.push(RankedRow {
            rank,
            country: country.clone(),
            score,
        });
    }
    Ok(RankedTable { rows })
}

/// R1: lexicographic rank via the grossone encoding of (gold, silver, bronze).
pub fn rank_r1(table: &[CountryMedals]) -> Result<RankedTable, RankError> {
    rank_by(table, TieRule::Alphabetical, |c| Ok(Score::Lexicographic(encode(&c.word()))))
}

/// R2: total medal count.
pub fn rank_total(table: &[CountryMedals]) -> Result<RankedTable, RankError> {
    rank_by(table, TieRule::MedalsThenCode, |c| Ok(Score::Points(c.total())))
}

/// R3 and other weighted point systems.
pub fn rank_weighted(table: &[CountryMedals], weights: &WeightSystem) -> Result<RankedTable, RankError> {
    rank_by(table, TieRule::MedalsThenCode, |c| Ok(Score::Points(weights.score(c))))
}

/// R4: medals per 10⁷ people.
pub fn rank_per_capita(table: &[CountryMedals]) -> Result<RankedTable, RankError> {
    let per = int(10_000_000);
    rank_by(table, TieRule::MedalsThenCode, |c| {
        let population = c
            .population
            .ok_or_else(|| RankError::MissingPopulation(c.code.0.clone()))?;
        Ok(Score::Ratio(c.total() * &per / int(population)))
    })
}

/// R5: medals per $100 billion of GDP.
pub fn rank_per_gdp(table: &[CountryMedals]) -> Result<RankedTable, RankError> {
    let per = int(100);
    rank_by(table, TieRule::MedalsThenCode, |c| {
        let gdp = c
            .gdp
            .as_ref()
            .ok_or_else(|| RankError::MissingGdp(c.code.0.clone()))?;
        Ok(Score::Ratio(c.total() * &per / gdp))
    })
}
