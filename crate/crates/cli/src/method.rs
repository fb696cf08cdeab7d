use std::fmt;
use std::str::FromStr;

use grossrank_core::{
    rank_per_capita, rank_per_gdp, rank_r1, rank_total, rank_weighted, CountryMedals, RankError,
    RankedTable, WeightSystem,
};

/// Which rank to compute.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RankMethod {
    /// Lexicographic gold/silver/bronze (R1).
    R1,
    /// Total medals (R2).
    R2,
    /// 3:2:1 weighted points (R3).
    R3,
    Weighted(WeightSystem),
    /// Medals per 10⁷ people (R4).
    PerCapita,
    /// Medals per $100B of GDP (R5).
    PerGdp,
}

impl RankMethod {
    pub fn apply(&self, table: &[CountryMedals]) -> Result<RankedTable, RankError> {
        match self {
            RankMethod::R1 => rank_r1(table),
            RankMethod::R2 => rank_total(table),
            RankMethod::R3 => rank_weighted(table, &WeightSystem::fibonacci()),
            RankMethod::Weighted(w) => rank_weighted(table, w),
            RankMethod::PerCapita => rank_per_capita(table),
            RankMethod::PerGdp => rank_per_gdp(table),
        }
    }
}

impl FromStr for RankMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "r1" => Ok(RankMethod::R1),
            "r2" => Ok(RankMethod::R2),
            "r3" => Ok(RankMethod::R3),
            "per-capita" => Ok(RankMethod::PerCapita),
            "per-gdp" => Ok(RankMethod::PerGdp),
            _ => match s.strip_prefix("weighted:") {
                Some(w) => w.parse().map(RankMethod::Weighted).map_err(|e| e.to_string()),
                None => Err(format!(
                    "unknown method {s:?} (expected r1, r2, r3, weighted:G:S:B, per-capita or per-gdp)"
                )),
            },
        }
    }
}

impl fmt::Display for RankMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankMethod::R1 => f.write_str("r1"),
            RankMethod::R2 => f.write_str("r2"),
            RankMethod::R3 => f.write_str("r3"),
            RankMethod::Weighted(w) => write!(f, "weighted:{w}"),
            RankMethod::PerCapita => f.write_str("per-capita"),
            RankMethod::PerGdp => f.write_str("per-gdp"),
        }
    }
}
