//! Medal-table CSV ingestion.
//!
//! Header (required): `code,name,gold,silver,bronze[,population,gdp_usd_billion]`.
//! Lines starting with `#` are comments. The two trailing columns may be
//! left empty or omitted per row.

use std::fs::File;
use std::io::Read;
use std::path::Path;

use grossrank_core::{CountryMedals, RankError, Rational};
use num_bigint::BigInt;
use serde::Deserialize;
use thiserror::Error;

const REQUIRED: [&str; 5] = ["code", "name", "gold", "silver", "bronze"];
const OPTIONAL: [&str; 2] = ["population", "gdp_usd_billion"];

#[derive(Debug, Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("invalid header: expected {expected}, found {found}")]
    Header { expected: String, found: String },
    #[error("line {line}: {message}")]
    Record { line: u64, message: String },
    #[error("line {line}: {source}")]
    Row { line: u64, source: RankError },
    #[error("no data rows")]
    NoDataRows,
}

#[derive(Debug, Deserialize)]
struct Record {
    code: String,
    name: String,
    gold: u64,
    silver: u64,
    bronze: u64,
    #[serde(default)]
    population: Option<u64>,
    #[serde(default)]
    gdp_usd_billion: Option<String>,
}

pub fn load_table(path: &Path) -> Result<Vec<CountryMedals>, InputError> {
    let file = File::open(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })?;
    read_table(file)
}

pub fn read_table<R: Read>(reader: R) -> Result<Vec<CountryMedals>, InputError> {
    let mut rdr = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);

    let headers = rdr
        .headers()
        .map_err(|e| record_error(&e))?
        .clone();
    check_header(&headers)?;

    let mut table = Vec::new();
    for result in rdr.records() {
        let raw = result.map_err(|e| record_error(&e))?;
        let line = raw.position().map(|p| p.line()).unwrap_or(0);
        let record: Record = raw
            .deserialize(Some(&headers))
            .map_err(|e| match record_error(&e) {
                InputError::Record { message, .. } => InputError::Record { line, message },
                other => other,
            })?;
        table.push(to_country(record).map_err(|source| InputError::Row { line, source })?);
    }
    if table.is_empty() {
        return Err(InputError::NoDataRows);
    }
    Ok(table)
}

fn record_error(e: &csv::Error) -> InputError {
    let line = e.position().map(|p| p.line()).unwrap_or(0);
    let message = match e.kind() {
        csv::ErrorKind::Deserialize { err, .. } => deserialize_message(err),
        _ => e.to_string(),
    };
    InputError::Record { line, message }
}

fn deserialize_message(err: &csv::DeserializeError) -> String {
    match err.field() {
        Some(i) => format!("field {}: {}", i + 1, err.kind()),
        None => err.kind().to_string(),
    }
}

fn check_header(headers: &csv::StringRecord) -> Result<(), InputError> {
    let found: Vec<&str> = headers.iter().collect();
    let ok = found.len() >= REQUIRED.len()
        && found.len() <= REQUIRED.len() + OPTIONAL.len()
        && found.iter().zip(REQUIRED.iter().chain(&OPTIONAL)).all(|(a, b)| a == b);
    if ok {
        Ok(())
    } else {
        Err(InputError::Header {
            expected: format!("{}[,{}]", REQUIRED.join(","), OPTIONAL.join(",")),
            found: found.join(","),
        })
    }
}

fn to_country(r: Record) -> Result<CountryMedals, RankError> {
    let mut country = CountryMedals::new(&r.code, &r.name, r.gold, r.silver, r.bronze)?;
    if let Some(p) = r.population {
        country = country.with_population(p)?;
    }
    if let Some(text) = r.gdp_usd_billion.filter(|s| !s.is_empty()) {
        let gdp = parse_decimal(&text).ok_or_else(|| RankError::InvalidGdp(r.code.clone()))?;
        country = country.with_gdp(gdp)?;
    }
    Ok(country)
}

/// Exact value of a plain decimal such as `45.2`, or a fraction `a/b`.
pub fn parse_decimal(text: &str) -> Option<Rational> {
    if text.contains('/') {
        return text.parse().ok();
    }
    let (whole, frac) = text.split_once('.').unwrap_or((text, ""));
    let digits_ok = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    let unsigned = whole.strip_prefix('-').unwrap_or(whole);
    if (unsigned.is_empty() && frac.is_empty()) || !digits_ok(unsigned) || !digits_ok(frac) {
        return None;
    }
    let numer: BigInt = format!("{whole}{frac}").parse().ok()?;
    let denom = BigInt::from(10u32).pow(frac.len() as u32);
    Some(Rational::new(numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn decimals() {
        assert_eq!(parse_decimal("45.2"), Some(q(452, 10)));
        assert_eq!(parse_decimal("500"), Some(q(500, 1)));
        assert_eq!(parse_decimal("0.05"), Some(q(1, 20)));
        assert_eq!(parse_decimal(".5"), Some(q(1, 2)));
        assert_eq!(parse_decimal("3/4"), Some(q(3, 4)));
        assert_eq!(parse_decimal("1e3"), None);
        assert_eq!(parse_decimal("."), None);
        assert_eq!(parse_decimal(""), None);
    }

    #[test]
    fn reads_optional_columns() {
        let csv = "code,name,gold,silver,bronze,population,gdp_usd_billion\n\
                   NOR,Norway,11,5,10,5019305,500\n\
                   \"SLO\",\"Slovenia, Republic of\",2,2,4,,45.2\n\
                   LAT,Latvia,0,2,2\n";
        let t = read_table(csv.as_bytes()).unwrap();
        assert_eq!(t.len(), 3);
        assert_eq!(t[0].population, Some(5_019_305));
        assert_eq!(t[1].name, "Slovenia, Republic of");
        assert_eq!(t[1].population, None);
        assert_eq!(t[1].gdp, Some(q(452, 10)));
        assert_eq!(t[2].gdp, None);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            read_table("code,name,gold,silver,bronze\n".as_bytes()),
            Err(InputError::NoDataRows)
        ));
        assert!(matches!(read_table("".as_bytes()), Err(InputError::Header { .. })));
        assert!(matches!(
            read_table("code,name,gold,bronze,silver\nNOR,N,1,2,3\n".as_bytes()),
            Err(InputError::Header { .. })
        ));
        let err = read_table("code,name,gold,silver,bronze\nNOR,N,1,-2,3\n".as_bytes()).unwrap_err();
        assert!(matches!(err, InputError::Record { line: 2, .. }), "{err}");
        let err = read_table("code,name,gold,silver,bronze\nNOR,N,1,2,3\nnor,n,1,2,3\n".as_bytes()).unwrap_err();
        assert!(matches!(err, InputError::Row { line: 3, source: RankError::InvalidCode(_) }), "{err}");
        let err = read_table("code,name,gold,silver,bronze,population\nNOR,N,1,2,3,0\n".as_bytes()).unwrap_err();
        assert!(matches!(err, InputError::Row { source: RankError::InvalidPopulation(_), .. }));
    }
}
