//! Table, CSV and JSON rendering of ranked tables.

use std::str::FromStr;

use grossrank_core::{RankedTable, Score, Style};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format {s:?} (expected table, csv or json)")),
        }
    }
}

/// One output row, shared by the CSV and JSON encodings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRow {
    pub rank: usize,
    pub code: String,
    pub name: String,
    pub gold: u64,
    pub silver: u64,
    pub bronze: u64,
    pub score_display: String,
    /// Exact score in grossone ascii syntax.
    pub score_exact: String,
}

pub fn output_rows(table: &RankedTable) -> Vec<OutputRow> {
    table
        .rows()
        .iter()
        .map(|r| OutputRow {
            rank: r.rank,
            code: r.country.code.to_string(),
            name: r.country.name.clone(),
            gold: r.country.gold,
            silver: r.country.silver,
            bronze: r.country.bronze,
            score_display: r.score.display(),
            score_exact: r.score.exact(),
        })
        .collect()
}

/// `record_column` adds the paper-style grossone record for R1 scores.
pub fn render(table: &RankedTable, format: Format, record_column: bool) -> String {
    match format {
        Format::Table => render_table(table, record_column),
        Format::Csv => render_csv(&output_rows(table)),
        Format::Json => render_json(&output_rows(table)),
    }
}

pub fn render_json(rows: &[OutputRow]) -> String {
    let mut out = serde_json::to_string_pretty(rows).expect("rows serialize");
    out.push('\n');
    out
}

pub fn render_csv(rows: &[OutputRow]) -> String {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    for row in rows {
        wtr.serialize(row).expect("in-memory csv write");
    }
    String::from_utf8(wtr.into_inner().expect("in-memory csv flush")).expect("utf-8 output")
}

fn render_table(table: &RankedTable, record_column: bool) -> String {
    let mut header = vec!["Rank", "Code", "Name", "Gold", "Silver", "Bronze", "Score"];
    let with_record = record_column
        && table
            .rows()
            .iter()
            .all(|r| matches!(r.score, Score::Lexicographic(_)));
    if with_record {
        header.push("Record");
    }
    let cells: Vec<Vec<String>> = table
        .rows()
        .iter()
        .map(|r| {
            let mut row = vec![
                r.rank.to_string(),
                r.country.code.to_string(),
                r.country.name.clone(),
                r.country.gold.to_string(),
                r.country.silver.to_string(),
                r.country.bronze.to_string(),
                r.score.display(),
            ];
            if with_record {
                row.push(r.score.as_gross().format(Style::Paper));
            }
            row
        })
        .collect();

    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in &cells {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    // Text columns are left-aligned, counts and scores right-aligned.
    let left = |i: usize| i == 1 || i == 2 || i == 7;
    let line = |row: &[String]| {
        let parts: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let pad = widths[i] - c.chars().count();
                if left(i) {
                    format!("{c}{}", " ".repeat(pad))
                } else {
                    format!("{}{c}", " ".repeat(pad))
                }
            })
            .collect();
        parts.join("  ").trim_end().to_string()
    };

    let mut out = String::new();
    let header: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    out.push_str(&line(&header));
    out.push('\n');
    for row in &cells {
        out.push_str(&line(row));
        out.push('\n');
    }
    out
}
