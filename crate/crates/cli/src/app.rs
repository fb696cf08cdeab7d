use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use grossrank_core::{
    encode, evaluate, lex_compare, ArithmeticError, EvalError, RankError, Style, Word,
    DEFAULT_MAX_QUOTIENT_TERMS,
};

use crate::input::load_table;
use crate::method::RankMethod;
use crate::render::{render, Format};

pub const EXIT_OK: i32 = 0;
/// Usage, I/O, CSV, and parse errors.
pub const EXIT_INPUT: i32 = 2;
/// A row lacks the population or GDP the method needs.
pub const EXIT_MISSING_DATA: i32 = 3;
/// Division failed: zero divisor or no finite quotient.
pub const EXIT_ARITHMETIC: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "grossrank", version, about = "Exact grossone arithmetic and medal-table ranks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rank the countries of a medal-table CSV.
    Rank {
        #[arg(long)]
        input: PathBuf,
        /// r1 | r2 | r3 | weighted:G:S:B | per-capita | per-gdp
        #[arg(long, default_value = "r1")]
        method: RankMethod,
        /// table | csv | json
        #[arg(long, default_value = "table")]
        format: Format,
        /// Add the grossone record column to r1 tables.
        #[arg(long)]
        record: bool,
    },
    /// Evaluate a grossone expression such as "2G^2 - (G^2 + 11G)".
    Calc {
        #[arg(allow_hyphen_values = true)]
        expression: String,
        /// Quotient term budget for division.
        #[arg(long, default_value_t = DEFAULT_MAX_QUOTIENT_TERMS)]
        max_terms: usize,
    },
    /// Compare two count words lexicographically, e.g. 2,0,0 1,11,0.
    Compare {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            if code == EXIT_OK {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Rank {
            input,
            method,
            format,
            record,
        } => cmd_rank(&input, &method, format, record),
        Command::Calc {
            expression,
            max_terms,
        } => cmd_calc(&expression, max_terms),
        Command::Compare { a, b } => cmd_compare(&a, &b),
    };
    match result {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err((code, message)) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

type CmdResult = Result<String, (i32, String)>;

fn cmd_rank(input: &std::path::Path, method: &RankMethod, format: Format, record: bool) -> CmdResult {
    let table = load_table(input).map_err(|e| (EXIT_INPUT, e.to_string()))?;
    let ranked = method.apply(&table).map_err(|e| {
        let code = match e {
            RankError::MissingPopulation(_) | RankError::MissingGdp(_) => EXIT_MISSING_DATA,
            _ => EXIT_INPUT,
        };
        (code, e.to_string())
    })?;
    Ok(render(&ranked, format, record))
}

fn cmd_calc(expression: &str, max_terms: usize) -> CmdResult {
    match evaluate(expression, max_terms) {
        Ok(value) => Ok(format!(
            "ascii: {}\npaper: {}\nclass: {}\n",
            value.format(Style::Ascii),
            value.format(Style::Paper),
            value.classify()
        )),
        Err(EvalError::Parse(e)) => Err((EXIT_INPUT, format!("{e}\n  {expression}\n  {}^", " ".repeat(e.position)))),
        Err(EvalError::Arithmetic(e @ ArithmeticError::NonTerminatingQuotient { .. })) => Err((
            EXIT_ARITHMETIC,
            format!("{e}; the exact quotient has no finite grossone record"),
        )),
        Err(EvalError::Arithmetic(e)) => Err((EXIT_ARITHMETIC, e.to_string())),
    }
}

fn cmd_compare(a: &str, b: &str) -> CmdResult {
    let parse = |s: &str| s.parse::<Word>().map_err(|e| (EXIT_INPUT, format!("{s:?}: {e}")));
    let (a, b) = (parse(a)?, parse(b)?);
    let verdict = lex_compare(&a, &b).map_err(|e| (EXIT_INPUT, e.to_string()))?;
    Ok(format!(
        "{verdict:?}\na: {a} = {}\nb: {b} = {}\n",
        encode(&a),
        encode(&b)
    ))
}
