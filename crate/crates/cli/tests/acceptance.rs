//! Acceptance suite: one pass/fail line per criterion.
//!
//! Run with `cargo test -p grossrank-cli --test acceptance -- --nocapture`
//! (the output is printed either way; the target has its own harness).

use std::cmp::Ordering;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use grossrank_cli::render::OutputRow;
use grossrank_core::{
    encode, encode_finite_base, finite_base_counterexample, lex_compare, GrossNumber, Rational,
    Word,
};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn rank_json(file: &str, method: &str) -> Result<Vec<OutputRow>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_grossrank"))
        .args(["rank", "--input", &fixture(file), "--method", method, "--format", "json"])
        .output()
        .map_err(|e| e.to_string())?;
    if out.status.code() != Some(0) {
        return Err(String::from_utf8_lossy(&out.stderr).into_owned());
    }
    serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())
}

fn top_codes(rows: &[OutputRow], n: usize) -> Vec<&str> {
    rows.iter().take(n).map(|r| r.code.as_str()).collect()
}

fn table1_r1() -> Check {
    let rows = rank_json("sochi2014.csv", "r1")?;
    let expected = ["RUS", "NOR", "CAN", "USA", "NED", "GER", "SUI", "BLR", "AUT", "FRA"];
    ensure(top_codes(&rows, 10) == expected, || format!("order {:?}", top_codes(&rows, 10)))?;
    let ranks: Vec<usize> = rows.iter().take(10).map(|r| r.rank).collect();
    ensure(ranks == (1..=10).collect::<Vec<_>>(), || format!("ranks {ranks:?}"))?;
    Ok("order and ranks 1-10 match".into())
}

fn check_scores(rows: &[OutputRow], expected: &[(&str, &str)], label: &str) -> Result<(), String> {
    let codes: Vec<&str> = expected.iter().map(|(c, _)| *c).collect();
    ensure(top_codes(rows, 10) == codes, || format!("{label} order {:?}", top_codes(rows, 10)))?;
    for (row, (code, score)) in rows.iter().zip(expected) {
        ensure(row.score_display == *score && row.score_exact == *score, || {
            format!("{label} {code}: got {} / {}", row.score_display, row.score_exact)
        })?;
    }
    Ok(())
}

fn table2_r2_r3() -> Check {
    let r2 = rank_json("sochi2014.csv", "r2")?;
    check_scores(
        &r2,
        &[
            ("RUS", "33"), ("USA", "28"), ("NOR", "26"), ("CAN", "25"), ("NED", "24"),
            ("GER", "19"), ("AUT", "17"), ("FRA", "15"), ("SWE", "15"), ("SUI", "11"),
        ],
        "R2",
    )?;
    let r3 = rank_json("sochi2014.csv", "r3")?;
    check_scores(
        &r3,
        &[
            ("RUS", "70"), ("CAN", "55"), ("NOR", "53"), ("USA", "53"), ("NED", "47"),
            ("GER", "41"), ("AUT", "33"), ("FRA", "27"), ("SUI", "26"), ("SWE", "26"),
        ],
        "R3",
    )?;
    Ok("R2 and R3 scores exact; NOR above USA, SUI above SWE, FRA above SWE".into())
}

fn check_ratio(rows: &[OutputRow], expected: &[(&str, f64)], label: &str) -> Result<(), String> {
    let codes: Vec<&str> = expected.iter().map(|(c, _)| *c).collect();
    ensure(top_codes(rows, 10) == codes, || format!("{label} order {:?}", top_codes(rows, 10)))?;
    for (row, (code, value)) in rows.iter().zip(expected) {
        let shown: f64 = row.score_display.parse().map_err(|_| format!("{label} {code}: bad display"))?;
        ensure((shown - value).abs() <= 0.1 + 1e-9, || {
            format!("{label} {code}: {shown} vs {value}")
        })?;
    }
    Ok(())
}

fn table3_r4_r5() -> Check {
    let r4 = rank_json("sochi2014_ext.csv", "per-capita")?;
    check_ratio(
        &r4,
        &[
            ("NOR", 51.8), ("SLO", 38.9), ("AUT", 20.1), ("LAT", 19.8), ("SWE", 15.8),
            ("NED", 14.3), ("SUI", 13.8), ("FIN", 9.2), ("CZE", 7.6), ("CAN", 7.2),
        ],
        "R4",
    )?;
    let r5 = rank_json("sochi2014_ext.csv", "per-gdp")?;
    check_ratio(
        &r5,
        &[
            ("SLO", 17.7), ("LAT", 14.1), ("BLR", 9.5), ("NOR", 5.2), ("AUT", 4.3),
            ("CZE", 4.1), ("NED", 3.1), ("SWE", 2.9), ("FIN", 2.0), ("SUI", 1.7),
        ],
        "R5",
    )?;
    Ok(format!(
        "R4 led by NOR {}, R5 led by SLO {}",
        r4[0].score_display, r5[0].score_display
    ))
}

fn counterexamples() -> Check {
    let ten = BigUint::from(10u32);
    let a = Word::from_u64s(&[2, 0, 0]).unwrap();
    let b = Word::from_u64s(&[1, 11, 0]).unwrap();
    let (va, vb) = (
        encode_finite_base(&a, &ten).unwrap(),
        encode_finite_base(&b, &ten).unwrap(),
    );
    ensure(va == BigUint::from(200u32) && vb == BigUint::from(210u32), || format!("{va} / {vb}"))?;
    ensure(lex_compare(&a, &b) == Ok(Ordering::Greater), || "lex order".into())?;
    ensure(encode(&a) > encode(&b), || "grossone order".into())?;

    for base in [2u64, 3, 10, 1 << 16, 1_000_000] {
        let base = BigUint::from(base);
        for length in 2..=5 {
            let (u, v) = finite_base_counterexample(&base, length).map_err(|e| e.to_string())?;
            ensure(lex_compare(&u, &v) == Ok(Ordering::Greater), || format!("base {base}: lex"))?;
            ensure(
                encode_finite_base(&u, &base).unwrap() < encode_finite_base(&v, &base).unwrap(),
                || format!("base {base}: finite base did not fail"),
            )?;
            ensure(encode(&u) > encode(&v), || format!("base {base}: grossone"))?;
        }
    }
    Ok("200 < 210 while lex says Greater; bases 2, 3, 10, 2^16, 10^6 all fail".into())
}

fn random_word(rng: &mut ChaCha8Rng, len: usize) -> Vec<u64> {
    (0..len)
        .map(|_| match rng.random_range(0..3) {
            0 => rng.random_range(0..=3),
            1 => rng.random_range(0..=1_000_000_000),
            _ => rng.random_range(0..=1_000_000_000_000_000_000),
        })
        .collect()
}

fn faithfulness() -> Check {
    const PAIRS: usize = 100_000;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut violations = 0;
    let mut equal = 0;
    for _ in 0..PAIRS {
        let len = rng.random_range(1..=8);
        let a = random_word(&mut rng, len);
        let mut b = random_word(&mut rng, len);
        // Share a random prefix so later positions decide often.
        let shared = rng.random_range(0..=len);
        b[..shared].copy_from_slice(&a[..shared]);
        let (a, b) = (Word::from_u64s(&a).unwrap(), Word::from_u64s(&b).unwrap());
        let lex = lex_compare(&a, &b).unwrap();
        if lex == Ordering::Equal {
            equal += 1;
        }
        if encode(&a).cmp(&encode(&b)) != lex {
            violations += 1;
        }
    }
    ensure(violations == 0, || format!("{violations} violations"))?;
    Ok(format!("{PAIRS} pairs, 0 violations ({equal} equal pairs)"))
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let n: i64 = rng.random_range(-1_000_000..=1_000_000);
    let d: i64 = rng.random_range(1..=1_000_000);
    Rational::new(n.into(), d.into())
}

fn random_gross(rng: &mut ChaCha8Rng) -> GrossNumber {
    let terms = rng.random_range(0..=6);
    GrossNumber::canonicalize((0..terms).map(|_| {
        let power = if rng.random_bool(0.75) {
            Rational::from_integer(rng.random_range(-4i64..=4).into())
        } else {
            random_rational(rng)
        };
        (random_rational(rng), power)
    }))
}

fn arithmetic() -> Check {
    let g = GrossNumber::grossone();
    let inv = GrossNumber::monomial(Rational::from_integer(1.into()), Rational::from_integer((-1).into()));
    ensure(&g * &inv == GrossNumber::one() && &inv * &g == GrossNumber::one(), || "①·①⁻¹ ≠ 1".into())?;
    ensure(inv > GrossNumber::zero(), || "①⁻¹ not positive".into())?;

    const VALUES: usize = 10_000;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0002);
    let zero = GrossNumber::zero();
    let one = GrossNumber::one();
    let mut violations = Vec::new();
    for i in 0..VALUES {
        let (a, b, c) = (random_gross(&mut rng), random_gross(&mut rng), random_gross(&mut rng));
        let laws = [
            ("add commutes", &a + &b == &b + &a),
            ("add associates", &(&a + &b) + &c == &a + &(&b + &c)),
            ("mul commutes", &a * &b == &b * &a),
            ("mul associates", &(&a * &b) * &c == &a * &(&b * &c)),
            ("distributes", &a * &(&b + &c) == &(&a * &b) + &(&a * &c)),
            ("zero identity", &a + &zero == a),
            ("one identity", &a * &one == a),
            ("additive inverse", (&a + &(-&a)).is_zero()),
        ];
        violations.extend(laws.iter().filter(|(_, ok)| !ok).map(|(law, _)| format!("#{i}: {law}")));
    }
    ensure(violations.is_empty(), || format!("{} violations, first {}", violations.len(), violations[0]))?;

    const DIVISIONS: usize = 1_000;
    for i in 0..DIVISIONS {
        let q = random_gross(&mut rng);
        let b = loop {
            let b = random_gross(&mut rng);
            if !b.is_zero() {
                break b;
            }
        };
        let a = &q * &b;
        let got = a.div_exact(&b, 64).map_err(|e| format!("#{i}: {e}"))?;
        ensure(&got * &b == a && got == q, || format!("#{i}: multiply-back failed"))?;
    }
    Ok(format!("identities hold; {VALUES} ring-axiom triples and {DIVISIONS} divisions, 0 violations"))
}

fn vancouver_tie() -> Check {
    let rows = rank_json("vancouver2010_tie.csv", "r1")?;
    let pos = |code: &str| rows.iter().position(|r| r.code == code);
    let (chn, swe) = (pos("CHN").ok_or("CHN missing")?, pos("SWE").ok_or("SWE missing")?);
    ensure(rows[chn].rank == 7 && rows[swe].rank == 7, || {
        format!("ranks {} / {}", rows[chn].rank, rows[swe].rank)
    })?;
    ensure(chn + 1 == swe, || "China not listed directly above Sweden".into())?;
    ensure(rows[swe + 1].rank == 9, || format!("next rank {}", rows[swe + 1].rank))?;
    Ok("CHN and SWE share rank 7, CHN listed first, next rank 9".into())
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Check,
}

fn main() {
    let criteria = [
        Criterion { id: 1, name: "Table 1 R1 order", limit: Duration::from_secs(1), run: table1_r1 },
        Criterion { id: 2, name: "Table 2 R2/R3 scores", limit: Duration::from_secs(1), run: table2_r2_r3 },
        Criterion { id: 3, name: "Table 3 R4/R5 values", limit: Duration::from_secs(1), run: table3_r4_r5 },
        Criterion { id: 4, name: "finite-base counterexamples", limit: Duration::from_secs(1), run: counterexamples },
        Criterion { id: 5, name: "encoding faithfulness", limit: Duration::from_secs(30), run: faithfulness },
        Criterion { id: 6, name: "arithmetic identities", limit: Duration::from_secs(30), run: arithmetic },
        Criterion { id: 7, name: "Vancouver tie", limit: Duration::from_secs(1), run: vancouver_tie },
    ];

    let suite = Instant::now();
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.limit => Err(format!("{detail}, but took {elapsed:.2?} > {:?}", c.limit)),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS  criterion {}: {} ({elapsed:.2?}) - {detail}", c.id, c.name),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {}: {} ({elapsed:.2?}) - {why}", c.id, c.name);
            }
        }
    }
    // The two-minute bound covers the whole workspace run; this target can
    // only vouch for its own share.
    let total = suite.elapsed();
    if total < Duration::from_secs(120) {
        println!("PASS  criterion 8: suite time (acceptance target {total:.2?} < 120s; whole workspace timed by `cargo test --workspace`)");
    } else {
        failed += 1;
        println!("FAIL  criterion 8: suite time (acceptance target alone took {total:.2?})");
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
