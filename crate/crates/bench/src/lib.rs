//! Seeded input generators shared by the benchmarks.

use grossrank_core::{CountryMedals, GrossNumber, Rational, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A number with `terms` integer-power terms and digits up to 10⁶ in size.
pub fn gross(rng: &mut ChaCha8Rng, terms: usize) -> GrossNumber {
    GrossNumber::canonicalize((0..terms).map(|_| {
        let n: i64 = rng.random_range(-1_000_000..=1_000_000);
        let d: i64 = rng.random_range(1..=1_000_000);
        let p: i64 = rng.random_range(-8..=8);
        (Rational::new(n.into(), d.into()), Rational::from_integer(p.into()))
    }))
}

pub fn word(rng: &mut ChaCha8Rng, len: usize) -> Word {
    let counts: Vec<u64> = (0..len).map(|_| rng.random_range(0..=1_000_000_000_000)).collect();
    Word::from_u64s(&counts).expect("non-empty")
}

pub fn medal_table(rng: &mut ChaCha8Rng, countries: usize) -> Vec<CountryMedals> {
    (0..countries)
        .map(|i| {
            let b = |k: usize| (b'A' + (k % 26) as u8) as char;
            let code: String = [b(i / 676), b(i / 26), b(i)].iter().collect();
            CountryMedals::new(
                &code,
                &code,
                rng.random_range(0..15),
                rng.random_range(0..15),
                rng.random_range(0..15),
            )
            .expect("valid code")
            .with_population(rng.random_range(100_000..1_000_000_000))
            .expect("positive")
        })
        .collect()
}
