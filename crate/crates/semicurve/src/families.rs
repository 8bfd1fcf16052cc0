//! Deterministic generators of semigroup test corpora: two-generator
//! families, the family on which the stabilization bound is tight, and
//! seeded random instances.

use crate::error::Error;
use crate::semigroup::{NumericalSemigroup, MAX_GENERATOR};

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Streams every two-generator semigroup `<a1, a2>` with
/// `2 <= a1 < a2 <= max_a2` and `gcd(a1, a2) = 1`, ordered by `a1` and then
/// `a2`. Coprime pairs are automatically minimal systems.
///
/// `a1` already ranges below `a2`, so `max_a1` adds no further restriction;
/// it is kept for call-site symmetry and must be at least 2.
pub fn plane_family(max_a1: u64, max_a2: u64) -> impl Iterator<Item = NumericalSemigroup> {
    debug_assert!(max_a1 >= 2);
    (2..=max_a2.saturating_sub(1)).flat_map(move |a1| {
        (a1 + 1..=max_a2).filter_map(move |a2| {
            if gcd(a1, a2) == 1 {
                Some(NumericalSemigroup::new(&[a1, a2]).expect("coprime pair is valid"))
            } else {
                None
            }
        })
    })
}

/// The semigroup `<a1, 2 a1 + 1, ..., 2 a1 + (a1 - 2)>`, defined for
/// `a1 >= 3`. Its generating system has `a1 - 1` elements and is minimal;
/// its regularity index meets the division bound `q = 2` exactly.
pub fn sharp_family(a1: u64) -> Result<NumericalSemigroup, Error> {
    if a1 < 3 {
        return Err(Error::OutOfRange);
    }
    let mut gens = vec![a1];
    gens.extend((1..=a1 - 2).map(|j| 2 * a1 + j));
    NumericalSemigroup::new(&gens)
}

/// SplitMix64; the whole stream is a pure function of the seed, so corpora
/// are reproducible everywhere. State advances by 0x9E3779B97F4A7C15 and the
/// output finalizer multiplies by 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB
/// with xor-shifts 30/27/31.
struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    fn next(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-enough draw in `lo..=hi` by modulo reduction. The tiny modulo
    /// bias is irrelevant for corpus generation and keeps the sampling
    /// procedure trivial to reproduce.
    fn draw(&mut self, lo: u64, hi: u64) -> u64 {
        lo + self.next() % (hi - lo + 1)
    }
}

/// Deterministic random corpus: repeatedly samples `r` in `[2, max_r]`
/// distinct candidate generators in `[2, max_gen]`, rejects draws whose gcd
/// is not 1, and yields the minimalized semigroup of each surviving draw.
/// The same seed always produces the identical sequence.
pub fn random_semigroups(
    seed: u64,
    count: u64,
    max_r: u64,
    max_gen: u64,
) -> Result<Vec<NumericalSemigroup>, Error> {
    if max_r < 2 || max_gen < 3 {
        return Err(Error::OutOfRange);
    }
    if max_gen > MAX_GENERATOR {
        return Err(Error::Overflow);
    }
    let mut rng = SplitMix64::new(seed);
    let mut out = Vec::with_capacity(count as usize);
    let budget = 200 * count + 1_000;
    let mut attempts = 0u64;
    while (out.len() as u64) < count {
        attempts += 1;
        if attempts > budget {
            return Err(Error::ExhaustedRetries);
        }
        let r = rng.draw(2, max_r);
        let mut values = std::collections::BTreeSet::new();
        let mut draws = 0u64;
        while (values.len() as u64) < r {
            draws += 1;
            if draws > 100 + 20 * r {
                break;
            }
            values.insert(rng.draw(2, max_gen));
        }
        if (values.len() as u64) < r {
            continue;
        }
        let gens: Vec<u64> = values.into_iter().collect();
        if gens.iter().fold(0, |acc, &g| gcd(acc, g)) != 1 {
            continue;
        }
        let s = NumericalSemigroup::normalized(&gens).expect("validated draw");
        debug_assert!(s.gens().count() >= 2);
        out.push(s);
    }
    Ok(out)
}
