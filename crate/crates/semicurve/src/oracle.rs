//! Brute-force reference implementations used to certify the fast paths.
//!
//! Everything here works on raw generator lists and enumerates exponent
//! vectors directly; none of it touches the Apéry or order-table code it is
//! meant to check. The price is exponential blow-up, so every entry point
//! enforces hard scale caps — on magnitudes and on the estimated size of the
//! enumeration — and refuses to run past them.

use crate::error::Error;
use std::collections::BTreeSet;

/// Largest generator the brute-force paths accept.
pub const MAX_BRUTE_GENERATOR: u64 = 1_000;

/// Largest target value the brute-force paths accept.
pub const MAX_BRUTE_TARGET: u64 = 100_000;

/// Upper bound on the estimated number of exponent vectors an enumeration
/// may visit.
pub const MAX_BRUTE_NODES: f64 = 2e8;

fn checked_gens(gens: &[u64]) -> Result<Vec<u64>, Error> {
    assert!(
        !gens.is_empty() && gens.iter().all(|&g| g >= 2),
        "oracle requires generators >= 2"
    );
    if gens.iter().any(|&g| g > MAX_BRUTE_GENERATOR) {
        return Err(Error::ScaleExceeded);
    }
    let mut sorted = gens.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    Ok(sorted)
}

/// Estimated number of exponent vectors with value at most `hi`: the lattice
/// count under the simplex, `prod (hi / g_i + 1) / r!`. Rejects enumerations
/// whose estimate exceeds [`MAX_BRUTE_NODES`].
fn checked_enumeration_size(gens: &[u64], hi: u64) -> Result<(), Error> {
    let mut estimate = 1.0f64;
    for (i, &g) in gens.iter().enumerate() {
        estimate *= (hi as f64 / g as f64 + 1.0) / (i as f64 + 1.0);
    }
    if estimate > MAX_BRUTE_NODES {
        return Err(Error::ScaleExceeded);
    }
    Ok(())
}

/// True iff `x` is a nonnegative integer combination of `gens`, by
/// depth-first search over exponent vectors (largest generator outermost,
/// divisibility by the smallest as the base case).
pub fn brute_membership(gens: &[u64], x: u64) -> Result<bool, Error> {
    let gens = checked_gens(gens)?;
    if x > MAX_BRUTE_TARGET {
        return Err(Error::ScaleExceeded);
    }
    checked_enumeration_size(&gens, x)?;
    Ok(member_rec(&gens, x))
}

fn member_rec(gens: &[u64], x: u64) -> bool {
    if x == 0 {
        return true;
    }
    match gens {
        [] => false,
        [g] => x.is_multiple_of(*g),
        [rest @ .., g] => {
            let mut rem = x;
            loop {
                if member_rec(rest, rem) {
                    return true;
                }
                if rem < *g {
                    return false;
                }
                rem -= g;
            }
        }
    }
}

/// Maximum of `|alpha|` over all exponent vectors with `gens . alpha == s`,
/// or `None` when `s` has no representation at all.
pub fn brute_order(gens: &[u64], s: u64) -> Result<Option<u64>, Error> {
    let gens = checked_gens(gens)?;
    if s > MAX_BRUTE_TARGET {
        return Err(Error::ScaleExceeded);
    }
    checked_enumeration_size(&gens, s)?;
    Ok(order_rec(&gens, s))
}

fn order_rec(gens: &[u64], s: u64) -> Option<u64> {
    match gens {
        [] => (s == 0).then_some(0),
        [g] => s.is_multiple_of(*g).then(|| s / g),
        [rest @ .., g] => {
            let mut best = None;
            let mut k = 0;
            while k * g <= s {
                if let Some(o) = order_rec(rest, s - k * g) {
                    let total = o + k;
                    best = Some(best.map_or(total, |b: u64| b.max(total)));
                }
                k += 1;
            }
            best
        }
    }
}

/// Maximal factorization length for every value up to `hi` at once, by one
/// depth-first walk over all exponent vectors with value at most `hi`.
/// Equivalent to calling [`brute_order`] per value, but the enumeration is
/// shared, which is what makes corpus-wide sweeps affordable.
pub fn brute_order_sweep(gens: &[u64], hi: u64) -> Result<Vec<Option<u64>>, Error> {
    let gens = checked_gens(gens)?;
    if hi > MAX_BRUTE_TARGET {
        return Err(Error::ScaleExceeded);
    }
    checked_enumeration_size(&gens, hi)?;
    fn walk(gens: &[u64], value: u64, length: u64, hi: u64, best: &mut [Option<u64>]) {
        match gens {
            [] => {
                let slot = &mut best[value as usize];
                if slot.is_none_or(|b| b < length) {
                    *slot = Some(length);
                }
            }
            [g, rest @ ..] => {
                let mut value = value;
                let mut length = length;
                loop {
                    walk(rest, value, length, hi, best);
                    if value + g > hi {
                        break;
                    }
                    value += g;
                    length += 1;
                }
            }
        }
    }
    let mut best = vec![None; hi as usize + 1];
    walk(&gens, 0, 0, hi, &mut best);
    Ok(best)
}

/// Frobenius number by sieving membership up to `a1 * ar`, which is known to
/// dominate it. Panics if the generators do not have gcd 1.
pub fn brute_frobenius(gens: &[u64]) -> Result<u64, Error> {
    let gens = checked_gens(gens)?;
    let g = gens.iter().fold(0, |acc, &v| {
        let mut a = acc;
        let mut b = v;
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a
    });
    assert_eq!(g, 1, "oracle frobenius requires gcd 1");

    let bound = (gens[0] * gens[gens.len() - 1]) as usize;
    let mut member = vec![false; bound + 1];
    member[0] = true;
    for s in 1..=bound {
        member[s] = gens
            .iter()
            .any(|&g| s >= g as usize && member[s - g as usize]);
    }
    // 1 is never a member, so the search cannot come up empty.
    Ok((1..=bound).rev().find(|&s| !member[s]).unwrap() as u64)
}

/// The set of values representable with at least `n` generators but not with
/// `n + 1` or more, i.e. the values of order exactly `n`, by enumeration.
pub fn brute_filtration_diff(gens: &[u64], n: u64) -> Result<BTreeSet<u64>, Error> {
    if n == 0 {
        return Err(Error::OutOfRange);
    }
    let sorted = checked_gens(gens)?;
    let frobenius = brute_frobenius(&sorted)?;
    // Values of order exactly n cannot exceed the Frobenius number of the
    // (n+1)-th filtration step, which is at most F + n*a1.
    let cutoff = frobenius + n * sorted[0] + 1;
    let orders = brute_order_sweep(&sorted, cutoff)?;
    Ok((1..=cutoff)
        .filter(|&s| orders[s as usize] == Some(n))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_examples() {
        assert_eq!(brute_membership(&[3, 7], 11), Ok(false));
        assert_eq!(brute_membership(&[3, 7], 0), Ok(true));
        assert_eq!(brute_membership(&[3, 7], 12), Ok(true));
        assert_eq!(brute_membership(&[4, 9, 10], 15), Ok(false));
        assert_eq!(brute_membership(&[4, 9, 10], 19), Ok(true));
    }

    #[test]
    fn order_examples() {
        assert_eq!(brute_order(&[3, 7], 21), Ok(Some(7)));
        assert_eq!(brute_order(&[2, 3], 6), Ok(Some(3)));
        assert_eq!(brute_order(&[3, 7], 5), Ok(None));
        assert_eq!(brute_order(&[3, 7], 0), Ok(Some(0)));
    }

    #[test]
    fn order_sweep_matches_per_value_calls() {
        for gens in [&[3u64, 7][..], &[4, 9, 10], &[2, 3], &[4, 6, 7, 9]] {
            let sweep = brute_order_sweep(gens, 60).unwrap();
            for s in 0..=60u64 {
                assert_eq!(
                    sweep[s as usize],
                    brute_order(gens, s).unwrap(),
                    "{gens:?} {s}"
                );
            }
        }
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(brute_frobenius(&[3, 7]), Ok(11));
        assert_eq!(brute_frobenius(&[2, 3]), Ok(1));
        assert_eq!(brute_frobenius(&[4, 6, 7, 9]), Ok(5));
        assert_eq!(brute_frobenius(&[4, 9, 10]), Ok(15));
    }

    #[test]
    fn filtration_diff_examples() {
        let d = brute_filtration_diff(&[3, 7], 2).unwrap();
        assert_eq!(d.into_iter().collect::<Vec<_>>(), vec![6, 10, 14]);

        let d = brute_filtration_diff(&[3, 7, 8], 1).unwrap();
        assert_eq!(d.into_iter().collect::<Vec<_>>(), vec![3, 7, 8]);

        let d = brute_filtration_diff(&[2, 3], 1).unwrap();
        assert_eq!(d.into_iter().collect::<Vec<_>>(), vec![2, 3]);
    }

    #[test]
    fn scale_caps_are_hard_errors() {
        assert_eq!(
            brute_membership(&[3, 7], 200_000),
            Err(Error::ScaleExceeded)
        );
        assert_eq!(
            brute_order(&[2, MAX_BRUTE_GENERATOR + 1], 10),
            Err(Error::ScaleExceeded)
        );
        // Enumerations that would visit astronomically many exponent vectors
        // are refused, not attempted: 14 mid-sized generators at a high
        // target blow up combinatorially.
        let wide: Vec<u64> = (30..44).collect();
        assert_eq!(brute_order_sweep(&wide, 5_000), Err(Error::ScaleExceeded));
    }
}
