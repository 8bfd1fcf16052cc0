//! Numerical semigroups: validated generator systems and the classical
//! invariants (membership, Apéry sets, Frobenius number, gaps).
//!
//! A numerical semigroup here is always given by generators
//! `a1 < a2 < ... < ar` with `a1 > 1` and `gcd = 1`, and the stored system is
//! minimal: no generator is a sum of the others. Construction computes the
//! Apéry set with respect to `a1` once (shortest-path relaxation over the
//! residues mod `a1`), which gives O(1) membership and the exact Frobenius
//! number with no search-bound guesswork.

use crate::error::Error;

/// Largest admissible generator. Together with [`MAX_GENERATOR_COUNT`] this
/// keeps every derived quantity (Frobenius numbers, tabulation cutoffs,
/// shortest-path distances) far below `u64::MAX`, so plain arithmetic cannot
/// wrap.
pub const MAX_GENERATOR: u64 = 1_000_000;

/// Largest admissible number of generators in the input list.
pub const MAX_GENERATOR_COUNT: usize = 64;

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// A validated minimal generating system `a1 < a2 < ... < ar`.
///
/// Invariants enforced at construction: strictly increasing, every entry at
/// least 2, gcd of all entries 1, and no entry is a nonnegative integer
/// combination of the others.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    gens: Vec<u64>,
}

impl GeneratorSet {
    /// Validates (and optionally minimalizes) a raw generator list.
    ///
    /// With `normalize` unset, a redundant generator is an error; with it
    /// set, redundant generators are dropped and the unique minimal system
    /// of the same semigroup is returned. The input does not need to be
    /// sorted.
    pub fn new(gens: &[u64], normalize: bool) -> Result<Self, Error> {
        if gens.is_empty() {
            return Err(Error::EmptyInput);
        }
        if gens.iter().any(|&g| g <= 1) {
            return Err(Error::ContainsOne);
        }
        let mut sorted = gens.to_vec();
        sorted.sort_unstable();
        let ar = *sorted.last().unwrap();
        if ar > MAX_GENERATOR || sorted.len() > MAX_GENERATOR_COUNT {
            return Err(Error::Overflow);
        }
        if sorted.iter().fold(0, |acc, &g| gcd(acc, g)) != 1 {
            return Err(Error::GcdNotOne);
        }

        // A generator is redundant iff it is a sum of strictly smaller kept
        // generators (larger ones cannot appear in a representation), so one
        // increasing sweep with a reachability sieve settles minimality.
        // Duplicates fall out as redundant.
        let mut reachable = vec![false; ar as usize + 1];
        reachable[0] = true;
        let mut kept: Vec<u64> = Vec::with_capacity(sorted.len());
        for &g in &sorted {
            if reachable[g as usize] {
                if normalize {
                    continue;
                }
                return Err(Error::NonMinimal(g));
            }
            kept.push(g);
            for s in g as usize..reachable.len() {
                if reachable[s - g as usize] {
                    reachable[s] = true;
                }
            }
        }
        // gcd 1 rules out a single surviving generator.
        debug_assert!(kept.len() >= 2);
        Ok(GeneratorSet { gens: kept })
    }

    /// The generators in increasing order.
    pub fn as_slice(&self) -> &[u64] {
        &self.gens
    }

    /// Number of generators (the embedding dimension of the curve).
    pub fn count(&self) -> usize {
        self.gens.len()
    }

    /// Smallest generator.
    pub fn a1(&self) -> u64 {
        self.gens[0]
    }

    /// Second-smallest generator.
    pub fn a2(&self) -> u64 {
        self.gens[1]
    }

    /// Largest generator.
    pub fn ar(&self) -> u64 {
        *self.gens.last().unwrap()
    }
}

impl std::fmt::Display for GeneratorSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for g in &self.gens {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
            first = false;
        }
        Ok(())
    }
}

/// A numerical semigroup with its Frobenius data cached.
///
/// `apery[c]` is the least member congruent to `c` mod `a1`; membership and
/// the Frobenius number follow directly from that table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    gens: GeneratorSet,
    apery: Vec<u64>,
    frobenius: u64,
    conductor: u64,
}

impl NumericalSemigroup {
    /// Builds a semigroup from a minimal generator list; a redundant
    /// generator is rejected with [`Error::NonMinimal`].
    pub fn new(gens: &[u64]) -> Result<Self, Error> {
        Self::build(gens, false)
    }

    /// Builds a semigroup from any generator list with gcd 1, dropping
    /// redundant generators.
    pub fn normalized(gens: &[u64]) -> Result<Self, Error> {
        Self::build(gens, true)
    }

    /// Common constructor behind [`Self::new`] and [`Self::normalized`].
    pub fn build(gens: &[u64], normalize: bool) -> Result<Self, Error> {
        let gens = GeneratorSet::new(gens, normalize)?;
        let apery = apery_mod(gens.a1(), gens.as_slice());
        let frobenius = apery.iter().max().copied().unwrap() - gens.a1();
        debug_assert!(frobenius >= 1);
        Ok(NumericalSemigroup {
            conductor: frobenius + 1,
            gens,
            apery,
            frobenius,
        })
    }

    pub fn gens(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn a1(&self) -> u64 {
        self.gens.a1()
    }

    pub fn a2(&self) -> u64 {
        self.gens.a2()
    }

    pub fn ar(&self) -> u64 {
        self.gens.ar()
    }

    /// Largest integer not in the semigroup.
    pub fn frobenius(&self) -> u64 {
        self.frobenius
    }

    /// First integer from which on everything is a member.
    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// The cached Apéry set with respect to `a1`, indexed by residue.
    pub fn apery(&self) -> &[u64] {
        &self.apery
    }

    /// Membership test: `x` is a member iff it is at least the least member
    /// in its residue class mod `a1`.
    pub fn contains(&self, x: u64) -> bool {
        x >= self.apery[(x % self.a1()) as usize]
    }

    /// Apéry set with respect to an arbitrary positive member `m`: for each
    /// residue class mod `m`, the least member in that class.
    pub fn apery_set(&self, m: u64) -> Result<Vec<u64>, Error> {
        if m == 0 || !self.contains(m) {
            return Err(Error::NotAMember(m));
        }
        if m > MAX_GENERATOR {
            return Err(Error::Overflow);
        }
        Ok(apery_mod(m, self.gens.as_slice()))
    }

    /// All nonnegative integers outside the semigroup, sorted.
    pub fn gaps(&self) -> Vec<u64> {
        let a1 = self.a1();
        let mut out = Vec::with_capacity(self.genus() as usize);
        for (c, &least) in self.apery.iter().enumerate() {
            let mut x = c as u64;
            while x < least {
                out.push(x);
                x += a1;
            }
        }
        out.sort_unstable();
        debug_assert!(out.last().copied().unwrap_or(0) == self.frobenius);
        out
    }

    /// Number of gaps.
    pub fn genus(&self) -> u64 {
        let a1 = self.a1();
        self.apery
            .iter()
            .enumerate()
            .map(|(c, &least)| (least - c as u64) / a1)
            .sum()
    }
}

impl std::fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.gens)
    }
}

/// Least member of the semigroup in each residue class mod `m`, by Dijkstra
/// over the residue graph: an edge `c -> (c + g) % m` of weight `g` for each
/// generator `g` not divisible by `m`.
fn apery_mod(m: u64, gens: &[u64]) -> Vec<u64> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    let mu = m as usize;
    let mut dist = vec![u64::MAX; mu];
    dist[0] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, 0usize)));
    while let Some(Reverse((d, c))) = heap.pop() {
        if d > dist[c] {
            continue;
        }
        for &g in gens {
            if g % m == 0 {
                continue;
            }
            let nd = d + g;
            let nc = ((c as u64 + g) % m) as usize;
            if nd < dist[nc] {
                dist[nc] = nd;
                heap.push(Reverse((nd, nc)));
            }
        }
    }
    // gcd 1 makes every residue reachable.
    debug_assert!(dist.iter().all(|&d| d != u64::MAX));
    dist
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_small_examples() {
        let s = NumericalSemigroup::new(&[3, 7]).unwrap();
        assert_eq!(s.frobenius(), 11);
        assert_eq!(s.apery(), &[0, 7, 14]);
        assert_eq!(s.conductor(), 12);

        let s = NumericalSemigroup::new(&[2, 3]).unwrap();
        assert_eq!(s.frobenius(), 1);
        assert_eq!(s.apery(), &[0, 3]);
    }

    #[test]
    fn build_rejects_bad_input() {
        assert_eq!(NumericalSemigroup::new(&[]), Err(Error::EmptyInput));
        assert_eq!(NumericalSemigroup::new(&[2, 4]), Err(Error::GcdNotOne));
        assert_eq!(NumericalSemigroup::new(&[1, 3]), Err(Error::ContainsOne));
        assert_eq!(NumericalSemigroup::new(&[0, 5]), Err(Error::ContainsOne));
        assert_eq!(
            NumericalSemigroup::new(&[3, 6, 7]),
            Err(Error::NonMinimal(6))
        );
        assert_eq!(
            NumericalSemigroup::new(&[3, 3, 7]),
            Err(Error::NonMinimal(3))
        );
        assert_eq!(
            NumericalSemigroup::new(&[2, MAX_GENERATOR + 1]),
            Err(Error::Overflow)
        );
    }

    #[test]
    fn normalize_reduces_to_minimal_system() {
        let s = NumericalSemigroup::normalized(&[3, 6, 7]).unwrap();
        assert_eq!(s.gens().as_slice(), &[3, 7]);
        assert_eq!(s.frobenius(), 11);

        // Unsorted input with duplicates is fine under normalization.
        let s = NumericalSemigroup::normalized(&[10, 4, 9, 9, 13]).unwrap();
        assert_eq!(s.gens().as_slice(), &[4, 9, 10]);

        // gcd is checked before reduction.
        assert_eq!(
            NumericalSemigroup::normalized(&[2, 4]),
            Err(Error::GcdNotOne)
        );
    }

    #[test]
    fn contains_matches_known_members() {
        let s = NumericalSemigroup::new(&[3, 7]).unwrap();
        assert!(!s.contains(11));
        assert!(s.contains(12));
        assert!(s.contains(0));
        assert!(!s.contains(1));
        assert!(s.contains(10));
    }

    #[test]
    fn apery_set_for_other_members() {
        let s = NumericalSemigroup::new(&[3, 7]).unwrap();
        assert_eq!(s.apery_set(3).unwrap(), vec![0, 7, 14]);
        assert_eq!(s.apery_set(5), Err(Error::NotAMember(5)));
        assert_eq!(s.apery_set(0), Err(Error::NotAMember(0)));

        let s = NumericalSemigroup::new(&[2, 3]).unwrap();
        assert_eq!(s.apery_set(2).unwrap(), vec![0, 3]);

        let s = NumericalSemigroup::new(&[4, 9, 10]).unwrap();
        assert_eq!(s.apery_set(4).unwrap(), vec![0, 9, 10, 19]);
        assert_eq!(s.frobenius(), 15);
    }

    #[test]
    fn gaps_and_genus() {
        let s = NumericalSemigroup::new(&[3, 7]).unwrap();
        assert_eq!(s.gaps(), vec![1, 2, 4, 5, 8, 11]);
        assert_eq!(s.genus(), 6);

        let s = NumericalSemigroup::new(&[2, 3]).unwrap();
        assert_eq!(s.gaps(), vec![1]);

        let s = NumericalSemigroup::new(&[3, 7, 8]).unwrap();
        assert_eq!(s.gaps(), vec![1, 2, 4, 5]);
        assert_eq!(s.frobenius(), 5);
    }

    #[test]
    fn frobenius_respects_generator_bound() {
        for gens in [&[3u64, 7][..], &[4, 9, 10], &[2, 3], &[5, 11, 12, 13]] {
            let s = NumericalSemigroup::new(gens).unwrap();
            assert!(s.frobenius() <= s.a1() * s.ar() - s.a1() - s.ar());
        }
    }

    #[test]
    fn display_is_comma_joined() {
        let s = NumericalSemigroup::new(&[4, 9, 10]).unwrap();
        assert_eq!(s.to_string(), "4,9,10");
    }
}
