//! The order filtration of a numerical semigroup and the invariants of the
//! corresponding curve singularity.
//!
//! For generators `a = (a1, ..., ar)` the order of a member `s` is the
//! largest number of generators (with repetition) summing to `s`. Level `n`
//! of the filtration collects `0` together with every member of order at
//! least `n`; it is again a numerical semigroup, and the count of elements
//! of order exactly `n` is the Hilbert-Samuel value `lambda(n)` of the curve
//! at the origin. `lambda` stabilizes at `a1` (the multiplicity); the least
//! level from which it is constant is the regularity index.
//!
//! Everything here is exact 64-bit integer arithmetic. Tabulation cutoffs
//! come from the proven chain `F(S^(n+1)) <= F(S^(n)) + a1`, never from
//! guesses, so the counts are certified complete.

use crate::error::Error;
use crate::semigroup::{GeneratorSet, NumericalSemigroup};
use std::collections::BTreeSet;

/// How many levels past the proven stabilization bound are re-checked by
/// default when computing the exact regularity index.
pub const DEFAULT_STABILITY_MARGIN: u64 = 10;

/// Hard cap on order-table size, in entries. Tables beyond this are refused
/// rather than silently truncated.
pub const MAX_TABLE_LIMIT: u64 = 100_000_000;

const ORD_NONE: u32 = u32::MAX;

/// Position of the Frobenius number relative to the two smallest generators.
///
/// The Frobenius number is never a member, so it can never equal `a1` or
/// `a2` and the three cases are exhaustive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `F(S) < a1`, which forces `F(S) = a1 - 1`.
    BelowA1,
    /// `a1 < F(S) < a2`.
    BetweenA1A2,
    /// `a2 < F(S)`; the only case where the division bound `q` is defined.
    AboveA2,
}

impl Regime {
    pub fn as_str(self) -> &'static str {
        match self {
            Regime::BelowA1 => "below_a1",
            Regime::BetweenA1A2 => "between_a1_a2",
            Regime::AboveA2 => "above_a2",
        }
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Per-integer maximal factorization length, tabulated up to `limit`.
///
/// `ord(s)` is the largest `|alpha|` with `a . alpha = s`, present exactly
/// when `s` is a member. The table satisfies the recurrence
/// `ord(s) = 1 + max ord(s - a_i)` over generators with `s - a_i` a member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderTable {
    gens: GeneratorSet,
    limit: u64,
    ord: Vec<u32>,
}

impl OrderTable {
    fn build(semigroup: &NumericalSemigroup, limit: u64) -> Result<Self, Error> {
        if limit > MAX_TABLE_LIMIT {
            return Err(Error::Overflow);
        }
        let gens = semigroup.gens().clone();
        let mut ord = vec![ORD_NONE; limit as usize + 1];
        ord[0] = 0;
        for v in 1..ord.len() {
            let mut best = ORD_NONE;
            for &g in gens.as_slice() {
                let g = g as usize;
                if g > v {
                    break;
                }
                let prev = ord[v - g];
                if prev != ORD_NONE && (best == ORD_NONE || prev + 1 > best) {
                    best = prev + 1;
                }
            }
            ord[v] = best;
        }
        Ok(OrderTable { gens, limit, ord })
    }

    /// Inclusive upper bound of the tabulation.
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn gens(&self) -> &GeneratorSet {
        &self.gens
    }

    /// Maximal factorization length of `s`, or `None` on gaps.
    ///
    /// Panics if `s` exceeds the tabulated range.
    pub fn ord(&self, s: u64) -> Option<u64> {
        assert!(
            s <= self.limit,
            "ord({s}) beyond table limit {}",
            self.limit
        );
        let o = self.ord[s as usize];
        (o != ORD_NONE).then_some(o as u64)
    }

    /// Membership of `s` in filtration level `n`: zero is always a member,
    /// a positive value belongs iff its order is at least `n`.
    pub fn in_level(&self, s: u64, n: u64) -> bool {
        s == 0 || self.ord(s).is_some_and(|o| o >= n)
    }
}

/// One level of the filtration, tabulated up to the certified cutoff
/// `F(S) + (n-1) a1 + 1` past which every integer is a member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationLevel {
    pub n: u64,
    /// Inclusive tabulation cutoff.
    pub cutoff: u64,
    /// Members of the level, from 0 up to the cutoff.
    pub members_below_cutoff: Vec<u64>,
    /// Largest integer outside the level.
    pub frobenius_n: u64,
}

/// The Euclidean division `delta = q * epsilon + tau` of
/// `delta = F(S) - a1` by `epsilon = a2 - a1`. Only defined when the
/// Frobenius number exceeds `a2`, which guarantees `q >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisionData {
    pub delta: u64,
    pub epsilon: u64,
    pub q: u64,
    pub tau: u64,
}

/// The sequence `lambda(0), ..., lambda(N)` together with its certified
/// stabilization data. `stable_value` is always the multiplicity `a1`;
/// `stable_from` is the exact regularity index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertFunction {
    pub values: Vec<u64>,
    pub stable_value: u64,
    pub stable_from: u64,
}

/// Exact regularity index plus the bounds it is certified against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityReport {
    pub ri_exact: u64,
    pub regime: Regime,
    /// `q` when the Frobenius number exceeds `a2`, otherwise 1.
    pub theorem_bound: u64,
    /// Generator-only upper bound, defined in the same regime as `q`.
    pub corollary_bound: Option<u64>,
    pub hilbert: HilbertFunction,
}

impl NumericalSemigroup {
    /// Tabulates maximal factorization lengths up to `limit` inclusive.
    pub fn order_table(&self, limit: u64) -> Result<OrderTable, Error> {
        OrderTable::build(self, limit)
    }

    /// Which side of `a1` and `a2` the Frobenius number falls on.
    pub fn regime(&self) -> Regime {
        let f = self.frobenius();
        debug_assert!(f != self.a1() && f != self.a2());
        if f < self.a1() {
            // The only way to stay below a1 is to miss exactly 1..a1-1.
            debug_assert_eq!(f, self.a1() - 1);
            Regime::BelowA1
        } else if f < self.a2() {
            Regime::BetweenA1A2
        } else {
            Regime::AboveA2
        }
    }

    /// Inclusive tabulation cutoff for level `n`: one past
    /// `F(S) + (n-1) a1`, which dominates the level's Frobenius number.
    fn level_cutoff(&self, n: u64) -> Result<u64, Error> {
        n.checked_sub(1)
            .and_then(|m| m.checked_mul(self.a1()))
            .and_then(|x| x.checked_add(self.frobenius()))
            .and_then(|x| x.checked_add(1))
            .ok_or(Error::Overflow)
    }

    /// Level `n` of the filtration, with its member list and Frobenius
    /// number. Requires `n >= 1`.
    pub fn filtration_level(&self, n: u64) -> Result<FiltrationLevel, Error> {
        if n == 0 {
            return Err(Error::OutOfRange);
        }
        let cutoff = self.level_cutoff(n)?;
        let table = self.order_table(cutoff)?;
        let members_below_cutoff: Vec<u64> =
            (0..=cutoff).filter(|&s| table.in_level(s, n)).collect();
        let frobenius_n = (1..=cutoff)
            .rev()
            .find(|&s| !table.in_level(s, n))
            .expect("1 is never a member of any level");
        Ok(FiltrationLevel {
            n,
            cutoff,
            members_below_cutoff,
            frobenius_n,
        })
    }

    /// Largest integer outside level `n`. Requires `n >= 1`.
    pub fn filtration_frobenius(&self, n: u64) -> Result<u64, Error> {
        if n == 0 {
            return Err(Error::OutOfRange);
        }
        let cutoff = self.level_cutoff(n)?;
        let table = self.order_table(cutoff)?;
        Ok((1..=cutoff)
            .rev()
            .find(|&s| !table.in_level(s, n))
            .expect("1 is never a member of any level"))
    }

    /// Euclidean division of `F(S) - a1` by `a2 - a1`; errors with
    /// [`Error::WrongRegime`] unless the Frobenius number exceeds `a2`.
    pub fn division_data(&self) -> Result<DivisionData, Error> {
        if self.regime() != Regime::AboveA2 {
            return Err(Error::WrongRegime);
        }
        let delta = self.frobenius() - self.a1();
        let epsilon = self.a2() - self.a1();
        let data = DivisionData {
            delta,
            epsilon,
            q: delta / epsilon,
            tau: delta % epsilon,
        };
        debug_assert!(data.q >= 1);
        Ok(data)
    }

    /// `lambda(0), ..., lambda(max_n)` in one pass over a single table.
    pub fn hilbert_values(&self, max_n: u64) -> Result<Vec<u64>, Error> {
        let mut counts = vec![0u64; max_n as usize + 1];
        counts[0] = 1;
        if max_n == 0 {
            return Ok(counts);
        }
        // Every element of order n lies at most at F(S) + n*a1, so one table
        // up to the cutoff for max_n sees all of them.
        let limit = max_n
            .checked_mul(self.a1())
            .and_then(|x| x.checked_add(self.frobenius()))
            .and_then(|x| x.checked_add(1))
            .ok_or(Error::Overflow)?;
        let table = self.order_table(limit)?;
        for s in 1..=limit {
            if let Some(o) = table.ord(s) {
                if o >= 1 && o <= max_n {
                    counts[o as usize] += 1;
                }
            }
        }
        Ok(counts)
    }

    /// `lambda(n)`: 1 at level 0, otherwise the number of members of order
    /// exactly `n`.
    pub fn hilbert_value(&self, n: u64) -> Result<u64, Error> {
        Ok(*self.hilbert_values(n)?.last().unwrap())
    }

    /// The Hilbert-Samuel sequence up to `extra` levels past the proven
    /// stabilization bound, with the exact stabilization point.
    ///
    /// Values past the bound are asserted to equal `a1`; a mismatch would be
    /// an implementation bug and surfaces as [`Error::TheoremViolation`].
    pub fn hilbert_function(&self, extra: u64) -> Result<HilbertFunction, Error> {
        let (_, bound) = self.ri_bound();
        let max_n = bound.checked_add(extra).ok_or(Error::Overflow)?;
        let values = self.hilbert_values(max_n)?;
        let a1 = self.a1();
        for n in bound..=max_n {
            let lambda = values[n as usize];
            if lambda != a1 {
                return Err(Error::TheoremViolation {
                    n,
                    lambda,
                    expected: a1,
                });
            }
        }
        // lambda(0) = 1 < a1, so the search below always succeeds and the
        // stabilization point is at least 1.
        let last_nonstable = (0..=bound)
            .rev()
            .find(|&n| values[n as usize] != a1)
            .expect("lambda(0) differs from a1");
        Ok(HilbertFunction {
            values,
            stable_value: a1,
            stable_from: last_nonstable + 1,
        })
    }

    /// The multiplicity of the curve at the origin, which is `a1`. Debug
    /// builds recompute a Hilbert value past the stabilization bound and
    /// assert it agrees.
    pub fn multiplicity(&self) -> u64 {
        #[cfg(debug_assertions)]
        {
            let (_, bound) = self.ri_bound();
            debug_assert_eq!(self.hilbert_value(bound + 2).unwrap(), self.a1());
        }
        self.a1()
    }

    /// Proven upper bound for the regularity index together with the regime
    /// it comes from: `q` when the Frobenius number exceeds `a2`, else 1.
    pub fn ri_bound(&self) -> (Regime, u64) {
        let regime = self.regime();
        let bound = match regime {
            Regime::AboveA2 => self.division_data().expect("regime checked").q,
            _ => 1,
        };
        (regime, bound)
    }

    /// Generator-only upper bound `floor((a1*ar - 2*a1 - ar - tau) / (a2 - a1))`
    /// for the regularity index; always at least `q`.
    pub fn corollary_bound(&self) -> Result<u64, Error> {
        let d = self.division_data()?;
        let numerator = (self.a1() * self.ar())
            .checked_sub(2 * self.a1())
            .and_then(|x| x.checked_sub(self.ar()))
            .and_then(|x| x.checked_sub(d.tau))
            .ok_or(Error::Overflow)?;
        let bound = numerator / d.epsilon;
        debug_assert!(bound >= d.q);
        Ok(bound)
    }

    /// Exact regularity index with `extra` levels of stabilization margin.
    pub fn regularity_report(&self, extra: u64) -> Result<RegularityReport, Error> {
        let hilbert = self.hilbert_function(extra)?;
        let (regime, theorem_bound) = self.ri_bound();
        let corollary_bound = match regime {
            Regime::AboveA2 => Some(self.corollary_bound()?),
            _ => None,
        };
        let ri_exact = hilbert.stable_from;
        debug_assert!(ri_exact <= theorem_bound);
        if let Some(c) = corollary_bound {
            debug_assert!(theorem_bound <= c);
        }
        Ok(RegularityReport {
            ri_exact,
            regime,
            theorem_bound,
            corollary_bound,
            hilbert,
        })
    }

    /// Exact regularity index with the default stabilization margin.
    pub fn ri_exact(&self) -> Result<RegularityReport, Error> {
        self.regularity_report(DEFAULT_STABILITY_MARGIN)
    }

    /// Whether shifting level `n` by `a1` gives exactly level `n + 1`,
    /// comparing nonzero members up to `F(S) + (n+1) a1 + 2` (both sets are
    /// cofinite and agree beyond). Guaranteed true from `q` on; below `q` it
    /// reports whatever actually holds.
    pub fn shift_check(&self, n: u64) -> Result<bool, Error> {
        if self.regime() != Regime::AboveA2 {
            return Err(Error::WrongRegime);
        }
        if n == 0 {
            return Err(Error::OutOfRange);
        }
        let a1 = self.a1();
        let cutoff = n
            .checked_add(1)
            .and_then(|m| m.checked_mul(a1))
            .and_then(|x| x.checked_add(self.frobenius()))
            .and_then(|x| x.checked_add(2))
            .ok_or(Error::Overflow)?;
        let table = self.order_table(cutoff)?;
        for s in 1..=cutoff {
            let in_next = table.in_level(s, n + 1);
            // Shift of the nonzero part only: 0 shifts to a1, which is never
            // in level n + 1, and 0 itself belongs to both levels.
            let in_shift = s > a1 && table.in_level(s - a1, n);
            if in_next != in_shift {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The two-part decomposition of the order-`n` elements: members of
    /// level `n` below `(n+1) a1`, and lifts `h + k a1` of the non-members
    /// `h` below `(n+1) a1` with `k` minimal such that the lift lands in the
    /// level. Their union is exactly the set of order-`n` elements, has
    /// `a1` elements, and hits every residue class mod `a1` once; the call
    /// verifies all three and errors with [`Error::PartitionViolation`] on
    /// any mismatch. Requires the `q` regime and `n >= q`.
    pub fn order_partition(&self, n: u64) -> Result<(BTreeSet<u64>, BTreeSet<u64>), Error> {
        let d = self.division_data()?;
        if n < d.q {
            return Err(Error::BelowStableRange);
        }
        let a1 = self.a1();
        let limit = n
            .checked_mul(a1)
            .and_then(|x| x.checked_add(self.frobenius()))
            .and_then(|x| x.checked_add(1))
            .ok_or(Error::Overflow)?;
        let table = self.order_table(limit)?;
        let below = (n + 1) * a1;

        let low: BTreeSet<u64> = (1..below).filter(|&s| table.in_level(s, n)).collect();

        // All eligible h in one residue class lift to the same target: the
        // least member of the class, which sits at or above n*a1 because
        // nonzero members of the level do. Memoize it per class.
        let mut lift_target: Vec<Option<u64>> = vec![None; a1 as usize];
        let mut lifted = BTreeSet::new();
        for h in 0..below {
            if table.in_level(h, n) {
                continue;
            }
            let class = (h % a1) as usize;
            if lift_target[class].is_none() {
                let mut s = n * a1 + class as u64;
                loop {
                    if s > table.limit() {
                        return Err(Error::PartitionViolation);
                    }
                    if table.in_level(s, n) {
                        break;
                    }
                    s += a1;
                }
                lift_target[class] = Some(s);
            }
            lifted.insert(lift_target[class].unwrap());
        }

        let union: BTreeSet<u64> = low.union(&lifted).copied().collect();
        let expected: BTreeSet<u64> = (1..=limit).filter(|&s| table.ord(s) == Some(n)).collect();
        let classes: BTreeSet<u64> = union.iter().map(|s| s % a1).collect();
        if union != expected || union.len() as u64 != a1 || classes.len() != union.len() {
            return Err(Error::PartitionViolation);
        }
        Ok((low, lifted))
    }

    /// Exact regularity index `a1 - 1` of a two-generator semigroup, read
    /// off without computing any Hilbert values.
    pub fn plane_ri_exact(&self) -> Result<u64, Error> {
        if self.gens().count() != 2 {
            return Err(Error::NotPlane);
        }
        Ok(self.a1() - 1)
    }

    /// The degree-`n` value basis `{a1 (n - j) + a2 j | 0 <= j < a1}` of a
    /// two-generator semigroup, valid from `n = a1 - 1` on, where it equals
    /// the set of order-`n` elements.
    pub fn plane_graded_basis(&self, n: u64) -> Result<Vec<u64>, Error> {
        if self.gens().count() != 2 {
            return Err(Error::NotPlane);
        }
        let a1 = self.a1();
        if n < a1 - 1 {
            return Err(Error::BelowStableRange);
        }
        let a2 = self.a2();
        Ok((0..a1).map(|j| a1 * (n - j) + a2 * j).collect())
    }
}
