//! Mechanical verification of the library's defining identities against the
//! brute-force oracle and against each other, over selectable corpora.
//!
//! Each check walks a corpus, counts the individual assertions it makes, and
//! collects the first few counterexamples verbatim instead of panicking, so
//! a driver can report every violated property in one run.

use crate::error::Error;
use crate::families;
use crate::filtration::Regime;
use crate::oracle;
use crate::semigroup::NumericalSemigroup;
use std::collections::BTreeSet;

const MAX_SAMPLES: usize = 5;

/// Outcome of one property check over a corpus.
#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: &'static str,
    /// Individual assertions evaluated.
    pub cases: u64,
    pub failures: u64,
    /// First few counterexamples, one line each.
    pub samples: Vec<String>,
}

impl CheckOutcome {
    fn new(name: &'static str) -> Self {
        CheckOutcome {
            name,
            cases: 0,
            failures: 0,
            samples: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.samples.len() < MAX_SAMPLES {
                self.samples.push(detail());
            }
        }
    }

    pub fn is_pass(&self) -> bool {
        self.failures == 0
    }
}

impl std::fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} {:<32} cases={} failures={}",
            if self.is_pass() { "PASS" } else { "FAIL" },
            self.name,
            self.cases,
            self.failures
        )
    }
}

// ---------------------------------------------------------------------------
// Corpus builders
// ---------------------------------------------------------------------------

/// All coprime pairs `<a1, a2>` with `a1` in `[a1_lo, a1_hi]` and
/// `a2 <= a2_max`.
pub fn plane_corpus(a1_lo: u64, a1_hi: u64, a2_max: u64) -> Vec<NumericalSemigroup> {
    families::plane_family(2, a2_max)
        .filter(|s| (a1_lo..=a1_hi).contains(&s.a1()))
        .collect()
}

/// The tight-bound family for `a1` in `[a1_lo, a1_hi]`.
pub fn sharp_corpus(a1_lo: u64, a1_hi: u64) -> Result<Vec<NumericalSemigroup>, Error> {
    (a1_lo..=a1_hi).map(families::sharp_family).collect()
}

/// Seeded random corpus with the standard scale (`r <= max_r`,
/// generators `<= max_gen`).
pub fn random_corpus(
    seed: u64,
    count: u64,
    max_r: u64,
    max_gen: u64,
) -> Result<Vec<NumericalSemigroup>, Error> {
    families::random_semigroups(seed, count, max_r, max_gen)
}

/// First `want` members of the seeded random stream whose Frobenius number
/// exceeds `a2`. Deterministic: the stream is prefix-stable in `count`.
pub fn random_above_a2_corpus(
    seed: u64,
    want: usize,
    max_r: u64,
    max_gen: u64,
) -> Result<Vec<NumericalSemigroup>, Error> {
    let mut count = (want as u64) * 2 + 16;
    loop {
        let all = families::random_semigroups(seed, count, max_r, max_gen)?;
        let picked: Vec<NumericalSemigroup> = all
            .into_iter()
            .filter(|s| s.regime() == Regime::AboveA2)
            .take(want)
            .collect();
        if picked.len() == want {
            return Ok(picked);
        }
        count *= 2;
    }
}

/// Every numerical semigroup whose minimal system has at most `max_r`
/// generators, all at most `max_gen`.
pub fn small_minimal_corpus(max_r: usize, max_gen: u64) -> Vec<NumericalSemigroup> {
    fn rec(
        start: u64,
        max_gen: u64,
        room: usize,
        current: &mut Vec<u64>,
        out: &mut Vec<NumericalSemigroup>,
    ) {
        if current.len() >= 2 {
            if let Ok(s) = NumericalSemigroup::new(current) {
                out.push(s);
            }
        }
        if room == 0 {
            return;
        }
        for g in start..=max_gen {
            current.push(g);
            rec(g + 1, max_gen, room - 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(2, max_gen, max_r, &mut Vec::new(), &mut out);
    out
}

// ---------------------------------------------------------------------------
// Oracle agreement
// ---------------------------------------------------------------------------

/// Fast membership vs exponent-vector search, for every `x` up to
/// `F(S) + 2 a1`.
pub fn membership_matches_oracle(corpus: &[NumericalSemigroup]) -> CheckOutcome {
    let mut out = CheckOutcome::new("membership_matches_oracle");
    for s in corpus {
        let hi = s.frobenius() + 2 * s.a1();
        if s.ar() > oracle::MAX_BRUTE_GENERATOR || hi > oracle::MAX_BRUTE_TARGET {
            continue;
        }
        for x in 0..=hi {
            let brute = match oracle::brute_membership(s.gens().as_slice(), x) {
                Ok(b) => b,
                Err(Error::ScaleExceeded) => break,
                Err(e) => panic!("oracle failed on {s}: {e}"),
            };
            out.check(s.contains(x) == brute, || {
                format!("gens={s} x={x} fast={} brute={brute}", s.contains(x))
            });
        }
    }
    out
}

/// Order table vs exhaustive enumeration of exponent vectors, for every
/// value up to `3 a1 ar` on corpus members with `ar <= 40`.
pub fn order_matches_oracle(corpus: &[NumericalSemigroup]) -> CheckOutcome {
    let mut out = CheckOutcome::new("order_matches_oracle");
    for s in corpus {
        if s.ar() > 40 {
            continue;
        }
        let hi = 3 * s.a1() * s.ar();
        let table = s.order_table(hi).unwrap();
        let brute = match oracle::brute_order_sweep(s.gens().as_slice(), hi) {
            Ok(b) => b,
            Err(Error::ScaleExceeded) => continue,
            Err(e) => panic!("oracle failed on {s}: {e}"),
        };
        for v in 0..=hi {
            out.check(table.ord(v) == brute[v as usize], || {
                format!(
                    "gens={s} v={v} fast={:?} brute={:?}",
                    table.ord(v),
                    brute[v as usize]
                )
            });
        }
    }
    out
}

/// Cached Frobenius number vs sieve.
pub fn frobenius_matches_oracle(corpus: &[NumericalSemigroup]) -> CheckOutcome {
    let mut out = CheckOutcome::new("frobenius_matches_oracle");
    for s in corpus {
        if s.ar() > oracle::MAX_BRUTE_GENERATOR {
            continue;
        }
        let brute = oracle::brute_frobenius(s.gens().as_slice()).unwrap();
        out.check(s.frobenius() == brute, || {
            format!("gens={s} fast={} brute={brute}", s.frobenius())
        });
    }
    out
}

/// Order-level sets vs enumeration, for levels `1..=max_n`.
pub fn level_diff_matches_oracle(corpus: &[NumericalSemigroup], max_n: u64) -> CheckOutcome {
    let mut out = CheckOutcome::new("level_diff_matches_oracle");
    for s in corpus {
        let worst = s.frobenius() + max_n * s.a1() + 1;
        if s.ar() > oracle::MAX_BRUTE_GENERATOR || worst > oracle::MAX_BRUTE_TARGET {
            continue;
        }
        let table = s.order_table(worst).unwrap();
        for n in 1..=max_n {
            let fast: BTreeSet<u64> = (1..=worst).filter(|&v| table.ord(v) == Some(n)).collect();
            let brute = match oracle::brute_filtration_diff(s.gens().as_slice(), n) {
                Ok(b) => b,
                Err(Error::ScaleExceeded) => break,
                Err(e) => panic!("oracle failed on {s}: {e}"),
            };
            out.check(fast == brute, || {
                format!("gens={s} n={n} fast={fast:?} brute={brute:?}")
            });
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Construction invariants
// ---------------------------------------------------------------------------

/// The Apéry table really holds the least member of each residue class, and
/// the Frobenius data derived from it behaves like a Frobenius number.
pub fn apery_invariants(corpus: &[NumericalSemigroup]) -> CheckOutcome {
    let mut out = CheckOutcome::new("apery_invariants");
    for s in corpus {
        let a1 = s.a1();
        let apery = s.apery();
        out.check(apery[0] == 0, || format!("gens={s} apery[0]={}", apery[0]));
        for (c, &least) in apery.iter().enumerate() {
            out.check(least % a1 == c as u64, || {
                format!("gens={s} class={c} least={least} not in class")
            });
            out.check(s.contains(least), || {
                format!("gens={s} class={c} least={least} not a member")
            });
            if c != 0 {
                out.check(!s.contains(least - a1), || {
                    format!("gens={s} class={c}: {least} is not minimal")
                });
            }
        }
        let f = s.frobenius();
        out.check(f == apery.iter().max().unwrap() - a1, || {
            format!("gens={s} frobenius={f} inconsistent with apery")
        });
        out.check(!s.contains(f), || {
            format!("gens={s} contains frobenius {f}")
        });
        out.check((1..=2 * a1).all(|k| s.contains(f + k)), || {
            format!("gens={s} misses a value past frobenius {f}")
        });
    }
    out
}

/// `F(S) <= a1 ar - a1 - ar` for every corpus member.
pub fn frobenius_generator_bound(corpus: &[NumericalSemigroup]) -> CheckOutcome {
    let mut out = CheckOutcome::new("frobenius_generator_bound");
    for s in corpus {
        let cap = s.a1() * s.ar() - s.a1() - s.ar();
        out.check(s.frobenius() <= cap, || {
            format!("gens={s} frobenius={} bound={cap}", s.frobenius())
        });
    }
    out
}

/// Rebuilding a minimal system without normalization succeeds and is a
/// fixed point.
pub fn normalize_idempotent(corpus: &[NumericalSemigroup]) -> CheckOutcome {
    let mut out = CheckOutcome::new("normalize_idempotent");
    for s in corpus {
        let rebuilt = NumericalSemigroup::new(s.gens().as_slice());
        out.check(rebuilt.as_ref() == Ok(s), || {
            format!("gens={s} rebuild gave {rebuilt:?}")
        });
    }
    out
}

// ---------------------------------------------------------------------------
// Filtration identities
// ---------------------------------------------------------------------------

/// `F(S^(n+1)) = F(S^(n)) + a1 < (n+1) a2` for `q <= n <= q + span`, on
/// members in the `q` regime.
pub fn frobenius_recursion(corpus: &[NumericalSemigroup], span: u64) -> CheckOutcome {
    let mut out = CheckOutcome::new("frobenius_recursion");
    for s in corpus {
        let Ok(d) = s.division_data() else { continue };
        let mut prev = s.filtration_frobenius(d.q).unwrap();
        for n in d.q..=d.q + span {
            let next = s.filtration_frobenius(n + 1).unwrap();
            out.check(next == prev + s.a1(), || {
                format!("gens={s} n={n} F(next)={next} F(cur)={prev}")
            });
            out.check(next < (n + 1) * s.a2(), || {
                format!("gens={s} n={n} F(next)={next} >= (n+1)a2")
            });
            prev = next;
        }
    }
    out
}

/// `F(S^(n+1)) <= F(S^(n)) + a1` for every level, any regime.
pub fn frobenius_chain(corpus: &[NumericalSemigroup], max_n: u64) -> CheckOutcome {
    let mut out = CheckOutcome::new("frobenius_chain");
    for s in corpus {
        let mut prev = s.filtration_frobenius(1).unwrap();
        for n in 1..=max_n {
            let next = s.filtration_frobenius(n + 1).unwrap();
            out.check(next <= prev + s.a1(), || {
                format!("gens={s} n={n} F(next)={next} F(cur)={prev}")
            });
            prev = next;
        }
    }
    out
}

/// Level `n + 1` is exactly level `n` shifted by `a1`, from `q` on.
pub fn shift_above_q(corpus: &[NumericalSemigroup], span: u64) -> CheckOutcome {
    let mut out = CheckOutcome::new("shift_above_q");
    for s in corpus {
        let Ok(d) = s.division_data() else { continue };
        for n in d.q..=d.q + span {
            let ok = s.shift_check(n).unwrap();
            out.check(ok, || format!("gens={s} n={n} shifted set differs"));
        }
    }
    out
}

/// `lambda(n) = a1` on `[q, q + span]` and the exact regularity index never
/// exceeds `q`, on members in the `q` regime.
pub fn hilbert_stable_from_q(corpus: &[NumericalSemigroup], span: u64) -> CheckOutcome {
    let mut out = CheckOutcome::new("hilbert_stable_from_q");
    for s in corpus {
        let Ok(d) = s.division_data() else { continue };
        let report = match s.regularity_report(span) {
            Ok(r) => r,
            Err(e) => {
                out.check(false, || format!("gens={s} report failed: {e}"));
                continue;
            }
        };
        for n in d.q..=d.q + span {
            let lambda = report.hilbert.values[n as usize];
            out.check(lambda == s.a1(), || {
                format!("gens={s} n={n} lambda={lambda} a1={}", s.a1())
            });
        }
        out.check(report.ri_exact <= d.q, || {
            format!("gens={s} ri={} q={}", report.ri_exact, d.q)
        });
    }
    out
}

/// The two-part decomposition at levels `q`, `q + 1` and `q + span` passes
/// its internal size / residue-transversal / order-level validation.
pub fn order_partition_transversal(corpus: &[NumericalSemigroup], span: u64) -> CheckOutcome {
    let mut out = CheckOutcome::new("order_partition_transversal");
    for s in corpus {
        let Ok(d) = s.division_data() else { continue };
        let mut levels = vec![d.q, d.q + 1, d.q + span];
        levels.sort_unstable();
        levels.dedup();
        for n in levels {
            let res = s.order_partition(n);
            out.check(res.is_ok(), || format!("gens={s} n={n} -> {res:?}"));
        }
    }
    out
}

/// Members with `F(S) < a2` stabilize immediately: `lambda(n) = a1` for all
/// `n >= 1` (checked through `max_n`) and the regularity index is 1.
pub fn small_frobenius_ri_one(corpus: &[NumericalSemigroup], max_n: u64) -> CheckOutcome {
    let mut out = CheckOutcome::new("small_frobenius_ri_one");
    for s in corpus {
        if s.regime() == Regime::AboveA2 {
            continue;
        }
        let values = s.hilbert_values(max_n).unwrap();
        for n in 1..=max_n {
            out.check(values[n as usize] == s.a1(), || {
                format!("gens={s} n={n} lambda={}", values[n as usize])
            });
        }
        let ri = s.ri_exact().unwrap().ri_exact;
        out.check(ri == 1, || format!("gens={s} ri={ri}"));
    }
    out
}

/// `q <= corollary_bound` on every member in the `q` regime.
pub fn corollary_bound_dominates(corpus: &[NumericalSemigroup]) -> CheckOutcome {
    let mut out = CheckOutcome::new("corollary_bound_dominates");
    for s in corpus {
        let Ok(d) = s.division_data() else { continue };
        let bound = s.corollary_bound().unwrap();
        out.check(d.q <= bound, || {
            format!("gens={s} q={} corollary_bound={bound}", d.q)
        });
    }
    out
}

/// The Hilbert sequence always stabilizes to the multiplicity `a1`.
pub fn multiplicity_stable(corpus: &[NumericalSemigroup]) -> CheckOutcome {
    let mut out = CheckOutcome::new("multiplicity_stable");
    for s in corpus {
        match s.hilbert_function(crate::filtration::DEFAULT_STABILITY_MARGIN) {
            Ok(h) => {
                out.check(h.stable_value == s.a1(), || {
                    format!("gens={s} stable_value={}", h.stable_value)
                });
                let last = *h.values.last().unwrap();
                out.check(last == s.a1(), || format!("gens={s} tail lambda={last}"));
            }
            Err(e) => out.check(false, || format!("gens={s} hilbert failed: {e}")),
        }
    }
    out
}

/// `S^(n+1)` is contained in `S^(n)`, which is contained in `S`, checked
/// pointwise up to the certified cutoff of level `max_n + 1`.
pub fn filtration_containment(corpus: &[NumericalSemigroup], max_n: u64) -> CheckOutcome {
    let mut out = CheckOutcome::new("filtration_containment");
    for s in corpus {
        let cutoff = s.frobenius() + max_n * s.a1() + 1;
        let table = s.order_table(cutoff).unwrap();
        let mut ok = true;
        let mut witness = 0;
        for v in 0..=cutoff {
            let member = v == 0 || s.contains(v);
            for n in 1..=max_n {
                let inner = table.in_level(v, n + 1);
                let outer = table.in_level(v, n);
                if (inner && !outer) || (outer && !member) {
                    ok = false;
                    witness = v;
                }
            }
        }
        out.check(ok, || format!("gens={s} containment broken at {witness}"));
    }
    out
}

// ---------------------------------------------------------------------------
// Plane (two-generator) identities
// ---------------------------------------------------------------------------

/// Two-generator members: `ri = a1 - 1` exactly, with `lambda < a1` strictly
/// before it and `lambda = a1` from it through `a1 + 10`.
pub fn plane_exact_ri(corpus: &[NumericalSemigroup]) -> CheckOutcome {
    let mut out = CheckOutcome::new("plane_exact_ri");
    for s in corpus {
        if s.gens().count() != 2 {
            continue;
        }
        let a1 = s.a1();
        let top = a1 + 10;
        let (_, bound) = s.ri_bound();
        let extra = (top + 1).saturating_sub(bound).max(10);
        let report = s.regularity_report(extra).unwrap();
        let predicted = s.plane_ri_exact().unwrap();
        out.check(report.ri_exact == a1 - 1, || {
            format!("gens={s} ri={} expected {}", report.ri_exact, a1 - 1)
        });
        out.check(predicted == report.ri_exact, || {
            format!(
                "gens={s} closed form {predicted} vs computed {}",
                report.ri_exact
            )
        });
        for n in 0..a1 - 1 {
            let lambda = report.hilbert.values[n as usize];
            out.check(lambda < a1, || format!("gens={s} n={n} lambda={lambda}"));
        }
        for n in a1 - 1..=top {
            let lambda = report.hilbert.values[n as usize];
            out.check(lambda == a1, || format!("gens={s} n={n} lambda={lambda}"));
        }
    }
    out
}

/// Two-generator members: the closed-form degree-`n` value set equals the
/// set of order-`n` elements for `a1 - 1 <= n <= a1 + 5`.
pub fn plane_basis(corpus: &[NumericalSemigroup]) -> CheckOutcome {
    let mut out = CheckOutcome::new("plane_basis");
    for s in corpus {
        if s.gens().count() != 2 {
            continue;
        }
        let a1 = s.a1();
        let top = a1 + 5;
        let limit = s.frobenius() + top * a1 + 1;
        let table = s.order_table(limit).unwrap();
        for n in a1 - 1..=top {
            let basis = s.plane_graded_basis(n).unwrap();
            let distinct: BTreeSet<u64> = basis.iter().copied().collect();
            out.check(distinct.len() as u64 == a1, || {
                format!("gens={s} n={n} basis values collide")
            });
            let level: BTreeSet<u64> = (1..=limit).filter(|&v| table.ord(v) == Some(n)).collect();
            out.check(distinct == level, || {
                format!("gens={s} n={n} basis={distinct:?} level={level:?}")
            });
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Family invariants
// ---------------------------------------------------------------------------

/// The tight-bound family: `F = 4 a1 - 1`, `q = 2`, `lambda(1) = a1 - 1`,
/// exact regularity index 2.
pub fn sharp_family_invariants(a1_lo: u64, a1_hi: u64) -> CheckOutcome {
    let mut out = CheckOutcome::new("sharp_family_invariants");
    for a1 in a1_lo..=a1_hi {
        let s = families::sharp_family(a1).unwrap();
        out.check(s.frobenius() == 4 * a1 - 1, || {
            format!("gens={s} frobenius={}", s.frobenius())
        });
        let d = s.division_data().unwrap();
        out.check(d.q == 2, || format!("gens={s} q={}", d.q));
        let lambda1 = s.hilbert_value(1).unwrap();
        out.check(lambda1 == a1 - 1, || {
            format!("gens={s} lambda(1)={lambda1}")
        });
        let ri = s.ri_exact().unwrap().ri_exact;
        out.check(ri == 2, || format!("gens={s} ri={ri}"));
    }
    out
}

/// Every corpus member is already a minimal system.
pub fn emits_minimal_systems(corpus: &[NumericalSemigroup]) -> CheckOutcome {
    let mut out = CheckOutcome::new("emits_minimal_systems");
    for s in corpus {
        let ok = NumericalSemigroup::new(s.gens().as_slice()).is_ok();
        out.check(ok, || format!("gens={s} is not minimal"));
    }
    out
}

/// The full battery over one corpus, with a span of `span` levels past `q`
/// and `max_n` levels for the regime-free checks.
pub fn run_all(corpus: &[NumericalSemigroup], span: u64, max_n: u64) -> Vec<CheckOutcome> {
    vec![
        apery_invariants(corpus),
        frobenius_generator_bound(corpus),
        normalize_idempotent(corpus),
        emits_minimal_systems(corpus),
        membership_matches_oracle(corpus),
        frobenius_matches_oracle(corpus),
        order_matches_oracle(corpus),
        level_diff_matches_oracle(corpus, 6),
        frobenius_chain(corpus, max_n.min(12)),
        frobenius_recursion(corpus, span),
        shift_above_q(corpus, span),
        hilbert_stable_from_q(corpus, span),
        order_partition_transversal(corpus, span),
        small_frobenius_ri_one(corpus, max_n),
        corollary_bound_dominates(corpus),
        multiplicity_stable(corpus),
        filtration_containment(corpus, max_n.min(6)),
        plane_exact_ri(corpus),
        plane_basis(corpus),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn battery_passes_on_a_small_mixed_corpus() {
        let mut corpus = plane_corpus(2, 12, 12);
        corpus.extend(sharp_corpus(3, 8).unwrap());
        corpus.extend(random_corpus(11, 20, 4, 40).unwrap());
        for outcome in run_all(&corpus, 4, 8) {
            assert!(outcome.is_pass(), "{outcome}\n{:?}", outcome.samples);
            assert!(outcome.cases > 0, "{} ran no cases", outcome.name);
        }
    }

    #[test]
    fn small_minimal_corpus_is_minimal_and_complete() {
        let corpus = small_minimal_corpus(3, 12);
        // Spot checks: known members and known non-members.
        assert!(corpus.iter().any(|s| s.gens().as_slice() == [2, 3]));
        assert!(corpus.iter().any(|s| s.gens().as_slice() == [4, 9, 10]));
        assert!(!corpus.iter().any(|s| s.gens().as_slice() == [2, 4]));
        assert!(!corpus.iter().any(|s| s.gens().as_slice() == [3, 6, 7]));
        for s in &corpus {
            assert!(s.gens().count() <= 3);
            assert!(s.ar() <= 12);
        }
    }
}
