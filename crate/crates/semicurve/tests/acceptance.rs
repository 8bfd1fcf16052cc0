//! Acceptance suite: one test per shipped guarantee, each pinned to its
//! corpus, its exact expected values, and a wall-clock budget. Every check
//! is exact integer equality; there are no tolerances to tune.
//!
//! Run with `cargo test -p semicurve --test acceptance` (add
//! `-- --nocapture` to see the one-line summaries).

use semicurve::{verify, NumericalSemigroup, Regime};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

/// Seed and scale of the random corpus: 200 members in the `q` regime drawn
/// from streams with up to 6 generators bounded by 200.
const SEED: u64 = 7;
const ABOVE_COUNT: usize = 200;
const MAX_R: u64 = 6;
const MAX_GEN: u64 = 200;
/// Levels past `q` over which stabilization identities are re-checked.
const SPAN: u64 = 10;

fn above_corpus() -> &'static [NumericalSemigroup] {
    static CORPUS: OnceLock<Vec<NumericalSemigroup>> = OnceLock::new();
    CORPUS
        .get_or_init(|| verify::random_above_a2_corpus(SEED, ABOVE_COUNT, MAX_R, MAX_GEN).unwrap())
}

fn plane_corpus() -> &'static [NumericalSemigroup] {
    static CORPUS: OnceLock<Vec<NumericalSemigroup>> = OnceLock::new();
    // Every coprime pair with a2 at most 60.
    CORPUS.get_or_init(|| verify::plane_corpus(2, 59, 60))
}

fn small_minimal() -> &'static [NumericalSemigroup] {
    static CORPUS: OnceLock<Vec<NumericalSemigroup>> = OnceLock::new();
    CORPUS.get_or_init(|| verify::small_minimal_corpus(4, 30))
}

fn finish(label: &str, budget: Duration, started: Instant, outcomes: &[verify::CheckOutcome]) {
    let elapsed = started.elapsed();
    for outcome in outcomes {
        assert!(
            outcome.is_pass(),
            "{label}: {outcome}\n{}",
            outcome.samples.join("\n")
        );
        assert!(outcome.cases > 0, "{label}: {} ran no cases", outcome.name);
    }
    let cases: u64 = outcomes.iter().map(|o| o.cases).sum();
    println!("PASS {label}: {cases} checks in {elapsed:?} (budget {budget:?})");
    assert!(
        elapsed < budget,
        "{label} took {elapsed:?}, budget {budget:?}"
    );
}

#[test]
fn a01_plane_exact_regularity_index() {
    let t = Instant::now();
    let out = verify::plane_exact_ri(plane_corpus());
    finish("plane exact ri", Duration::from_secs(10), t, &[out]);
}

#[test]
fn a02_plane_graded_basis_matches_order_levels() {
    let t = Instant::now();
    let out = verify::plane_basis(plane_corpus());
    finish("plane basis", Duration::from_secs(10), t, &[out]);
}

#[test]
fn a03_filtration_frobenius_recursion_and_bound() {
    let t = Instant::now();
    let out = verify::frobenius_recursion(above_corpus(), SPAN);
    finish("frobenius recursion", Duration::from_secs(30), t, &[out]);
}

#[test]
fn a04_shift_by_multiplicity_from_q_on() {
    let t = Instant::now();
    let out = verify::shift_above_q(above_corpus(), SPAN);
    finish("level shift", Duration::from_secs(30), t, &[out]);
}

#[test]
fn a05_hilbert_stabilizes_by_q_with_residue_transversal() {
    let t = Instant::now();
    let stable = verify::hilbert_stable_from_q(above_corpus(), SPAN);
    let partition = verify::order_partition_transversal(above_corpus(), SPAN);
    finish(
        "hilbert stabilization",
        Duration::from_secs(30),
        t,
        &[stable, partition],
    );
}

#[test]
fn a06_sharp_family_meets_the_bound() {
    let t = Instant::now();
    let out = verify::sharp_family_invariants(3, 40);
    finish("sharp family", Duration::from_secs(5), t, &[out]);
}

#[test]
fn a07_corollary_bound_dominates_q() {
    let t = Instant::now();
    let out = verify::corollary_bound_dominates(above_corpus());
    finish("corollary bound", Duration::from_secs(5), t, &[out]);
}

#[test]
fn a08_small_frobenius_regimes_have_ri_one() {
    let t = Instant::now();
    // Members of the random stream that fall below the q regime, plus fixed
    // representatives of both small-Frobenius cases.
    let mut corpus: Vec<NumericalSemigroup> = verify::random_corpus(SEED, 400, MAX_R, MAX_GEN)
        .unwrap()
        .into_iter()
        .filter(|s| s.regime() != Regime::AboveA2)
        .collect();
    corpus.push(NumericalSemigroup::new(&[4, 5, 6, 7]).unwrap());
    corpus.push(NumericalSemigroup::new(&[3, 7, 8]).unwrap());
    corpus.push(NumericalSemigroup::new(&[4, 6, 7, 9]).unwrap());
    assert!(corpus.len() >= 3 + 2, "regime corpus unexpectedly thin");

    let both = [
        NumericalSemigroup::new(&[4, 5, 6, 7]).unwrap().regime(),
        NumericalSemigroup::new(&[3, 7, 8]).unwrap().regime(),
    ];
    assert_eq!(both, [Regime::BelowA1, Regime::BetweenA1A2]);

    let out = verify::small_frobenius_ri_one(&corpus, 12);
    finish("small frobenius ri", Duration::from_secs(5), t, &[out]);
}

#[test]
fn a09_fast_paths_match_brute_force() {
    let t = Instant::now();
    let corpus = small_minimal();
    let outcomes = [
        verify::membership_matches_oracle(corpus),
        verify::order_matches_oracle(corpus),
        verify::frobenius_matches_oracle(corpus),
        verify::level_diff_matches_oracle(corpus, 6),
    ];
    finish("oracle equivalence", Duration::from_secs(60), t, &outcomes);
}

#[test]
fn a10_hilbert_stabilizes_to_multiplicity_everywhere() {
    let t = Instant::now();
    let mut corpus = above_corpus().to_vec();
    corpus.extend(verify::random_corpus(SEED, 400, MAX_R, MAX_GEN).unwrap());
    corpus.extend_from_slice(plane_corpus());
    corpus.extend(verify::sharp_corpus(3, 40).unwrap());
    let out = verify::multiplicity_stable(&corpus);
    finish("multiplicity", Duration::from_secs(30), t, &[out]);
}
