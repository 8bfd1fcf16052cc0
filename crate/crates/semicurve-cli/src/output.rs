//! Machine- and human-readable renderings of the invariant reports.

use semicurve::{NumericalSemigroup, Regime};
use serde::{Deserialize, Serialize};

/// Flat report for one semigroup. Snake-case keys, quantities that only
/// exist in the `q` regime are omitted elsewhere. This is the JSON schema of
/// `info` and the column source of the sweep CSV.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct InfoReport {
    pub gens: Vec<u64>,
    /// True when normalization dropped redundant input generators.
    pub normalized: bool,
    pub a1: u64,
    pub a2: u64,
    pub ar: u64,
    pub frobenius: u64,
    pub conductor: u64,
    pub gaps_count: u64,
    pub multiplicity: u64,
    pub regime: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<u64>,
    pub theorem_bound: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub corollary_bound: Option<u64>,
    pub ri_exact: u64,
    pub hilbert: Vec<u64>,
}

impl InfoReport {
    pub fn new(
        semigroup: &NumericalSemigroup,
        extra: u64,
        normalized: bool,
    ) -> Result<Self, semicurve::Error> {
        let report = semigroup.regularity_report(extra)?;
        let division = match report.regime {
            Regime::AboveA2 => Some(semigroup.division_data()?),
            _ => None,
        };
        Ok(InfoReport {
            gens: semigroup.gens().as_slice().to_vec(),
            normalized,
            a1: semigroup.a1(),
            a2: semigroup.a2(),
            ar: semigroup.ar(),
            frobenius: semigroup.frobenius(),
            conductor: semigroup.conductor(),
            gaps_count: semigroup.genus(),
            multiplicity: semigroup.multiplicity(),
            regime: report.regime.to_string(),
            delta: division.map(|d| d.delta),
            epsilon: division.map(|d| d.epsilon),
            q: division.map(|d| d.q),
            tau: division.map(|d| d.tau),
            theorem_bound: report.theorem_bound,
            corollary_bound: report.corollary_bound,
            ri_exact: report.ri_exact,
            hilbert: report.hilbert.values,
        })
    }

    pub fn render_table(&self) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: String| {
            out.push_str(&format!("{k:<16} {v}\n"));
        };
        line("generators:", join(&self.gens, ","));
        if self.normalized {
            line("normalized:", "yes (redundant generators dropped)".into());
        }
        line("multiplicity:", self.multiplicity.to_string());
        line("frobenius:", self.frobenius.to_string());
        line("conductor:", self.conductor.to_string());
        line("gaps:", self.gaps_count.to_string());
        line("regime:", self.regime.clone());
        if let (Some(d), Some(e), Some(q), Some(t)) = (self.delta, self.epsilon, self.q, self.tau) {
            line("delta:", d.to_string());
            line("epsilon:", e.to_string());
            line("q:", q.to_string());
            line("tau:", t.to_string());
        }
        line("theorem_bound:", self.theorem_bound.to_string());
        if let Some(c) = self.corollary_bound {
            line("corollary_bound:", c.to_string());
        }
        line("ri_exact:", self.ri_exact.to_string());
        line("hilbert:", join(&self.hilbert, " "));
        out
    }

    /// Header of the sweep CSV; `sweep_row` follows the same column order.
    pub const SWEEP_HEADER: &'static str =
        "gens,a1,a2,ar,frobenius,regime,q,tau,ri_exact,theorem_bound,corollary_bound,gap_q_minus_ri";

    pub fn sweep_row(&self) -> String {
        let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
        let gap = self.q.map(|q| q - self.ri_exact);
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            join(&self.gens, ";"),
            self.a1,
            self.a2,
            self.ar,
            self.frobenius,
            self.regime,
            opt(self.q),
            opt(self.tau),
            self.ri_exact,
            self.theorem_bound,
            opt(self.corollary_bound),
            opt(gap),
        )
    }
}

/// JSON payload of the `hilbert` subcommand.
#[derive(Debug, Serialize, Deserialize)]
pub struct HilbertReport {
    pub gens: Vec<u64>,
    pub hilbert: Vec<u64>,
    /// Running sums of the values, i.e. the dimensions of the quotients by
    /// successive powers of the maximal ideal.
    pub cumulative: Vec<u64>,
}

impl HilbertReport {
    pub fn new(semigroup: &NumericalSemigroup, max_n: u64) -> Result<Self, semicurve::Error> {
        let hilbert = semigroup.hilbert_values(max_n)?;
        let cumulative = hilbert
            .iter()
            .scan(0u64, |acc, &v| {
                *acc += v;
                Some(*acc)
            })
            .collect();
        Ok(HilbertReport {
            gens: semigroup.gens().as_slice().to_vec(),
            hilbert,
            cumulative,
        })
    }

    pub fn render_table(&self) -> String {
        let mut out = format!("{:>6} {:>8} {:>12}\n", "n", "lambda", "cumulative");
        for (n, (l, c)) in self.hilbert.iter().zip(&self.cumulative).enumerate() {
            out.push_str(&format!("{n:>6} {l:>8} {c:>12}\n"));
        }
        out
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::from("n,lambda,cumulative\n");
        for (n, (l, c)) in self.hilbert.iter().zip(&self.cumulative).enumerate() {
            out.push_str(&format!("{n},{l},{c}\n"));
        }
        out
    }
}

pub fn join(values: &[u64], sep: &str) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}
