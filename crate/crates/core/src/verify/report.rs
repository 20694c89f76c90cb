use std::cmp::Ordering;

use serde::{Serialize, Serializer};

use crate::poly::PolyLambda;
use crate::rational::Rational;
use super::config::SuiteConfig;

/// Expected outcome of an identity over the grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Pass,
    Fail,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// Whether an identity behaved as registered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Met,
    Violated,
    /// An expected failure whose witness lies outside the configured grid.
    Inconclusive,
}

/// Grid position of one check, apart from λ.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Cell {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub part: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trial: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
}

impl Cell {
    pub fn n(n: u64) -> Self {
        Self { n: Some(n), ..Self::default() }
    }

    pub fn part(mut self, part: &'static str) -> Self {
        self.part = Some(part);
        self
    }

    pub fn with_m(mut self, m: u32) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_k(mut self, k: u64) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_trial(mut self, trial: u32) -> Self {
        self.trial = Some(trial);
        self
    }

    /// Compact `part n=2 m=1` label for text output.
    pub fn label(&self) -> String {
        let mut parts = Vec::new();
        if let Some(p) = self.part {
            parts.push(p.to_string());
        }
        if let Some(t) = self.trial {
            parts.push(format!("trial={t}"));
        }
        if let Some(m) = self.m {
            parts.push(format!("m={m}"));
        }
        if let Some(k) = self.k {
            parts.push(format!("k={k}"));
        }
        if let Some(n) = self.n {
            parts.push(format!("n={n}"));
        }
        parts.join(" ")
    }
}

/// Either the symbolic check or a point check at the `index`-th λ sample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LambdaCell {
    Symbolic,
    Sample { index: usize, value: Rational },
}

impl LambdaCell {
    fn rank(&self) -> usize {
        match self {
            LambdaCell::Symbolic => 0,
            LambdaCell::Sample { index, .. } => index + 1,
        }
    }
}

impl Ord for LambdaCell {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for LambdaCell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Display for LambdaCell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LambdaCell::Symbolic => f.write_str("symbolic"),
            LambdaCell::Sample { value, .. } => write!(f, "{value}"),
        }
    }
}

impl Serialize for LambdaCell {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub lhs: PolyLambda,
    pub rhs: PolyLambda,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub id: &'static str,
    pub cell: Cell,
    pub lambda: LambdaCell,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentitySummary {
    pub id: &'static str,
    pub description: &'static str,
    pub expected: Polarity,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub verdict: Verdict,
    /// Wall-clock time; omitted from serialized output unless kept explicitly,
    /// so that reports are reproducible byte for byte.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub config: SuiteConfig,
    pub identities: Vec<IdentitySummary>,
    pub records: Vec<Record>,
}

impl VerificationReport {
    /// True when every identity met its registered expectation (an
    /// inconclusive expected failure does not count against the run).
    pub fn all_expectations_met(&self) -> bool {
        self.identities.iter().all(|s| s.verdict != Verdict::Violated)
    }

    pub fn summary(&self, id: &str) -> Option<&IdentitySummary> {
        self.identities.iter().find(|s| s.id == id)
    }

    pub fn records_for<'a>(&'a self, id: &'a str) -> impl Iterator<Item = &'a Record> + 'a {
        self.records.iter().filter(move |r| r.id == id)
    }

    /// Drops wall-clock timings.
    pub fn without_timings(mut self) -> Self {
        for s in &mut self.identities {
            s.elapsed_ms = None;
        }
        self
    }
}
