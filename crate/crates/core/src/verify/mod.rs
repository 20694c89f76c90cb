//! Registry-driven verification of every identity over a configurable grid.
//!
//! Each check compares two polynomials in λ. A check is first compared
//! symbolically (coefficient by coefficient) and then, for λ-dependent
//! identities, at each configured λ sample.
//!
//! ```
//! use degharm::verify::{run_identity, SuiteConfig, Verdict};
//!
//! let cfg = SuiteConfig { max_n: 6, max_m: 2, series_order: 8, ..SuiteConfig::default() };
//! let report = run_identity("thm_2_1", &cfg).unwrap();
//! assert_eq!(report.identities[0].verdict, Verdict::Met);
//! assert_eq!(report.identities[0].failed, 0);
//! ```

mod config;
mod identities;
mod report;

use std::time::Instant;

use rayon::prelude::*;

use crate::Error;

pub use config::SuiteConfig;
pub use identities::{random_sequences, registry, Identity, ENUMERATION_LIMIT, RANDOM_SEQ_LEN};
pub use report::{
    Cell, IdentitySummary, LambdaCell, Polarity, Record, Status, Verdict, VerificationReport,
    Witness,
};

use identities::{Outcome, MISPRINT_WITNESS_N};

/// Ids of every registered identity, sorted.
pub fn identity_ids() -> Vec<&'static str> {
    registry().iter().map(|i| i.id).collect()
}

/// Runs the whole registry.
pub fn run_all(cfg: &SuiteConfig) -> Result<VerificationReport, Error> {
    run_selected(registry().iter().collect(), cfg)
}

/// Runs a single identity.
pub fn run_identity(id: &str, cfg: &SuiteConfig) -> Result<VerificationReport, Error> {
    run_ids(&[id], cfg)
}

/// Runs the named identities; unknown ids are an error.
pub fn run_ids(ids: &[&str], cfg: &SuiteConfig) -> Result<VerificationReport, Error> {
    let mut chosen = Vec::with_capacity(ids.len());
    for id in ids {
        let ident = registry()
            .iter()
            .find(|i| i.id == *id)
            .ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
        if !chosen.iter().any(|c: &&Identity| c.id == ident.id) {
            chosen.push(ident);
        }
    }
    run_selected(chosen, cfg)
}

fn run_selected(mut chosen: Vec<&'static Identity>, cfg: &SuiteConfig) -> Result<VerificationReport, Error> {
    cfg.validate()?;
    chosen.sort_by_key(|i| i.id);
    let results: Vec<(IdentitySummary, Vec<Record>)> =
        chosen.par_iter().map(|ident| run_one(ident, cfg)).collect();
    let mut identities = Vec::with_capacity(results.len());
    let mut records = Vec::new();
    for (summary, mut recs) in results {
        identities.push(summary);
        records.append(&mut recs);
    }
    records.sort_by(|a, b| (a.id, &a.cell, &a.lambda).cmp(&(b.id, &b.cell, &b.lambda)));
    Ok(VerificationReport { config: cfg.clone(), identities, records })
}

fn run_one(ident: &Identity, cfg: &SuiteConfig) -> (IdentitySummary, Vec<Record>) {
    let start = Instant::now();
    let mut records = Vec::new();
    for outcome in (ident.run)(cfg) {
        match outcome {
            Outcome::Skip { cell, reason } => records.push(Record {
                id: ident.id,
                cell,
                lambda: LambdaCell::Symbolic,
                status: Status::Skipped,
                witness: None,
                reason: Some(reason),
            }),
            Outcome::Check { cell, lhs, rhs } => {
                let symbolic_ok = lhs == rhs;
                records.push(Record {
                    id: ident.id,
                    cell: cell.clone(),
                    lambda: LambdaCell::Symbolic,
                    status: if symbolic_ok { Status::Pass } else { Status::Fail },
                    witness: (!symbolic_ok)
                        .then(|| Witness { lhs: lhs.clone(), rhs: rhs.clone() }),
                    reason: None,
                });
                if !ident.lambda_dependent {
                    continue;
                }
                for (index, x) in cfg.lambda_samples.iter().enumerate() {
                    let (l, r) = (lhs.eval(x), rhs.eval(x));
                    let ok = l == r;
                    let reason = (!ok && symbolic_ok)
                        .then(|| "point check disagrees with symbolic equality".to_string());
                    records.push(Record {
                        id: ident.id,
                        cell: cell.clone(),
                        lambda: LambdaCell::Sample { index, value: x.clone() },
                        status: if ok { Status::Pass } else { Status::Fail },
                        witness: (!ok).then(|| Witness { lhs: l.into(), rhs: r.into() }),
                        reason,
                    });
                }
            }
        }
    }
    let count = |s| records.iter().filter(|r| r.status == s).count();
    let (passed, failed, skipped) = (count(Status::Pass), count(Status::Fail), count(Status::Skipped));
    let verdict = match ident.expected {
        Polarity::Pass if failed == 0 => Verdict::Met,
        Polarity::Pass => Verdict::Violated,
        Polarity::Fail if failed > 0 => Verdict::Met,
        Polarity::Fail if cfg.max_n < MISPRINT_WITNESS_N => Verdict::Inconclusive,
        Polarity::Fail => Verdict::Violated,
    };
    let summary = IdentitySummary {
        id: ident.id,
        description: ident.description,
        expected: ident.expected,
        passed,
        failed,
        skipped,
        verdict,
        elapsed_ms: Some(start.elapsed().as_secs_f64() * 1e3),
    };
    (summary, records)
}
