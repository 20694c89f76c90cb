use degharm::gf;
use degharm::sequences::{build_table, SequenceId, TableIndex};
use degharm::verify::{self, LambdaCell, Record, Status, SuiteConfig, Verdict};
use degharm::{PolyLambda, Rational, RenderStyle, TruncatedSeries};
use serde::Serialize;

use crate::output::{coeff_field, csv_table, json_report, json_rows, style, text_table, Format};
use crate::{Emitted, GfId, LimitArgs, SeriesArgs, Shared, UsageError, VerifyArgs};

/// Symbolic failures listed per identity in text output; JSON and CSV list all.
const TEXT_WITNESS_LIMIT: usize = 5;

fn ok(stdout: String) -> Result<Emitted, UsageError> {
    Ok(Emitted { stdout, violated: false })
}

fn index_headers(m: bool, k: bool) -> Vec<&'static str> {
    let mut h = vec!["n"];
    if m {
        h.push("m");
    }
    if k {
        h.push("k");
    }
    h
}

fn index_cells(idx: &TableIndex, m: bool, k: bool) -> Vec<String> {
    let mut c = vec![idx.n.to_string()];
    if m {
        c.push(idx.m.map(|v| v.to_string()).unwrap_or_default());
    }
    if k {
        c.push(idx.k.map(|v| v.to_string()).unwrap_or_default());
    }
    c
}

#[derive(Serialize)]
struct ValueRow<'a> {
    #[serde(flatten)]
    index: TableIndex,
    value: &'a PolyLambda,
}

pub fn table(
    shared: &Shared,
    seq: SequenceId,
    n: u64,
    m: Option<u32>,
    k: Option<u64>,
) -> Result<Emitted, UsageError> {
    let mut table = build_table(seq, n, m, k)?;
    if let Some(x) = &shared.lambda {
        table = table.evaluate(x);
    }
    let (has_m, has_k) = (seq.needs_m(), seq.takes_k());
    let st = style(shared.ascii);
    let out = match shared.format {
        Format::Json => {
            let rows: Vec<ValueRow> =
                table.rows.iter().map(|r| ValueRow { index: r.index, value: &r.value }).collect();
            json_rows("table", &rows)
        }
        Format::Text => {
            let mut headers = index_headers(has_m, has_k);
            headers.push(seq.name());
            let rows: Vec<Vec<String>> = table
                .rows
                .iter()
                .map(|r| {
                    let mut c = index_cells(&r.index, has_m, has_k);
                    c.push(r.value.render(st));
                    c
                })
                .collect();
            text_table(&headers, &rows)
        }
        Format::Csv => {
            let mut headers = index_headers(has_m, has_k);
            headers.extend(["text", "coeffs"]);
            let rows: Vec<Vec<String>> = table
                .rows
                .iter()
                .map(|r| {
                    let mut c = index_cells(&r.index, has_m, has_k);
                    c.push(r.value.render(st));
                    c.push(coeff_field(&r.value));
                    c
                })
                .collect();
            csv_table(&headers, &rows)
        }
    };
    ok(out)
}

fn suite_config(shared: &Shared, a: &VerifyArgs) -> SuiteConfig {
    let defaults = SuiteConfig::default();
    let lambda_samples = match (&shared.lambda, &a.lambda_samples) {
        (Some(x), _) => vec![x.clone()],
        (None, Some(v)) => v.clone(),
        (None, None) => defaults.lambda_samples,
    };
    SuiteConfig {
        max_n: a.max_n,
        max_m: a.max_m,
        series_order: a.series_order.unwrap_or(defaults.series_order.max(a.max_n as usize)),
        lambda_samples,
        random_seq_trials: a.trials,
        seed: shared.seed,
    }
}

fn render_record_value(r: &Record, st: RenderStyle) -> (String, String) {
    r.witness
        .as_ref()
        .map(|w| (w.lhs.render(st), w.rhs.render(st)))
        .unwrap_or_default()
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Skipped => "skipped",
    }
}

pub fn verify(shared: &Shared, a: VerifyArgs) -> Result<Emitted, UsageError> {
    let cfg = suite_config(shared, &a);
    let report = if a.only.is_empty() {
        verify::run_all(&cfg)?
    } else {
        let ids: Vec<&str> = a.only.iter().map(String::as_str).collect();
        verify::run_ids(&ids, &cfg)?
    };
    let report = if a.timings { report } else { report.without_timings() };
    let st = style(shared.ascii);
    let out = match shared.format {
        Format::Json => json_report("verify", &report),
        Format::Csv => {
            let headers =
                ["id", "part", "trial", "m", "k", "n", "lambda", "status", "lhs", "rhs", "reason"];
            let opt = |v: Option<String>| v.unwrap_or_default();
            let rows: Vec<Vec<String>> = report
                .records
                .iter()
                .map(|r| {
                    let (lhs, rhs) = render_record_value(r, st);
                    vec![
                        r.id.to_string(),
                        opt(r.cell.part.map(str::to_string)),
                        opt(r.cell.trial.map(|v| v.to_string())),
                        opt(r.cell.m.map(|v| v.to_string())),
                        opt(r.cell.k.map(|v| v.to_string())),
                        opt(r.cell.n.map(|v| v.to_string())),
                        r.lambda.to_string(),
                        status_name(r.status).to_string(),
                        lhs,
                        rhs,
                        opt(r.reason.clone()),
                    ]
                })
                .collect();
            csv_table(&headers, &rows)
        }
        Format::Text => verify_text(&report, st, a.timings),
    };
    Ok(Emitted { stdout: out, violated: !report.all_expectations_met() })
}

fn verify_text(report: &verify::VerificationReport, st: RenderStyle, timings: bool) -> String {
    let c = &report.config;
    let samples: Vec<String> = c.lambda_samples.iter().map(|x| x.to_string()).collect();
    let lambda = if st == RenderStyle::Ascii { "L" } else { "λ" };
    let mut out = format!(
        "max_n={} max_m={} series_order={} trials={} seed={} {lambda} samples: {}\n\n",
        c.max_n,
        c.max_m,
        c.series_order,
        c.random_seq_trials,
        c.seed,
        samples.join(", ")
    );
    let mut headers = vec!["verdict", "identity", "expected", "pass", "fail", "skipped"];
    if timings {
        headers.push("ms");
    }
    let rows: Vec<Vec<String>> = report
        .identities
        .iter()
        .map(|s| {
            let mut row = vec![
                format!("{:?}", s.verdict).to_lowercase(),
                s.id.to_string(),
                format!("{:?}", s.expected).to_lowercase(),
                s.passed.to_string(),
                s.failed.to_string(),
                s.skipped.to_string(),
            ];
            if timings {
                row.push(s.elapsed_ms.map(|ms| format!("{ms:.1}")).unwrap_or_default());
            }
            row
        })
        .collect();
    out.push_str(&text_table(&headers, &rows));

    for s in report.identities.iter().filter(|s| s.failed > 0) {
        let failures: Vec<&Record> = report
            .records_for(s.id)
            .filter(|r| r.status == Status::Fail && r.lambda == LambdaCell::Symbolic)
            .collect();
        out.push_str(&format!("\n{} failures:\n", s.id));
        for r in failures.iter().take(TEXT_WITNESS_LIMIT) {
            let (lhs, rhs) = render_record_value(r, st);
            out.push_str(&format!("  {}: {lhs} vs {rhs}\n", r.cell.label()));
        }
        if failures.len() > TEXT_WITNESS_LIMIT {
            out.push_str(&format!("  … and {} more\n", failures.len() - TEXT_WITNESS_LIMIT));
        }
    }

    let violated: Vec<&str> = report
        .identities
        .iter()
        .filter(|s| s.verdict == Verdict::Violated)
        .map(|s| s.id)
        .collect();
    if violated.is_empty() {
        out.push_str("\nall expectations met\n");
    } else {
        out.push_str(&format!("\nexpectations violated: {}\n", violated.join(", ")));
    }
    out
}

fn build_series(a: &SeriesArgs) -> Result<(TruncatedSeries, bool), UsageError> {
    let order = a.terms as usize;
    let usage = |msg: &str| UsageError(format!("--gf {}: {msg}", gf_name(a.gf)));
    let wants_m = matches!(a.gf, GfId::HOrder | GfId::K | GfId::Polylog);
    let wants_k = matches!(a.gf, GfId::Stirling | GfId::Lah);
    if a.m.is_some() && !wants_m {
        return Err(usage("takes no --m"));
    }
    if a.k.is_some() && !wants_k {
        return Err(usage("takes no --k"));
    }
    if a.x.is_some() && a.gf != GfId::Degexp {
        return Err(usage("takes no --x"));
    }
    let positive_m = || match a.m {
        Some(m) if m >= 1 => Ok(m as u32),
        Some(_) => Err(usage("m must be at least 1")),
        None => Err(usage("requires --m")),
    };
    let k = || a.k.ok_or_else(|| usage("requires --k"));
    Ok(match a.gf {
        GfId::H => (gf::gf_h(order), false),
        GfId::HOrder => (gf::gf_h_order(positive_m()?, order)?, false),
        GfId::K => (gf::gf_k(positive_m()?, order)?, false),
        GfId::Polylog => match a.m {
            Some(m) => (gf::gf_polylog(m, order), false),
            None => return Err(usage("requires --m")),
        },
        GfId::Deglog => (gf::gf_deg_log(order), false),
        GfId::Degexp => {
            let x = a.x.clone().unwrap_or_else(Rational::one);
            (gf::gf_deg_exp(&x, order), true)
        }
        GfId::Stirling => (gf::gf_stirling_unsigned(k()?, order), true),
        GfId::Lah => (gf::gf_lah(k()?, order), true),
        GfId::Derangement => (gf::gf_deg_derangement(order), true),
    })
}

fn gf_name(g: GfId) -> String {
    use clap::ValueEnum;
    g.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

#[derive(Serialize)]
struct SeriesRow<'a> {
    n: usize,
    coeff: &'a PolyLambda,
    /// `n!·coeff` for exponential generating functions.
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<&'a PolyLambda>,
}

pub fn series(shared: &Shared, a: SeriesArgs) -> Result<Emitted, UsageError> {
    let (mut s, egf) = build_series(&a)?;
    if let Some(x) = &shared.lambda {
        s = s.eval_lambda(x);
    }
    let values = egf.then(|| s.egf_to_sequence());
    let st = style(shared.ascii);
    let value = |n: usize| values.as_ref().map(|v| &v[n]);
    let out = match shared.format {
        Format::Json => {
            let rows: Vec<SeriesRow> = (0..=s.order())
                .map(|n| SeriesRow { n, coeff: s.coeff(n), value: value(n) })
                .collect();
            json_rows("series", &rows)
        }
        Format::Text => {
            let mut headers = vec!["n", "coeff"];
            if egf {
                headers.push("n!·coeff");
            }
            let rows: Vec<Vec<String>> = (0..=s.order())
                .map(|n| {
                    let mut row = vec![n.to_string(), s.coeff(n).render(st)];
                    row.extend(value(n).map(|v| v.render(st)));
                    row
                })
                .collect();
            if st == RenderStyle::Ascii && egf {
                headers[2] = "n!*coeff";
            }
            text_table(&headers, &rows)
        }
        Format::Csv => {
            let mut headers = vec!["n", "text", "coeffs"];
            if egf {
                headers.extend(["value_text", "value_coeffs"]);
            }
            let rows: Vec<Vec<String>> = (0..=s.order())
                .map(|n| {
                    let c = s.coeff(n);
                    let mut row = vec![n.to_string(), c.render(st), coeff_field(c)];
                    if let Some(v) = value(n) {
                        row.extend([v.render(st), coeff_field(v)]);
                    }
                    row
                })
                .collect();
            csv_table(&headers, &rows)
        }
    };
    ok(out)
}

#[derive(Serialize)]
struct LimitRow {
    #[serde(flatten)]
    index: TableIndex,
    degenerate: PolyLambda,
    classical: PolyLambda,
    #[serde(rename = "match")]
    matches: bool,
}

pub fn limit(shared: &Shared, a: LimitArgs) -> Result<Emitted, UsageError> {
    if !a.seq.has_classical_limit() {
        let supported: Vec<&str> = SequenceId::ALL
            .into_iter()
            .filter(|s| s.has_classical_limit())
            .map(SequenceId::name)
            .collect();
        return Err(UsageError(format!(
            "sequence {} has no classical counterpart; choose one of {}",
            a.seq,
            supported.join(", ")
        )));
    }
    if shared.lambda.is_some() {
        return Err(UsageError("limit always evaluates at λ = 0; drop --lambda".into()));
    }
    let table = build_table(a.seq, a.n, a.m, a.k)?.evaluate(&Rational::zero());
    let rows: Vec<LimitRow> = table
        .rows
        .into_iter()
        .filter(|r| r.index.n >= 1)
        .map(|r| {
            let classical: PolyLambda = a
                .seq
                .classical_value(&r.index)
                .expect("sequence has a classical value")
                .into();
            LimitRow { matches: classical == r.value, index: r.index, degenerate: r.value, classical }
        })
        .collect();
    let violated = rows.iter().any(|r| !r.matches);
    let (has_m, has_k) = (a.seq.needs_m(), a.seq.takes_k());
    let st = style(shared.ascii);
    let yes_no = |b: bool| if b { "yes" } else { "no" }.to_string();
    let out = match shared.format {
        Format::Json => json_rows("limit", &rows),
        Format::Text => {
            let mut headers = index_headers(has_m, has_k);
            headers.extend(["degenerate at 0", "classical", "match"]);
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    let mut c = index_cells(&r.index, has_m, has_k);
                    c.extend([r.degenerate.render(st), r.classical.render(st), yes_no(r.matches)]);
                    c
                })
                .collect();
            text_table(&headers, &body)
        }
        Format::Csv => {
            let mut headers = index_headers(has_m, has_k);
            headers.extend(["degenerate", "classical", "match"]);
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    let mut c = index_cells(&r.index, has_m, has_k);
                    c.extend([r.degenerate.render(st), r.classical.render(st), r.matches.to_string()]);
                    c
                })
                .collect();
            csv_table(&headers, &body)
        }
    };
    Ok(Emitted { stdout: out, violated })
}
