use std::process::{Command, Output};

use degharm::{PolyLambda, Rational, RenderStyle};
use serde_json::Value;

fn degharm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_degharm")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("UTF-8 output")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

/// Data lines of a text table, split on runs of two or more spaces.
fn text_rows(s: &str) -> Vec<Vec<String>> {
    s.lines()
        .skip(1)
        .map(|l| l.split("  ").map(str::trim).filter(|c| !c.is_empty()).map(String::from).collect())
        .collect()
}

fn poly_from_json(v: &Value) -> PolyLambda {
    let coeffs = v["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|pair| {
            let num = pair[0].as_str().unwrap();
            let den = pair[1].as_str().unwrap();
            format!("{num}/{den}").parse::<Rational>().unwrap()
        })
        .collect();
    PolyLambda::new(coeffs)
}

fn poly_from_csv(field: &str) -> PolyLambda {
    PolyLambda::new(field.split_whitespace().map(|c| c.parse().unwrap()).collect())
}

#[test]
fn table_symbolic() {
    let o = degharm(&["table", "--seq", "H", "--n", "3"]);
    assert_eq!(code(&o), 0);
    let rows = text_rows(&stdout(&o));
    let expected = [["0", "0"], ["1", "1"], ["2", "3/2 − 1/2·λ"], ["3", "11/6 − λ + 1/6·λ²"]];
    assert_eq!(rows, expected.map(|r| r.map(String::from).to_vec()));
}

#[test]
fn table_at_lambda_zero() {
    let o = degharm(&["table", "--seq", "H", "--n", "3", "--lambda", "0"]);
    assert_eq!(code(&o), 0);
    let values: Vec<String> = text_rows(&stdout(&o)).into_iter().map(|r| r[1].clone()).collect();
    assert_eq!(values, ["0", "1", "3/2", "11/6"]);
}

#[test]
fn table_k_and_negative_lambda() {
    let o = degharm(&["table", "--seq", "K", "--n", "2", "--m", "2"]);
    assert_eq!(code(&o), 0);
    let rows = text_rows(&stdout(&o));
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[1], ["2", "2", "7/4 − 1/4·λ"]);

    let o = degharm(&["table", "--seq", "H", "--n", "2", "--lambda", "-1/3"]);
    assert_eq!(code(&o), 0);
    assert_eq!(text_rows(&stdout(&o))[2][1], "5/3");
}

#[test]
fn table_ascii() {
    let o = degharm(&["table", "--seq", "H", "--n", "3", "--ascii"]);
    assert_eq!(text_rows(&stdout(&o))[3][1], "11/6 - L + 1/6*L^2");
}

#[test]
fn table_usage_errors() {
    for args in [
        &["table", "--seq", "K", "--n", "3"][..],
        &["table", "--seq", "H", "--n", "3", "--m", "2"],
        &["table", "--seq", "nope", "--n", "3"],
        &["table", "--seq", "H", "--n", "0"],
        &["table", "--seq", "H", "--n", "3", "--lambda", "1/0"],
        &["table", "--seq", "K", "--n", "3", "--m", "9"],
    ] {
        let o = degharm(args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(!o.stderr.is_empty());
        assert!(o.stdout.is_empty());
    }
    let o = degharm(&["table", "--seq", "K", "--n", "2", "--m", "9", "--allow-large-m"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn verify_json() {
    let o = degharm(&["verify", "--max-n", "10", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["tool"], "degharm");
    assert_eq!(v["command"], "verify");
    assert_eq!(v["report"]["identities"].as_array().unwrap().len(), 22);
    assert!(v["report"]["identities"][0].get("elapsed_ms").is_none());
    assert_eq!(v["report"]["config"]["max_n"], 10);
}

#[test]
fn verify_misprint_witness() {
    let o = degharm(&["verify", "--only", "thm_2_10_as_printed"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("n=2: 3 + λ vs 3/2 − 1/2·λ"), "{out}");
    assert!(out.contains("all expectations met"));
}

#[test]
fn verify_usage_errors() {
    assert_eq!(code(&degharm(&["verify", "--only", "nonsense"])), 2);
    assert_eq!(code(&degharm(&["verify", "--max-n", "0"])), 2);
    assert_eq!(code(&degharm(&["verify", "--max-n", "40", "--series-order", "10"])), 2);
    assert_eq!(code(&degharm(&["verify", "--bogus-flag"])), 2);
}

#[test]
fn verify_csv_lists_records() {
    let o = degharm(&["verify", "--only", "cor_2_2", "--max-n", "3", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let mut r = csv::Reader::from_reader(o.stdout.as_slice());
    let headers = r.headers().unwrap().clone();
    assert_eq!(&headers[0], "id");
    let rows: Vec<csv::StringRecord> = r.records().map(Result::unwrap).collect();
    // 3 cells × (symbolic + 6 samples)
    assert_eq!(rows.len(), 21);
    assert!(rows.iter().all(|row| &row[7] == "pass"));
}

#[test]
fn series_examples() {
    let o = degharm(&["series", "--gf", "H", "--terms", "2"]);
    assert_eq!(code(&o), 0);
    let coeffs: Vec<String> = text_rows(&stdout(&o)).into_iter().map(|r| r[1].clone()).collect();
    assert_eq!(coeffs, ["0", "1", "3/2 − 1/2·λ"]);

    let o = degharm(&["series", "--gf", "lah", "--k", "2", "--terms", "3"]);
    let rows = text_rows(&stdout(&o));
    assert_eq!(rows[3], ["3", "1", "6"]);

    let o = degharm(&["series", "--gf", "degexp", "--x", "1", "--terms", "2"]);
    let coeffs: Vec<String> = text_rows(&stdout(&o)).into_iter().map(|r| r[1].clone()).collect();
    assert_eq!(coeffs, ["1", "1", "1/2 − 1/2·λ"]);
}

#[test]
fn series_usage_errors() {
    assert_eq!(code(&degharm(&["series", "--gf", "nope"])), 2);
    assert_eq!(code(&degharm(&["series", "--gf", "K"])), 2);
    assert_eq!(code(&degharm(&["series", "--gf", "K", "--m", "0"])), 2);
    assert_eq!(code(&degharm(&["series", "--gf", "H", "--k", "2"])), 2);
    assert_eq!(code(&degharm(&["series", "--gf", "H", "--terms", "0"])), 2);
    assert_eq!(code(&degharm(&["series", "--gf", "polylog", "--m", "-2", "--terms", "3"])), 0);
}

#[test]
fn limit_examples() {
    let o = degharm(&["limit", "--seq", "H", "--n", "5"]);
    assert_eq!(code(&o), 0);
    let rows = text_rows(&stdout(&o));
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r.last().unwrap() == "yes"));

    let o = degharm(&["limit", "--seq", "H_order", "--n", "4", "--m", "2", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[3]["classical"]["text"], "205/144");
    assert!(rows.iter().all(|r| r["match"] == true));

    let o = degharm(&["limit", "--seq", "stirling1_unsigned", "--n", "6"]);
    assert_eq!(code(&o), 0);
    let o = degharm(&["limit", "--seq", "deg_derangement", "--n", "8"]);
    assert_eq!(code(&o), 0);

    assert_eq!(code(&degharm(&["limit", "--seq", "K"])), 2);
    assert_eq!(code(&degharm(&["limit", "--seq", "lah", "--n", "3"])), 2);
}

/// Re-rendering the coefficient vectors of CSV and JSON output must give
/// the text output exactly.
#[test]
fn csv_and_json_round_trip() {
    let cases: [&[&str]; 5] = [
        &["table", "--seq", "H", "--n", "12"],
        &["table", "--seq", "K", "--n", "8", "--m", "3"],
        &["table", "--seq", "stirling1_signed", "--n", "6"],
        &["table", "--seq", "deg_derangement", "--n", "7", "--lambda", "-5/7"],
        &["series", "--gf", "K", "--m", "2", "--terms", "9"],
    ];
    for args in cases {
        for ascii in [false, true] {
            let style = if ascii { RenderStyle::Ascii } else { RenderStyle::Unicode };
            let with = |fmt: &str| {
                let mut a = args.to_vec();
                a.extend(["--format", fmt]);
                if ascii {
                    a.push("--ascii");
                }
                let o = degharm(&a);
                assert_eq!(code(&o), 0, "{a:?}");
                stdout(&o)
            };
            // tables end with the value column; series print `n  coeff`
            let pick = |r: Vec<String>| if args[0] == "series" { r[1].clone() } else { r.last().unwrap().clone() };
            let text: Vec<String> = text_rows(&with("text")).into_iter().map(pick).collect();

            let csv_out = with("csv");
            let mut reader = csv::Reader::from_reader(csv_out.as_bytes());
            let headers = reader.headers().unwrap().clone();
            let text_col = headers.iter().position(|h| h == "text").unwrap();
            let coeff_col = headers.iter().position(|h| h == "coeffs").unwrap();
            let mut from_csv = Vec::new();
            for rec in reader.records() {
                let rec = rec.unwrap();
                let p = poly_from_csv(&rec[coeff_col]);
                assert_eq!(p.render(style), &rec[text_col]);
                from_csv.push(p.render(style));
            }
            assert_eq!(from_csv, text, "{args:?} csv");

            let json: Value = serde_json::from_str(&with("json")).unwrap();
            let key = if args[0] == "series" { "coeff" } else { "value" };
            let from_json: Vec<String> = json["rows"]
                .as_array()
                .unwrap()
                .iter()
                .map(|row| {
                    let p = poly_from_json(&row[key]);
                    assert_eq!(p.to_string(), row[key]["text"].as_str().unwrap());
                    p.render(style)
                })
                .collect();
            assert_eq!(from_json, text, "{args:?} json");
        }
    }
}
