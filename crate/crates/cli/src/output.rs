use clap::ValueEnum;
use degharm::{PolyLambda, RenderStyle};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

pub fn style(ascii: bool) -> RenderStyle {
    if ascii {
        RenderStyle::Ascii
    } else {
        RenderStyle::Unicode
    }
}

/// Raw coefficients as space-separated `num/den` in ascending powers.
pub fn coeff_field(p: &PolyLambda) -> String {
    p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    tool: &'static str,
    version: &'static str,
    command: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    rows: Option<&'a T>,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<&'a T>,
}

fn envelope<T: Serialize>(command: &str, rows: Option<&T>, report: Option<&T>) -> String {
    let env = Envelope { tool: "degharm", version: env!("CARGO_PKG_VERSION"), command, rows, report };
    let mut s = serde_json::to_string_pretty(&env).expect("report values always serialize");
    s.push('\n');
    s
}

pub fn json_rows<T: Serialize>(command: &str, rows: &T) -> String {
    envelope(command, Some(rows), None)
}

pub fn json_report<T: Serialize>(command: &str, report: &T) -> String {
    envelope(command, None, Some(report))
}

/// Left-aligned columns separated by two spaces, with a header line.
pub fn text_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let mut l = String::new();
        for (i, cell) in cells.enumerate() {
            if i > 0 {
                l.push_str("  ");
            }
            l.push_str(cell);
            l.extend(std::iter::repeat_n(' ', widths[i] - cell.chars().count()));
        }
        out.push_str(l.trim_end());
        out.push('\n');
    };
    line(&mut headers.iter().copied());
    for row in rows {
        line(&mut row.iter().map(String::as_str));
    }
    out
}

pub fn csv_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(headers).expect("writing to memory");
    for row in rows {
        w.write_record(row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("input was UTF-8")
}
