use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::poly::PolyLambda;
use crate::rational::Rational;
use crate::Error;

use super::classical::{derangement, harmonic, harmonic_order, lah, stirling1_unsigned_classical};
use super::harmonic::{h_def_table, h_order};
use super::kseq::k_nested;
use super::stirling::{deg_derangement, deg_stirling1_triangle};

/// Sequences that can be tabulated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SequenceId {
    H,
    HOrder,
    K,
    Stirling1Unsigned,
    Stirling1Signed,
    Lah,
    Derangement,
    DegDerangement,
    Harmonic,
    HarmonicOrder,
}

impl SequenceId {
    pub const ALL: [SequenceId; 10] = [
        SequenceId::H,
        SequenceId::HOrder,
        SequenceId::K,
        SequenceId::Stirling1Unsigned,
        SequenceId::Stirling1Signed,
        SequenceId::Lah,
        SequenceId::Derangement,
        SequenceId::DegDerangement,
        SequenceId::Harmonic,
        SequenceId::HarmonicOrder,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SequenceId::H => "H",
            SequenceId::HOrder => "H_order",
            SequenceId::K => "K",
            SequenceId::Stirling1Unsigned => "stirling1_unsigned",
            SequenceId::Stirling1Signed => "stirling1_signed",
            SequenceId::Lah => "lah",
            SequenceId::Derangement => "derangement",
            SequenceId::DegDerangement => "deg_derangement",
            SequenceId::Harmonic => "harmonic",
            SequenceId::HarmonicOrder => "harmonic_order",
        }
    }

    pub fn needs_m(self) -> bool {
        matches!(self, SequenceId::HOrder | SequenceId::K | SequenceId::HarmonicOrder)
    }

    /// Triangular sequences take an optional column `k`.
    pub fn takes_k(self) -> bool {
        matches!(
            self,
            SequenceId::Stirling1Unsigned | SequenceId::Stirling1Signed | SequenceId::Lah
        )
    }

    /// Whether the λ → 0 limit has a separately computed classical value.
    pub fn has_classical_limit(self) -> bool {
        matches!(
            self,
            SequenceId::H
                | SequenceId::HOrder
                | SequenceId::DegDerangement
                | SequenceId::Stirling1Unsigned
        )
    }

    /// Classical value at `index`, computed without any λ machinery.
    pub fn classical_value(self, index: &TableIndex) -> Option<Rational> {
        let n = index.n;
        match self {
            SequenceId::H => Some(harmonic(n)),
            SequenceId::HOrder => Some(harmonic_order(n, index.m?)),
            SequenceId::DegDerangement => Some(Rational::from_bigint(derangement(n))),
            SequenceId::Stirling1Unsigned => {
                Some(Rational::from_bigint(stirling1_unsigned_classical(n, index.k?)))
            }
            _ => None,
        }
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Self::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownSequence(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TableIndex {
    pub n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub index: TableIndex,
    pub value: PolyLambda,
}

/// Values of one sequence, keyed by index, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequenceTable {
    pub id: SequenceId,
    pub rows: Vec<TableRow>,
}

impl SequenceTable {
    /// Specializes every value to `λ = x`.
    pub fn evaluate(&self, x: &Rational) -> SequenceTable {
        let rows = self
            .rows
            .iter()
            .map(|r| TableRow { index: r.index, value: PolyLambda::constant(r.value.eval(x)) })
            .collect();
        SequenceTable { id: self.id, rows }
    }
}

/// Tabulates `id` for `n = 0..=n_max` (`1..=n_max` for `K`).
///
/// `m ≥ 1` is required exactly for `H_order`, `K` and `harmonic_order`.
/// Triangular sequences list every `k ≤ n` unless a column `k` is given.
pub fn build_table(
    id: SequenceId,
    n_max: u64,
    m: Option<u32>,
    k: Option<u64>,
) -> Result<SequenceTable, Error> {
    let m = match (id.needs_m(), m) {
        (true, Some(0)) => return Err(Error::InvalidArgument("m must be at least 1".into())),
        (true, None) => return Err(Error::InvalidArgument(format!("sequence {id} requires m"))),
        (false, Some(_)) => return Err(Error::InvalidArgument(format!("sequence {id} takes no m"))),
        (_, m) => m,
    };
    if k.is_some() && !id.takes_k() {
        return Err(Error::InvalidArgument(format!("sequence {id} takes no k")));
    }

    let idx = |n, k| TableIndex { n, m, k };
    let rows = match id {
        SequenceId::H => h_def_table(n_max)
            .into_iter()
            .enumerate()
            .map(|(n, value)| TableRow { index: idx(n as u64, None), value })
            .collect(),
        SequenceId::HOrder => (0..=n_max)
            .map(|n| TableRow { index: idx(n, None), value: h_order(n, m.unwrap()) })
            .collect(),
        SequenceId::K => (1..=n_max)
            .map(|n| TableRow { index: idx(n, None), value: k_nested(n, m.unwrap()) })
            .collect(),
        SequenceId::Harmonic => (0..=n_max)
            .map(|n| TableRow { index: idx(n, None), value: harmonic(n).into() })
            .collect(),
        SequenceId::HarmonicOrder => (0..=n_max)
            .map(|n| TableRow { index: idx(n, None), value: harmonic_order(n, m.unwrap()).into() })
            .collect(),
        SequenceId::Derangement => (0..=n_max)
            .map(|n| TableRow {
                index: idx(n, None),
                value: Rational::from_bigint(derangement(n)).into(),
            })
            .collect(),
        SequenceId::DegDerangement => (0..=n_max)
            .map(|n| TableRow { index: idx(n, None), value: deg_derangement(n) })
            .collect(),
        SequenceId::Stirling1Unsigned | SequenceId::Stirling1Signed => {
            let tri = deg_stirling1_triangle(n_max);
            let signed = id == SequenceId::Stirling1Signed;
            triangle_cells(n_max, k)
                .map(|(n, kk)| {
                    let v = tri[n as usize].get(kk as usize).cloned().unwrap_or_default();
                    let v = if signed { v } else { v.scale(&Rational::sign_power(n.abs_diff(kk))) };
                    TableRow { index: idx(n, Some(kk)), value: v }
                })
                .collect()
        }
        SequenceId::Lah => triangle_cells(n_max, k)
            .map(|(n, kk)| TableRow {
                index: idx(n, Some(kk)),
                value: Rational::from_bigint(lah(n, kk)).into(),
            })
            .collect(),
    };
    Ok(SequenceTable { id, rows })
}

fn triangle_cells(n_max: u64, k: Option<u64>) -> Box<dyn Iterator<Item = (u64, u64)>> {
    match k {
        Some(k) => Box::new((0..=n_max).map(move |n| (n, k))),
        None => Box::new((0..=n_max).flat_map(|n| (0..=n).map(move |k| (n, k)))),
    }
}
