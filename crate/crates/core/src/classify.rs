//! Per-triple classification rows and the (n, k, d) sweep.
//!
//! Output schemas:
//! - csv: header `n,k,d,fano,weak_fano,log_fano,minus_k_big,witness`, the
//!   witness quoted as `"(x,y,z,w,u)"` with rationals in `p/q` form, empty
//!   when unknown;
//! - json: an array of objects with the same keys, the witness an object of
//!   five `p/q` strings or null;
//! - table: human-aligned columns.
//!
//! Rows are ordered by (n, k, d) and the witness search is deterministic,
//! so renderings are byte-identical across runs.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{DeltaCoeffs, Geometry};
use crate::logfano::{find_boundary, LogFanoVerdict};
use crate::positivity::{minus_k_big, minus_k_status, MinusKStatus};

/// The log Fano column: a verified yes, or open.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LogFanoAnswer {
    Yes,
    Unknown,
}

impl fmt::Display for LogFanoAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogFanoAnswer::Yes => write!(f, "yes"),
            LogFanoAnswer::Unknown => write!(f, "unknown"),
        }
    }
}

/// One classification row: is the blow-up at (n, k, d) Fano, weak Fano,
/// log Fano; the anticanonical class is big unconditionally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationRow {
    pub n: i64,
    pub k: i64,
    pub d: i64,
    pub fano: bool,
    pub weak_fano: bool,
    pub log_fano: LogFanoAnswer,
    pub minus_k_big: bool,
    pub witness: Option<DeltaCoeffs>,
}

/// Classify one triple. Panics if the implication chain
/// Fano => weak Fano => log Fano ever failed, which would be a bug.
pub fn classify(g: &Geometry) -> ClassificationRow {
    let status = minus_k_status(g);
    let fano = status == MinusKStatus::Ample;
    let weak_fano = status != MinusKStatus::NotNef;

    let (log_fano, witness) = match find_boundary(g) {
        LogFanoVerdict::Yes { witness, .. } => (LogFanoAnswer::Yes, Some(witness)),
        LogFanoVerdict::Unknown => (LogFanoAnswer::Unknown, None),
    };

    assert!(!fano || weak_fano);
    assert!(
        !weak_fano || log_fano == LogFanoAnswer::Yes,
        "weak Fano triple {g} without a boundary witness"
    );
    if log_fano == LogFanoAnswer::Yes {
        assert!(witness.is_some());
    }

    ClassificationRow {
        n: g.n(),
        k: g.k(),
        d: g.d(),
        fano,
        weak_fano,
        log_fano,
        minus_k_big: minus_k_big(g),
        witness,
    }
}

/// Classify every valid triple with `n <= n_max`, `d <= d_max`, ordered by
/// (n, k, d). Triples are classified in parallel.
pub fn sweep(n_max: i64, d_max: i64) -> Result<Vec<ClassificationRow>> {
    if n_max < 3 {
        return Err(Error::InvalidSweepBound(format!(
            "n-max must be ≥ 3 (got {n_max})"
        )));
    }
    if d_max < 1 {
        return Err(Error::InvalidSweepBound(format!(
            "d-max must be ≥ 1 (got {d_max})"
        )));
    }
    let triples = Geometry::valid_triples(n_max, d_max);
    Ok(triples.par_iter().map(classify).collect())
}

/// Output format for [`render`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(OutputFormat::Table),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

const COLUMNS: [&str; 8] = [
    "n",
    "k",
    "d",
    "fano",
    "weak_fano",
    "log_fano",
    "minus_k_big",
    "witness",
];

fn witness_cell(w: &Option<DeltaCoeffs>) -> String {
    match w {
        Some(c) => c.to_string(),
        None => String::new(),
    }
}

fn render_csv(rows: &[ClassificationRow]) -> String {
    let mut out = COLUMNS.join(",");
    out.push('\n');
    for row in rows {
        let witness = match &row.witness {
            Some(c) => format!("\"{c}\""),
            None => String::new(),
        };
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            row.n, row.k, row.d, row.fano, row.weak_fano, row.log_fano, row.minus_k_big, witness
        ));
    }
    out
}

#[derive(Serialize)]
struct WitnessWire {
    x: String,
    y: String,
    z: String,
    w: String,
    u: String,
}

#[derive(Serialize)]
struct RowWire {
    n: i64,
    k: i64,
    d: i64,
    fano: bool,
    weak_fano: bool,
    log_fano: String,
    minus_k_big: bool,
    witness: Option<WitnessWire>,
}

fn render_json(rows: &[ClassificationRow]) -> String {
    let wire: Vec<RowWire> = rows
        .iter()
        .map(|row| RowWire {
            n: row.n,
            k: row.k,
            d: row.d,
            fano: row.fano,
            weak_fano: row.weak_fano,
            log_fano: row.log_fano.to_string(),
            minus_k_big: row.minus_k_big,
            witness: row.witness.as_ref().map(|c| WitnessWire {
                x: c.x.to_string(),
                y: c.y.to_string(),
                z: c.z.to_string(),
                w: c.w.to_string(),
                u: c.u.to_string(),
            }),
        })
        .collect();
    let mut out = serde_json::to_string_pretty(&wire).expect("plain data serializes");
    out.push('\n');
    out
}

fn render_table(rows: &[ClassificationRow]) -> String {
    let cells: Vec<[String; 8]> = rows
        .iter()
        .map(|row| {
            [
                row.n.to_string(),
                row.k.to_string(),
                row.d.to_string(),
                row.fano.to_string(),
                row.weak_fano.to_string(),
                row.log_fano.to_string(),
                row.minus_k_big.to_string(),
                if row.witness.is_some() {
                    witness_cell(&row.witness)
                } else {
                    "-".to_string()
                },
            ]
        })
        .collect();

    let mut widths = COLUMNS.map(str::len);
    for row in &cells {
        for (w, cell) in widths.iter_mut().zip(row.iter()) {
            *w = (*w).max(cell.len());
        }
    }

    let mut out = String::new();
    let emit = |out: &mut String, cells: [&str; 8]| {
        for (i, (cell, width)) in cells.iter().zip(widths.iter()).enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            out.push_str(cell);
            if i + 1 < cells.len() {
                for _ in cell.len()..*width {
                    out.push(' ');
                }
            }
        }
        out.push('\n');
    };
    emit(&mut out, COLUMNS);
    for row in &cells {
        let borrowed: [&str; 8] = std::array::from_fn(|i| row[i].as_str());
        emit(&mut out, borrowed);
    }
    out
}

/// Render rows in the requested format; an empty list renders as the
/// header alone (or `[]` for json).
pub fn render(rows: &[ClassificationRow], format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => render_table(rows),
        OutputFormat::Csv => render_csv(rows),
        OutputFormat::Json => render_json(rows),
    }
}
