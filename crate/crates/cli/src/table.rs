//! Per-`n` comparison of searched values with constructions and bounds.

use std::io::Write;

use pathdeg_core::bounds::{even_proof_bound, known_values, quarter_reference};
use pathdeg_core::{certificate, Construction, KnownKind, Method, Rational, SearchRecord};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub ell: usize,
    pub n: usize,
    pub construction: String,
    /// Edge count of the construction when the checker accepts it.
    pub lower_bound: Option<usize>,
    pub known_kind: Option<KnownKind>,
    pub known_value: Option<u64>,
    pub searched: usize,
    pub method: Method,
    pub witness_count: usize,
    /// `searched - lower_bound`.
    pub gap: Option<i64>,
    /// Exact known values equal the search, lower bounds do not exceed it.
    pub known_consistent: Option<bool>,
    /// `n^2/4 + C n` for even `ell >= 6`.
    pub quarter_ref: Option<String>,
    pub exceeds_quarter_ref: Option<bool>,
    /// Worst case of the exact upper-bound argument for even `ell >= 6`.
    pub proof_bound: Option<u64>,
    pub exceeds_proof_bound: Option<bool>,
}

pub fn construction_label(c: &Construction) -> String {
    match *c {
        Construction::CompleteBipartite { a, b } => format!("K_{{{a},{b}}}"),
        Construction::HalfGraph { m } => format!("H_{m}"),
        Construction::HalfGraphPlusIsolated { m } => format!("H_{m}+K_1"),
    }
}

fn rational_str(r: Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn row(record: &SearchRecord) -> Result<TableRow, CliError> {
    let (ell, n, p) = (record.ell, record.n, record.p);
    let cert = certificate(ell, n)?;
    let lower_bound = cert.verified.then_some(cert.edges);
    let known = known_values(ell, n);
    let known_consistent = known.map(|k| match k.kind {
        KnownKind::Exact => p as u64 == k.value,
        KnownKind::LowerBound => p as u64 >= k.value,
    });
    let quarter = (ell % 2 == 0 && ell >= 6).then(|| quarter_reference(n, ell / 2));
    let proof_bound = if ell % 2 == 0 { even_proof_bound(n, ell / 2) } else { None };
    Ok(TableRow {
        ell,
        n,
        construction: construction_label(&cert.construction),
        lower_bound,
        known_kind: known.map(|k| k.kind),
        known_value: known.map(|k| k.value),
        searched: p,
        method: record.method,
        witness_count: record.witness_count,
        gap: lower_bound.map(|lb| p as i64 - lb as i64),
        known_consistent,
        quarter_ref: quarter.map(rational_str),
        exceeds_quarter_ref: quarter.map(|q| Rational::from(p as i64) > q),
        proof_bound,
        exceeds_proof_bound: proof_bound.map(|b| p as u64 > b),
    })
}

pub fn write_csv(rows: &[TableRow], out: &mut dyn Write) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json(rows: &[TableRow], out: &mut dyn Write) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, rows)?;
    writeln!(out)?;
    Ok(())
}
