//! Front end for `pathdeg`: argument grammar, command dispatch, the
//! JSON-lines result cache and table output.

pub mod args;
pub mod cache;
pub mod table;

use std::io::Write;

use pathdeg_core::bounds::{
    claim_x_check, edge_sum_bound, even_case1_bound, known_values, odd_case1_bound,
    structural_edge_bound,
};
use pathdeg_core::lemma::Validation;
use pathdeg_core::{
    build_path, certificate, complete_bipartite, find_violation, from_graph6, half_graph,
    p_canonical, p_labeled, to_graph6, validate_instance, Construction, Graph, LemmaCase,
    LemmaInstance, Method, SearchOptions, SearchRecord, Violation,
};
use serde::Serialize;
use thiserror::Error;

use args::{BoundsCmd, CaseArg, Cli, Command, ConstructCmd, OutFormat};
use cache::{Cache, CacheEntry, CacheKey};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_VIOLATION: i32 = 10;
pub const EXIT_INTERNAL: i32 = 70;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] pathdeg_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("invalid lemma instance: {0:?}")]
    InvalidInstance(Validation),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use pathdeg_core::Error as E;
        match self {
            CliError::Core(E::CostGuard { .. }) => EXIT_GUARD,
            CliError::Core(E::ConstructionFailure { .. }) | CliError::Internal(_) => EXIT_INTERNAL,
            CliError::Core(_) | CliError::Usage(_) | CliError::InvalidInstance(_) => EXIT_USAGE,
            CliError::Io(_) | CliError::Json(_) | CliError::Csv(_) => EXIT_INTERNAL,
        }
    }
}

type Res<T> = Result<T, CliError>;

/// Runs a parsed command line, writing payloads to `out` and messages to
/// `err`. Returns the process exit status.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t as usize).build_global() {
            let _ = writeln!(err, "warning: cannot configure {t} threads: {e}");
        }
    }
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Res<i32> {
    match &cli.command {
        Command::Check { graph6, ell } => check(graph6, *ell, out, err),
        Command::Pfn {
            n,
            ell,
            method,
            witnesses,
        } => {
            let mut cache = open_cache(cli, err);
            let rec = search(&mut cache, *n, *ell, (*method).into(), *witnesses, err)?;
            flush_warnings(&mut cache, err);
            emit(out, &rec)?;
            Ok(EXIT_OK)
        }
        Command::Construct { what } => construct(what, out),
        Command::Lemma {
            case,
            graph,
            b,
            x,
            y,
            d,
            k,
        } => lemma(*case, graph, b, *x, *y, *d, *k, out, err),
        Command::Bounds { which } => bounds(which, out),
        Command::Table {
            ell,
            nmin,
            nmax,
            out: format,
            method,
        } => {
            if nmin > nmax || *nmin <= *ell {
                return Err(CliError::Usage(format!(
                    "need ell < nmin <= nmax, got ell = {ell}, nmin = {nmin}, nmax = {nmax}"
                )));
            }
            let mut cache = open_cache(cli, err);
            let mut rows = Vec::new();
            for n in *nmin..=*nmax {
                let rec = search(&mut cache, n, *ell, (*method).into(), 0, err)?;
                rows.push(table::row(&rec)?);
            }
            flush_warnings(&mut cache, err);
            for r in &rows {
                if r.exceeds_quarter_ref == Some(true) {
                    writeln!(err, "note: p_{}({}) = {} exceeds n^2/4 + Cn", r.ell, r.n, r.searched)?;
                }
                if r.exceeds_proof_bound == Some(true) {
                    writeln!(err, "warning: p_{}({}) = {} exceeds the proof bound", r.ell, r.n, r.searched)?;
                }
            }
            match format {
                OutFormat::Csv => table::write_csv(&rows, out)?,
                OutFormat::Json => table::write_json(&rows, out)?,
            }
            Ok(EXIT_OK)
        }
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Res<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn parse_graph(s: &str) -> Res<Graph> {
    Ok(from_graph6(s.trim())?)
}

fn open_cache(cli: &Cli, err: &mut dyn Write) -> Cache {
    let mut cache = Cache::open(&cli.cache);
    flush_warnings(&mut cache, err);
    cache
}

fn flush_warnings(cache: &mut Cache, err: &mut dyn Write) {
    for w in cache.take_warnings() {
        let _ = writeln!(err, "warning: {w}");
    }
}

/// Cached search. A cached record serves requests for up to as many
/// witnesses as it lists (or all of them when the list is complete).
fn search(
    cache: &mut Cache,
    n: usize,
    ell: usize,
    method: Method,
    cap: usize,
    err: &mut dyn Write,
) -> Res<SearchRecord> {
    let key = CacheKey { ell, n, method };
    if let Some(entry) = cache.get(&key) {
        let rec = &entry.record;
        if rec.witnesses.len() >= cap.min(rec.witness_count) {
            writeln!(err, "cache hit: ell = {ell}, n = {n}, {}", method.as_str())?;
            let mut rec = rec.clone();
            rec.witnesses.truncate(cap);
            return Ok(rec);
        }
    }
    writeln!(err, "searching: ell = {ell}, n = {n}, {}", method.as_str())?;
    let opts = SearchOptions {
        witness_cap: cap.max(pathdeg_core::search::DEFAULT_WITNESS_CAP),
    };
    let rec = match method {
        Method::Labeled => p_labeled(n, ell, opts)?,
        Method::Canonical => p_canonical(n, ell, opts)?,
    };
    writeln!(
        err,
        "p_{ell}({n}) = {} ({} extremal classes, {} graphs checked, {} ms)",
        rec.p, rec.witness_count, rec.stats.graphs_examined, rec.stats.elapsed_ms
    )?;
    cache.insert(CacheEntry::new(rec.clone()));
    let mut rec = rec;
    rec.witnesses.truncate(cap);
    Ok(rec)
}

#[derive(Serialize)]
struct CheckOutput<'a> {
    graph6: &'a str,
    n: usize,
    ell: usize,
    result: &'static str,
    violation: Option<Violation>,
}

fn check(s: &str, ell: usize, out: &mut dyn Write, err: &mut dyn Write) -> Res<i32> {
    let g = parse_graph(s)?;
    let violation = find_violation(&g, ell)?;
    let code = if violation.is_some() { EXIT_VIOLATION } else { EXIT_OK };
    let result = if violation.is_some() { "violation" } else { "avoider" };
    writeln!(err, "{result}")?;
    emit(
        out,
        &CheckOutput {
            graph6: s.trim(),
            n: g.n(),
            ell,
            result,
            violation,
        },
    )?;
    Ok(code)
}

#[derive(Serialize)]
struct Built {
    graph6: String,
    n: usize,
    edges: usize,
    construction: Construction,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<pathdeg_core::Certificate>,
}

fn construct(what: &ConstructCmd, out: &mut dyn Write) -> Res<i32> {
    let (g, construction, cert) = match *what {
        ConstructCmd::CompleteBipartite { a, b } => {
            (complete_bipartite(a, b)?, Construction::CompleteBipartite { a, b }, None)
        }
        ConstructCmd::HalfGraph { m } => (half_graph(m)?, Construction::HalfGraph { m }, None),
        ConstructCmd::Certificate { ell, n } => {
            let c = certificate(ell, n)?;
            (c.graph.clone(), c.construction, Some(c))
        }
    };
    emit(
        out,
        &Built {
            graph6: to_graph6(&g),
            n: g.n(),
            edges: g.edge_count(),
            construction,
            certificate: cert,
        },
    )?;
    Ok(EXIT_OK)
}

#[allow(clippy::too_many_arguments)]
fn lemma(
    case: CaseArg,
    graph: &str,
    b: &[usize],
    x: usize,
    y: usize,
    d: usize,
    k: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Res<i32> {
    let g = parse_graph(graph)?;
    let n = g.n();
    let case = match case {
        CaseArg::A => LemmaCase::A,
        CaseArg::B => LemmaCase::find_b(&g, b).unwrap_or(LemmaCase::B { edge: (n, n) }),
        CaseArg::C => {
            let fits = x < n && y < n && b.iter().all(|&v| v < n);
            fits.then(|| LemmaCase::find_c(&g, b, x, y))
                .flatten()
                .unwrap_or(LemmaCase::C {
                    pair: (0, 1),
                    cross: (n, n),
                })
        }
    };
    let inst = LemmaInstance {
        graph: g,
        b: b.to_vec(),
        x,
        y,
        d,
        k,
        case,
    };
    let verdict = validate_instance(&inst);
    if !verdict.is_valid() {
        emit(out, &verdict)?;
        return Err(CliError::InvalidInstance(verdict));
    }
    let path = build_path(&inst)
        .map_err(|e| CliError::Internal(format!("path construction failed on a valid instance: {e}")))?;
    writeln!(err, "path of length {} built", path.length)?;
    emit(out, &path)?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct Known {
    ell: usize,
    n: usize,
    known: Option<pathdeg_core::KnownValue>,
}

fn bounds(which: &BoundsCmd, out: &mut dyn Write) -> Res<i32> {
    let report = match which {
        BoundsCmd::Known { ell, n } => {
            emit(
                out,
                &Known {
                    ell: *ell,
                    n: *n,
                    known: known_values(*ell, *n),
                },
            )?;
            return Ok(EXIT_OK);
        }
        BoundsCmd::EdgeSum { n, k, delta } => edge_sum_bound(*n, *k, *delta)?,
        BoundsCmd::EvenCase1 { n, k } => even_case1_bound(*n, *k)?,
        BoundsCmd::OddCase1 { n, k, delta } => odd_case1_bound(*n, *k, *delta)?,
        BoundsCmd::ClaimX { graph6, d } => claim_x_check(&parse_graph(graph6)?, *d)?,
        BoundsCmd::Structural { graph6, d } => structural_edge_bound(&parse_graph(graph6)?, *d)?,
    };
    emit(out, &report)?;
    Ok(EXIT_OK)
}
