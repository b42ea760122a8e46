//! Sweeps: evaluate every graph of a stream, run the checks, and persist one
//! JSON line per graph.
//!
//! Graphs are deduplicated by canonical key. Work is split into chunks that
//! are evaluated on a thread pool; a single writer appends each chunk's
//! records in input order. Resuming reads the existing file, drops a torn
//! last line, and skips every key already present.

use std::collections::{BTreeMap, HashSet};
use std::fs::{File, OpenOptions};
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::checks::{CheckDefinition, CheckStatus, Evaluation, Severity};
use crate::canon::{canonical_key, CanonicalKey};
use crate::domination::{edge_domatic_number, DOMATIC_MAX_EDGES};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, write_graph6};
use crate::solver::{ec_exact, ec_upper_bound, search_max, SolverConfig};
use crate::coalition::Reading;

/// One line of sweep output. Field order is part of the file format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub key: String,
    pub n: usize,
    pub m: usize,
    pub connected: bool,
    pub ec_lo: usize,
    pub ec_hi: usize,
    pub certificate: Vec<Vec<usize>>,
    pub checks: BTreeMap<String, CheckStatus>,
}

impl SweepRecord {
    pub fn is_exact(&self) -> bool {
        self.ec_lo == self.ec_hi && !self.certificate.is_empty()
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    pub fn from_json_line(line: &str) -> Result<SweepRecord> {
        serde_json::from_str(line).map_err(|e| Error::MalformedRecord(e.to_string()))
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub solver: SolverConfig,
    /// Graphs evaluated in parallel; each solve is single-threaded.
    pub threads: usize,
    /// Collect every optimum (for the partner check) up to this many edges.
    pub optima_max_edges: usize,
    /// Run the permissive-reading search up to this many edges.
    pub permissive_max_edges: usize,
    pub chunk: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            solver: SolverConfig::default(),
            threads: 1,
            optima_max_edges: 12,
            permissive_max_edges: 15,
            chunk: 64,
        }
    }
}

/// Graph and partition that broke an assert-severity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reproducer {
    pub check: String,
    pub graph6: String,
    pub partition: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Default)]
pub struct SweepOutcome {
    /// Every record of the run, resumed ones first.
    pub records: Vec<SweepRecord>,
    pub resumed: usize,
    pub aborted: Option<Reproducer>,
}

fn key_graph(g: &Graph) -> (CanonicalKey, Graph) {
    match canonical_key(g) {
        Ok(key) => {
            let graph = parse_graph6(key.as_str()).expect("keys are valid graph6");
            (key, graph)
        }
        Err(e) => {
            log::warn!("no canonical form ({e}); keeping the input labeling");
            let text = write_graph6(g).unwrap_or_default();
            (CanonicalKey(format!("raw:{text}")), g.clone())
        }
    }
}

/// Solves the canonical form of `g` and gathers what the checks need.
pub fn evaluate(g: &Graph, cfg: &SweepConfig) -> Evaluation {
    let (key, graph) = key_graph(g);
    evaluate_as(key, graph, cfg)
}

/// Like [`evaluate`] but keeps the edge order of `g`, so the certificate
/// indexes the caller's edges. Only the key is canonical.
pub fn evaluate_labeled(g: &Graph, cfg: &SweepConfig) -> Evaluation {
    let (key, _) = key_graph(g);
    evaluate_as(key, g.clone(), cfg)
}

fn evaluate_as(key: CanonicalKey, graph: Graph, cfg: &SweepConfig) -> Evaluation {
    let m = graph.m();
    let mut ev = Evaluation {
        connected: graph.is_connected(),
        key,
        ec_lo: 0,
        ec_hi: 0,
        certificate: None,
        optima: Vec::new(),
        lower: None,
        upper: None,
        error: None,
        edge_domatic: None,
        permissive: None,
        graph,
    };
    if m == 0 {
        return ev;
    }
    let solver = SolverConfig {
        threads: 1,
        emit_all_optima: m <= cfg.optima_max_edges,
        ..cfg.solver.clone()
    };
    match ec_exact(&ev.graph, &solver) {
        Ok(r) => {
            ev.ec_lo = r.value;
            ev.ec_hi = r.value;
            ev.lower = Some(r.lower());
            ev.upper = Some(r.upper());
            ev.optima = r.all_optima;
            ev.certificate = Some(r.certificate);
        }
        Err(Error::TimeBudgetExceeded { lo, hi, best }) => {
            ev.ec_lo = lo;
            ev.ec_hi = hi;
            ev.upper = Some(hi);
            ev.certificate = Some(*best);
            ev.error = Some("time budget exceeded".into());
        }
        Err(e) => {
            ev.ec_lo = 1;
            ev.ec_hi = ec_upper_bound(&ev.graph).map_or(m, |b| b.value);
            ev.error = Some(e.to_string());
        }
    }
    if m <= DOMATIC_MAX_EDGES {
        ev.edge_domatic = edge_domatic_number(&ev.graph).ok().map(|(k, _)| k);
    }
    if let Some(ec) = ev.exact() {
        if m <= cfg.permissive_max_edges {
            let plain = SolverConfig {
                threads: 1,
                emit_all_optima: false,
                ..cfg.solver.clone()
            };
            match search_max(&ev.graph, &plain, Reading::Permissive, ec, m) {
                Ok((order, _, _, false)) => ev.permissive = Some(order.max(ec)),
                Ok(_) => log::debug!("permissive search for {} ran out of time", ev.key),
                Err(e) => log::debug!("permissive search for {} failed: {e}", ev.key),
            }
        }
    }
    ev
}

pub fn record_of(ev: &Evaluation, checks: &[CheckDefinition]) -> SweepRecord {
    SweepRecord {
        key: ev.key.0.clone(),
        n: ev.graph.n(),
        m: ev.graph.m(),
        connected: ev.connected,
        ec_lo: ev.ec_lo,
        ec_hi: ev.ec_hi,
        certificate: ev
            .certificate
            .as_ref()
            .map(|p| p.to_index_lists())
            .unwrap_or_default(),
        checks: checks
            .iter()
            .map(|c| (c.name.to_string(), (c.eval)(ev)))
            .collect(),
    }
}

fn first_assert_failure(record: &SweepRecord, checks: &[CheckDefinition]) -> Option<Reproducer> {
    let failed = checks
        .iter()
        .filter(|c| c.severity == Severity::Assert)
        .find(|c| record.checks.get(c.name) == Some(&CheckStatus::Fail))?;
    Some(Reproducer {
        check: failed.name.to_string(),
        graph6: record.key.trim_start_matches("raw:").to_string(),
        partition: record.certificate.clone(),
    })
}

/// Unique graphs of the stream with their keys, first occurrence kept.
fn unique(graphs: &[Graph], skip: &HashSet<String>) -> Vec<Graph> {
    let mut seen = skip.clone();
    graphs
        .iter()
        .filter(|g| {
            let key = canonical_key(g)
                .map(|k| k.0)
                .unwrap_or_else(|_| format!("raw:{}", write_graph6(g).unwrap_or_default()));
            seen.insert(key)
        })
        .cloned()
        .collect()
}

fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .expect("thread pool")
}

/// Runs the sweep, handing each finished chunk of records to `sink` in
/// input order. Stops after the record that fails an assert check.
fn drive(
    graphs: &[Graph],
    checks: &[CheckDefinition],
    cfg: &SweepConfig,
    mut sink: impl FnMut(&SweepRecord) -> Result<()>,
) -> Result<Option<Reproducer>> {
    let pool = pool(cfg.threads);
    for chunk in graphs.chunks(cfg.chunk.max(1)) {
        let records: Vec<SweepRecord> = pool.install(|| {
            chunk
                .par_iter()
                .map(|g| record_of(&evaluate(g, cfg), checks))
                .collect()
        });
        for record in &records {
            sink(record)?;
            if let Some(repro) = first_assert_failure(record, checks) {
                log::error!(
                    "assert check {} failed on {}; partition {:?}",
                    repro.check,
                    repro.graph6,
                    repro.partition
                );
                return Ok(Some(repro));
            }
        }
    }
    Ok(None)
}

/// In-memory sweep.
pub fn sweep(graphs: &[Graph], checks: &[CheckDefinition], cfg: &SweepConfig) -> Result<SweepOutcome> {
    let todo = unique(graphs, &HashSet::new());
    let mut records = Vec::with_capacity(todo.len());
    let aborted = drive(&todo, checks, cfg, |r| {
        records.push(r.clone());
        Ok(())
    })?;
    Ok(SweepOutcome {
        records,
        resumed: 0,
        aborted,
    })
}

/// Reads the complete records of an existing output file and truncates it
/// after the last one.
fn load_existing(path: &Path) -> Result<Vec<SweepRecord>> {
    let Ok(mut file) = File::open(path) else {
        return Ok(Vec::new());
    };
    let mut text = String::new();
    file.read_to_string(&mut text)?;
    let mut records = Vec::new();
    let mut good = 0;
    for line in text.split_inclusive('\n') {
        if !line.ends_with('\n') {
            break;
        }
        match SweepRecord::from_json_line(line.trim_end()) {
            Ok(r) => {
                records.push(r);
                good += line.len();
            }
            Err(_) => break,
        }
    }
    if good < text.len() {
        log::warn!(
            "dropping {} trailing bytes of {} that do not form a complete record",
            text.len() - good,
            path.display()
        );
        OpenOptions::new().write(true).open(path)?.set_len(good as u64)?;
    }
    Ok(records)
}

/// Sweep persisted to a JSON-lines file, resuming from what it already holds.
pub fn sweep_to_file(
    graphs: &[Graph],
    checks: &[CheckDefinition],
    cfg: &SweepConfig,
    path: &Path,
) -> Result<SweepOutcome> {
    let mut records = load_existing(path)?;
    let resumed = records.len();
    let done: HashSet<String> = records.iter().map(|r| r.key.clone()).collect();
    let todo = unique(graphs, &done);
    log::info!("{resumed} records resumed, {} graphs to evaluate", todo.len());
    let file = OpenOptions::new().create(true).append(true).open(path)?;
    let mut out = BufWriter::new(file);
    let aborted = drive(&todo, checks, cfg, |r| {
        writeln!(out, "{}", r.to_json_line())?;
        out.flush()?;
        records.push(r.clone());
        Ok(())
    })?;
    Ok(SweepOutcome {
        records,
        resumed,
        aborted,
    })
}

/// Parses a graph6 stream, logging and skipping lines that do not parse.
pub fn read_graph6_stream(text: &str) -> Vec<Graph> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .filter_map(|(i, l)| match parse_graph6(l.trim()) {
            Ok(g) => Some(g),
            Err(e) => {
                log::warn!("line {}: {e}", i + 1);
                None
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::verifier::checks::standard_checks;

    #[test]
    fn record_field_order() {
        let ev = evaluate(&families::path(3).unwrap(), &SweepConfig::default());
        let line = record_of(&ev, &standard_checks()).to_json_line();
        let order = ["\"key\"", "\"n\"", "\"m\"", "\"connected\"", "\"ec_lo\"", "\"ec_hi\"", "\"certificate\"", "\"checks\""];
        let positions: Vec<usize> = order.iter().map(|f| line.find(f).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]), "{line}");
        let back = SweepRecord::from_json_line(&line).unwrap();
        assert_eq!((back.ec_lo, back.ec_hi, back.m), (2, 2, 2));
    }

    #[test]
    fn edgeless_graph_record() {
        let ev = evaluate(&Graph::empty(3), &SweepConfig::default());
        let r = record_of(&ev, &standard_checks());
        assert_eq!((r.ec_lo, r.ec_hi), (0, 0));
        assert!(r.checks.values().all(|s| matches!(s, CheckStatus::Skipped(_))));
    }

    #[test]
    fn duplicates_are_dropped() {
        let p4 = families::path(4).unwrap();
        let relabeled = Graph::new(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        let out = sweep(&[p4, relabeled], &standard_checks(), &SweepConfig::default()).unwrap();
        assert_eq!(out.records.len(), 1);
        assert!(out.aborted.is_none());
    }

    #[test]
    fn over_cap_graph_is_recorded_not_fatal() {
        let cfg = SweepConfig {
            solver: SolverConfig {
                max_edges: 4,
                ..SolverConfig::default()
            },
            ..SweepConfig::default()
        };
        let out = sweep(&[families::complete(4).unwrap()], &standard_checks(), &cfg).unwrap();
        let r = &out.records[0];
        assert!(r.certificate.is_empty());
        assert!(r.ec_lo <= r.ec_hi);
        assert!(matches!(&r.checks["certificate_valid"], CheckStatus::Skipped(s) if s.starts_with("not solved")));
    }
}
