//! Closed-form values and caps for the standard families, checked against
//! the exact solver.

use std::collections::HashMap;
use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::Family;
use crate::solver::{ec_exact, SolverConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    Equals(usize),
    LessThan(usize),
    AtMost(usize),
}

impl Claim {
    /// Decides the claim from an interval known to contain the true value.
    pub fn holds(&self, lo: usize, hi: usize) -> bool {
        match *self {
            Claim::Equals(v) => lo == v && hi == v,
            Claim::LessThan(v) => hi < v,
            Claim::AtMost(v) => hi <= v,
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::Equals(v) => write!(f, "= {v}"),
            Claim::LessThan(v) => write!(f, "< {v}"),
            Claim::AtMost(v) => write!(f, "<= {v}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyRow {
    pub family: String,
    pub expected: String,
    pub ec_lo: Option<usize>,
    pub ec_hi: Option<usize>,
    /// `pass`, `fail` or `error: <message>`.
    pub status: String,
    pub millis: u128,
}

impl FamilyRow {
    pub fn passed(&self) -> bool {
        self.status == "pass"
    }

    pub fn exact(&self) -> Option<usize> {
        match (self.ec_lo, self.ec_hi) {
            (Some(lo), Some(hi)) if lo == hi => Some(lo),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct FamilyReport {
    pub rows: Vec<FamilyRow>,
}

impl FamilyReport {
    pub fn failures(&self) -> Vec<&FamilyRow> {
        self.rows.iter().filter(|r| !r.passed()).collect()
    }

    pub fn row(&self, family: &str) -> Option<&FamilyRow> {
        self.rows.iter().find(|r| r.family == family)
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &self.rows {
            w.serialize(row).map_err(|e| Error::Io(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

/// Largest edge count of the complete bipartite rows.
pub const BIPARTITE_MAX_EDGES: usize = 16;

/// Every (family, claim) pair of the suite, in report order.
pub fn family_claims() -> Vec<(Family, Claim)> {
    let mut claims = Vec::new();
    for n in 2..=6 {
        let m = n * (n - 1) / 2;
        let claim = if n <= 5 { Claim::Equals(m) } else { Claim::LessThan(m) };
        claims.push((Family::Complete(n), claim));
    }
    for r in 2..=BIPARTITE_MAX_EDGES {
        for s in r..=BIPARTITE_MAX_EDGES / r {
            claims.push((Family::CompleteBipartite(r, s), Claim::Equals(2 * s)));
        }
    }
    // K_(1,n) is the star on n + 1 vertices
    for n in 1..=8 {
        claims.push((Family::Star(n + 1), Claim::Equals(n)));
    }
    for p in 1..=8 {
        for q in p..=9 - p {
            claims.push((Family::DoubleStar(p, q), Claim::Equals(p + q + 1)));
        }
    }
    claims.push((Family::Path(6), Claim::Equals(4)));
    for n in 3..=14 {
        claims.push((Family::Path(n), Claim::AtMost(5)));
    }
    claims.push((Family::Cycle(4), Claim::Equals(4)));
    claims.push((Family::Cycle(5), Claim::Equals(5)));
    for n in 3..=14 {
        claims.push((Family::Cycle(n), Claim::AtMost(6)));
    }
    claims
}

type Solved = std::result::Result<(usize, usize), String>;

fn solve(family: Family, cfg: &SolverConfig) -> Solved {
    let g = family.build().map_err(|e| e.to_string())?;
    match ec_exact(&g, cfg) {
        Ok(r) => Ok((r.value, r.value)),
        Err(Error::TimeBudgetExceeded { lo, hi, .. }) => Ok((lo, hi)),
        Err(e) => Err(e.to_string()),
    }
}

/// Runs every claim of [`family_claims`]. Each family is solved once; a
/// failed solve is recorded in its rows and the suite carries on.
pub fn run_family_suite(cfg: &SolverConfig) -> FamilyReport {
    run_claims(&family_claims(), cfg)
}

pub fn run_claims(claims: &[(Family, Claim)], cfg: &SolverConfig) -> FamilyReport {
    let mut cache: HashMap<String, (Solved, u128)> = HashMap::new();
    let mut rows = Vec::with_capacity(claims.len());
    for &(family, claim) in claims {
        let name = family.to_string();
        let (solved, millis) = cache
            .entry(name.clone())
            .or_insert_with(|| {
                let start = Instant::now();
                let solved = solve(family, cfg);
                log::info!("{name}: {solved:?}");
                (solved, start.elapsed().as_millis())
            })
            .clone();
        let row = match solved {
            Ok((lo, hi)) => FamilyRow {
                family: name,
                expected: claim.to_string(),
                ec_lo: Some(lo),
                ec_hi: Some(hi),
                status: if claim.holds(lo, hi) { "pass" } else { "fail" }.to_string(),
                millis,
            },
            Err(e) => FamilyRow {
                family: name,
                expected: claim.to_string(),
                ec_lo: None,
                ec_hi: None,
                status: format!("error: {e}"),
                millis,
            },
        };
        rows.push(row);
    }
    FamilyReport { rows }
}
