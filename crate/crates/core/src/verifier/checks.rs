use std::fmt;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_key, CanonicalKey};
use crate::coalition::validate_partition;
use crate::graph::Graph;
use crate::partition::EdgePartition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    /// Definitional or exhaustively re-proved; a failure aborts a sweep.
    Assert,
    /// A claim under test; failures are collected as discrepancies.
    Report,
}

impl fmt::Display for Severity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Severity::Assert => "assert",
            Severity::Report => "report",
        })
    }
}

/// Serialized as `"pass"`, `"fail"` or `"skipped: <reason>"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped(String),
}

impl CheckStatus {
    fn from_bool(ok: bool) -> CheckStatus {
        if ok {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        }
    }

    fn skip(reason: &str) -> CheckStatus {
        CheckStatus::Skipped(reason.to_string())
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckStatus::Pass => f.write_str("pass"),
            CheckStatus::Fail => f.write_str("fail"),
            CheckStatus::Skipped(r) => write!(f, "skipped: {r}"),
        }
    }
}

impl From<CheckStatus> for String {
    fn from(s: CheckStatus) -> String {
        s.to_string()
    }
}

impl TryFrom<String> for CheckStatus {
    type Error = String;

    fn try_from(s: String) -> std::result::Result<CheckStatus, String> {
        match s.as_str() {
            "pass" => Ok(CheckStatus::Pass),
            "fail" => Ok(CheckStatus::Fail),
            _ => s
                .strip_prefix("skipped: ")
                .map(|r| CheckStatus::Skipped(r.to_string()))
                .ok_or_else(|| format!("unknown check status {s:?}")),
        }
    }
}

/// Everything the checks look at for one graph. `graph` is the canonical
/// form with the edge order of its graph6 key, so certificate indices refer
/// to the key graph.
#[derive(Clone, Debug)]
pub struct Evaluation {
    pub graph: Graph,
    pub key: CanonicalKey,
    pub connected: bool,
    pub ec_lo: usize,
    pub ec_hi: usize,
    pub certificate: Option<EdgePartition>,
    /// Every maximum-order partition, when collected.
    pub optima: Vec<EdgePartition>,
    pub lower: Option<usize>,
    pub upper: Option<usize>,
    pub error: Option<String>,
    pub edge_domatic: Option<usize>,
    /// Maximum order under the permissive reading, when computed.
    pub permissive: Option<usize>,
}

impl Evaluation {
    pub fn exact(&self) -> Option<usize> {
        (self.error.is_none() && self.certificate.is_some() && self.ec_lo == self.ec_hi)
            .then_some(self.ec_lo)
    }
}

#[derive(Clone)]
pub struct CheckDefinition {
    pub name: &'static str,
    /// When the claim applies; graphs outside it are skipped.
    pub hypothesis: &'static str,
    pub severity: Severity,
    pub eval: fn(&Evaluation) -> CheckStatus,
}

impl fmt::Debug for CheckDefinition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CheckDefinition")
            .field("name", &self.name)
            .field("severity", &self.severity)
            .finish()
    }
}

const NO_EDGES: &str = "graph has no edges";

fn unsolved(ev: &Evaluation) -> Option<CheckStatus> {
    if ev.graph.m() == 0 {
        return Some(CheckStatus::skip(NO_EDGES));
    }
    if ev.certificate.is_none() {
        return Some(CheckStatus::Skipped(format!(
            "not solved: {}",
            ev.error.as_deref().unwrap_or("unknown")
        )));
    }
    None
}

/// Exact value or a skip status for checks that need one.
fn exact_or_skip(ev: &Evaluation) -> Result<usize, CheckStatus> {
    if let Some(s) = unsolved(ev) {
        return Err(s);
    }
    ev.exact()
        .ok_or_else(|| CheckStatus::Skipped(format!("interval [{}, {}]", ev.ec_lo, ev.ec_hi)))
}

fn certificate_valid(ev: &Evaluation) -> CheckStatus {
    if let Some(s) = unsolved(ev) {
        return s;
    }
    let cert = ev.certificate.as_ref().expect("checked");
    let ok = validate_partition(&ev.graph, cert).is_ok_and(|v| v.is_ec) && cert.order() == ev.ec_lo;
    CheckStatus::from_bool(ok)
}

fn bound_sandwich(ev: &Evaluation) -> CheckStatus {
    if let Some(s) = unsolved(ev) {
        return s;
    }
    match (ev.lower, ev.upper) {
        (Some(lo), Some(hi)) => CheckStatus::from_bool(lo <= ev.ec_lo && ev.ec_hi <= hi),
        _ => CheckStatus::skip("bounds not computed"),
    }
}

fn order_range(ev: &Evaluation) -> CheckStatus {
    if let Some(s) = unsolved(ev) {
        return s;
    }
    CheckStatus::from_bool(1 <= ev.ec_lo && ev.ec_lo <= ev.ec_hi && ev.ec_hi <= ev.graph.m())
}

fn partner_cap(ev: &Evaluation) -> CheckStatus {
    if let Some(s) = unsolved(ev) {
        return s;
    }
    let max_degree = ev.graph.max_degree();
    if max_degree < 2 {
        return CheckStatus::skip("maximum degree below 2");
    }
    let cap = 2 * max_degree - 1;
    let cert = ev.certificate.iter();
    let ok = cert.chain(ev.optima.iter()).all(|p| {
        validate_partition(&ev.graph, p).is_ok_and(|v| v.max_partners() <= cap)
    });
    CheckStatus::from_bool(ok)
}

fn has_isolated_edge(g: &Graph) -> bool {
    g.edges().iter().any(|&(u, v)| g.degree(u) == 1 && g.degree(v) == 1)
}

fn min_degree_bound(ev: &Evaluation) -> CheckStatus {
    let ec = match exact_or_skip(ev) {
        Ok(v) => v,
        Err(s) => return s,
    };
    let g = &ev.graph;
    if !g.full_edges().is_empty() || g.min_degree() == 0 {
        return CheckStatus::skip("has a full edge or an isolated vertex");
    }
    CheckStatus::from_bool(ec > g.min_degree())
}

fn domatic_bound(ev: &Evaluation) -> CheckStatus {
    let ec = match exact_or_skip(ev) {
        Ok(v) => v,
        Err(s) => return s,
    };
    let g = &ev.graph;
    if has_isolated_edge(g) || !g.full_edges().is_empty() {
        return CheckStatus::skip("has an isolated edge or a full edge");
    }
    match ev.edge_domatic {
        Some(ed) => CheckStatus::from_bool(2 * ed >= 4 && 2 * ed <= ec + 1),
        None => CheckStatus::skip("edge-domatic number not computed"),
    }
}

fn universal_vertex_bound(ev: &Evaluation) -> CheckStatus {
    let ec = match exact_or_skip(ev) {
        Ok(v) => v,
        Err(s) => return s,
    };
    let g = &ev.graph;
    let n = g.n();
    let k = (0..n).filter(|&v| g.degree(v) + 1 == n).count();
    if k == 0 || g.is_complete() {
        return CheckStatus::skip("complete or without a universal vertex");
    }
    // k(n-1)/2 + 1 <= EC
    CheckStatus::from_bool(k * (n - 1) + 2 <= 2 * ec)
}

/// Canonical keys of small named graphs used by the characterizations.
pub fn named_key(name: &str) -> CanonicalKey {
    let edges: &[(usize, usize)] = match name {
        "K2" => &[(0, 1)],
        "P3" => &[(0, 1), (1, 2)],
        "2K2" => &[(0, 1), (2, 3)],
        "K3" => &[(0, 1), (1, 2), (0, 2)],
        "P4" => &[(0, 1), (1, 2), (2, 3)],
        "K13" => &[(0, 1), (0, 2), (0, 3)],
        _ => panic!("unknown graph name {name}"),
    };
    let n = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0) + 1;
    canonical_key(&Graph::new(n, edges).expect("valid")).expect("small")
}

/// Names of the graphs claimed to have each small coalition number.
pub fn small_ec_targets(ec: usize) -> &'static [&'static str] {
    match ec {
        1 => &["K2"],
        2 => &["P3", "2K2"],
        3 => &["K3", "P4", "K13"],
        _ => &[],
    }
}

fn characterization(ev: &Evaluation, target: usize, connected_only: bool) -> CheckStatus {
    let ec = match exact_or_skip(ev) {
        Ok(v) => v,
        Err(s) => return s,
    };
    if connected_only && !ev.connected {
        return CheckStatus::skip("disconnected");
    }
    let stripped = ev.graph.without_isolated_vertices();
    let key = match canonical_key(&stripped) {
        Ok(k) => k,
        Err(e) => return CheckStatus::Skipped(e.to_string()),
    };
    let listed = small_ec_targets(target).iter().any(|name| named_key(name) == key);
    CheckStatus::from_bool((ec == target) == listed)
}

fn ec1_connected(ev: &Evaluation) -> CheckStatus {
    characterization(ev, 1, true)
}
fn ec1_all(ev: &Evaluation) -> CheckStatus {
    characterization(ev, 1, false)
}
fn ec2_connected(ev: &Evaluation) -> CheckStatus {
    characterization(ev, 2, true)
}
fn ec2_all(ev: &Evaluation) -> CheckStatus {
    characterization(ev, 2, false)
}
fn ec3_connected(ev: &Evaluation) -> CheckStatus {
    characterization(ev, 3, true)
}
fn ec3_all(ev: &Evaluation) -> CheckStatus {
    characterization(ev, 3, false)
}

fn strict_equals_permissive(ev: &Evaluation) -> CheckStatus {
    let ec = match exact_or_skip(ev) {
        Ok(v) => v,
        Err(s) => return s,
    };
    match ev.permissive {
        Some(p) => CheckStatus::from_bool(p == ec),
        None => CheckStatus::skip("permissive reading not computed"),
    }
}

pub const CERTIFICATE_VALID: &str = "certificate_valid";
pub const BOUND_SANDWICH: &str = "bound_sandwich";
pub const ORDER_RANGE: &str = "order_range";
pub const PARTNER_CAP: &str = "partner_cap";
pub const MIN_DEGREE_BOUND: &str = "min_degree_bound";
pub const DOMATIC_BOUND: &str = "domatic_bound";
pub const UNIVERSAL_VERTEX_BOUND: &str = "universal_vertex_bound";
pub const STRICT_EQUALS_PERMISSIVE: &str = "strict_equals_permissive";

/// Name of the EC = `ec` characterization check for one variant.
pub fn characterization_check(ec: usize, connected_only: bool) -> String {
    let targets = small_ec_targets(ec).join("_").to_lowercase();
    let variant = if connected_only { "connected" } else { "all" };
    format!("ec{ec}_iff_{targets}_{variant}")
}

/// Every check a sweep runs by default.
pub fn standard_checks() -> Vec<CheckDefinition> {
    vec![
        CheckDefinition {
            name: CERTIFICATE_VALID,
            hypothesis: "solved, m >= 1",
            severity: Severity::Assert,
            eval: certificate_valid,
        },
        CheckDefinition {
            name: BOUND_SANDWICH,
            hypothesis: "solved, m >= 1",
            severity: Severity::Assert,
            eval: bound_sandwich,
        },
        CheckDefinition {
            name: ORDER_RANGE,
            hypothesis: "solved, m >= 1",
            severity: Severity::Assert,
            eval: order_range,
        },
        CheckDefinition {
            name: PARTNER_CAP,
            hypothesis: "solved, max degree >= 2",
            severity: Severity::Assert,
            eval: partner_cap,
        },
        CheckDefinition {
            name: MIN_DEGREE_BOUND,
            hypothesis: "no full edge, min degree >= 1",
            severity: Severity::Report,
            eval: min_degree_bound,
        },
        CheckDefinition {
            name: DOMATIC_BOUND,
            hypothesis: "no isolated edge, no full edge",
            severity: Severity::Report,
            eval: domatic_bound,
        },
        CheckDefinition {
            name: UNIVERSAL_VERTEX_BOUND,
            hypothesis: "not complete, at least one universal vertex",
            severity: Severity::Report,
            eval: universal_vertex_bound,
        },
        CheckDefinition {
            name: "ec1_iff_k2_connected",
            hypothesis: "connected",
            severity: Severity::Report,
            eval: ec1_connected,
        },
        CheckDefinition {
            name: "ec1_iff_k2_all",
            hypothesis: "m >= 1, isolated vertices ignored",
            severity: Severity::Report,
            eval: ec1_all,
        },
        CheckDefinition {
            name: "ec2_iff_p3_2k2_connected",
            hypothesis: "connected",
            severity: Severity::Report,
            eval: ec2_connected,
        },
        CheckDefinition {
            name: "ec2_iff_p3_2k2_all",
            hypothesis: "m >= 1, isolated vertices ignored",
            severity: Severity::Report,
            eval: ec2_all,
        },
        CheckDefinition {
            name: "ec3_iff_k3_p4_k13_connected",
            hypothesis: "connected",
            severity: Severity::Report,
            eval: ec3_connected,
        },
        CheckDefinition {
            name: "ec3_iff_k3_p4_k13_all",
            hypothesis: "m >= 1, isolated vertices ignored",
            severity: Severity::Report,
            eval: ec3_all,
        },
        CheckDefinition {
            name: STRICT_EQUALS_PERMISSIVE,
            hypothesis: "solved, small enough for the permissive search",
            severity: Severity::Report,
            eval: strict_equals_permissive,
        },
    ]
}
