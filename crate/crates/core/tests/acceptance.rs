//! Acceptance run: one PASS/FAIL line per criterion with its pinned limits.
//!
//! A criterion may fail only when every violation it reports comes with a
//! witness confirmed by the reference oracles in `common`, i.e. the claim
//! under test is false rather than the code being wrong. Any other failure,
//! or a time limit overrun, makes the process exit non-zero.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use ec_kit::canon::{canonical_key, is_isomorphic, CanonicalKey};
use ec_kit::coalition::{build_ecg, singleton_partition};
use ec_kit::enumerate::{bundled_graphs, bundled_trees_8, bundled_unicyclic_8};
use ec_kit::families::{self, Family};
use ec_kit::graph6::{parse_graph6, write_graph6};
use ec_kit::verifier::{
    characterize_ec_equals_m, named_key, report, run_claims, standard_checks, sweep,
    verify_ecg_catalog, Claim, GraphClass, SweepConfig, DOMATIC_BOUND, MIN_DEGREE_BOUND,
    PARTNER_CAP, UNIVERSAL_VERTEX_BOUND,
};
use ec_kit::{ec_exact, validate_partition, EdgePartition, Graph, SolverConfig};

/// Largest size for which the zero-pruning oracle is run as a witness.
const ORACLE_MAX_EDGES: usize = 10;

struct Outcome {
    pass: bool,
    /// Every violation carries an oracle-confirmed witness.
    witnessed: bool,
    lines: Vec<String>,
}

fn key(g: &Graph) -> CanonicalKey {
    canonical_key(g).unwrap()
}

fn solver() -> SolverConfig {
    SolverConfig::default()
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

/// Oracle evidence that `g` violates `claim`: a certificate whose validity
/// the definitional check confirms and whose order exceeds what the claim
/// allows, or for small graphs the full-enumeration value.
fn witness(g: &Graph, claim: Claim, certificate: &EdgePartition) -> Option<String> {
    let order = certificate.order();
    let valid = common::is_ec(g, &certificate.labels());
    let too_big = match claim {
        Claim::Equals(v) | Claim::AtMost(v) => order > v,
        Claim::LessThan(v) => order >= v,
    };
    if valid && too_big {
        return Some(format!("certificate of order {order}: {:?}", certificate.to_index_lists()));
    }
    if g.m() <= ORACLE_MAX_EDGES {
        let v = common::ec(g);
        if !claim.holds(v, v) {
            return Some(format!("full enumeration gives {v}"));
        }
    }
    None
}

fn small_examples() -> Outcome {
    let mut ok = true;
    let mut lines = Vec::new();
    let limit = Duration::from_secs(1);
    for (name, g, expected) in [
        ("P6", families::path(6).unwrap(), 4),
        ("C5", families::cycle(5).unwrap(), 5),
    ] {
        let (r, t) = timed(|| ec_exact(&g, &solver()).unwrap());
        let recheck = validate_partition(&g, &r.certificate).unwrap().is_ec
            && common::is_ec(&g, &r.certificate.labels())
            && r.certificate.order() == r.value;
        let good = r.value == expected && recheck && t < limit;
        ok &= good;
        lines.push(format!(
            "EC({name}) = {} (expected {expected}), certificate revalidated: {recheck}, {t:.2?}",
            r.value
        ));
    }
    // {e1,e5},{e2},{e3},{e4} on P6, and the five-class labeling of P13
    for (name, g, labels) in [
        ("P6 partition", families::path(6).unwrap(), vec![0, 1, 2, 3, 0]),
        (
            "P13 labeling",
            families::path(13).unwrap(),
            vec![0, 1, 0, 1, 2, 3, 4, 1, 0, 1, 0, 1],
        ),
    ] {
        let p = EdgePartition::from_labels(&labels).unwrap();
        let (v, t) = timed(|| validate_partition(&g, &p).unwrap().is_ec);
        let good = v && common::is_ec(&g, &labels) && t < limit;
        ok &= good;
        lines.push(format!("{name} certifies: {v}, {t:.2?}"));
    }
    Outcome {
        pass: ok,
        witnessed: false,
        lines,
    }
}

fn claim_rows(claims: &[(Family, Claim)]) -> Outcome {
    let rep = run_claims(claims, &solver());
    let mut lines = Vec::new();
    let mut witnessed = true;
    for ((family, claim), row) in claims.iter().zip(&rep.rows) {
        if row.passed() {
            continue;
        }
        let g = family.build().unwrap();
        let found = match ec_exact(&g, &solver()) {
            Ok(r) => witness(&g, *claim, &r.certificate),
            Err(_) => None,
        };
        witnessed &= found.is_some();
        lines.push(format!(
            "{} expected {} got [{:?}, {:?}]; {}",
            row.family,
            row.expected,
            row.ec_lo,
            row.ec_hi,
            found.unwrap_or_else(|| "NO ORACLE WITNESS".into())
        ));
    }
    lines.insert(
        0,
        format!("{} of {} rows hold", rep.rows.len() - lines.len(), rep.rows.len()),
    );
    Outcome {
        pass: rep.failures().is_empty(),
        witnessed,
        lines,
    }
}

fn family_formulas() -> Outcome {
    let mut claims = Vec::new();
    for n in 2..=5 {
        claims.push((Family::Complete(n), Claim::Equals(n * (n - 1) / 2)));
    }
    claims.push((Family::Complete(6), Claim::LessThan(15)));
    for (r, s) in [(2, 2), (2, 3), (2, 4), (3, 3)] {
        claims.push((Family::CompleteBipartite(r, s), Claim::Equals(2 * s)));
    }
    for n in 1..=8 {
        claims.push((Family::Star(n + 1), Claim::Equals(n)));
    }
    for p in 1..=8 {
        for q in p..=9 - p {
            claims.push((Family::DoubleStar(p, q), Claim::Equals(p + q + 1)));
        }
    }
    claim_rows(&claims)
}

fn path_cycle_caps() -> Outcome {
    let mut claims = Vec::new();
    for n in 3..=14 {
        claims.push((Family::Path(n), Claim::AtMost(5)));
    }
    for n in 3..=14 {
        claims.push((Family::Cycle(n), Claim::AtMost(6)));
    }
    let mut out = claim_rows(&claims);
    // no interval fallback was used: every value is exact
    let rep = run_claims(&claims, &solver());
    let values: Vec<String> = rep
        .rows
        .iter()
        .map(|r| format!("{}={}", r.family, r.exact().map_or("?".into(), |v| v.to_string())))
        .collect();
    if rep.rows.iter().any(|r| r.exact().is_none()) {
        out.pass = false;
        out.witnessed = false;
    }
    out.lines.push(values.join(" "));
    out
}

fn oracle_equivalence() -> Outcome {
    let mut graphs = common::bundled_upto(7, 7);
    graphs.extend(bundled_trees_8().unwrap());
    graphs.retain(|g| g.m() > 0);
    let mut ec_checked = 0;
    let mut partitions_checked = 0;
    let mut mismatches = Vec::new();
    for g in &graphs {
        let fast = ec_exact(g, &solver()).unwrap().value;
        ec_checked += 1;
        if fast != common::ec(g) {
            mismatches.push(format!("ec {}", write_graph6(g).unwrap()));
        }
        if g.m() <= 6 {
            for labels in common::all_rgs(g.m()) {
                let p = EdgePartition::from_labels(&labels).unwrap();
                partitions_checked += 1;
                if validate_partition(g, &p).unwrap().is_ec != common::is_ec(g, &labels) {
                    mismatches.push(format!("validate {} {labels:?}", write_graph6(g).unwrap()));
                }
            }
        }
    }
    let mut lines = vec![format!(
        "{ec_checked} graphs compared on EC, {partitions_checked} partitions compared on validity, {} mismatches",
        mismatches.len()
    )];
    lines.extend(mismatches.iter().take(10).cloned());
    Outcome {
        pass: mismatches.is_empty(),
        witnessed: false,
        lines,
    }
}

fn small_ec_sets() -> Outcome {
    let targets: [(usize, &[&str]); 3] = [(1, &["K2"]), (2, &["P3", "2K2"]), (3, &["K3", "P4", "K13"])];
    let mut graphs = Vec::new();
    for n in 1..=6 {
        graphs.extend(bundled_graphs(n).unwrap().into_iter().filter(|g| g.m() > 0));
    }
    let solved: Vec<(Graph, usize)> = graphs
        .into_iter()
        .map(|g| {
            let v = ec_exact(&g, &solver()).unwrap().value;
            (g, v)
        })
        .collect();
    let mut pass = true;
    let mut witnessed = true;
    let mut lines = Vec::new();
    for connected_only in [true, false] {
        let variant = if connected_only { "connected" } else { "all graphs" };
        for (k, names) in targets {
            let expected: BTreeSet<CanonicalKey> = names
                .iter()
                .map(|n| named_key(n))
                .filter(|key| !connected_only || parse_graph6(key.as_str()).unwrap().is_connected())
                .collect();
            let mut found = BTreeSet::new();
            for (g, v) in &solved {
                if *v == k && (!connected_only || g.is_connected()) {
                    // isolated vertices do not change the edge structure
                    found.insert(key(&g.without_isolated_vertices()));
                }
            }
            let extra: Vec<&CanonicalKey> = found.difference(&expected).collect();
            let missing: Vec<&CanonicalKey> = expected.difference(&found).collect();
            let equal = extra.is_empty() && missing.is_empty();
            pass &= equal;
            for key in extra.iter().chain(&missing) {
                let g = parse_graph6(key.as_str()).unwrap();
                let v = common::ec(&g);
                // extras really have EC = k, missing targets really do not
                witnessed &= (v == k) == extra.contains(key);
            }
            let show = |s: &[&CanonicalKey]| s.iter().map(|k| k.as_str()).collect::<Vec<_>>().join(" ");
            lines.push(format!(
                "{variant} EC={k}: {} (found {}, extra [{}], missing [{}])",
                if equal { "equal" } else { "differs" },
                found.len(),
                show(&extra),
                show(&missing)
            ));
        }
    }
    lines.push(format!(
        "complement of C4 ({}) is disconnected, so the connected EC=2 set is P3 alone",
        named_key("2K2")
    ));
    Outcome { pass, witnessed, lines }
}

fn sweep_bounds() -> Outcome {
    let mut graphs = Vec::new();
    for n in 1..=7 {
        graphs.extend(bundled_graphs(n).unwrap());
    }
    let checks = standard_checks();
    let out = sweep(&graphs, &checks, &SweepConfig::default()).unwrap();
    let rep = report(&out.records, &checks);
    let mut lines = vec![format!(
        "{} graphs, {} with edges, {} solved exactly, {} assert failures, aborted: {}",
        rep.records,
        out.records.iter().filter(|r| r.m > 0).count(),
        rep.exact,
        rep.assert_failures(),
        out.aborted.is_some()
    )];
    let with_edges = out.records.iter().filter(|r| r.m > 0).count();
    let mut pass = out.aborted.is_none() && rep.assert_failures() == 0 && rep.exact == with_edges;
    for name in [MIN_DEGREE_BOUND, DOMATIC_BOUND, PARTNER_CAP] {
        let c = &rep.counts[name];
        pass &= c.fail == 0;
        lines.push(format!("{name}: {} pass, {} fail, {} skipped", c.pass, c.fail, c.skipped));
    }
    // recheck the minimum-degree bound straight from the records
    let mut recheck_failures = 0;
    for r in &out.records {
        let g = parse_graph6(&r.key).unwrap();
        if g.m() > 0 && g.min_degree() >= 1 && g.full_edges().is_empty() && r.ec_lo <= g.min_degree() {
            recheck_failures += 1;
        }
    }
    pass &= recheck_failures == 0;
    lines.push(format!("minimum degree bound recomputed from records: {recheck_failures} failures"));
    let universal = rep.failures_of(UNIVERSAL_VERTEX_BOUND);
    let c = &rep.counts[UNIVERSAL_VERTEX_BOUND];
    lines.push(format!(
        "{UNIVERSAL_VERTEX_BOUND} (reported): {} pass, {} fail, {} skipped; counterexamples: [{}]",
        c.pass,
        c.fail,
        c.skipped,
        universal.iter().map(|d| d.key.as_str()).collect::<Vec<_>>().join(" ")
    ));
    Outcome {
        pass,
        witnessed: false,
        lines,
    }
}

fn ecg_catalog() -> Outcome {
    let cat = verify_ecg_catalog().unwrap();
    let mut lines: Vec<String> = cat
        .bipartite
        .iter()
        .map(|c| format!("K_(2,4) {} -> {}: {}", c.label, c.expected, c.passed()))
        .collect();
    // independent star check: the singleton coalition graph is edgeless
    let mut stars_ok = cat.stars_passed();
    for n in 2..=8 {
        let g = families::star(n).unwrap();
        let ecg = build_ecg(&g, &singleton_partition(&g).unwrap()).unwrap().graph;
        stars_ok &= is_isomorphic(&ecg, &Graph::empty(n - 1)).unwrap();
        stars_ok &= common::all_rgs(g.m()).iter().filter(|l| common::is_ec(&g, l)).count() == 1;
    }
    lines.push(format!("stars n=2..8 give (n-1)K1 with a single ec-partition: {stars_ok}"));
    Outcome {
        pass: cat.bipartite_passed() && stars_ok,
        witnessed: false,
        lines,
    }
}

/// Diameter of a connected graph by repeated breadth-first search.
fn diameter(g: &Graph) -> usize {
    let mut best = 0;
    for s in 0..g.n() {
        let mut dist = vec![usize::MAX; g.n()];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        best = best.max(dist.into_iter().max().unwrap());
    }
    best
}

/// Trees of diameter at most three, or of diameter four whose central
/// vertex has degree two.
fn described_tree(g: &Graph) -> bool {
    match diameter(g) {
        0..=3 => true,
        4 => (0..g.n()).any(|c| {
            g.degree(c) == 2 && {
                let mut far = 0;
                let mut dist = vec![usize::MAX; g.n()];
                dist[c] = 0;
                let mut queue = std::collections::VecDeque::from([c]);
                while let Some(v) = queue.pop_front() {
                    far = far.max(dist[v]);
                    for &w in g.neighbors(v) {
                        if dist[w] == usize::MAX {
                            dist[w] = dist[v] + 1;
                            queue.push_back(w);
                        }
                    }
                }
                far == 2
            }
        }),
        _ => false,
    }
}

/// Cycle `C_len` with `leaves[i]` pendant leaves at cycle vertex `i`.
fn cycle_with_leaves(len: usize, leaves: &[usize]) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..len).map(|i| (i, (i + 1) % len)).collect();
    let mut next = len;
    for (i, &k) in leaves.iter().enumerate() {
        for _ in 0..k {
            edges.push((i, next));
            next += 1;
        }
    }
    Graph::new(next, &edges).unwrap()
}

/// Triangle vertex x with `p` leaves, joined to a vertex b with `q` leaves.
fn triangle_double_star(p: usize, q: usize) -> Graph {
    let mut edges = vec![(0, 1), (1, 2), (0, 2), (0, 3)];
    let mut next = 4;
    for _ in 0..p {
        edges.push((0, next));
        next += 1;
    }
    for _ in 0..q {
        edges.push((3, next));
        next += 1;
    }
    Graph::new(next, &edges).unwrap()
}

/// Textually described unicyclic members on at most `n_max` vertices.
fn described_unicyclic(n_max: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for len in 3..=6.min(n_max) {
        out.push((format!("C{len}"), families::cycle(len).unwrap()));
    }
    for a in 1..=n_max - 3 {
        for b in 0..=a.min(n_max - 3 - a) {
            for c in 0..=b.min(n_max - 3 - a - b) {
                out.push((format!("triangle leaves {a},{b},{c}"), cycle_with_leaves(3, &[a, b, c])));
            }
        }
    }
    // triangle vertex joined to the center of a star with q leaves; the
    // double star shares its second center's edge with the triangle
    for q in 1..=n_max.saturating_sub(4) {
        out.push((format!("triangle double star 0,{q}"), triangle_double_star(0, q)));
    }
    for a in 1..=n_max.saturating_sub(4) {
        out.push((format!("square leaves {a}"), cycle_with_leaves(4, &[a])));
        for b in 1..=a.min(n_max - 4 - a) {
            out.push((format!("square leaves {a},{b} adjacent"), cycle_with_leaves(4, &[a, b])));
            out.push((format!("square leaves {a},{b} opposite"), cycle_with_leaves(4, &[a, 0, b])));
        }
    }
    for a in 1..=n_max.saturating_sub(5) {
        out.push((format!("pentagon leaves {a}"), cycle_with_leaves(5, &[a])));
    }
    out.retain(|(_, g)| g.n() <= n_max);
    out
}

fn unicyclic_with(g: &Graph) -> bool {
    characterize_ec_equals_m(g.n(), GraphClass::Unicyclic)
        .unwrap()
        .iter()
        .any(|u| u.key == key(g))
}

fn ec_equals_size() -> Outcome {
    let mut lines = Vec::new();
    let mut pass = true;

    let trees: BTreeSet<CanonicalKey> = characterize_ec_equals_m(6, GraphClass::Tree)
        .unwrap()
        .into_iter()
        .map(|t| t.key)
        .collect();
    let mut described = BTreeSet::new();
    let mut oracle_disagreements = 0;
    for n in 2..=6 {
        for g in bundled_graphs(n).unwrap() {
            if !g.is_connected() || g.m() + 1 != n {
                continue;
            }
            if described_tree(&g) {
                described.insert(key(&g));
            }
            let singleton: Vec<usize> = (0..g.m()).collect();
            if common::is_ec(&g, &singleton) != trees.contains(&key(&g)) {
                oracle_disagreements += 1;
            }
        }
    }
    let trees_equal = trees == described;
    pass &= trees_equal && oracle_disagreements == 0;
    lines.push(format!(
        "trees n<=6 with EC=m: {} computed, {} described, equal: {trees_equal}, oracle disagreements: {oracle_disagreements}",
        trees.len(),
        described.len()
    ));

    let unicyclic: BTreeSet<CanonicalKey> = characterize_ec_equals_m(6, GraphClass::Unicyclic)
        .unwrap()
        .into_iter()
        .map(|u| u.key)
        .collect();
    let wanted = described_unicyclic(6);
    let absent: Vec<&String> = wanted
        .iter()
        .filter(|(_, g)| !unicyclic.contains(&key(g)))
        .map(|(name, _)| name)
        .collect();
    let wanted_keys: BTreeSet<CanonicalKey> = wanted.iter().map(|(_, g)| key(g)).collect();
    let extra: Vec<&str> = unicyclic.difference(&wanted_keys).map(|k| k.as_str()).collect();
    pass &= absent.is_empty();
    lines.push(format!(
        "unicyclic n<=6 with EC=m: {} computed, {} described members all present: {}; absent {:?}; extra [{}]",
        unicyclic.len(),
        wanted_keys.len(),
        absent.is_empty(),
        absent,
        extra.join(" ")
    ));

    // with leaves at both centers the leaf edge at the triangle has no
    // partner; reported with the oracle's verdict on the singleton partition
    for (p, q) in [(1, 1), (1, 2), (2, 1)] {
        let g = triangle_double_star(p, q);
        let singleton: Vec<usize> = (0..g.m()).collect();
        let oracle = common::is_ec(&g, &singleton);
        pass &= !oracle && !unicyclic_with(&g);
        lines.push(format!(
            "triangle with double star {p},{q} ({}): singleton partition valid per oracle: {oracle}",
            key(&g)
        ));
    }

    // reported only: which connected graphs on at most 7 vertices are their
    // own singleton coalition graph
    let cat = verify_ecg_catalog().unwrap();
    let keys: Vec<String> = cat
        .self_coalition
        .iter()
        .map(|s| format!("{} (n={}, m={})", s.key, s.n, s.m))
        .collect();
    let mut self_ok = true;
    for s in &cat.self_coalition {
        let g = parse_graph6(s.key.as_str()).unwrap();
        let ecg = build_ecg(&g, &singleton_partition(&g).unwrap()).unwrap().graph;
        self_ok &= is_isomorphic(&g, &ecg).unwrap();
    }
    pass &= self_ok;
    lines.push(format!(
        "self-edge-coalition graphs, connected n<=7: {} found (two claimed): {}",
        keys.len(),
        keys.join(", ")
    ));
    lines.push(format!(
        "unicyclic n=8 graphs bundled for the coalition graph catalog: {}",
        bundled_unicyclic_8().unwrap().len()
    ));
    Outcome {
        pass,
        witnessed: false,
        lines,
    }
}

/// Title, time limit and check.
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("P6, C5 and two labeled partitions", Duration::from_secs(2), small_examples),
        ("family formulas", Duration::from_secs(300), family_formulas),
        ("path and cycle caps", Duration::from_secs(1800), path_cycle_caps),
        ("oracle equivalence", Duration::from_secs(3600), oracle_equivalence),
        ("small-EC characterizations", Duration::from_secs(3600), small_ec_sets),
        ("bound sandwich and degree bounds, n <= 7", Duration::from_secs(3600), sweep_bounds),
        ("coalition graph catalog", Duration::from_secs(60), ecg_catalog),
        ("EC = m re-derivation", Duration::from_secs(7200), ec_equals_size),
    ];
    let mut unexplained = Vec::new();
    for (i, (title, limit, run)) in criteria.iter().enumerate() {
        let (out, t) = timed(run);
        let in_time = t < *limit;
        let verdict = if out.pass && in_time { "PASS" } else { "FAIL" };
        println!("criterion {}: {verdict}  {title}  ({t:.2?}, limit {limit:?})", i + 1);
        for line in &out.lines {
            println!("    {line}");
        }
        if !in_time || !(out.pass || out.witnessed) {
            unexplained.push(i + 1);
        } else if !out.pass {
            println!("    every violation above is confirmed by the reference oracle");
        }
    }
    if unexplained.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("criteria failing without an oracle-confirmed counterexample: {unexplained:?}");
        ExitCode::FAILURE
    }
}
