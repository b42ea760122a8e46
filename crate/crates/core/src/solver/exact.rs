//! Branch-and-bound over set partitions of the edges.
//!
//! Edges are assigned in index order; edge `i` joins one of the open classes
//! or starts a new one, so every partition is visited once, as its restricted
//! growth string, in lexicographic order. Two cuts keep the tree small:
//!
//! * order: open classes plus unassigned edges cannot beat the incumbent;
//! * partners: a class that cannot end up singleton-dominating or with a
//!   coalition partner kills the branch. A dominating class with two or more
//!   edges is dead, and a non-dominating class needs some other class (or a
//!   class still to be opened) whose union with it, plus everything the
//!   unassigned edges could add, covers every edge.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::{bounds, Bound, EcResult, SolverConfig, MASK_EDGES};
use crate::coalition::{validate_partition, Reading};
use crate::domination::Masks;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::EdgePartition;

const CLOCK_INTERVAL: u64 = 1 << 14;

pub(crate) struct Problem {
    masks: Masks,
    /// `suffix[i]` = union of the closed neighborhoods of edges `i..m`.
    suffix: Vec<u64>,
}

impl Problem {
    pub(crate) fn new(g: &Graph) -> Problem {
        let masks = Masks::new(g).expect("caller checks m <= 64");
        let m = masks.m;
        let mut suffix = vec![0u64; m + 1];
        for i in (0..m).rev() {
            suffix[i] = suffix[i + 1] | masks.nb[i];
        }
        Problem { masks, suffix }
    }

    fn m(&self) -> usize {
        self.masks.m
    }
}

#[derive(Clone)]
struct State {
    labels: Vec<usize>,
    members: Vec<u64>,
    covers: Vec<u64>,
}

impl State {
    fn empty(m: usize) -> State {
        State {
            labels: Vec::with_capacity(m),
            members: Vec::with_capacity(m),
            covers: Vec::with_capacity(m),
        }
    }

    fn push(&mut self, p: &Problem, e: usize, class: usize) {
        if class == self.members.len() {
            self.members.push(0);
            self.covers.push(0);
        }
        self.members[class] |= 1 << e;
        self.covers[class] |= p.masks.nb[e];
        self.labels.push(class);
    }

    fn pop(&mut self, p: &Problem, e: usize) {
        let class = self.labels.pop().expect("nonempty");
        self.members[class] &= !(1u64 << e);
        if self.members[class] == 0 {
            self.members.pop();
            self.covers.pop();
        } else {
            self.covers[class] = p.masks.cover(self.members[class]);
        }
    }

    fn order(&self) -> usize {
        self.members.len()
    }

    /// Partner cut for the state after `next` edges have been assigned. At
    /// `next == m` this is exactly ec-partition validity.
    fn viable(&self, p: &Problem, next: usize, reading: Reading) -> bool {
        let full = p.masks.full;
        let suffix = p.suffix[next];
        let open = next < p.m();
        (0..self.members.len()).all(|c| {
            let cover = self.covers[c];
            if cover == full {
                return reading == Reading::Permissive || self.members[c].count_ones() == 1;
            }
            if open && cover | suffix == full {
                return true;
            }
            (0..self.members.len())
                .any(|d| d != c && self.covers[d] != full && cover | self.covers[d] | suffix == full)
        })
    }
}

struct Shared<'a> {
    problem: &'a Problem,
    reading: Reading,
    /// Largest order accepted so far; with `all_optima` ties are kept too.
    best: &'a AtomicUsize,
    all_optima: bool,
    /// Stop when this order is reached (a proven upper bound).
    ceiling: usize,
    stop: &'a AtomicBool,
    timed_out: &'a AtomicBool,
    deadline: Option<Instant>,
    /// Return as soon as any valid leaf is found.
    first_only: bool,
}

#[derive(Default)]
struct Worker {
    found: Vec<Vec<usize>>,
    found_order: usize,
    nodes: u64,
}

impl Shared<'_> {
    fn cut(&self, state: &State, next: usize) -> bool {
        let reach = state.order() + (self.problem.m() - next);
        let best = self.best.load(Ordering::Relaxed);
        if self.all_optima {
            reach < best
        } else {
            reach <= best
        }
    }

    fn tick(&self, w: &mut Worker) -> bool {
        w.nodes += 1;
        if w.nodes.is_multiple_of(CLOCK_INTERVAL) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.timed_out.store(true, Ordering::Relaxed);
                    self.stop.store(true, Ordering::Relaxed);
                }
            }
        }
        self.stop.load(Ordering::Relaxed)
    }

    fn leaf(&self, state: &State, w: &mut Worker) {
        let order = state.order();
        let best = self.best.load(Ordering::Relaxed);
        let better = order > best || (self.all_optima && order == best) || self.first_only;
        if !better {
            return;
        }
        if order > w.found_order || w.found.is_empty() {
            w.found.clear();
            w.found_order = order;
        }
        if order == w.found_order {
            w.found.push(state.labels.clone());
        }
        self.best.fetch_max(order, Ordering::Relaxed);
        if self.first_only || (!self.all_optima && order >= self.ceiling) {
            self.stop.store(true, Ordering::Relaxed);
        }
    }

    fn dfs(&self, state: &mut State, next: usize, w: &mut Worker) {
        if self.tick(w) {
            return;
        }
        let p = self.problem;
        if next == p.m() {
            self.leaf(state, w);
            return;
        }
        for class in 0..=state.order() {
            // a dominating class is a full single edge and must stay so
            if class < state.order() && state.covers[class] == p.masks.full && self.reading == Reading::Strict {
                continue;
            }
            state.push(p, next, class);
            if !(self.cut(state, next + 1) && !self.first_only) && state.viable(p, next + 1, self.reading) {
                self.dfs(state, next + 1, w);
            }
            state.pop(p, next);
            if self.stop.load(Ordering::Relaxed) {
                return;
            }
        }
    }
}

/// Restricted growth string prefixes of length `depth` that survive the cuts.
fn prefixes(shared: &Shared<'_>, depth: usize) -> Vec<State> {
    let p = shared.problem;
    let mut level = vec![State::empty(p.m())];
    for next in 0..depth.min(p.m()) {
        let mut grown = Vec::new();
        for state in &level {
            for class in 0..=state.order() {
                let mut child = state.clone();
                child.push(p, next, class);
                if child.viable(p, next + 1, shared.reading) {
                    grown.push(child);
                }
            }
        }
        level = grown;
    }
    level
}

struct Outcome {
    order: usize,
    found: Vec<Vec<usize>>,
    nodes: u64,
    timed_out: bool,
}

fn run_search(
    problem: &Problem,
    cfg: &SolverConfig,
    reading: Reading,
    floor: usize,
    ceiling: usize,
    first_only: bool,
) -> Outcome {
    let best = AtomicUsize::new(floor);
    let stop = AtomicBool::new(false);
    let timed_out = AtomicBool::new(false);
    let shared = Shared {
        problem,
        reading,
        best: &best,
        all_optima: cfg.emit_all_optima,
        ceiling,
        stop: &stop,
        timed_out: &timed_out,
        deadline: cfg.time_budget.map(|b| Instant::now() + b),
        first_only,
    };
    let threads = cfg.threads.max(1);
    let mut workers = if threads == 1 || problem.m() < 8 {
        let mut w = Worker::default();
        shared.dfs(&mut State::empty(problem.m()), 0, &mut w);
        vec![w]
    } else {
        let depth = (problem.m() / 3).clamp(3, 8);
        let roots = prefixes(&shared, depth);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        pool.install(|| {
            roots
                .into_par_iter()
                .map(|mut state| {
                    let mut w = Worker::default();
                    if !shared.cut(&state, depth) || shared.all_optima || first_only {
                        shared.dfs(&mut state, depth, &mut w);
                    }
                    w
                })
                .collect()
        })
    };
    let order = workers.iter().map(|w| w.found_order).max().unwrap_or(0);
    let nodes = workers.iter().map(|w| w.nodes).sum();
    let mut found: Vec<Vec<usize>> = workers
        .iter_mut()
        .filter(|w| w.found_order == order)
        .flat_map(|w| std::mem::take(&mut w.found))
        .collect();
    found.sort();
    found.dedup();
    Outcome {
        order,
        found,
        nodes,
        timed_out: timed_out.load(Ordering::Relaxed),
    }
}

fn check_size(g: &Graph, cap: usize) -> Result<()> {
    if g.m() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    let cap = cap.min(MASK_EDGES);
    if g.m() > cap {
        return Err(Error::SizeCapExceeded {
            what: "exact edge coalition search",
            m: g.m(),
            cap,
        });
    }
    Ok(())
}

/// The first ec-partition in restricted growth string order, regardless of
/// its order. Used as a last resort by the constructions.
pub fn first_valid_partition(g: &Graph) -> Result<EdgePartition> {
    check_size(g, MASK_EDGES)?;
    let problem = Problem::new(g);
    let cfg = SolverConfig::default();
    let out = run_search(&problem, &cfg, Reading::Strict, 0, usize::MAX, true);
    match out.found.into_iter().next() {
        Some(labels) => EdgePartition::from_labels(&labels),
        None => Err(Error::ConstructionFailed("graph has no ec-partition".into())),
    }
}

/// Largest `m` accepted by [`all_ec_partitions`].
pub const ALL_PARTITIONS_MAX_EDGES: usize = 12;

/// Every strict ec-partition of `g`, in restricted growth string order.
pub fn all_ec_partitions(g: &Graph) -> Result<Vec<EdgePartition>> {
    if g.m() > ALL_PARTITIONS_MAX_EDGES {
        return Err(Error::SizeCapExceeded {
            what: "ec-partition enumeration",
            m: g.m(),
            cap: ALL_PARTITIONS_MAX_EDGES,
        });
    }
    check_size(g, MASK_EDGES)?;
    let problem = Problem::new(g);
    let mut out = Vec::new();
    collect_all(&problem, &mut State::empty(problem.m()), 0, &mut out);
    out.iter().map(|l| EdgePartition::from_labels(l)).collect()
}

fn collect_all(p: &Problem, state: &mut State, next: usize, out: &mut Vec<Vec<usize>>) {
    if next == p.m() {
        out.push(state.labels.clone());
        return;
    }
    for class in 0..=state.order() {
        if class < state.order() && state.covers[class] == p.masks.full {
            continue;
        }
        state.push(p, next, class);
        if state.viable(p, next + 1, Reading::Strict) {
            collect_all(p, state, next + 1, out);
        }
        state.pop(p, next);
    }
}

/// Maximum order of an ec-partition under the given reading, with the
/// maximizing partitions found. Shared by [`ec_exact`] and the verifier.
pub(crate) fn search_max(
    g: &Graph,
    cfg: &SolverConfig,
    reading: Reading,
    floor: usize,
    ceiling: usize,
) -> Result<(usize, Vec<EdgePartition>, u64, bool)> {
    check_size(g, cfg.max_edges)?;
    let problem = Problem::new(g);
    let out = run_search(&problem, cfg, reading, floor, ceiling, false);
    let parts = out
        .found
        .iter()
        .map(|l| EdgePartition::from_labels(l))
        .collect::<Result<Vec<_>>>()?;
    Ok((out.order, parts, out.nodes, out.timed_out))
}

/// Exact edge coalition number with a certificate.
pub fn ec_exact(g: &Graph, cfg: &SolverConfig) -> Result<EcResult> {
    check_size(g, cfg.max_edges)?;
    let upper = bounds::ec_upper_bound(g)?;
    let lower = bounds::ec_lower_bound(g)?;
    let mut trace = lower.parts.clone();
    trace.extend(upper.parts.iter().cloned());

    // floor = lower - 1 lets the search rediscover partitions of the witness
    // order, so the certificate is the first optimum in search order
    let floor = if cfg.emit_all_optima { lower.value } else { lower.value - 1 };
    let (order, found, nodes, timed_out) =
        search_max(g, cfg, Reading::Strict, floor, upper.value)?;

    if timed_out {
        let (lo, best) = match found.first() {
            Some(p) if order > lower.value => (order, p.clone()),
            _ => (lower.value, lower.witness.clone()),
        };
        return Err(Error::TimeBudgetExceeded {
            lo,
            hi: upper.value,
            best: Box::new(best),
        });
    }
    let certificate = found
        .first()
        .cloned()
        .ok_or_else(|| Error::ConstructionFailed("search found no ec-partition".into()))?;
    if !validate_partition(g, &certificate)?.is_ec || certificate.order() != order {
        return Err(Error::ConstructionFailed("certificate failed revalidation".into()));
    }
    trace.push(Bound::new("exact", order));
    Ok(EcResult {
        value: order,
        certificate,
        bound_trace: trace,
        all_optima: if cfg.emit_all_optima { found } else { Vec::new() },
        nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn ec(g: &Graph) -> usize {
        ec_exact(g, &SolverConfig::default()).unwrap().value
    }

    #[test]
    fn small_known_values() {
        assert_eq!(ec(&families::path(6).unwrap()), 4);
        assert_eq!(ec(&families::cycle(5).unwrap()), 5);
        assert_eq!(ec(&families::complete(5).unwrap()), 10);
        assert_eq!(ec(&families::double_star(2, 3).unwrap()), 6);
        // the order-5 labeling of P13 is valid but not maximal
        assert_eq!(ec(&families::path(11).unwrap()), 6);
        assert_eq!(ec(&families::path(13).unwrap()), 6);
    }

    #[test]
    fn tiny_graphs() {
        assert_eq!(ec(&families::complete(2).unwrap()), 1);
        assert_eq!(ec(&families::path(3).unwrap()), 2);
        let two_k2 = families::complete(2).unwrap().disjoint_union(&families::complete(2).unwrap());
        assert_eq!(ec(&two_k2), 2);
    }

    #[test]
    fn certificate_is_first_optimum() {
        let g = families::path(6).unwrap();
        let cfg = SolverConfig {
            emit_all_optima: true,
            ..SolverConfig::default()
        };
        let all = ec_exact(&g, &cfg).unwrap();
        let first = ec_exact(&g, &SolverConfig::default()).unwrap();
        assert!(!all.all_optima.is_empty());
        let min = all.all_optima.iter().map(EdgePartition::labels).min().unwrap();
        assert_eq!(first.certificate.labels(), min);
        for p in &all.all_optima {
            assert_eq!(p.order(), 4);
            assert!(validate_partition(&g, p).unwrap().is_ec);
        }
    }

    #[test]
    fn threads_agree_on_value() {
        for g in [families::cycle(10).unwrap(), families::complete_bipartite(3, 3).unwrap()] {
            let one = ec(&g);
            let cfg = SolverConfig {
                threads: 4,
                ..SolverConfig::default()
            };
            assert_eq!(ec_exact(&g, &cfg).unwrap().value, one);
        }
    }

    #[test]
    fn caps_and_errors() {
        let g = families::path(8).unwrap();
        let cfg = SolverConfig {
            max_edges: 5,
            ..SolverConfig::default()
        };
        assert!(matches!(
            ec_exact(&g, &cfg),
            Err(Error::SizeCapExceeded { m: 7, cap: 5, .. })
        ));
        assert!(matches!(
            ec_exact(&Graph::empty(3), &SolverConfig::default()),
            Err(Error::EmptyEdgeSet)
        ));
    }

    #[test]
    fn zero_budget_gives_interval() {
        let g = families::complete(6).unwrap();
        let cfg = SolverConfig {
            time_budget: Some(std::time::Duration::ZERO),
            ..SolverConfig::default()
        };
        match ec_exact(&g, &cfg) {
            Err(Error::TimeBudgetExceeded { lo, hi, best }) => {
                assert!(lo <= hi);
                assert_eq!(best.order(), lo);
                assert!(validate_partition(&g, &best).unwrap().is_ec);
            }
            Ok(r) => assert!(r.value < 15),
            Err(e) => panic!("{e}"),
        }
    }

    #[test]
    fn enumerates_every_partition() {
        // K4: any two-edge class either dominates or leaves an edge without a partner
        let all = all_ec_partitions(&families::complete(4).unwrap()).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].order(), 6);
        let p6 = all_ec_partitions(&families::path(6).unwrap()).unwrap();
        assert!(p6.iter().all(|p| validate_partition(&families::path(6).unwrap(), p).unwrap().is_ec));
        assert_eq!(p6.iter().map(|p| p.order()).max(), Some(4));
        assert!(all_ec_partitions(&families::path(14).unwrap()).is_err());
    }
}
