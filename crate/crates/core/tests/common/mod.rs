//! Independent reference implementations used by the integration tests.
//! They work straight from the definitions on plain vectors, without the
//! library's bitmasks, bounds or pruning.

#![allow(dead_code)]

use ec_kit::Graph;
use proptest::prelude::*;

fn adjacent(g: &Graph, e: usize, f: usize) -> bool {
    let (a, b) = g.edges()[e];
    let (c, d) = g.edges()[f];
    e != f && (a == c || a == d || b == c || b == d)
}

/// Every edge outside `d` shares an endpoint with some edge of `d`.
pub fn dominates(g: &Graph, d: &[usize]) -> bool {
    (0..g.m()).all(|f| d.contains(&f) || d.iter().any(|&e| adjacent(g, e, f)))
}

/// Partition given as class labels `0..k`; checks the strict definition
/// class by class.
pub fn is_ec(g: &Graph, labels: &[usize]) -> bool {
    let k = labels.iter().max().map_or(0, |x| x + 1);
    let classes: Vec<Vec<usize>> = (0..k)
        .map(|c| (0..labels.len()).filter(|&e| labels[e] == c).collect())
        .collect();
    if classes.iter().any(Vec::is_empty) {
        return false;
    }
    (0..k).all(|i| {
        if dominates(g, &classes[i]) {
            return classes[i].len() == 1;
        }
        (0..k).any(|j| {
            j != i && !dominates(g, &classes[j]) && {
                let mut u = classes[i].clone();
                u.extend(&classes[j]);
                dominates(g, &u)
            }
        })
    })
}

/// All restricted growth strings of length `m`.
pub fn all_rgs(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn go(m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        let top = cur.iter().max().map_or(0, |x| x + 1);
        for c in 0..=top {
            cur.push(c);
            go(m, cur, out);
            cur.pop();
        }
    }
    go(m, &mut cur, &mut out);
    out
}

/// Maximum order over every set partition, no pruning.
pub fn ec(g: &Graph) -> usize {
    all_rgs(g.m())
        .iter()
        .filter(|l| is_ec(g, l))
        .map(|l| l.iter().max().map_or(0, |x| x + 1))
        .max()
        .unwrap_or(0)
}

/// Largest number of classes in a partition into dominating sets.
pub fn edge_domatic(g: &Graph) -> usize {
    all_rgs(g.m())
        .iter()
        .filter(|l| {
            let k = l.iter().max().map_or(0, |x| x + 1);
            (0..k).all(|c| {
                let class: Vec<usize> = (0..l.len()).filter(|&e| l[e] == c).collect();
                dominates(g, &class)
            })
        })
        .map(|l| l.iter().max().map_or(0, |x| x + 1))
        .max()
        .unwrap_or(0)
}

/// Minimal edge dominating sets as sorted index vectors, by subset scan.
pub fn minimal_eds(g: &Graph) -> Vec<Vec<usize>> {
    let m = g.m();
    let mut out = Vec::new();
    for mask in 0u32..(1 << m) {
        let d: Vec<usize> = (0..m).filter(|&e| mask >> e & 1 == 1).collect();
        if !dominates(g, &d) {
            continue;
        }
        let minimal = (0..d.len()).all(|i| {
            let mut s = d.clone();
            s.remove(i);
            !dominates(g, &s)
        });
        if minimal {
            out.push(d);
        }
    }
    out.sort();
    out
}

/// Random simple graphs with at most `max_n` vertices and `max_m` edges.
pub fn arb_graph(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let cap = pairs.len().min(max_m);
        proptest::sample::subsequence(pairs, 0..=cap)
            .prop_shuffle()
            .prop_map(move |edges| Graph::new(n, &edges).expect("distinct pairs"))
    })
}

/// Graphs from the bundled enumeration, `n <= max_n`, with `m <= max_m`.
pub fn bundled_upto(max_n: usize, max_m: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| ec_kit::enumerate::bundled_graphs(n).expect("bundled"))
        .filter(|g| g.m() <= max_m)
        .collect()
}
