//! Explicit ec-partitions: the construction seeded by a maximum edge-domatic
//! partition, the minimum-degree construction, and the split star slices of
//! complete bipartite graphs.

use super::exact::first_valid_partition;
use crate::coalition::validate_partition;
use crate::domination::{covered_by, edge_domatic_number, shrink_to_minimal};
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::families;
use crate::graph::Graph;
use crate::partition::EdgePartition;

fn is_ec(g: &Graph, classes: &[EdgeSet]) -> Result<Option<EdgePartition>> {
    let p = EdgePartition::new(g.m(), classes.to_vec())?;
    Ok(validate_partition(g, &p)?.is_ec.then(|| p.normalized()))
}

/// Splits a minimal dominating set into its lowest edge and the rest. Any
/// split of a minimal set gives two non-dominating halves that form a
/// coalition; a single (full) edge stays whole.
fn split_minimal(d: &EdgeSet) -> Vec<EdgeSet> {
    let first = d.first().expect("nonempty");
    if d.len() == 1 {
        return vec![d.clone()];
    }
    let head = EdgeSet::from_indices(d.universe(), [first]).expect("in range");
    vec![head.clone(), d.difference(&head)]
}

/// An ec-partition built from a maximum edge-domatic partition: non-single
/// dominating classes are shrunk to minimal ones and split in two, their
/// surplus goes to the last such class, and whatever that class sheds on
/// shrinking becomes a residue class or is absorbed into a neighbor.
pub fn existence_partition(g: &Graph) -> Result<EdgePartition> {
    let (_, domatic) = edge_domatic_number(g)?;
    let seed = domatic.classes();
    let big: Vec<usize> = (0..seed.len()).filter(|&i| seed[i].len() > 1).collect();
    let Some(&last) = big.last() else {
        return Ok(domatic.normalized());
    };

    let mut classes: Vec<EdgeSet> = seed.iter().filter(|c| c.len() == 1).cloned().collect();
    let mut pool = seed[last].clone();
    for &i in &big[..big.len() - 1] {
        let minimal = shrink_to_minimal(g, &seed[i])?;
        pool.union_with(&seed[i].difference(&minimal));
        classes.extend(split_minimal(&minimal));
    }
    let minimal = shrink_to_minimal(g, &pool)?;
    let residue = pool.difference(&minimal);
    let halves = split_minimal(&minimal);
    classes.extend(halves.iter().cloned());

    if residue.is_empty() {
        if let Some(p) = is_ec(g, &classes)? {
            return Ok(p);
        }
    } else {
        let mut with_residue = classes.clone();
        with_residue.push(residue.clone());
        if let Some(p) = is_ec(g, &with_residue)? {
            return Ok(p);
        }
        // absorb the residue into the second half, then into any other
        // non-dominating class
        let second = classes.len() - 1;
        let mut order: Vec<usize> = vec![second];
        order.extend((0..classes.len()).filter(|&i| i != second));
        for i in order {
            if covered_by(g, &classes[i])?.is_full() {
                continue;
            }
            let mut merged = classes.clone();
            merged[i] = merged[i].union(&residue);
            if let Some(p) = is_ec(g, &merged)? {
                return Ok(p);
            }
        }
    }
    log::info!("domatic construction did not validate; using the first ec-partition found by search");
    first_valid_partition(g)
}

/// The minimum-degree construction. With `v` the lowest-index vertex of
/// minimum degree, `e1 = vu` its lowest-index edge and `e1, ..., ek` the
/// edges at `v`, the classes are `{e1}, ..., {ek}` and the edges outside
/// `N[e1]`. The edges at `u` other than `e1` also need a home; they are
/// tried with `e1`, then with the outside class, then as singletons. The
/// result has order at least `δ + 1`.
pub fn delta_construction(g: &Graph) -> Result<EdgePartition> {
    let m = g.m();
    if m == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    if g.isolated_vertices() > 0 {
        return Err(Error::HasIsolatedVertex);
    }
    if !g.full_edges().is_empty() {
        return Err(Error::HasFullEdge);
    }
    let delta = g.min_degree();
    let v = (0..g.n()).find(|&v| g.degree(v) == delta).expect("n >= 1");
    let mut at_v: Vec<usize> = g.incident_edges(v).to_vec();
    at_v.sort_unstable();
    let e1 = at_v[0];
    let (a, b) = g.endpoints(e1)?;
    let u = if a == v { b } else { a };
    let at_u: Vec<usize> = g.incident_edges(u).iter().copied().filter(|&f| f != e1).collect();
    let outside = g.edge_neighborhood(e1, true)?.complement();
    let single = |e: usize| EdgeSet::from_indices(m, [e]).expect("in range");
    let u_set = EdgeSet::from_indices(m, at_u.iter().copied())?;

    let mut base: Vec<EdgeSet> = at_v.iter().map(|&e| single(e)).collect();
    base.push(outside.clone());
    let mut attempts: Vec<Vec<EdgeSet>> = Vec::new();
    if u_set.is_empty() {
        attempts.push(base.clone());
    } else {
        let mut with_e1 = base.clone();
        with_e1[0] = with_e1[0].union(&u_set);
        attempts.push(with_e1);
        let mut with_outside = base.clone();
        let last = with_outside.len() - 1;
        with_outside[last] = with_outside[last].union(&u_set);
        attempts.push(with_outside);
        let mut separate = base.clone();
        separate.extend(at_u.iter().map(|&e| single(e)));
        attempts.push(separate);
    }
    for classes in attempts {
        let classes: Vec<EdgeSet> = classes.into_iter().filter(|c| !c.is_empty()).collect();
        if let Some(p) = is_ec(g, &classes)? {
            return Ok(p);
        }
    }
    Err(Error::ConstructionFailed(format!(
        "no placement of the edges at vertex {u} gives an ec-partition"
    )))
}

/// `K_(r,s)` with an ec-partition of order `2s`: the `r` edges into each
/// right-hand vertex are split into the first edge and the rest.
pub fn kr_s_construction(r: usize, s: usize) -> Result<(Graph, EdgePartition)> {
    if r < 2 || r > s {
        return Err(Error::InvalidFamilyParams(format!(
            "needs 2 <= r <= s, got ({r}, {s})"
        )));
    }
    let g = families::complete_bipartite(r, s)?;
    let mut lists = Vec::with_capacity(2 * s);
    for j in 0..s {
        // edge (i, r + j) has index i * s + j
        let slice: Vec<usize> = (0..r).map(|i| i * s + j).collect();
        lists.push(vec![slice[0]]);
        lists.push(slice[1..].to_vec());
    }
    let p = EdgePartition::from_index_lists(g.m(), &lists)?;
    if !validate_partition(&g, &p)?.is_ec {
        return Err(Error::ConstructionFailed(format!("split slices of K_({r},{s})")));
    }
    Ok((g, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn valid(g: &Graph, p: &EdgePartition) -> bool {
        validate_partition(g, p).unwrap().is_ec
    }

    #[test]
    fn existence_on_small_graphs() {
        let k3 = families::complete(3).unwrap();
        let p = existence_partition(&k3).unwrap();
        assert_eq!(p.order(), 3);

        let c4 = families::cycle(4).unwrap();
        let p = existence_partition(&c4).unwrap();
        assert!(valid(&c4, &p));
        assert!(p.order() >= 3);

        for g in [families::path(6).unwrap(), families::double_star(2, 3).unwrap()] {
            let p = existence_partition(&g).unwrap();
            assert!(valid(&g, &p));
        }
    }

    #[test]
    fn delta_examples() {
        let c6 = families::cycle(6).unwrap();
        let p = delta_construction(&c6).unwrap();
        assert!(valid(&c6, &p));
        assert!(p.order() >= 3);

        let k33 = families::complete_bipartite(3, 3).unwrap();
        let p = delta_construction(&k33).unwrap();
        assert!(valid(&k33, &p));
        assert!(p.order() >= 4);

        // only the singleton partition is an ec-partition of K4
        let k4 = families::complete(4).unwrap();
        assert_eq!(delta_construction(&k4).unwrap().order(), 6);
    }

    #[test]
    fn delta_errors() {
        assert!(matches!(
            delta_construction(&families::path(3).unwrap()),
            Err(Error::HasFullEdge)
        ));
        let g = Graph::new(5, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(matches!(delta_construction(&g), Err(Error::HasIsolatedVertex)));
        assert!(matches!(delta_construction(&Graph::empty(2)), Err(Error::EmptyEdgeSet)));
    }

    #[test]
    fn bipartite_slices() {
        for (r, s) in [(2, 2), (2, 3), (2, 4), (3, 3), (3, 5)] {
            let (g, p) = kr_s_construction(r, s).unwrap();
            assert_eq!(p.order(), 2 * s);
            assert!(valid(&g, &p));
        }
        assert!(kr_s_construction(1, 3).is_err());
        assert!(kr_s_construction(4, 3).is_err());
    }
}
