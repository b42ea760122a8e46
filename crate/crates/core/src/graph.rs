//! Simple undirected graphs with a fixed edge order.
//!
//! Edge `i` of a [`Graph`] always refers to the same endpoint pair, stored
//! normalized as `(u, v)` with `u < v`. Edge sets, partitions and certificates
//! are all expressed in terms of these indices.

use std::collections::{HashMap, VecDeque};

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    incident: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list, keeping the given
    /// order. Each pair is normalized so that the smaller endpoint comes first.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph> {
        let mut seen = HashMap::with_capacity(edge_list.len());
        let mut edges = Vec::with_capacity(edge_list.len());
        let mut adjacency = vec![Vec::new(); n];
        let mut incident = vec![Vec::new(); n];
        for &(a, b) in edge_list {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if seen.insert((u, v), edges.len()).is_some() {
                return Err(Error::DuplicateEdge { u, v });
            }
            incident[u].push(edges.len());
            incident[v].push(edges.len());
            adjacency[u].push(v);
            adjacency[v].push(u);
            edges.push((u, v));
        }
        for row in &mut adjacency {
            row.sort_unstable();
        }
        Ok(Graph {
            n,
            edges,
            adjacency,
            incident,
        })
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
            incident: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, e: usize) -> Result<(usize, usize)> {
        self.edges
            .get(e)
            .copied()
            .ok_or(Error::EdgeOutOfRange { edge: e, m: self.m() })
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Indices of the edges incident to `v`, in increasing order.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incident[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.incident[u]
            .iter()
            .copied()
            .find(|&e| self.edges[e] == (u.min(v), u.max(v)))
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count == self.n
    }

    pub fn is_complete(&self) -> bool {
        self.m() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn isolated_vertices(&self) -> usize {
        (0..self.n).filter(|&v| self.degree(v) == 0).count()
    }

    fn check_edge(&self, e: usize) -> Result<()> {
        if e < self.m() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange { edge: e, m: self.m() })
        }
    }

    /// Edges sharing an endpoint with `e`; `closed` additionally includes `e`.
    pub fn edge_neighborhood(&self, e: usize, closed: bool) -> Result<EdgeSet> {
        self.check_edge(e)?;
        let (u, v) = self.edges[e];
        let mut set = EdgeSet::empty(self.m());
        for &f in self.incident[u].iter().chain(&self.incident[v]) {
            set.insert(f);
        }
        if !closed {
            set.remove(e);
        }
        Ok(set)
    }

    /// All closed edge neighborhoods, indexed by edge.
    pub fn closed_neighborhoods(&self) -> Vec<EdgeSet> {
        (0..self.m())
            .map(|e| self.edge_neighborhood(e, true).expect("edge in range"))
            .collect()
    }

    pub fn edge_degree(&self, e: usize) -> Result<usize> {
        self.check_edge(e)?;
        let (u, v) = self.edges[e];
        Ok(self.degree(u) + self.degree(v) - 2)
    }

    /// An edge adjacent to every other edge.
    pub fn is_full_edge(&self, e: usize) -> Result<bool> {
        Ok(self.edge_degree(e)? + 1 == self.m())
    }

    pub fn full_edges(&self) -> Vec<usize> {
        (0..self.m())
            .filter(|&e| self.is_full_edge(e).expect("edge in range"))
            .collect()
    }

    /// Vertex `i` of the result is edge `i` of `self`; two vertices are
    /// adjacent iff the edges share an endpoint.
    pub fn line_graph(&self) -> Graph {
        let mut pairs = Vec::new();
        for v in 0..self.n {
            let inc = &self.incident[v];
            for (i, &a) in inc.iter().enumerate() {
                for &b in &inc[i + 1..] {
                    pairs.push((a.min(b), a.max(b)));
                }
            }
        }
        // simple graphs: two edges share at most one endpoint
        pairs.sort_unstable();
        Graph::new(self.m(), &pairs).expect("line graph of a simple graph is simple")
    }

    /// The graph with vertex `v` renamed to `perm[v]`, edges kept in order.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::VertexOutOfRange {
                vertex: perm.len(),
                n: self.n,
            });
        }
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n, &edges)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges: Vec<_> = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)))
            .collect();
        Graph::new(self.n + other.n, &edges).expect("disjoint union is simple")
    }

    /// The same graph with an extra edge appended.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut edges = self.edges.clone();
        edges.push((u, v));
        Graph::new(self.n, &edges)
    }

    /// The subgraph spanned by the edges, dropping isolated vertices.
    pub fn without_isolated_vertices(&self) -> Graph {
        let mut map = vec![usize::MAX; self.n];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if self.degree(v) > 0 {
                *slot = next;
                next += 1;
            }
        }
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (map[u], map[v])).collect();
        Graph::new(next, &edges).expect("restriction of a simple graph is simple")
    }

    /// Edges sorted lexicographically by endpoint pair.
    pub fn with_sorted_edges(&self) -> Graph {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        Graph::new(self.n, &edges).expect("same edge set")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Graph::new(3, &[(0, 1), (0, 1)]),
            Err(Error::DuplicateEdge { u: 0, v: 1 })
        ));
        assert!(matches!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { .. })
        ));
        assert!(matches!(Graph::new(3, &[(2, 2)]), Err(Error::SelfLoop(2))));
        assert!(matches!(
            Graph::new(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn normalizes_and_keeps_order() {
        let g = Graph::new(4, &[(3, 2), (0, 1), (2, 0)]).unwrap();
        assert_eq!(g.edges(), &[(2, 3), (0, 1), (0, 2)]);
        assert_eq!(g.edge_index(0, 2), Some(2));
        assert_eq!(g.edge_index(1, 3), None);
    }

    #[test]
    fn k2_single_edge() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.edge_degree(0).unwrap(), 0);
        assert!(g.is_full_edge(0).unwrap());
    }

    #[test]
    fn p6_neighborhoods() {
        let p6 = families::path(6).unwrap();
        assert_eq!(p6.m(), 5);
        // e3 in 1-based naming is index 2
        assert_eq!(p6.edge_neighborhood(2, false).unwrap().to_vec(), vec![1, 3]);
        assert_eq!(p6.edge_neighborhood(2, true).unwrap().to_vec(), vec![1, 2, 3]);
        assert_eq!(p6.edge_degree(2).unwrap(), 2);
        assert!(!p6.is_full_edge(2).unwrap());
        assert!(matches!(
            p6.edge_neighborhood(5, true),
            Err(Error::EdgeOutOfRange { edge: 5, m: 5 })
        ));
    }

    #[test]
    fn triangle_neighborhoods() {
        let k3 = families::complete(3).unwrap();
        for e in 0..3 {
            let others: Vec<_> = (0..3).filter(|&f| f != e).collect();
            assert_eq!(k3.edge_neighborhood(e, false).unwrap().to_vec(), others);
        }
    }

    #[test]
    fn k4_neighborhood_matches_pair_scan() {
        let k4 = families::complete(4).unwrap();
        let e = k4.edge_index(0, 1).unwrap();
        let (u, v) = k4.endpoints(e).unwrap();
        let scan: Vec<usize> = (0..k4.m())
            .filter(|&f| f != e)
            .filter(|&f| {
                let (a, b) = k4.endpoints(f).unwrap();
                a == u || a == v || b == u || b == v
            })
            .collect();
        let nb = k4.edge_neighborhood(e, false).unwrap();
        assert_eq!(nb.to_vec(), scan);
        assert_eq!(nb.len(), 4);
        assert_eq!(nb.len(), k4.degree(0) + k4.degree(1) - 2);
    }

    #[test]
    fn star_center_edges_are_full() {
        let p3 = families::path(3).unwrap();
        assert!(p3.is_full_edge(0).unwrap() && p3.is_full_edge(1).unwrap());
        assert_eq!(p3.edge_degree(0).unwrap(), 1);
    }

    #[test]
    fn line_graphs() {
        let p6 = families::path(6).unwrap();
        let lp = p6.line_graph();
        assert_eq!((lp.n(), lp.m()), (5, 4));
        assert_eq!(lp.edges(), families::path(5).unwrap().edges());

        let k3 = families::complete(3).unwrap();
        let lk = k3.line_graph();
        assert_eq!((lk.n(), lk.m()), (3, 3));

        let star = families::star(5).unwrap();
        let ls = star.line_graph();
        assert_eq!(ls.n(), 4);
        for a in 0..4 {
            for b in (a + 1)..4 {
                assert!(ls.has_edge(a, b));
            }
        }
    }

    #[test]
    fn connectivity() {
        assert!(families::cycle(5).unwrap().is_connected());
        let two_k2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_k2.is_connected());
        assert!(Graph::empty(1).is_connected());
    }
}
