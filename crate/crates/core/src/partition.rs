use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};

/// An ordered list of disjoint, nonempty edge classes covering all `m` edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgePartition {
    m: usize,
    classes: Vec<EdgeSet>,
}

impl EdgePartition {
    pub fn new(m: usize, classes: Vec<EdgeSet>) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptyEdgeSet);
        }
        let mut seen = EdgeSet::empty(m);
        for (i, class) in classes.iter().enumerate() {
            if class.universe() != m {
                return Err(Error::MismatchedGraph {
                    expected: m,
                    found: class.universe(),
                });
            }
            if class.is_empty() {
                return Err(Error::NotAPartition(format!("class {i} is empty")));
            }
            if class.intersects(&seen) {
                let e = class.intersection(&seen).first().unwrap_or_default();
                return Err(Error::NotAPartition(format!("edge {e} is in two classes")));
            }
            seen.union_with(class);
        }
        if let Some(e) = seen.complement().first() {
            return Err(Error::NotAPartition(format!("edge {e} is in no class")));
        }
        Ok(EdgePartition { m, classes })
    }

    pub fn from_index_lists(m: usize, lists: &[Vec<usize>]) -> Result<Self> {
        let mut classes = Vec::with_capacity(lists.len());
        for list in lists {
            let mut set = EdgeSet::empty(m);
            for &e in list {
                if e >= m {
                    return Err(Error::EdgeOutOfRange { edge: e, m });
                }
                if set.contains(e) {
                    return Err(Error::NotAPartition(format!("edge {e} listed twice")));
                }
                set.insert(e);
            }
            classes.push(set);
        }
        Self::new(m, classes)
    }

    /// Builds the partition where edge `e` is in class `labels[e]`. Classes
    /// are numbered by first appearance.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        let m = labels.len();
        let mut index = std::collections::HashMap::new();
        let mut lists: Vec<Vec<usize>> = Vec::new();
        for (e, &label) in labels.iter().enumerate() {
            let next = lists.len();
            let slot = *index.entry(label).or_insert(next);
            if slot == lists.len() {
                lists.push(Vec::new());
            }
            lists[slot].push(e);
        }
        Self::from_index_lists(m, &lists)
    }

    pub fn singletons(m: usize) -> Result<Self> {
        let lists: Vec<Vec<usize>> = (0..m).map(|e| vec![e]).collect();
        Self::from_index_lists(m, &lists)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[EdgeSet] {
        &self.classes
    }

    pub fn class_of(&self, e: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(e))
    }

    pub fn to_index_lists(&self) -> Vec<Vec<usize>> {
        self.classes.iter().map(EdgeSet::to_vec).collect()
    }

    /// Class label of every edge, i.e. the restricted growth string when the
    /// classes are ordered by their smallest edge.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.m];
        for (i, class) in self.classes.iter().enumerate() {
            for e in class.iter() {
                labels[e] = i;
            }
        }
        labels
    }

    /// Same classes, sorted by smallest edge.
    pub fn normalized(&self) -> Self {
        let mut classes = self.classes.clone();
        classes.sort_by_key(|c| c.first());
        EdgePartition { m: self.m, classes }
    }
}
