use std::fmt;

use crate::error::{Error, Result};

/// A subset of the edges of one graph, stored as a bitset over edge indices.
///
/// An `EdgeSet` remembers the edge count `m` of the graph it was created for;
/// combining sets with different `m` is a logic error and panics.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    m: usize,
    words: Vec<u64>,
}

fn word_count(m: usize) -> usize {
    m.div_ceil(64)
}

impl EdgeSet {
    pub fn empty(m: usize) -> Self {
        EdgeSet {
            m,
            words: vec![0; word_count(m)],
        }
    }

    pub fn full(m: usize) -> Self {
        let mut s = Self::empty(m);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            let bits = (m - lo).min(64);
            *w = if bits == 64 { u64::MAX } else { (1u64 << bits) - 1 };
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(m: usize, indices: I) -> Result<Self> {
        let mut s = Self::empty(m);
        for e in indices {
            if e >= m {
                return Err(Error::EdgeOutOfRange { edge: e, m });
            }
            s.insert(e);
        }
        Ok(s)
    }

    /// Builds a set from a bitmask whose bit `i` is edge `i`. Requires `m <= 64`.
    pub fn from_mask(m: usize, mask: u64) -> Self {
        assert!(m <= 64, "from_mask needs m <= 64");
        let mut s = Self::empty(m);
        if m > 0 {
            s.words[0] = mask & Self::full(m).words[0];
        }
        s
    }

    /// The bitmask of this set when it fits in one word.
    pub fn as_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn universe(&self) -> usize {
        self.m
    }

    pub fn insert(&mut self, e: usize) {
        assert!(e < self.m, "edge {e} out of range {}", self.m);
        self.words[e / 64] |= 1 << (e % 64);
    }

    pub fn remove(&mut self, e: usize) {
        assert!(e < self.m, "edge {e} out of range {}", self.m);
        self.words[e / 64] &= !(1 << (e % 64));
    }

    pub fn contains(&self, e: usize) -> bool {
        e < self.m && self.words[e / 64] & (1 << (e % 64)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.m)
    }

    /// Edge indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(i * 64 + b)
                }
            })
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn last(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + 63 - w.leading_zeros() as usize)
    }

    fn check_same(&self, other: &EdgeSet) {
        assert_eq!(self.m, other.m, "edge sets from graphs of different size");
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        self.check_same(other);
        EdgeSet {
            m: self.m,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn intersection(&self, other: &EdgeSet) -> EdgeSet {
        self.check_same(other);
        EdgeSet {
            m: self.m,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        self.check_same(other);
        EdgeSet {
            m: self.m,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect(),
        }
    }

    pub fn complement(&self) -> EdgeSet {
        Self::full(self.m).difference(self)
    }

    pub fn union_with(&mut self, other: &EdgeSet) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.check_same(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        self.check_same(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &EdgeSet) -> bool {
        !self.is_disjoint(other)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_empty() {
        assert_eq!(EdgeSet::full(0).len(), 0);
        assert_eq!(EdgeSet::full(64).len(), 64);
        assert_eq!(EdgeSet::full(70).len(), 70);
        assert!(EdgeSet::empty(70).is_empty());
        assert!(EdgeSet::full(5).is_full());
    }

    #[test]
    fn out_of_range_index_is_rejected() {
        assert!(matches!(
            EdgeSet::from_indices(3, [0, 3]),
            Err(Error::EdgeOutOfRange { edge: 3, m: 3 })
        ));
    }

    #[test]
    fn first_last_across_words() {
        let s = EdgeSet::from_indices(130, [3, 64, 129]).unwrap();
        assert_eq!(s.first(), Some(3));
        assert_eq!(s.last(), Some(129));
        assert_eq!(s.to_vec(), vec![3, 64, 129]);
    }

    proptest! {
        #[test]
        fn set_algebra_matches_membership(
            m in 1usize..150,
            a in proptest::collection::vec(any::<bool>(), 150),
            b in proptest::collection::vec(any::<bool>(), 150),
        ) {
            let sa = EdgeSet::from_indices(m, (0..m).filter(|&i| a[i])).unwrap();
            let sb = EdgeSet::from_indices(m, (0..m).filter(|&i| b[i])).unwrap();
            let u = sa.union(&sb);
            let x = sa.intersection(&sb);
            let d = sa.difference(&sb);
            let c = sa.complement();
            for i in 0..m {
                prop_assert_eq!(u.contains(i), a[i] || b[i]);
                prop_assert_eq!(x.contains(i), a[i] && b[i]);
                prop_assert_eq!(d.contains(i), a[i] && !b[i]);
                prop_assert_eq!(c.contains(i), !a[i]);
            }
            prop_assert_eq!(sa.len() + c.len(), m);
            prop_assert_eq!(sa.is_disjoint(&sb), x.is_empty());
            prop_assert!(x.is_subset(&sa) && sa.is_subset(&u));
        }
    }
}
