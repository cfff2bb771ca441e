//! Fixed-width element sets over a dense index space `0..n`.

use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

/// A subset of a universe `0..n`, stored as a fixed-width bit vector.
///
/// The ordering is the canonical block order used everywhere in the crate:
/// ascending by minimum member, then by size, then lexicographically on the
/// sorted member lists. The empty set sorts first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet(FixedBitSet);

impl ElementSet {
    pub fn empty(n: usize) -> Self {
        ElementSet(FixedBitSet::with_capacity(n))
    }

    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        ElementSet(bits)
    }

    pub fn singleton(n: usize, x: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(x);
        s
    }

    /// Builds a set from member indices.
    ///
    /// Panics if an index is `>= n`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Self {
        let mut s = Self::empty(n);
        for x in members {
            s.insert(x);
        }
        s
    }

    /// Size of the underlying universe, not the number of members.
    pub fn universe_len(&self) -> usize {
        self.0.len()
    }

    pub fn count(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.0.is_full()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.contains(x)
    }

    pub fn insert(&mut self, x: usize) {
        self.0.insert(x);
    }

    pub fn remove(&mut self, x: usize) {
        self.0.remove(x);
    }

    pub fn min(&self) -> Option<usize> {
        self.0.minimum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_proper_subset(&self, other: &ElementSet) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn intersects(&self, other: &ElementSet) -> bool {
        !self.is_disjoint(other)
    }

    pub fn union_with(&mut self, other: &ElementSet) {
        self.0.union_with(&other.0);
    }

    pub fn intersect_with(&mut self, other: &ElementSet) {
        self.0.intersect_with(&other.0);
    }

    pub fn intersection_count(&self, other: &ElementSet) -> usize {
        self.0.intersection_count(&other.0)
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.min()
            .cmp(&other.min())
            .then_with(|| self.count().cmp(&other.count()))
            .then_with(|| self.iter().cmp(other.iter()))
            .then_with(|| self.universe_len().cmp(&other.universe_len()))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
