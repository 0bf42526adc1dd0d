//! Subsets of a poset's elements, stored as bitsets over the element indexing.

use std::fmt;

use fixedbitset::FixedBitSet;

/// A subset of `{0, .., universe-1}`.
///
/// Every subset handled by this crate lives inside some ambient poset and
/// uses that poset's element indices, so two sets are only comparable when
/// their universes agree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemSet(FixedBitSet);

impl ElemSet {
    pub fn empty(universe: usize) -> Self {
        ElemSet(FixedBitSet::with_capacity(universe))
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        ElemSet(bits)
    }

    pub fn singleton(universe: usize, x: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(x);
        s
    }

    /// Builds a set from indices. Panics if an index is outside the universe.
    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, items: I) -> Self {
        let mut s = Self::empty(universe);
        for x in items {
            s.insert(x);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn insert(&mut self, x: usize) {
        assert!(x < self.universe(), "element {x} outside universe {}", self.universe());
        self.0.insert(x);
    }

    pub fn remove(&mut self, x: usize) {
        self.0.set(x, false);
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.contains(x)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.minimum()
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn intersects(&self, other: &ElemSet) -> bool {
        !self.0.is_disjoint(&other.0)
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let mut s = self.clone();
        s.0.intersect_with(&other.0);
        s
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let mut s = self.clone();
        s.0.union_with(&other.0);
        s
    }

    pub fn difference(&self, other: &ElemSet) -> ElemSet {
        let mut s = self.clone();
        s.0.difference_with(&other.0);
        s
    }

    pub fn complement(&self) -> ElemSet {
        let mut s = self.clone();
        s.0.toggle_range(..);
        s
    }

    pub fn intersect_with(&mut self, other: &ElemSet) {
        self.0.intersect_with(&other.0);
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        self.0.union_with(&other.0);
    }

    pub fn difference_with(&mut self, other: &ElemSet) {
        self.0.difference_with(&other.0);
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_algebra() {
        let a = ElemSet::from_indices(70, [1, 3, 65]);
        let b = ElemSet::from_indices(70, [3, 4]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 3, 4, 65]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 65]);
        assert_eq!(a.complement().len(), 67);
        assert!(a.intersects(&b));
        assert!(ElemSet::singleton(70, 65).is_subset(&a));
        assert_eq!(ElemSet::full(5).len(), 5);
        assert!(ElemSet::empty(5).is_empty());
        assert_eq!(a.first(), Some(1));
    }
}
