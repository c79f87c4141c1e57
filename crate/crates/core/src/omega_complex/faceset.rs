use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

/// A set of face ids of one poset, stored as a bitset of the poset's size.
///
/// Ordering compares the sorted id sequences lexicographically, so that sorted
/// collections of face sets are deterministic and match label order.
#[derive(Clone, PartialEq, Eq)]
pub struct FaceSet(FixedBitSet);

/// A morphism of an omega-complex category: a down-closed face set.
pub type Element = FaceSet;

impl FaceSet {
    pub fn empty(n: usize) -> FaceSet {
        FaceSet(FixedBitSet::with_capacity(n))
    }

    pub fn from_ids(n: usize, ids: impl IntoIterator<Item = usize>) -> FaceSet {
        let mut s = FaceSet::empty(n);
        for i in ids {
            s.insert(i);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn insert(&mut self, i: usize) {
        self.0.insert(i);
    }

    pub fn remove(&mut self, i: usize) {
        self.0.set(i, false);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(i)
    }

    pub fn len(&self) -> usize {
        self.0.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_clear()
    }

    pub fn ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.0.ones().collect()
    }

    pub fn union_with(&mut self, o: &FaceSet) {
        self.0.union_with(&o.0);
    }

    pub fn intersect_with(&mut self, o: &FaceSet) {
        self.0.intersect_with(&o.0);
    }

    pub fn difference_with(&mut self, o: &FaceSet) {
        self.0.difference_with(&o.0);
    }

    pub fn union(&self, o: &FaceSet) -> FaceSet {
        let mut r = self.clone();
        r.union_with(o);
        r
    }

    pub fn intersection(&self, o: &FaceSet) -> FaceSet {
        let mut r = self.clone();
        r.intersect_with(o);
        r
    }

    pub fn difference(&self, o: &FaceSet) -> FaceSet {
        let mut r = self.clone();
        r.difference_with(o);
        r
    }

    pub fn is_subset(&self, o: &FaceSet) -> bool {
        self.0.is_subset(&o.0)
    }

    pub fn is_disjoint(&self, o: &FaceSet) -> bool {
        self.0.is_disjoint(&o.0)
    }
}

impl Hash for FaceSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.as_slice().hash(state);
    }
}

impl Ord for FaceSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.ones().cmp(other.0.ones())
    }
}

impl PartialOrd for FaceSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for FaceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.ones()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_lexicographic_on_ids() {
        let a = FaceSet::from_ids(8, [0, 5]);
        let b = FaceSet::from_ids(8, [1]);
        let c = FaceSet::from_ids(8, [0, 5, 6]);
        assert!(a < b);
        assert!(a < c);
        assert!(c < b);
    }
}
