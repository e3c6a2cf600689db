//! Fixed-width element sets backing partition blocks.

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

/// Width of an [`ElementSet`]; no ground set may exceed it.
pub const WORD_BITS: usize = 128;

/// A subset of `{0..128}` stored as a single bit word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet(u128);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub const fn from_bits(bits: u128) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(e: usize) -> Self {
        debug_assert!(e < WORD_BITS);
        ElementSet(1u128 << e)
    }

    /// `{0..n}`.
    pub fn full(n: usize) -> Self {
        Self::range(0, n)
    }

    /// The half-open interval `{lo..hi}`.
    pub fn range(lo: usize, hi: usize) -> Self {
        debug_assert!(lo <= hi && hi <= WORD_BITS);
        let upto = |k: usize| if k >= WORD_BITS { u128::MAX } else { (1u128 << k) - 1 };
        ElementSet(upto(hi) & !upto(lo))
    }

    pub fn contains(self, e: usize) -> bool {
        e < WORD_BITS && self.0 >> e & 1 == 1
    }

    pub fn insert(&mut self, e: usize) {
        debug_assert!(e < WORD_BITS);
        self.0 |= 1u128 << e;
    }

    pub fn remove(&mut self, e: usize) {
        if e < WORD_BITS {
            self.0 &= !(1u128 << e);
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| WORD_BITS - 1 - self.0.leading_zeros() as usize)
    }

    pub fn is_subset(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: ElementSet) -> bool {
        self.0 & other.0 == 0
    }

    pub fn iter(self) -> Elements {
        Elements(self.0)
    }
}

impl BitOr for ElementSet {
    type Output = ElementSet;
    fn bitor(self, rhs: Self) -> Self {
        ElementSet(self.0 | rhs.0)
    }
}

impl BitAnd for ElementSet {
    type Output = ElementSet;
    fn bitand(self, rhs: Self) -> Self {
        ElementSet(self.0 & rhs.0)
    }
}

impl Sub for ElementSet {
    type Output = ElementSet;
    fn sub(self, rhs: Self) -> Self {
        ElementSet(self.0 & !rhs.0)
    }
}

impl Not for ElementSet {
    type Output = ElementSet;
    fn not(self) -> Self {
        ElementSet(!self.0)
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElementSet::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl IntoIterator for ElementSet {
    type Item = usize;
    type IntoIter = Elements;
    fn into_iter(self) -> Elements {
        self.iter()
    }
}

/// Ascending iterator over the members of an [`ElementSet`].
#[derive(Clone, Debug)]
pub struct Elements(u128);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Elements {}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_edges() {
        assert_eq!(ElementSet::range(0, 0), ElementSet::EMPTY);
        assert_eq!(ElementSet::range(2, 5).iter().collect::<Vec<_>>(), vec![2, 3, 4]);
        assert_eq!(ElementSet::full(128).len(), 128);
        assert_eq!(ElementSet::range(127, 128).first(), Some(127));
    }

    #[test]
    fn min_max_iter() {
        let s: ElementSet = [5, 1, 9].into_iter().collect();
        assert_eq!(s.first(), Some(1));
        assert_eq!(s.last(), Some(9));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![1, 5, 9]);
        assert!(ElementSet::EMPTY.first().is_none());
    }
}
