//! Fixed-width sets of alternatives.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

/// Largest tournament order supported; an [`AltSet`] is one `u64`.
pub const MAX_ORDER: usize = 64;

/// A set of alternative indices in `0..64`, stored as a bit vector.
///
/// The set does not know which tournament it belongs to. Operations that
/// need a universe (complement, validation) take the order explicitly.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AltSet(u64);

impl AltSet {
    pub const EMPTY: AltSet = AltSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        AltSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All alternatives `0..order`.
    #[inline]
    pub const fn universe(order: usize) -> Self {
        if order >= 64 {
            AltSet(u64::MAX)
        } else {
            AltSet((1u64 << order) - 1)
        }
    }

    #[inline]
    pub const fn singleton(x: usize) -> Self {
        AltSet(1u64 << x)
    }

    /// `lo..hi` as a set.
    pub const fn range(lo: usize, hi: usize) -> Self {
        AltSet(AltSet::universe(hi).0 & !AltSet::universe(lo).0)
    }

    #[inline]
    pub const fn contains(self, x: usize) -> bool {
        x < 64 && self.0 >> x & 1 == 1
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn insert(self, x: usize) -> Self {
        AltSet(self.0 | 1u64 << x)
    }

    #[inline]
    pub const fn remove(self, x: usize) -> Self {
        AltSet(self.0 & !(1u64 << x))
    }

    #[inline]
    pub const fn union(self, other: AltSet) -> Self {
        AltSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: AltSet) -> Self {
        AltSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: AltSet) -> Self {
        AltSet(self.0 & !other.0)
    }

    /// Complement relative to `0..order`.
    #[inline]
    pub const fn complement(self, order: usize) -> Self {
        AltSet(!self.0 & AltSet::universe(order).0)
    }

    #[inline]
    pub const fn is_subset(self, other: AltSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn is_disjoint(self, other: AltSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Largest member, if any.
    #[inline]
    pub const fn last(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    /// Members in increasing order.
    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Every nonempty subset of `self`, in increasing order of bit pattern.
    pub fn nonempty_subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(self.0 & self.0.wrapping_neg()),
        }
    }

    /// Image of the set under `map`, which sends index `i` to `map[i]`.
    pub fn map(self, map: &[usize]) -> AltSet {
        self.iter().map(|i| map[i]).collect()
    }
}

impl fmt::Debug for AltSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Space-separated, 1-based.
impl fmt::Display for AltSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in self.iter() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{}", x + 1)?;
        }
        Ok(())
    }
}

impl FromIterator<usize> for AltSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(AltSet::EMPTY, AltSet::insert)
    }
}

impl IntoIterator for AltSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl BitOr for AltSet {
    type Output = AltSet;
    fn bitor(self, rhs: AltSet) -> AltSet {
        self.union(rhs)
    }
}

impl BitAnd for AltSet {
    type Output = AltSet;
    fn bitand(self, rhs: AltSet) -> AltSet {
        self.intersection(rhs)
    }
}

impl Sub for AltSet {
    type Output = AltSet;
    fn sub(self, rhs: AltSet) -> AltSet {
        self.difference(rhs)
    }
}

#[derive(Clone, Debug)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

/// Iterator over the nonempty subsets of a mask.
#[derive(Clone, Debug)]
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = AltSet;

    fn next(&mut self) -> Option<AltSet> {
        let cur = self.next?;
        if cur == 0 {
            self.next = None;
            return None;
        }
        // Increment within the bits of `mask`.
        let succ = (cur | !self.mask).wrapping_add(1) & self.mask;
        self.next = if succ == 0 { None } else { Some(succ) };
        Some(AltSet(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn universe_edges() {
        assert_eq!(AltSet::universe(0), AltSet::EMPTY);
        assert_eq!(AltSet::universe(3).bits(), 0b111);
        assert_eq!(AltSet::universe(64).len(), 64);
        assert_eq!(AltSet::range(2, 5).iter().collect::<Vec<_>>(), vec![2, 3, 4]);
    }

    #[test]
    fn display_is_one_based() {
        let s: AltSet = [0, 3, 11].into_iter().collect();
        assert_eq!(s.to_string(), "1 4 12");
        assert_eq!(AltSet::EMPTY.to_string(), "");
    }

    #[test]
    fn subsets_of_sparse_mask() {
        let s: AltSet = [1, 4, 6].into_iter().collect();
        let subs: Vec<_> = s.nonempty_subsets().collect();
        assert_eq!(subs.len(), 7);
        assert!(subs.iter().all(|x| x.is_subset(s) && !x.is_empty()));
        assert_eq!(AltSet::EMPTY.nonempty_subsets().count(), 0);
        assert_eq!(AltSet::universe(64).nonempty_subsets().take(3).count(), 3);
    }

    proptest! {
        #[test]
        fn set_algebra_laws(a in any::<u64>(), b in any::<u64>(), n in 1usize..=64) {
            let u = AltSet::universe(n);
            let (a, b) = (AltSet(a) & u, AltSet(b) & u);
            prop_assert_eq!((a | b).complement(n), a.complement(n) & b.complement(n));
            prop_assert_eq!(a - b, a & b.complement(n));
            prop_assert_eq!((a & b).len() + (a | b).len(), a.len() + b.len());
            prop_assert!((a & b).is_subset(a));
            prop_assert_eq!(a.iter().collect::<AltSet>(), a);
            prop_assert_eq!(a.first(), a.iter().next());
            prop_assert_eq!(a.last(), a.iter().last());
        }
    }
}
