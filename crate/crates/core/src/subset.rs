use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not};

use serde::{Deserialize, Serialize};

/// Widest ground set a [`SubsetMask`] can address.
pub const MAX_ELEMENTS: usize = 64;

/// A subset of the element indices `0..n`, stored as a bit vector.
///
/// The derived `Ord` compares the underlying integer, which is the
/// lexicographic bit-vector order used for every deterministic listing in
/// this crate.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SubsetMask(u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub const fn from_bits(bits: u64) -> Self {
        SubsetMask(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The whole ground set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        if n >= 64 {
            SubsetMask(u64::MAX)
        } else {
            SubsetMask((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_ELEMENTS);
        SubsetMask(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        indices
            .into_iter()
            .fold(SubsetMask::EMPTY, |acc, i| acc.with(i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_ELEMENTS && self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        SubsetMask(self.0 | 1u64 << i)
    }

    pub fn without(self, i: usize) -> Self {
        SubsetMask(self.0 & !(1u64 << i))
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: SubsetMask) -> bool {
        self.0 & other.0 == 0
    }

    pub fn intersects(self, other: SubsetMask) -> bool {
        !self.is_disjoint(other)
    }

    pub fn minus(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    /// Complement relative to the ground set of size `n`.
    pub fn complement(self, n: usize) -> Self {
        SubsetMask(!self.0).intersect(SubsetMask::full(n))
    }

    pub fn union(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 | other.0)
    }

    pub fn intersect(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 & other.0)
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Member indices in increasing order.
    pub fn iter(self) -> Ones {
        Ones(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Ones(u64);

impl Iterator for Ones {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Ones {}

impl IntoIterator for SubsetMask {
    type Item = usize;
    type IntoIter = Ones;

    fn into_iter(self) -> Ones {
        self.iter()
    }
}

impl FromIterator<usize> for SubsetMask {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        SubsetMask::from_indices(iter)
    }
}

impl BitAnd for SubsetMask {
    type Output = SubsetMask;
    fn bitand(self, rhs: SubsetMask) -> SubsetMask {
        self.intersect(rhs)
    }
}

impl BitOr for SubsetMask {
    type Output = SubsetMask;
    fn bitor(self, rhs: SubsetMask) -> SubsetMask {
        self.union(rhs)
    }
}

impl BitAndAssign for SubsetMask {
    fn bitand_assign(&mut self, rhs: SubsetMask) {
        self.0 &= rhs.0;
    }
}

impl BitOrAssign for SubsetMask {
    fn bitor_assign(&mut self, rhs: SubsetMask) {
        self.0 |= rhs.0;
    }
}

/// Complement within the full 64-bit word; use [`SubsetMask::complement`]
/// when a ground set size is known.
impl Not for SubsetMask {
    type Output = SubsetMask;
    fn not(self) -> SubsetMask {
        SubsetMask(!self.0)
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iteration_is_increasing() {
        let s = SubsetMask::from_indices([5, 0, 63, 2]);
        assert_eq!(s.to_vec(), vec![0, 2, 5, 63]);
        assert_eq!(s.len(), 4);
        assert_eq!(s.first(), Some(0));
    }

    #[test]
    fn full_and_complement() {
        assert_eq!(SubsetMask::full(0), SubsetMask::EMPTY);
        assert_eq!(SubsetMask::full(64).len(), 64);
        let s = SubsetMask::from_indices([1, 3]);
        assert_eq!(s.complement(4), SubsetMask::from_indices([0, 2]));
    }

    #[test]
    fn order_is_bit_vector_value() {
        let a = SubsetMask::from_indices([1]);
        let b = SubsetMask::from_indices([0, 2]);
        assert!(a < b);
        assert_eq!(format!("{:?}", b), "{0, 2}");
    }
}
