use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use serde::{Deserialize, Serialize};

/// Largest supported number of generators.
pub const MAX_RANK: usize = 64;

/// A subset of the generating set, stored as a bitmask over generator indices.
///
/// Iteration always follows generator order.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GeneratorSubset(u64);

impl GeneratorSubset {
    pub const EMPTY: Self = GeneratorSubset(0);

    pub const fn from_bits(bits: u64) -> Self {
        GeneratorSubset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The first `rank` generators.
    pub fn full(rank: usize) -> Self {
        assert!(rank <= MAX_RANK);
        if rank == MAX_RANK {
            GeneratorSubset(u64::MAX)
        } else {
            GeneratorSubset((1u64 << rank) - 1)
        }
    }

    pub fn singleton(index: usize) -> Self {
        GeneratorSubset(1u64 << index)
    }

    pub fn contains(self, index: usize) -> bool {
        index < MAX_RANK && self.0 >> index & 1 == 1
    }

    pub fn insert(&mut self, index: usize) {
        self.0 |= 1u64 << index;
    }

    pub fn remove(&mut self, index: usize) {
        self.0 &= !(1u64 << index);
    }

    pub fn with(self, index: usize) -> Self {
        GeneratorSubset(self.0 | 1u64 << index)
    }

    pub fn without(self, index: usize) -> Self {
        GeneratorSubset(self.0 & !(1u64 << index))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = GeneratorSubset> {
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask {
                None
            } else {
                Some((cur.wrapping_sub(mask)) & mask)
            };
            Some(GeneratorSubset(cur))
        })
    }
}

impl FromIterator<usize> for GeneratorSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = GeneratorSubset::EMPTY;
        for i in iter {
            set.insert(i);
        }
        set
    }
}

impl IntoIterator for GeneratorSubset {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
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
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl BitOr for GeneratorSubset {
    type Output = Self;
    fn bitor(self, rhs: Self) -> Self {
        GeneratorSubset(self.0 | rhs.0)
    }
}

impl BitAnd for GeneratorSubset {
    type Output = Self;
    fn bitand(self, rhs: Self) -> Self {
        GeneratorSubset(self.0 & rhs.0)
    }
}

impl Sub for GeneratorSubset {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GeneratorSubset(self.0 & !rhs.0)
    }
}

impl Not for GeneratorSubset {
    type Output = Self;
    fn not(self) -> Self {
        GeneratorSubset(!self.0)
    }
}

impl fmt::Debug for GeneratorSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
