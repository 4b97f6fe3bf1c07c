//! Dense bit sets over a fixed universe of constant indices.
//!
//! A [`CSet`] is bound to a universe size `n` (the number of constants in a
//! table) and stores its members as `ceil(n / 64)` little-endian words. Sets
//! over at most 128 constants live inline; larger universes spill to the heap.
//! Every binary operation requires both operands to share the universe.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use smallvec::SmallVec;

use crate::error::{Error, Result};

const WORD_BITS: usize = u64::BITS as usize;

type Words = SmallVec<[u64; 2]>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CSet {
    universe: usize,
    words: Words,
}

#[inline]
fn word_count(universe: usize) -> usize {
    universe.div_ceil(WORD_BITS)
}

#[inline]
fn location(bit: usize) -> (usize, u64) {
    (bit / WORD_BITS, 1u64 << (bit % WORD_BITS))
}

impl CSet {
    pub fn empty(universe: usize) -> Self {
        Self {
            universe,
            words: SmallVec::from_elem(0, word_count(universe)),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self {
            universe,
            words: SmallVec::from_elem(u64::MAX, word_count(universe)),
        };
        set.clear_tail();
        set
    }

    pub fn singleton(universe: usize, index: usize) -> Self {
        let mut set = Self::empty(universe);
        set.insert(index);
        set
    }

    /// Builds a set from indices, rejecting any index outside the universe.
    pub fn from_indices<I>(universe: usize, indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = Self::empty(universe);
        for index in indices {
            if index >= universe {
                return Err(Error::IndexOutOfRange { index, universe });
            }
            set.insert(index);
        }
        Ok(set)
    }

    /// Interprets bit `i` of `mask` as membership of constant `i`.
    ///
    /// Panics if `mask` has bits at or above `universe`.
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(
            universe >= WORD_BITS || mask >> universe == 0,
            "mask {mask:#x} exceeds universe {universe}"
        );
        let mut set = Self::empty(universe);
        if let Some(w) = set.words.first_mut() {
            *w = mask;
        }
        set
    }

    /// The membership mask, when every member fits in one word.
    pub fn to_mask(&self) -> Option<u64> {
        if self.words.iter().skip(1).any(|&w| w != 0) {
            return None;
        }
        Some(self.words.first().copied().unwrap_or(0))
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.universe)
    }

    #[inline]
    pub fn contains(&self, index: usize) -> bool {
        if index >= self.universe {
            return false;
        }
        let (i, mask) = location(index);
        self.words[i] & mask != 0
    }

    /// Returns `true` if the index was newly inserted.
    pub fn insert(&mut self, index: usize) -> bool {
        assert!(
            index < self.universe,
            "index {index} out of range for universe {}",
            self.universe
        );
        let (i, mask) = location(index);
        let before = self.words[i];
        self.words[i] |= mask;
        before & mask == 0
    }

    pub fn remove(&mut self, index: usize) -> bool {
        if index >= self.universe {
            return false;
        }
        let (i, mask) = location(index);
        let before = self.words[i];
        self.words[i] &= !mask;
        before & mask != 0
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    #[inline]
    fn check_universe(&self, other: &Self) {
        assert_eq!(
            self.universe, other.universe,
            "sets over different universes"
        );
    }

    fn clear_tail(&mut self) {
        let rem = self.universe % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Self) {
        self.check_universe(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    /// Complement within `0..universe`.
    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        out.clear_tail();
        out
    }

    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn is_superset(&self, other: &Self) -> bool {
        other.is_subset(self)
    }

    pub fn is_proper_subset(&self, other: &Self) -> bool {
        self.is_subset(other) && self != other
    }

    #[inline]
    pub fn intersects(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    #[inline]
    pub fn is_disjoint(&self, other: &Self) -> bool {
        !self.intersects(other)
    }

    /// Orders by cardinality first, then lexicographically by member list.
    /// This is the order used for every printed listing of sets.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.cmp(other))
    }
}

impl Ord for CSet {
    /// Lexicographic order of the ascending member lists, so that
    /// `{0} < {0,1} < {0,2} < {1}`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe.cmp(&other.universe).then_with(|| {
            let first_diff = self
                .words
                .iter()
                .zip(&other.words)
                .enumerate()
                .find(|(_, (a, b))| a != b);
            let Some((i, (a, b))) = first_diff else {
                return Ordering::Equal;
            };
            let diff = a ^ b;
            let bit = diff.trailing_zeros();
            // `owner` holds the first differing member; `other` either has a
            // larger member later on or ends (and is then a prefix).
            let (owner_is_self, rest_other) = if a >> bit & 1 == 1 {
                (true, &other.words)
            } else {
                (false, &self.words)
            };
            let above = if bit + 1 < u64::BITS {
                !0u64 << (bit + 1)
            } else {
                0
            };
            let other_continues =
                rest_other[i] & above != 0 || rest_other[i + 1..].iter().any(|&w| w != 0);
            match (owner_is_self, other_continues) {
                (true, true) | (false, false) => Ordering::Less,
                (true, false) | (false, true) => Ordering::Greater,
            }
        })
    }
}

impl PartialOrd for CSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for CSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitOr for &CSet {
    type Output = CSet;
    fn bitor(self, rhs: &CSet) -> CSet {
        self.union(rhs)
    }
}

impl BitAnd for &CSet {
    type Output = CSet;
    fn bitand(self, rhs: &CSet) -> CSet {
        self.intersection(rhs)
    }
}

impl Sub for &CSet {
    type Output = CSet;
    fn sub(self, rhs: &CSet) -> CSet {
        self.difference(rhs)
    }
}

/// Ascending iterator over the members of a [`CSet`].
pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD_BITS + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

impl<'a> IntoIterator for &'a CSet {
    type Item = usize;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
