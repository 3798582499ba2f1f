//! Fixed-width vertex bitsets.
//!
//! Every game position is a subset of the vertices of a fixed host graph, so a
//! position is fully described by one `VertexSubset`. The width is fixed at
//! [`SUBSET_CAPACITY`] bits which keeps the type `Copy` and makes it usable
//! directly as a transposition-table key.

use core::cmp::Ordering;
use core::fmt;

const WORDS: usize = 4;

/// Largest number of vertices a [`VertexSubset`] can address.
pub const SUBSET_CAPACITY: usize = WORDS * 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSubset {
    words: [u64; WORDS],
}

impl VertexSubset {
    pub const fn empty() -> Self {
        VertexSubset { words: [0; WORDS] }
    }

    /// The subset `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= SUBSET_CAPACITY, "subset capacity exceeded: {n}");
        let mut s = Self::empty();
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            if n >= lo + 64 {
                *w = u64::MAX;
            } else if n > lo {
                *w = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::empty();
        s.insert(v);
        s
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = Self::empty();
        for v in it {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < SUBSET_CAPACITY);
        self.words[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.words[v >> 6] &= !(1u64 << (v & 63));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < SUBSET_CAPACITY && self.words[v >> 6] & (1u64 << (v & 63)) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn union(&self, other: &Self) -> Self {
        let mut r = *self;
        for i in 0..WORDS {
            r.words[i] |= other.words[i];
        }
        r
    }

    #[inline]
    pub fn intersection(&self, other: &Self) -> Self {
        let mut r = *self;
        for i in 0..WORDS {
            r.words[i] &= other.words[i];
        }
        r
    }

    #[inline]
    pub fn difference(&self, other: &Self) -> Self {
        let mut r = *self;
        for i in 0..WORDS {
            r.words[i] &= !other.words[i];
        }
        r
    }

    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        (0..WORDS).all(|i| self.words[i] & !other.words[i] == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &Self) -> bool {
        (0..WORDS).any(|i| self.words[i] & other.words[i] != 0)
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter {
        Iter { words: self.words, idx: 0 }
    }

    /// Compares the ascending member lists lexicographically, so `{0,1} < {0,1,2} < {0,2}`.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) if x != y => return x.cmp(&y),
                _ => {}
            }
        }
    }

    pub fn raw_words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSubset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_vertices(iter)
    }
}

pub struct Iter {
    words: [u64; WORDS],
    idx: usize,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.idx < WORDS {
            let w = self.words[self.idx];
            if w != 0 {
                let b = w.trailing_zeros() as usize;
                self.words[self.idx] = w & (w - 1);
                return Some(self.idx * 64 + b);
            }
            self.idx += 1;
        }
        None
    }
}

impl IntoIterator for &VertexSubset {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}
