//! Fixed-capacity bit sets over 1-based labels.
//!
//! [`VertexSet`] indexes vertices `1..=n` and [`EdgeSet`] indexes edges
//! `1..=m`. Symmetric difference on edge sets is the ring sum of the cycle
//! space over GF(2).

use serde::{Serialize, Serializer};
use std::fmt;

const WORD: usize = 64;

/// Dense bit set over `0..capacity`. Labels are stored shifted by one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
    capacity: usize,
}

impl BitSet {
    pub fn new(capacity: usize) -> Self {
        BitSet {
            words: vec![0; capacity.div_ceil(WORD)],
            capacity,
        }
    }

    pub fn full(capacity: usize) -> Self {
        let mut s = Self::new(capacity);
        for w in s.words.iter_mut() {
            *w = !0;
        }
        s.trim();
        s
    }

    fn trim(&mut self) {
        let rem = self.capacity % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn capacity(&self) -> usize {
        self.capacity
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.capacity && self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        assert!(i < self.capacity, "bit {i} out of range {}", self.capacity);
        let had = self.contains(i);
        self.words[i / WORD] |= 1 << (i % WORD);
        !had
    }

    #[inline]
    pub fn remove(&mut self, i: usize) -> bool {
        if i >= self.capacity {
            return false;
        }
        let had = self.contains(i);
        self.words[i / WORD] &= !(1 << (i % WORD));
        had
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(self.capacity, other.capacity, "set capacity mismatch");
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Self) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn symmetric_difference_with(&mut self, other: &Self) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn intersection_len(&self, other: &Self) -> usize {
        self.check_same(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_same(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> BitIter<'_> {
        BitIter {
            words: &self.words,
            idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct BitIter<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let tz = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + tz);
            }
            self.idx += 1;
            if self.idx >= self.words.len() {
                return None;
            }
            self.cur = self.words[self.idx];
        }
    }
}

macro_rules! labelled_set {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, Hash)]
        pub struct $name(BitSet);

        impl $name {
            /// Empty set able to hold labels `1..=max`.
            pub fn new(max: usize) -> Self {
                $name(BitSet::new(max))
            }

            /// Every label in `1..=max`.
            pub fn full(max: usize) -> Self {
                $name(BitSet::full(max))
            }

            pub fn from_labels<I: IntoIterator<Item = usize>>(max: usize, labels: I) -> Self {
                let mut s = Self::new(max);
                for l in labels {
                    s.insert(l);
                }
                s
            }

            /// Largest label this set can hold.
            pub fn max_label(&self) -> usize {
                self.0.capacity()
            }

            pub fn contains(&self, label: usize) -> bool {
                label >= 1 && self.0.contains(label - 1)
            }

            /// Panics on label 0 or a label above `max_label`.
            pub fn insert(&mut self, label: usize) -> bool {
                assert!(label >= 1, "labels are 1-based");
                self.0.insert(label - 1)
            }

            pub fn remove(&mut self, label: usize) -> bool {
                label >= 1 && self.0.remove(label - 1)
            }

            pub fn len(&self) -> usize {
                self.0.len()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_empty()
            }

            /// Labels in ascending order.
            pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
                self.0.iter().map(|i| i + 1)
            }

            pub fn to_vec(&self) -> Vec<usize> {
                self.iter().collect()
            }

            pub fn first(&self) -> Option<usize> {
                self.0.first().map(|i| i + 1)
            }

            pub fn union(&self, other: &Self) -> Self {
                let mut s = self.clone();
                s.0.union_with(&other.0);
                s
            }

            pub fn intersection(&self, other: &Self) -> Self {
                let mut s = self.clone();
                s.0.intersect_with(&other.0);
                s
            }

            pub fn difference(&self, other: &Self) -> Self {
                let mut s = self.clone();
                s.0.difference_with(&other.0);
                s
            }

            pub fn symmetric_difference(&self, other: &Self) -> Self {
                let mut s = self.clone();
                s.0.symmetric_difference_with(&other.0);
                s
            }

            pub fn intersection_len(&self, other: &Self) -> usize {
                self.0.intersection_len(&other.0)
            }

            pub fn is_subset(&self, other: &Self) -> bool {
                self.0.is_subset(&other.0)
            }

            pub fn bits(&self) -> &BitSet {
                &self.0
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.debug_set().entries(self.iter()).finish()
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.collect_seq(self.iter())
            }
        }

        impl PartialOrd for $name {
            fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
                Some(self.cmp(other))
            }
        }

        /// Lexicographic on the ascending label sequence.
        impl Ord for $name {
            fn cmp(&self, other: &Self) -> std::cmp::Ordering {
                self.iter().cmp(other.iter())
            }
        }
    };
}

labelled_set!(
    /// Vertex subset over labels `1..=n`.
    VertexSet
);
labelled_set!(
    /// Edge subset over labels `1..=m`. `symmetric_difference` is the ring sum.
    EdgeSet
);
