//! Minimal bitset abstraction so the exact searches run on `u64` masks when
//! the graph fits in one word and on `VertexSet` otherwise.

use crate::graph::VertexSet;

pub(crate) trait Bits: Clone + PartialEq {
    fn count(&self) -> usize;
    fn lowest(&self) -> Option<usize>;
    fn without(&self, v: usize) -> Self;
    fn with(&self, v: usize) -> Self;
    fn and(&self, other: &Self) -> Self;
    fn and_not(&self, other: &Self) -> Self;
    fn zero(&self) -> bool {
        self.lowest().is_none()
    }
    fn ones(&self) -> Vec<usize>;
}

impl Bits for u64 {
    fn count(&self) -> usize {
        self.count_ones() as usize
    }
    fn lowest(&self) -> Option<usize> {
        (*self != 0).then(|| self.trailing_zeros() as usize)
    }
    fn without(&self, v: usize) -> Self {
        self & !(1u64 << v)
    }
    fn with(&self, v: usize) -> Self {
        self | 1u64 << v
    }
    fn and(&self, other: &Self) -> Self {
        self & other
    }
    fn and_not(&self, other: &Self) -> Self {
        self & !other
    }
    fn zero(&self) -> bool {
        *self == 0
    }
    fn ones(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.count());
        let mut m = *self;
        while m != 0 {
            out.push(m.trailing_zeros() as usize);
            m &= m - 1;
        }
        out
    }
}

impl Bits for VertexSet {
    fn count(&self) -> usize {
        self.len()
    }
    fn lowest(&self) -> Option<usize> {
        self.first()
    }
    fn without(&self, v: usize) -> Self {
        let mut s = self.clone();
        s.remove(v);
        s
    }
    fn with(&self, v: usize) -> Self {
        let mut s = self.clone();
        s.insert(v);
        s
    }
    fn and(&self, other: &Self) -> Self {
        self.intersection(other)
    }
    fn and_not(&self, other: &Self) -> Self {
        self.difference(other)
    }
    fn ones(&self) -> Vec<usize> {
        self.to_vec()
    }
}
