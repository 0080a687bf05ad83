//! Subsets of a ground set as 64-bit masks.
//!
//! Every matroid in this crate has at most 64 elements, so a subset is a
//! word and set algebra is bit algebra. Bit `i` corresponds to element `i`
//! in the ground set's fixed iteration order.

use std::fmt;

pub const MAX_GROUND: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Mask(pub u64);

impl Mask {
    pub const EMPTY: Mask = Mask(0);

    pub fn full(n: usize) -> Mask {
        debug_assert!(n <= MAX_GROUND);
        if n == 64 {
            Mask(u64::MAX)
        } else {
            Mask((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Mask {
        Mask(1u64 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn insert(self, i: usize) -> Mask {
        Mask(self.0 | 1 << i)
    }

    pub fn remove(self, i: usize) -> Mask {
        Mask(self.0 & !(1 << i))
    }

    pub fn union(self, other: Mask) -> Mask {
        Mask(self.0 | other.0)
    }

    pub fn intersect(self, other: Mask) -> Mask {
        Mask(self.0 & other.0)
    }

    pub fn minus(self, other: Mask) -> Mask {
        Mask(self.0 & !other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Mask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Mask) -> bool {
        self.0 & other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    /// Smallest set bit, if any.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// All subsets of `self`, including the empty set and `self` itself.
    pub fn subsets(self) -> SubsetIter {
        SubsetIter { universe: self.0, next: Some(0) }
    }

    /// All `k`-element subsets of `self`, in lexicographic order of the
    /// underlying index lists.
    pub fn subsets_of_size(self, k: usize) -> Vec<Mask> {
        let elems: Vec<usize> = self.iter().collect();
        let mut out = Vec::new();
        if k > elems.len() {
            return out;
        }
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let mut m = Mask::EMPTY;
            for &j in &idx {
                m = m.insert(elems[j]);
            }
            out.push(m);
            // advance combination
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if idx[i] != i + elems.len() - k {
                    idx[i] += 1;
                    for j in i + 1..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
}

pub struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

/// Iterates subsets of a universe mask via the standard carry trick.
pub struct SubsetIter {
    universe: u64,
    next: Option<u64>,
}

impl Iterator for SubsetIter {
    type Item = Mask;
    fn next(&mut self) -> Option<Mask> {
        let cur = self.next?;
        self.next = if cur == self.universe {
            None
        } else {
            Some((cur.wrapping_sub(self.universe)) & self.universe)
        };
        Some(Mask(cur))
    }
}

impl fmt::Debug for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for i in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_iteration_covers_powerset() {
        let u = Mask(0b10110);
        let subs: Vec<Mask> = u.subsets().collect();
        assert_eq!(subs.len(), 8);
        for s in &subs {
            assert!(s.is_subset_of(u));
        }
    }

    #[test]
    fn sized_subsets() {
        let u = Mask::full(5);
        assert_eq!(u.subsets_of_size(2).len(), 10);
        assert_eq!(u.subsets_of_size(0), vec![Mask::EMPTY]);
        assert_eq!(u.subsets_of_size(6).len(), 0);
    }
}
