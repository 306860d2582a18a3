//! Fixed-width vertex bitsets.
//!
//! Faces of complexes, supports of monomials and monomial primes are all
//! subsets of a ground set of at most [`MAX_VERTICES`] elements, stored as
//! one 128-bit word so that every set operation is a couple of machine
//! instructions. Subset tests dominate all the searches in this crate.

use alloc::vec::Vec;
use core::fmt;

/// Hard cap on the ambient vertex / variable count.
pub const MAX_VERTICES: usize = 128;

/// A subset of `{0, 1, ..., MAX_VERTICES-1}` as a bitset.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(u128);

/// A face of a simplicial complex is just a vertex set.
pub type Face = VertexSet;

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full set `{0, ..., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == 128 {
            VertexSet(!0)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u128 << v)
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(vs: I) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in vs {
            s = s.with(v);
        }
        s
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn from_bits(b: u128) -> VertexSet {
        VertexSet(b)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 & (1u128 << v) != 0
    }

    #[must_use]
    pub fn with(self, v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(self.0 | (1u128 << v))
    }

    #[must_use]
    pub fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1u128 << v))
    }

    #[must_use]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[must_use]
    pub fn inter(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[must_use]
    pub fn minus(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Complement inside `{0, ..., n-1}`.
    #[must_use]
    pub fn complement_in(self, n: usize) -> VertexSet {
        VertexSet(VertexSet::full(n).0 & !self.0)
    }

    /// Smallest element, if any.
    pub fn min_vertex(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Elements in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets, in (cardinality, lex) order. Cardinality is capped by
    /// the callers (faces of a facet), so the 2^card blowup stays small.
    pub fn subsets(self) -> Vec<VertexSet> {
        let verts = self.to_vec();
        let k = verts.len();
        assert!(k < 31, "subset enumeration capped at 30 elements");
        let mut out: Vec<VertexSet> = (0..1u32 << k)
            .map(|mask| {
                let mut s = VertexSet::EMPTY;
                for (i, &v) in verts.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        s = s.with(v);
                    }
                }
                s
            })
            .collect();
        out.sort();
        out
    }
}

/// Order by cardinality first, then lexicographically on the sorted
/// element lists. This is the canonical face order used everywhere a
/// deterministic listing is emitted.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.card().cmp(&other.card()).then_with(|| {
            let d = self.0 ^ other.0;
            if d == 0 {
                return core::cmp::Ordering::Equal;
            }
            // The set containing the smallest differing element comes first.
            let low = d & d.wrapping_neg();
            if self.0 & low != 0 {
                core::cmp::Ordering::Less
            } else {
                core::cmp::Ordering::Greater
            }
        })
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

pub struct VertexIter(u128);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = VertexSet::from_iter([0, 2, 5]);
        let b = VertexSet::from_iter([2, 3]);
        assert_eq!(a.card(), 3);
        assert!(a.contains(2) && !a.contains(1));
        assert_eq!(a.inter(b), VertexSet::singleton(2));
        assert_eq!(a.union(b).card(), 4);
        assert_eq!(a.minus(b), VertexSet::from_iter([0, 5]));
        assert!(VertexSet::EMPTY.is_subset(a));
        assert!(b.inter(a).is_subset(b));
        assert_eq!(a.complement_in(6), VertexSet::from_iter([1, 3, 4]));
    }

    #[test]
    fn face_order_card_then_lex() {
        // {1,3} < {2,3} < {1,4}? No: order is (card, lex on sorted lists),
        // so among pairs: {1,3} < {1,4} < {2,3}.
        let f13 = VertexSet::from_iter([1, 3]);
        let f14 = VertexSet::from_iter([1, 4]);
        let f23 = VertexSet::from_iter([2, 3]);
        let f2 = VertexSet::singleton(2);
        assert!(f2 < f13);
        assert!(f13 < f14);
        assert!(f14 < f23);
    }

    #[test]
    fn subsets_sorted_and_complete() {
        let s = VertexSet::from_iter([1, 4, 6]);
        let subs = s.subsets();
        assert_eq!(subs.len(), 8);
        assert_eq!(subs[0], VertexSet::EMPTY);
        assert_eq!(subs[7], s);
        for w in subs.windows(2) {
            assert!(w[0] < w[1]);
        }
    }
}
