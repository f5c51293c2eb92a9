//! Subsets of a ground set of at most 64 elements, stored as one machine word.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ground set.
pub const MAX_GROUND: usize = 64;

/// A subset of `{0, .., ground_size - 1}`.
///
/// Sets are ordered canonically: first by cardinality, then lexicographically
/// by their sorted member lists. Every list of sets this crate emits uses
/// this order.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PointSet {
    ground_size: u8,
    bits: u64,
}

#[inline]
pub(crate) fn full_mask(ground_size: usize) -> u64 {
    if ground_size >= 64 {
        u64::MAX
    } else {
        (1u64 << ground_size) - 1
    }
}

impl PointSet {
    pub fn empty(ground_size: usize) -> Result<Self> {
        check_ground(ground_size)?;
        Ok(PointSet {
            ground_size: ground_size as u8,
            bits: 0,
        })
    }

    pub fn full(ground_size: usize) -> Result<Self> {
        check_ground(ground_size)?;
        Ok(PointSet {
            ground_size: ground_size as u8,
            bits: full_mask(ground_size),
        })
    }

    pub fn from_bits(ground_size: usize, bits: u64) -> Result<Self> {
        check_ground(ground_size)?;
        let stray = bits & !full_mask(ground_size);
        if stray != 0 {
            return Err(Error::ElementOutOfRange {
                element: stray.trailing_zeros() as usize,
                ground_size,
            });
        }
        Ok(PointSet {
            ground_size: ground_size as u8,
            bits,
        })
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(ground_size: usize, elements: I) -> Result<Self> {
        check_ground(ground_size)?;
        let mut bits = 0u64;
        for e in elements {
            if e >= ground_size {
                return Err(Error::ElementOutOfRange {
                    element: e,
                    ground_size,
                });
            }
            bits |= 1 << e;
        }
        Ok(PointSet {
            ground_size: ground_size as u8,
            bits,
        })
    }

    /// Caller guarantees `bits` fits the ground set.
    #[inline]
    pub(crate) fn raw(ground_size: usize, bits: u64) -> Self {
        debug_assert!(ground_size <= MAX_GROUND && bits & !full_mask(ground_size) == 0);
        PointSet {
            ground_size: ground_size as u8,
            bits,
        }
    }

    #[inline]
    pub fn ground_size(&self) -> usize {
        self.ground_size as usize
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn is_full(&self) -> bool {
        self.bits == full_mask(self.ground_size())
    }

    #[inline]
    pub fn contains(&self, element: usize) -> bool {
        element < 64 && self.bits >> element & 1 == 1
    }

    #[inline]
    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.bits & !other.bits == 0
    }

    #[inline]
    pub fn intersection(&self, other: &PointSet) -> PointSet {
        PointSet::raw(self.ground_size(), self.bits & other.bits)
    }

    #[inline]
    pub fn union(&self, other: &PointSet) -> PointSet {
        PointSet::raw(self.ground_size(), self.bits | other.bits)
    }

    #[inline]
    pub fn difference(&self, other: &PointSet) -> PointSet {
        PointSet::raw(self.ground_size(), self.bits & !other.bits)
    }

    #[inline]
    pub fn complement(&self) -> PointSet {
        PointSet::raw(self.ground_size(), !self.bits & full_mask(self.ground_size()))
    }

    #[inline]
    pub fn with(&self, element: usize) -> PointSet {
        debug_assert!(element < self.ground_size());
        PointSet::raw(self.ground_size(), self.bits | 1 << element)
    }

    #[inline]
    pub fn without(&self, element: usize) -> PointSet {
        PointSet::raw(self.ground_size(), self.bits & !(1u64 << element))
    }

    pub fn first(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Members {
        Members(self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn same_ground(&self, other: &PointSet) -> Result<()> {
        if self.ground_size != other.ground_size {
            return Err(Error::GroundMismatch {
                expected: self.ground_size(),
                found: other.ground_size(),
            });
        }
        Ok(())
    }
}

/// Canonical comparison of two bit masks: cardinality, then lexicographic
/// order of the sorted member lists.
#[inline]
pub fn canonical_cmp(a: u64, b: u64) -> Ordering {
    match a.count_ones().cmp(&b.count_ones()) {
        Ordering::Equal if a == b => Ordering::Equal,
        Ordering::Equal => {
            let low = (a ^ b) & (a ^ b).wrapping_neg();
            if a & low != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }
        other => other,
    }
}

impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ground_size
            .cmp(&other.ground_size)
            .then_with(|| canonical_cmp(self.bits, other.bits))
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Iterator over the members of a [`PointSet`] in increasing order.
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

fn check_ground(ground_size: usize) -> Result<()> {
    if ground_size > MAX_GROUND {
        return Err(Error::GroundTooLarge {
            size: ground_size,
            cap: MAX_GROUND,
        });
    }
    Ok(())
}

/// Sorts masks into canonical order in place.
pub fn sort_canonical(masks: &mut [u64]) {
    masks.sort_unstable_by(|a, b| canonical_cmp(*a, *b));
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn membership_and_bounds() {
        let s = PointSet::from_elements(5, [0, 3]).unwrap();
        assert!(s.contains(0) && s.contains(3) && !s.contains(1));
        assert_eq!(s.len(), 2);
        assert_eq!(s.complement().to_vec(), vec![1, 2, 4]);
        assert!(PointSet::from_elements(5, [5]).is_err());
        assert!(PointSet::full(65).is_err());
        assert!(PointSet::full(64).unwrap().is_full());
    }

    #[test]
    fn canonical_order_is_size_then_lex() {
        let mk = |v: &[usize]| PointSet::from_elements(4, v.iter().copied()).unwrap();
        let mut sets = [mk(&[1, 2]), mk(&[0]), mk(&[]), mk(&[0, 3]), mk(&[0, 1, 2]), mk(&[3])];
        sets.sort();
        let lists: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
        assert_eq!(
            lists,
            vec![vec![], vec![0], vec![3], vec![0, 3], vec![1, 2], vec![0, 1, 2]]
        );
    }

    proptest! {
        #[test]
        fn canonical_cmp_matches_sorted_lists(a in 0u64..1 << 10, b in 0u64..1 << 10) {
            let la: Vec<usize> = Members(a).collect();
            let lb: Vec<usize> = Members(b).collect();
            let expected = la.len().cmp(&lb.len()).then_with(|| la.cmp(&lb));
            prop_assert_eq!(canonical_cmp(a, b), expected);
        }
    }
}
