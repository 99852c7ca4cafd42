//! Subsets of the ground set, stored as fixed-width bit masks.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use crate::error::{Error, Result};

/// Largest supported ground-set size.
pub const MAX_GROUND_SIZE: u32 = 64;

/// A subset of the ground set `{1..n}`; bit `i` of the mask holds element `i + 1`.
///
/// Elements are 1-based everywhere a human sees them and 0-based only inside
/// the mask. Values are `Copy` and order canonically: `a < b` exactly when the
/// ascending element list of `a` precedes that of `b` lexicographically, so
/// `{1,3} < {2}` and sorted families read the way they print.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSubset(u64);

impl ElementSubset {
    /// The empty subset.
    pub const EMPTY: Self = Self(0);

    /// Wraps a raw mask.
    pub fn from_mask(mask: u64) -> Self {
        Self(mask)
    }

    /// The full ground set `{1..n}`.
    pub fn full(n: u32) -> Self {
        assert!(n <= MAX_GROUND_SIZE, "ground set size {n} out of range");
        if n == MAX_GROUND_SIZE {
            Self(u64::MAX)
        } else {
            Self((1u64 << n) - 1)
        }
    }

    /// The one-element subset `{element}`.
    pub fn singleton(element: u32) -> Self {
        Self::EMPTY.with(element)
    }

    /// Builds a subset from 1-based elements, rejecting anything outside `1..=64`.
    pub fn from_elements<I>(elements: I) -> Result<Self>
    where
        I: IntoIterator<Item = u32>,
    {
        let mut mask = 0u64;
        for e in elements {
            if e == 0 || e > MAX_GROUND_SIZE {
                return Err(Error::ElementOutOfRange {
                    element: u64::from(e),
                    limit: MAX_GROUND_SIZE,
                });
            }
            mask |= 1u64 << (e - 1);
        }
        Ok(Self(mask))
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, element: u32) -> bool {
        (1..=MAX_GROUND_SIZE).contains(&element) && self.0 >> (element - 1) & 1 == 1
    }

    pub fn with(self, element: u32) -> Self {
        assert!((1..=MAX_GROUND_SIZE).contains(&element), "element {element} out of range");
        Self(self.0 | 1u64 << (element - 1))
    }

    pub fn without(self, element: u32) -> Self {
        assert!((1..=MAX_GROUND_SIZE).contains(&element), "element {element} out of range");
        Self(self.0 & !(1u64 << (element - 1)))
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    pub fn minus(self, other: Self) -> Self {
        Self(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_within(self, n: u32) -> bool {
        self.is_subset_of(Self::full(n))
    }

    pub fn complement(self, n: u32) -> Self {
        Self(Self::full(n).0 & !self.0)
    }

    pub fn min_element(self) -> Option<u32> {
        (self.0 != 0).then(|| self.0.trailing_zeros() + 1)
    }

    /// Ascending 1-based elements.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn elements(self) -> Vec<u32> {
        self.iter().collect()
    }
}

impl BitAnd for ElementSubset {
    type Output = Self;
    fn bitand(self, rhs: Self) -> Self {
        self.intersection(rhs)
    }
}

impl BitOr for ElementSubset {
    type Output = Self;
    fn bitor(self, rhs: Self) -> Self {
        self.union(rhs)
    }
}

impl Sub for ElementSubset {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.minus(rhs)
    }
}

impl Ord for ElementSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        canonical_mask_cmp(self.0, other.0)
    }
}

impl PartialOrd for ElementSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ElementSubset {
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

impl fmt::Debug for ElementSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Iterator over the 1-based elements of a subset, ascending.
pub struct Elements(u64);

impl Iterator for Elements {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.0 == 0 {
            return None;
        }
        let low = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(low + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Elements {}

/// Compares two masks as ascending element lists (lexicographically, with a
/// prefix preceding its extensions).
///
/// Below the lowest differing bit the lists agree. The side owning that bit
/// offers the smaller element at the first disagreement — unless the other
/// side has nothing left at all, in which case the other side is a proper
/// prefix and precedes.
pub fn canonical_mask_cmp(a: u64, b: u64) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let low = (a ^ b).trailing_zeros();
    if a >> low & 1 == 1 {
        // `a` owns the bit; `b` continues with something larger or ends.
        if b >> low >> 1 != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    } else if a >> low >> 1 != 0 {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// All masks over `n` bits with exactly `k` bits set, in ascending numeric
/// order (Gosper's hack).
pub fn masks_of_weight(n: u32, k: u32) -> MasksOfWeight {
    assert!(n <= MAX_GROUND_SIZE && k <= n, "weight {k} over {n} bits out of range");
    let first = if k == 0 { 0 } else { (1u64 << k) - 1 };
    MasksOfWeight {
        next: Some(first),
        limit: ElementSubset::full(n).mask(),
    }
}

pub struct MasksOfWeight {
    next: Option<u64>,
    limit: u64,
}

impl Iterator for MasksOfWeight {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        self.next = gosper_step(cur).filter(|&v| v <= self.limit);
        Some(cur)
    }
}

/// Next mask with the same popcount, or `None` once the bits run off the top.
fn gosper_step(v: u64) -> Option<u64> {
    if v == 0 {
        return None;
    }
    let t = v | (v - 1);
    if t == u64::MAX {
        return None;
    }
    Some((t + 1) | (((!t & (t + 1)) - 1) >> (v.trailing_zeros() + 1)))
}
