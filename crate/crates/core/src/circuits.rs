//! Circuit families and validation of the circuit axioms.

use crate::error::{Error, Result};
use crate::subset::{ElementSubset, MAX_GROUND_SIZE};

/// Hard limit on family size; validation is quadratic in the member count.
pub const CIRCUIT_CAP: usize = 10_000;

/// A validated family of circuits over the ground set `{1..n}`.
///
/// Construction enforces the circuit axioms — members are nonempty, pairwise
/// incomparable, and closed under elimination — and canonicalizes: members are
/// deduplicated and sorted in the rendering order of [`ElementSubset`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CircuitFamily {
    n: u32,
    circuits: Vec<ElementSubset>,
}

impl CircuitFamily {
    /// Validates raw 1-based element lists as a circuit family over `{1..n}`.
    pub fn validate(n: u64, raw: &[Vec<u32>]) -> Result<Self> {
        if n > u64::from(MAX_GROUND_SIZE) {
            return Err(Error::GroundSetTooLarge { n });
        }
        let n = n as u32;
        let mut subsets = Vec::with_capacity(raw.len());
        for list in raw {
            subsets.push(ElementSubset::from_elements(list.iter().copied())?);
        }
        Self::from_subsets(n, subsets)
    }

    /// Validates subsets already in mask form.
    pub fn from_subsets(n: u32, mut subsets: Vec<ElementSubset>) -> Result<Self> {
        if n > MAX_GROUND_SIZE {
            return Err(Error::GroundSetTooLarge { n: u64::from(n) });
        }
        for (index, &s) in subsets.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::EmptyCircuit { index });
            }
            if !s.is_within(n) {
                let worst = s.minus(ElementSubset::full(n));
                return Err(Error::ElementOutOfRange {
                    element: u64::from(worst.min_element().expect("nonempty excess")),
                    limit: n,
                });
            }
        }
        subsets.sort();
        subsets.dedup();
        if subsets.len() > CIRCUIT_CAP {
            return Err(Error::TooManyCircuits { count: subsets.len(), cap: CIRCUIT_CAP });
        }
        let family = Self { n, circuits: subsets };
        family.check_incomparable()?;
        family.check_elimination()?;
        Ok(family)
    }

    /// No member may contain another.
    fn check_incomparable(&self) -> Result<()> {
        let cs = &self.circuits;
        for i in 0..cs.len() {
            for j in i + 1..cs.len() {
                if cs[i].is_subset_of(cs[j]) {
                    return Err(Error::ComparablePair { inner: cs[i], outer: cs[j] });
                }
                if cs[j].is_subset_of(cs[i]) {
                    return Err(Error::ComparablePair { inner: cs[j], outer: cs[i] });
                }
            }
        }
        Ok(())
    }

    /// For distinct members `C1, C2` and any `e` in both, some member must lie
    /// inside `(C1 ∪ C2) \ {e}`.
    fn check_elimination(&self) -> Result<()> {
        let cs = &self.circuits;
        for i in 0..cs.len() {
            for j in i + 1..cs.len() {
                let common = cs[i] & cs[j];
                for e in common.iter() {
                    let target = (cs[i] | cs[j]).without(e);
                    if !cs.iter().any(|c| c.is_subset_of(target)) {
                        return Err(Error::EliminationFailure {
                            c1: cs[i],
                            c2: cs[j],
                            element: e,
                            target,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.circuits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.circuits.is_empty()
    }

    /// Members in canonical order.
    pub fn circuits(&self) -> &[ElementSubset] {
        &self.circuits
    }

    /// Index of `c` in the canonical order, if it is a member.
    pub fn position(&self, c: ElementSubset) -> Option<usize> {
        self.circuits.binary_search(&c).ok()
    }

    pub fn contains(&self, c: ElementSubset) -> bool {
        self.position(c).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(n: u64, raw: &[&[u32]]) -> Result<CircuitFamily> {
        let raw: Vec<Vec<u32>> = raw.iter().map(|r| r.to_vec()).collect();
        CircuitFamily::validate(n, &raw)
    }

    #[test]
    fn rejects_empty_member() {
        let err = fam(3, &[&[1, 2], &[]]).unwrap_err();
        assert_eq!(err, Error::EmptyCircuit { index: 1 });
    }

    #[test]
    fn rejects_contained_pair() {
        let err = fam(3, &[&[1, 2], &[1, 2, 3]]).unwrap_err();
        let inner = ElementSubset::from_elements([1, 2]).unwrap();
        let outer = ElementSubset::from_elements([1, 2, 3]).unwrap();
        assert_eq!(err, Error::ComparablePair { inner, outer });
    }

    #[test]
    fn rejects_elimination_gap() {
        // {1,2,3} and {1,2,4} overlap in 1 and 2, but the family has no
        // circuit inside {2,3,4} or {1,3,4}.
        let err = fam(4, &[&[1, 2, 3], &[1, 2, 4]]).unwrap_err();
        match err {
            Error::EliminationFailure { c1, c2, element, target } => {
                assert_eq!(c1.elements(), vec![1, 2, 3]);
                assert_eq!(c2.elements(), vec![1, 2, 4]);
                assert_eq!(element, 1);
                assert_eq!(target.elements(), vec![2, 3, 4]);
            }
            other => panic!("expected elimination failure, got {other:?}"),
        }
    }

    #[test]
    fn rejects_out_of_range_element() {
        let err = fam(3, &[&[1, 4]]).unwrap_err();
        assert_eq!(err, Error::ElementOutOfRange { element: 4, limit: 3 });
        assert!(fam(70, &[&[1]]).is_err());
    }

    #[test]
    fn accepts_uniform_two_four_and_canonicalizes() {
        let f = fam(
            4,
            &[&[2, 3, 4], &[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[3, 2, 1]],
        )
        .unwrap();
        assert_eq!(f.len(), 4);
        let rendered: Vec<String> = f.circuits().iter().map(|c| c.to_string()).collect();
        assert_eq!(rendered, ["{1,2,3}", "{1,2,4}", "{1,3,4}", "{2,3,4}"]);
        assert!(f.contains(ElementSubset::from_elements([4, 2, 3]).unwrap()));
        assert_eq!(f.position(ElementSubset::from_elements([1, 2, 4]).unwrap()), Some(1));
        assert!(!f.contains(ElementSubset::from_elements([1, 2]).unwrap()));
    }

    #[test]
    fn accepts_empty_family() {
        let f = fam(5, &[]).unwrap();
        assert!(f.is_empty());
        assert_eq!(f.n(), 5);
    }

    #[test]
    fn accepts_parallel_pair_family() {
        // Two parallel elements: the unique circuit {1,2}.
        let f = fam(2, &[&[1, 2]]).unwrap();
        assert_eq!(f.len(), 1);
    }
}
