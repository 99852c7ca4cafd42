//! Naive reference implementations used to cross-check the fast paths.
//!
//! Everything here trades speed for obviousness and shares no logic with the
//! main algorithms: transversals are found by scanning all vertex subsets,
//! circuits by scanning all ground subsets in size order against a caller
//! supplied rank function. Tests hold the clever implementations to these.

use crate::circuits::CircuitFamily;
use crate::error::{Error, Result};
use crate::subset::{canonical_mask_cmp, masks_of_weight, ElementSubset};

/// Transversal enumeration scans `2^v` subsets; refuse beyond this.
pub const TRANSVERSAL_VERTEX_CAP: u32 = 15;

/// Circuit enumeration scans `2^n` subsets; refuse beyond this.
pub const CIRCUITS_FROM_RANK_CAP: u32 = 20;

/// A hypergraph on 0-based vertices `0..vertex_count`, edges as bit masks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    vertex_count: u32,
    edges: Vec<u64>,
}

impl Hypergraph {
    pub fn new(vertex_count: u32, edges: Vec<u64>) -> Result<Self> {
        if vertex_count > 64 {
            return Err(Error::GroundSetTooLarge { n: u64::from(vertex_count) });
        }
        let full = ElementSubset::full(vertex_count).mask();
        for (index, &e) in edges.iter().enumerate() {
            if e == 0 {
                return Err(Error::EmptyEdge { index });
            }
            if e & !full != 0 {
                return Err(Error::ElementOutOfRange {
                    element: u64::from((e & !full).trailing_zeros() + 1),
                    limit: vertex_count,
                });
            }
        }
        Ok(Self { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn edges(&self) -> &[u64] {
        &self.edges
    }
}

/// Every inclusion-minimal vertex set meeting all edges, in canonical order.
///
/// Scans all `2^v` vertex sets for the hitting ones, then keeps a set exactly
/// when no smaller hitting set sits inside it. A proper subset of a mask is
/// numerically smaller, so one ascending pass suffices.
pub fn minimal_transversals(h: &Hypergraph) -> Result<Vec<u64>> {
    let v = h.vertex_count();
    if v > TRANSVERSAL_VERTEX_CAP {
        return Err(Error::ResourceCapExceeded {
            what: "transversal enumeration",
            n: v,
            cap: TRANSVERSAL_VERTEX_CAP,
            force_allows: false,
        });
    }
    let total = 1u64 << v;
    let mut minimal: Vec<u64> = Vec::new();
    for t in 0..total {
        if h.edges().iter().any(|&e| t & e == 0) {
            continue;
        }
        if minimal.iter().any(|&s| s | t == t) {
            continue;
        }
        minimal.push(t);
    }
    minimal.sort_by(|&a, &b| canonical_mask_cmp(a, b));
    Ok(minimal)
}

/// Circuits of the matroid a rank function describes: the minimal dependent
/// sets, found by scanning subsets in size order.
///
/// `rank` must be the rank function of a matroid on `{1..n}` (masks use bit
/// `i` for element `i + 1`). A set is a circuit when it is dependent and every
/// one-element deletion is independent.
pub fn circuits_from_rank<F>(rank: F, n: u32) -> Result<CircuitFamily>
where
    F: Fn(u64) -> u32,
{
    if n > CIRCUITS_FROM_RANK_CAP {
        return Err(Error::ResourceCapExceeded {
            what: "circuit enumeration from a rank function",
            n,
            cap: CIRCUITS_FROM_RANK_CAP,
            force_allows: false,
        });
    }
    let mut found: Vec<ElementSubset> = Vec::new();
    for size in 1..=n {
        'candidate: for mask in masks_of_weight(n, size) {
            if rank(mask) >= size {
                continue; // independent
            }
            let mut bits = mask;
            while bits != 0 {
                let low = bits & bits.wrapping_neg();
                bits ^= low;
                if rank(mask ^ low) < size - 1 {
                    continue 'candidate; // a deletion is still dependent
                }
            }
            found.push(ElementSubset::from_mask(mask));
        }
    }
    CircuitFamily::from_subsets(n, found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transversals_of_a_triangle() {
        // Edges {0,1}, {1,2}, {0,2}: minimal transversals are the three pairs.
        let h = Hypergraph::new(3, vec![0b011, 0b110, 0b101]).unwrap();
        assert_eq!(minimal_transversals(&h).unwrap(), vec![0b011, 0b101, 0b110]);
    }

    #[test]
    fn transversals_with_a_forced_vertex() {
        // Edge {1} forces vertex 1, which also covers {1,2}.
        let h = Hypergraph::new(3, vec![0b010, 0b110]).unwrap();
        assert_eq!(minimal_transversals(&h).unwrap(), vec![0b010]);
    }

    #[test]
    fn transversals_of_no_edges_is_the_empty_set() {
        let h = Hypergraph::new(4, vec![]).unwrap();
        assert_eq!(minimal_transversals(&h).unwrap(), vec![0]);
    }

    #[test]
    fn edge_validation() {
        assert!(matches!(
            Hypergraph::new(3, vec![0b01, 0]).unwrap_err(),
            Error::EmptyEdge { index: 1 }
        ));
        assert!(Hypergraph::new(2, vec![0b100]).is_err());
    }

    #[test]
    fn vertex_cap_is_enforced() {
        let h = Hypergraph::new(16, vec![1]).unwrap();
        assert!(matches!(
            minimal_transversals(&h).unwrap_err(),
            Error::ResourceCapExceeded { .. }
        ));
    }

    #[test]
    fn circuits_of_the_rank_two_uniform_matroid() {
        // Rank function of 4 points on a line: min(|X|, 2).
        let fam = circuits_from_rank(|m| m.count_ones().min(2), 4).unwrap();
        let rendered: Vec<String> = fam.circuits().iter().map(|c| c.to_string()).collect();
        assert_eq!(rendered, ["{1,2,3}", "{1,2,4}", "{1,3,4}", "{2,3,4}"]);
    }

    #[test]
    fn circuits_of_the_free_matroid_are_absent() {
        let fam = circuits_from_rank(|m| m.count_ones(), 5).unwrap();
        assert!(fam.is_empty());
    }

    #[test]
    fn circuits_of_a_rank_function_with_a_loop() {
        // Element 1 is a loop: it never contributes rank.
        let fam = circuits_from_rank(|m| (m & !1).count_ones(), 3).unwrap();
        let rendered: Vec<String> = fam.circuits().iter().map(|c| c.to_string()).collect();
        assert_eq!(rendered, ["{1}"]);
    }
}
