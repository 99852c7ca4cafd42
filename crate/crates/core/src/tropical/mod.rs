//! Tropical bases of simple matroids.
//!
//! A subfamily of the circuits is a *tropical basis* when it certifies every
//! non-closed set: for each `X` with `cl(X) != X` some member `C` satisfies
//! `|C \ X| = 1`. This module tests candidates (two independent routes),
//! builds the witness structure over all non-closed sets, enumerates the
//! minimal tropical bases, decides uniqueness, and provides the double
//! circuit machinery behind the sufficiency check and basis swaps.

mod basis;
mod double;
mod hypergraph;
mod uniqueness;

pub use basis::{
    closed_circuits, is_orthogonal, is_tropical_basis, witnesses, BasisTestMethod, BasisVerdict,
};
pub use double::{
    basis_swap, closed_basis_sufficiency, double_circuit_decompose, CircuitCertificate,
    DoubleCircuitDecomposition, SufficiencyCertificate, SufficiencyOutcome, SwapOutcome,
};
pub use hypergraph::{
    build_witness_hypergraph, enumerate_minimal_tropical_bases, minimal_bases_of_hypergraph,
    BasesEnumeration, WitnessEdge, WitnessHypergraph,
};
pub use uniqueness::{has_unique_minimal_basis, min_orthogonal_sets, UniquenessOutcome};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::ElementSubset;

/// Basis-level operations only accept simple matroids.
pub(crate) fn ensure_simple(m: &Matroid) -> Result<()> {
    match m.simplicity_witness() {
        Some(witness) => Err(Error::NotSimple { witness }),
        None => Ok(()),
    }
}

/// Checks each member is a circuit of `m`, then sorts and deduplicates.
pub(crate) fn canonical_members(
    m: &Matroid,
    members: &[ElementSubset],
) -> Result<Vec<ElementSubset>> {
    let mut out = Vec::with_capacity(members.len());
    for &c in members {
        if !m.is_circuit(c) {
            return Err(Error::NotACircuit { member: c });
        }
        out.push(c);
    }
    out.sort();
    out.dedup();
    Ok(out)
}
