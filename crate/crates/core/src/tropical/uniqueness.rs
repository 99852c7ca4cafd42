//! Deciding whether the minimal tropical basis is unique.

use crate::error::Result;
use crate::matroid::Matroid;
use crate::scan::ScanOpts;
use crate::subset::{masks_of_weight, ElementSubset};
use crate::tropical::basis::{closed_circuits, first_violation, is_orthogonal, BasisTestMethod};
use crate::tropical::ensure_simple;

/// Outcome of the uniqueness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniquenessOutcome {
    pub unique: bool,
    /// The unique minimal tropical basis — the closed circuits — when it is.
    pub basis: Option<Vec<ElementSubset>>,
    /// When not unique: the smallest (mask order) non-closed set whose
    /// complement is orthogonal to every closed circuit.
    pub counterexample: Option<ElementSubset>,
}

/// The minimal tropical basis is unique exactly when the closed circuits
/// already form one, i.e. when for every set `X`: `X` is closed iff its
/// complement is orthogonal to the closed circuits.
///
/// Closed circuits belong to every tropical basis (deleting one leaves its
/// own element-deletions uncertified), so a unique minimal basis can only be
/// the closed circuits themselves.
pub fn has_unique_minimal_basis(m: &Matroid, opts: ScanOpts) -> Result<UniquenessOutcome> {
    ensure_simple(m)?;
    let closed = closed_circuits(m);
    let table = m.rank_table(opts)?;
    match first_violation(m.n(), table, &closed, BasisTestMethod::Orthogonality, opts) {
        None => Ok(UniquenessOutcome { unique: true, basis: Some(closed), counterexample: None }),
        Some(x) => {
            Ok(UniquenessOutcome { unique: false, basis: None, counterexample: Some(x) })
        }
    }
}

/// The inclusion-minimal nonempty sets orthogonal to `family`, in canonical
/// order. For a tropical basis these are exactly the cocircuits of `m`.
///
/// Scans by size: any proper subset of a candidate shows up earlier, so a
/// candidate is minimal exactly when no recorded set sits inside it.
pub fn min_orthogonal_sets(
    m: &Matroid,
    family: &[ElementSubset],
    opts: ScanOpts,
) -> Result<Vec<ElementSubset>> {
    let n = m.n();
    for &f in family {
        assert!(f.is_within(n), "family member {f} leaves the ground set");
    }
    opts.check("orthogonal-set scan", n)?;
    let mut minimal: Vec<u64> = Vec::new();
    for size in 1..=n {
        for mask in masks_of_weight(n, size) {
            if minimal.iter().any(|&s| s | mask == mask) {
                continue;
            }
            if is_orthogonal(ElementSubset::from_mask(mask), family) {
                minimal.push(mask);
            }
        }
    }
    let mut out: Vec<ElementSubset> = minimal.into_iter().map(ElementSubset::from_mask).collect();
    out.sort();
    Ok(out)
}
