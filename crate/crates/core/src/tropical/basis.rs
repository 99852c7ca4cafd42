//! Testing a circuit subfamily for the tropical basis property.

use crate::error::Result;
use crate::matroid::{Matroid, RankTable};
use crate::scan::{scan_find_first, ScanOpts};
use crate::subset::ElementSubset;
use crate::tropical::{canonical_members, ensure_simple};

/// Two logically independent tests of the same property; they must agree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisTestMethod {
    /// Scan all sets; every non-closed `X` needs a member `C` with
    /// `|C \ X| = 1`.
    Definitional,
    /// Scan all sets; `X` must be closed exactly when its complement is
    /// orthogonal to the candidate family.
    Orthogonality,
}

/// Outcome of a basis test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisVerdict {
    pub is_basis: bool,
    /// Whether no proper subfamily is itself a basis; `false` whenever
    /// `is_basis` is.
    pub is_minimal: bool,
    /// A non-closed set no member certifies — present exactly when the
    /// candidate fails; the smallest such set in mask order.
    pub failure_witness: Option<ElementSubset>,
    /// A member whose removal leaves a basis — present exactly when the
    /// candidate is a basis but not minimal; the first in canonical order.
    pub redundant_member: Option<ElementSubset>,
}

/// Whether `a` is orthogonal to the whole family: `|a ∩ d| != 1` for every
/// member `d`.
pub fn is_orthogonal(a: ElementSubset, family: &[ElementSubset]) -> bool {
    family.iter().all(|&d| (a & d).len() != 1)
}

/// The circuits that certify `x`: members `c` with `|c \ x| = 1`.
pub fn witnesses(m: &Matroid, x: ElementSubset) -> Vec<ElementSubset> {
    assert!(x.is_within(m.n()), "subset {x} leaves the ground set");
    m.circuits()
        .iter()
        .copied()
        .filter(|&c| (c - x).len() == 1)
        .collect()
}

/// The circuits equal to their own closure.
pub fn closed_circuits(m: &Matroid) -> Vec<ElementSubset> {
    m.circuits()
        .iter()
        .copied()
        .filter(|&c| m.closure(c) == c)
        .collect()
}

/// Tests whether `candidate` (a subfamily of the circuits) is a tropical
/// basis, and if so whether it is minimal.
///
/// Minimality is decided by re-testing each one-member deletion; the first
/// deletion that still passes is reported as the redundant member.
pub fn is_tropical_basis(
    m: &Matroid,
    candidate: &[ElementSubset],
    method: BasisTestMethod,
    opts: ScanOpts,
) -> Result<BasisVerdict> {
    ensure_simple(m)?;
    let members = canonical_members(m, candidate)?;
    let table = m.rank_table(opts)?;
    if let Some(witness) = first_violation(m.n(), table, &members, method, opts) {
        return Ok(BasisVerdict {
            is_basis: false,
            is_minimal: false,
            failure_witness: Some(witness),
            redundant_member: None,
        });
    }
    let mut redundant = None;
    for i in 0..members.len() {
        let mut rest = members.clone();
        let removed = rest.remove(i);
        if first_violation(m.n(), table, &rest, method, opts).is_none() {
            redundant = Some(removed);
            break;
        }
    }
    Ok(BasisVerdict {
        is_basis: true,
        is_minimal: redundant.is_none(),
        failure_witness: None,
        redundant_member: redundant,
    })
}

/// The smallest set (in mask order) on which `members` fails the basis
/// property, or `None` when it is a basis.
///
/// Both methods agree on which sets fail: a closed `X` is never a
/// definitional failure, and its complement meets each circuit in a
/// non-singleton (a circuit with exactly one element outside a closed set
/// would put its remaining elements' closure around that element). So the
/// smallest failure is method-independent, and so is the verdict.
pub(crate) fn first_violation(
    n: u32,
    table: &RankTable,
    members: &[ElementSubset],
    method: BasisTestMethod,
    opts: ScanOpts,
) -> Option<ElementSubset> {
    let hit = match method {
        BasisTestMethod::Definitional => scan_find_first(n, opts, |mask| {
            if table.is_closed_mask(mask) {
                return false;
            }
            let x = ElementSubset::from_mask(mask);
            !members.iter().any(|&c| (c - x).len() == 1)
        }),
        BasisTestMethod::Orthogonality => scan_find_first(n, opts, |mask| {
            let x = ElementSubset::from_mask(mask);
            let orthogonal = is_orthogonal(x.complement(n), members);
            orthogonal != table.is_closed_mask(mask)
        }),
    };
    hit.map(ElementSubset::from_mask)
}
