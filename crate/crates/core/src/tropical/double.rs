//! Double circuits, their partition into classes, and the two operations
//! built on them: the closed-basis sufficiency check and the basis swap.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::ElementSubset;
use crate::tropical::{canonical_members, ensure_simple};

/// A set `D` with `rank(D) = |D| - 2` that keeps that rank under every
/// one-element deletion, split into its classes: the complements of the
/// circuits lying inside `D`, which partition `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCircuitDecomposition {
    pub elements: ElementSubset,
    /// The partition classes, in canonical order.
    pub classes: Vec<ElementSubset>,
    /// `inner_circuits[i] = elements \ classes[i]`, aligned with `classes`.
    pub inner_circuits: Vec<ElementSubset>,
}

impl DoubleCircuitDecomposition {
    /// Number of classes.
    pub fn degree(&self) -> usize {
        self.classes.len()
    }
}

/// Checks the rank conditions on `d` and computes its class partition.
pub fn double_circuit_decompose(
    m: &Matroid,
    d: ElementSubset,
) -> Result<DoubleCircuitDecomposition> {
    assert!(d.is_within(m.n()), "subset {d} leaves the ground set");
    let fail = |detail: String| Error::NotADoubleCircuit { d, detail };
    let size = d.len();
    if size < 2 {
        return Err(fail("it has fewer than 2 elements".into()));
    }
    let expected = size - 2;
    let rd = m.rank(d);
    if rd != expected {
        return Err(fail(format!("its rank is {rd}, not {expected}")));
    }
    for e in d.iter() {
        let r = m.rank(d.without(e));
        if r != expected {
            return Err(fail(format!("removing {e} drops the rank to {r}, not {expected}")));
        }
    }
    let mut pairs: Vec<(ElementSubset, ElementSubset)> = m
        .circuits()
        .iter()
        .copied()
        .filter(|c| c.is_subset_of(d))
        .map(|c| (d - c, c))
        .collect();
    pairs.sort();
    let mut seen = ElementSubset::EMPTY;
    for &(class, _) in &pairs {
        if class.is_empty() || !(seen & class).is_empty() {
            return Err(fail("its inner circuit complements do not partition it".into()));
        }
        seen = seen | class;
    }
    if seen != d {
        return Err(fail("its inner circuit complements do not partition it".into()));
    }
    let (classes, inner_circuits) = pairs.into_iter().unzip();
    Ok(DoubleCircuitDecomposition { elements: d, classes, inner_circuits })
}

/// Per-circuit evidence for the sufficiency check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CircuitCertificate {
    /// The circuit equals its closure.
    Closed,
    /// Adding `element` (from the closure, outside the circuit) yields a
    /// double circuit with exactly 3 classes.
    Degree3Extension {
        element: u32,
        decomposition: DoubleCircuitDecomposition,
    },
    /// Every closure element was tried; none gave 3 classes. The pairs are
    /// `(element, degree)` in ascending element order.
    NoDegree3Extension { tried: Vec<(u32, usize)> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SufficiencyCertificate {
    pub circuit: ElementSubset,
    pub certificate: CircuitCertificate,
}

/// Outcome of [`closed_basis_sufficiency`]: when `holds`, the closed circuits
/// form the unique minimal tropical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SufficiencyOutcome {
    pub holds: bool,
    /// One certificate per circuit, in canonical circuit order.
    pub certificates: Vec<SufficiencyCertificate>,
}

impl SufficiencyOutcome {
    pub fn certificate_for(&self, circuit: ElementSubset) -> Option<&CircuitCertificate> {
        self.certificates
            .iter()
            .find(|c| c.circuit == circuit)
            .map(|c| &c.certificate)
    }
}

/// Checks that every circuit is closed or extends by one closure element to a
/// double circuit of degree 3 — a sufficient condition for the closed
/// circuits to be the unique minimal tropical basis.
///
/// Extending a circuit by a closure element always yields a double circuit
/// (each deletion keeps rank: a circuit minus a point spans the circuit's
/// closure), so the only question per element is the degree.
pub fn closed_basis_sufficiency(m: &Matroid) -> Result<SufficiencyOutcome> {
    ensure_simple(m)?;
    let mut holds = true;
    let mut certificates = Vec::with_capacity(m.circuits().len());
    for &c in m.circuits() {
        let closure = m.closure(c);
        let certificate = if closure == c {
            CircuitCertificate::Closed
        } else {
            let mut chosen = None;
            let mut tried = Vec::new();
            for f in (closure - c).iter() {
                let decomposition = double_circuit_decompose(m, c.with(f))?;
                if decomposition.degree() == 3 {
                    chosen = Some(CircuitCertificate::Degree3Extension {
                        element: f,
                        decomposition,
                    });
                    break;
                }
                tried.push((f, decomposition.degree()));
            }
            chosen.unwrap_or_else(|| {
                holds = false;
                CircuitCertificate::NoDegree3Extension { tried }
            })
        };
        certificates.push(SufficiencyCertificate { circuit: c, certificate });
    }
    Ok(SufficiencyOutcome { holds, certificates })
}

/// Result of swapping one non-closed member out of a tropical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwapOutcome {
    pub removed: ElementSubset,
    /// The closure element used to extend the removed circuit.
    pub extension_element: u32,
    /// The inner circuits of the extension whose class is not the extension
    /// element itself; these replace the removed member.
    pub added: Vec<ElementSubset>,
    /// The resulting family: basis minus `removed` plus `added`, canonical.
    pub family: Vec<ElementSubset>,
}

/// Swaps the non-closed `circuit` out of `basis`: extend it by a closure
/// element `f`, decompose the resulting double circuit, and replace the
/// member by the inner circuits avoiding `f`'s class. The returned family is
/// again a tropical basis that no longer contains `circuit`.
///
/// `basis` must be a tropical basis for the exchange to yield one; this is
/// not re-verified here. With `element` unset, the smallest eligible closure
/// element is used.
pub fn basis_swap(
    m: &Matroid,
    basis: &[ElementSubset],
    circuit: ElementSubset,
    element: Option<u32>,
) -> Result<SwapOutcome> {
    ensure_simple(m)?;
    let members = canonical_members(m, basis)?;
    if members.binary_search(&circuit).is_err() {
        return Err(Error::CircuitNotInBasis { circuit });
    }
    let eligible = m.closure(circuit) - circuit;
    if eligible.is_empty() {
        return Err(Error::CircuitIsClosed { circuit });
    }
    let f = match element {
        Some(f) => {
            if !eligible.contains(f) {
                return Err(Error::IneligibleSwapElement { circuit, element: f });
            }
            f
        }
        None => eligible.min_element().expect("nonempty eligible set"),
    };
    let decomposition = double_circuit_decompose(m, circuit.with(f))?;
    let f_class = ElementSubset::singleton(f);
    let added: Vec<ElementSubset> = decomposition
        .classes
        .iter()
        .zip(&decomposition.inner_circuits)
        .filter(|&(&class, _)| class != f_class)
        .map(|(_, &inner)| inner)
        .collect();
    let mut family: Vec<ElementSubset> = members
        .into_iter()
        .filter(|&c| c != circuit)
        .chain(added.iter().copied())
        .collect();
    family.sort();
    family.dedup();
    Ok(SwapOutcome { removed: circuit, extension_element: f, added, family })
}
