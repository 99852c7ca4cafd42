//! The analysis pipeline and its report, shared by `analyze` and the JSON
//! output of other commands.
//!
//! Reports are plain data: subsets appear as ascending 1-based element
//! lists, so the JSON is stable and diffable. All text rendering is
//! deterministic — timings never go to stdout (see `--timings`).

use serde::{Deserialize, Serialize};
use tropbas::scan::ScanOpts;
use tropbas::subset::ElementSubset;
use tropbas::tropical::{
    self, BasisTestMethod, CircuitCertificate, DoubleCircuitDecomposition,
};
use tropbas::{Error, Matroid};

pub fn elems(s: ElementSubset) -> Vec<u32> {
    s.elements()
}

pub fn family(f: &[ElementSubset]) -> Vec<Vec<u32>> {
    f.iter().map(|&s| elems(s)).collect()
}

pub fn render_set(els: &[u32]) -> String {
    let parts: Vec<String> = els.iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn render_family(f: &[Vec<u32>]) -> String {
    if f.is_empty() {
        return "(empty)".into();
    }
    let parts: Vec<String> = f.iter().map(|s| render_set(s)).collect();
    parts.join(" ")
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CounterexampleReport {
    /// A non-closed set whose complement is orthogonal to every closed
    /// circuit.
    pub set: Vec<u32>,
    pub closure: Vec<u32>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    pub elements: Vec<u32>,
    pub degree: usize,
    pub classes: Vec<Vec<u32>>,
    pub inner_circuits: Vec<Vec<u32>>,
}

impl DecompositionReport {
    pub fn from_lib(d: &DoubleCircuitDecomposition) -> Self {
        Self {
            elements: elems(d.elements),
            degree: d.degree(),
            classes: family(&d.classes),
            inner_circuits: family(&d.inner_circuits),
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CertificateReport {
    pub circuit: Vec<u32>,
    /// `closed`, `degree3_extension`, or `no_degree3_extension`.
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub extension_element: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionReport>,
    /// `(element, degree)` pairs for failed extension attempts.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tried: Option<Vec<(u32, usize)>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ExtensionReport {
    pub circuit: Vec<u32>,
    pub extension_element: u32,
    pub decomposition: DecompositionReport,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct SwapReport {
    pub removed: Vec<u32>,
    pub extension_element: u32,
    pub added: Vec<Vec<u32>>,
    pub family: Vec<Vec<u32>>,
    /// The swapped family re-verified as a tropical basis.
    pub verified: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub input: String,
    pub n: u32,
    pub rank: u32,
    pub circuit_count: usize,
    pub circuits: Vec<Vec<u32>>,
    pub is_simple: bool,
    pub is_binary: bool,
    pub closed_circuits: Vec<Vec<u32>>,
    pub unique_minimal_basis: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub uniqueness_counterexample: Option<CounterexampleReport>,
    pub minimal_bases: Vec<Vec<Vec<u32>>>,
    pub minimal_bases_truncated: bool,
    pub sufficient_condition_holds: bool,
    pub circuit_certificates: Vec<CertificateReport>,
    pub double_circuit_extensions: Vec<ExtensionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub swap_example: Option<SwapReport>,
    pub cocircuits: Vec<Vec<u32>>,
    pub cocircuit_recovery_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

/// Runs the full pipeline on one matroid.
pub fn analyze(input: &str, m: &Matroid, max_bases: usize, opts: ScanOpts) -> Result<AnalysisReport, Error> {
    let full = m.full_set();
    let rank = m.rank(full);
    if let Some(witness) = m.simplicity_witness() {
        return Err(Error::NotSimple { witness });
    }
    let is_simple = true; // rejected above otherwise
    let is_binary = m.is_binary(opts)?;
    let closed = tropical::closed_circuits(m);

    let hypergraph = tropical::build_witness_hypergraph(m, opts)?;
    let enumeration = tropical::minimal_bases_of_hypergraph(&hypergraph, max_bases);
    let uniqueness = tropical::has_unique_minimal_basis(m, opts)?;
    let sufficiency = tropical::closed_basis_sufficiency(m)?;

    let certificates: Vec<CertificateReport> = sufficiency
        .certificates
        .iter()
        .map(|cert| match &cert.certificate {
            CircuitCertificate::Closed => CertificateReport {
                circuit: elems(cert.circuit),
                status: "closed".into(),
                extension_element: None,
                decomposition: None,
                tried: None,
            },
            CircuitCertificate::Degree3Extension { element, decomposition } => CertificateReport {
                circuit: elems(cert.circuit),
                status: "degree3_extension".into(),
                extension_element: Some(*element),
                decomposition: Some(DecompositionReport::from_lib(decomposition)),
                tried: None,
            },
            CircuitCertificate::NoDegree3Extension { tried } => CertificateReport {
                circuit: elems(cert.circuit),
                status: "no_degree3_extension".into(),
                extension_element: None,
                decomposition: None,
                tried: Some(tried.clone()),
            },
        })
        .collect();

    // One extension summary per non-closed circuit, using its smallest
    // closure element.
    let mut extensions = Vec::new();
    for &c in m.circuits() {
        let outside = m.closure(c) - c;
        let Some(f) = outside.min_element() else {
            continue;
        };
        let decomposition = tropical::double_circuit_decompose(m, c.with(f))?;
        extensions.push(ExtensionReport {
            circuit: elems(c),
            extension_element: f,
            decomposition: DecompositionReport::from_lib(&decomposition),
        });
    }

    // When the basis is not unique, demonstrate a swap on the first
    // enumerated basis with a non-closed member.
    let mut swap_example = None;
    if !uniqueness.unique {
        'outer: for basis in &enumeration.bases {
            for &c in basis {
                if m.closure(c) != c {
                    let swap = tropical::basis_swap(m, basis, c, None)?;
                    let verdict = tropical::is_tropical_basis(
                        m,
                        &swap.family,
                        BasisTestMethod::Definitional,
                        opts,
                    )?;
                    swap_example = Some(SwapReport {
                        removed: elems(swap.removed),
                        extension_element: swap.extension_element,
                        added: family(&swap.added),
                        family: family(&swap.family),
                        verified: verdict.is_basis,
                    });
                    break 'outer;
                }
            }
        }
    }

    let cocircuits = m.cocircuits(opts)?;
    let mut recovery_ok = true;
    for basis in &enumeration.bases {
        let recovered = tropical::min_orthogonal_sets(m, basis, opts)?;
        if recovered != cocircuits.circuits() {
            recovery_ok = false;
            break;
        }
    }

    let uniqueness_counterexample = uniqueness.counterexample.map(|x| CounterexampleReport {
        set: elems(x),
        closure: elems(m.closure(x)),
    });

    Ok(AnalysisReport {
        input: input.to_string(),
        n: m.n(),
        rank,
        circuit_count: m.circuits().len(),
        circuits: family(m.circuits()),
        is_simple,
        is_binary,
        closed_circuits: family(&closed),
        unique_minimal_basis: uniqueness.unique,
        uniqueness_counterexample,
        minimal_bases: enumeration.bases.iter().map(|b| family(b)).collect(),
        minimal_bases_truncated: enumeration.truncated,
        sufficient_condition_holds: sufficiency.holds,
        circuit_certificates: certificates,
        double_circuit_extensions: extensions,
        swap_example,
        cocircuits: family(cocircuits.circuits()),
        cocircuit_recovery_ok: recovery_ok,
        timing_ms: None,
    })
}

impl AnalysisReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        line(format!("input: {}", self.input));
        line(format!("ground set: {} elements, rank {}", self.n, self.rank));
        line(format!(
            "circuits: {} (simple: {}, binary: {})",
            self.circuit_count,
            yes_no(self.is_simple),
            yes_no(self.is_binary)
        ));
        line(format!(
            "closed circuits: {} of {}: {}",
            self.closed_circuits.len(),
            self.circuit_count,
            render_family(&self.closed_circuits)
        ));
        line(format!(
            "minimal tropical bases: {}{}",
            self.minimal_bases.len(),
            if self.minimal_bases_truncated { " (truncated)" } else { "" }
        ));
        for (i, basis) in self.minimal_bases.iter().enumerate() {
            line(format!("  [{}] {}", i + 1, render_family(basis)));
        }
        line(format!("unique minimal basis: {}", yes_no(self.unique_minimal_basis)));
        if let Some(ce) = &self.uniqueness_counterexample {
            line(format!(
                "  counterexample: {} is not closed (closure {}) yet its complement is orthogonal to every closed circuit",
                render_set(&ce.set),
                render_set(&ce.closure)
            ));
        }
        line(format!(
            "sufficient condition (each circuit closed or a degree-3 extension): {}",
            if self.sufficient_condition_holds { "holds" } else { "fails" }
        ));
        for cert in &self.circuit_certificates {
            match cert.status.as_str() {
                "closed" => line(format!("  {} closed", render_set(&cert.circuit))),
                "degree3_extension" => line(format!(
                    "  {} + {} gives degree 3",
                    render_set(&cert.circuit),
                    cert.extension_element.unwrap_or(0)
                )),
                _ => {
                    let tried = cert
                        .tried
                        .as_deref()
                        .unwrap_or(&[])
                        .iter()
                        .map(|&(f, d)| format!("+{f} gives degree {d}"))
                        .collect::<Vec<_>>()
                        .join(", ");
                    line(format!(
                        "  {} has no degree-3 extension ({tried})",
                        render_set(&cert.circuit)
                    ));
                }
            }
        }
        if !self.double_circuit_extensions.is_empty() {
            line("double circuit extensions (smallest closure element each):".into());
            for ext in &self.double_circuit_extensions {
                let classes: Vec<String> =
                    ext.decomposition.classes.iter().map(|c| render_set(c)).collect();
                line(format!(
                    "  {} + {} -> degree {}: classes {}",
                    render_set(&ext.circuit),
                    ext.extension_element,
                    ext.decomposition.degree,
                    classes.join(" ")
                ));
            }
        }
        if let Some(swap) = &self.swap_example {
            line(format!(
                "swap example: remove {} (extend by {}), add {}; verified: {}",
                render_set(&swap.removed),
                swap.extension_element,
                render_family(&swap.added),
                yes_no(swap.verified)
            ));
        }
        line(format!("cocircuits: {}", render_family(&self.cocircuits)));
        line(format!(
            "cocircuit recovery from enumerated bases: {}",
            if self.cocircuit_recovery_ok { "ok" } else { "FAILED" }
        ));
        out
    }
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
