//! The witness structure over all non-closed sets, and enumeration of the
//! minimal tropical bases as its minimal transversals.

use std::collections::{BTreeSet, HashMap};

use crate::error::Result;
use crate::matroid::Matroid;
use crate::scan::ScanOpts;
use crate::subset::ElementSubset;
use crate::tropical::ensure_simple;

/// One hypergraph edge: a witness set, tagged with the smallest (mask order)
/// non-closed set that produces it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessEdge {
    pub set: ElementSubset,
    /// Indices into the circuit list, ascending.
    pub witness: Vec<u32>,
}

/// Vertices are the circuits; every non-closed set `X` contributes the edge
/// of circuits `C` with `|C \ X| = 1`. Tropical bases are exactly the
/// transversals, so the minimal tropical bases are the minimal transversals
/// of the inclusion-minimal edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessHypergraph {
    circuits: Vec<ElementSubset>,
    edges: Vec<WitnessEdge>,
    reduced: Vec<WitnessEdge>,
}

impl WitnessHypergraph {
    /// The vertex set: circuits in canonical order.
    pub fn circuits(&self) -> &[ElementSubset] {
        &self.circuits
    }

    /// All distinct witness sets, sorted by index list.
    pub fn edges(&self) -> &[WitnessEdge] {
        &self.edges
    }

    /// The inclusion-minimal witness sets, in the same order.
    pub fn reduced(&self) -> &[WitnessEdge] {
        &self.reduced
    }
}

/// Builds the witness hypergraph by scanning every subset of the ground set.
pub fn build_witness_hypergraph(m: &Matroid, opts: ScanOpts) -> Result<WitnessHypergraph> {
    ensure_simple(m)?;
    let table = m.rank_table(opts)?;
    let n = m.n();
    let total = 1u64 << n;

    // witness index list -> smallest non-closed mask bearing it
    let collect_range = |lo: u64, hi: u64| {
        let mut map: HashMap<Vec<u32>, u64> = HashMap::new();
        for mask in lo..hi {
            if table.is_closed_mask(mask) {
                continue;
            }
            let x = ElementSubset::from_mask(mask);
            let witness: Vec<u32> = m
                .circuits()
                .iter()
                .enumerate()
                .filter(|&(_, &c)| (c - x).len() == 1)
                .map(|(i, _)| i as u32)
                .collect();
            assert!(
                !witness.is_empty(),
                "non-closed set {x} without witnesses: the input is not a matroid"
            );
            map.entry(witness).or_insert(mask); // ascending scan keeps the smallest
        }
        map
    };

    let workers = (opts.threads.clamp(1, 64) as u64).min(total);
    let merged = if workers <= 1 {
        collect_range(0, total)
    } else {
        let chunk = total.div_ceil(workers);
        let mut merged: HashMap<Vec<u32>, u64> = HashMap::new();
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let collect_range = &collect_range;
                    scope.spawn(move || collect_range(w * chunk, ((w + 1) * chunk).min(total)))
                })
                .collect();
            for h in handles {
                for (witness, mask) in h.join().expect("scan worker panicked") {
                    merged
                        .entry(witness)
                        .and_modify(|m| *m = (*m).min(mask))
                        .or_insert(mask);
                }
            }
        });
        merged
    };

    let mut edges: Vec<WitnessEdge> = merged
        .into_iter()
        .map(|(witness, mask)| WitnessEdge { set: ElementSubset::from_mask(mask), witness })
        .collect();
    edges.sort_by(|a, b| a.witness.cmp(&b.witness));

    let blocks = index_blocks(m.circuits().len());
    let edge_masks: Vec<Vec<u64>> = edges.iter().map(|e| to_blocks(&e.witness, blocks)).collect();
    let reduced: Vec<WitnessEdge> = edges
        .iter()
        .enumerate()
        .filter(|&(i, _)| {
            // keep unless a different (hence proper) edge sits inside this one
            !edge_masks
                .iter()
                .enumerate()
                .any(|(j, other)| j != i && blocks_subset(other, &edge_masks[i]))
        })
        .map(|(_, e)| e.clone())
        .collect();

    Ok(WitnessHypergraph { circuits: m.circuits().to_vec(), edges, reduced })
}

fn index_blocks(vertex_count: usize) -> usize {
    vertex_count.div_ceil(64).max(1)
}

fn to_blocks(indices: &[u32], blocks: usize) -> Vec<u64> {
    let mut out = vec![0u64; blocks];
    for &i in indices {
        out[i as usize / 64] |= 1u64 << (i % 64);
    }
    out
}

fn blocks_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// Minimal tropical bases, canonically ordered and truncated at `cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasesEnumeration {
    pub bases: Vec<Vec<ElementSubset>>,
    /// More bases than `cap` exist; only the first `cap` are reported.
    pub truncated: bool,
}

/// Enumerates the minimal tropical bases of `m`.
pub fn enumerate_minimal_tropical_bases(
    m: &Matroid,
    cap: usize,
    opts: ScanOpts,
) -> Result<BasesEnumeration> {
    let h = build_witness_hypergraph(m, opts)?;
    Ok(minimal_bases_of_hypergraph(&h, cap))
}

/// Minimal transversals of the reduced edges, mapped back to circuit
/// families.
///
/// Branch on an uncovered edge with the fewest vertices (ties: first in edge
/// order), one child per vertex; every minimal transversal survives some
/// branch, and a final sole-hit filter discards the non-minimal finds.
pub fn minimal_bases_of_hypergraph(h: &WitnessHypergraph, cap: usize) -> BasesEnumeration {
    let vertex_count = h.circuits().len();
    let blocks = index_blocks(vertex_count);
    let edges: Vec<&WitnessEdge> = h.reduced().iter().collect();

    let mut found: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut chosen: Vec<u32> = Vec::new();
    let mut chosen_mask = vec![0u64; blocks];
    branch(&edges, &mut chosen, &mut chosen_mask, &mut found);

    let edge_masks: Vec<Vec<u64>> = edges.iter().map(|e| to_blocks(&e.witness, blocks)).collect();
    let minimal: Vec<Vec<u32>> = found
        .into_iter()
        .filter(|t| {
            let t_mask = to_blocks(t, blocks);
            t.iter().all(|&v| {
                edge_masks.iter().any(|e| {
                    let hits: u32 = e.iter().zip(&t_mask).map(|(a, b)| (a & b).count_ones()).sum();
                    hits == 1 && e[v as usize / 64] >> (v % 64) & 1 == 1
                })
            })
        })
        .collect();

    let truncated = minimal.len() > cap;
    let bases = minimal
        .into_iter()
        .take(cap)
        .map(|t| t.into_iter().map(|v| h.circuits()[v as usize]).collect())
        .collect();
    BasesEnumeration { bases, truncated }
}

fn branch(
    edges: &[&WitnessEdge],
    chosen: &mut Vec<u32>,
    chosen_mask: &mut [u64],
    found: &mut BTreeSet<Vec<u32>>,
) {
    let covered =
        |e: &WitnessEdge, mask: &[u64]| e.witness.iter().any(|&v| mask[v as usize / 64] >> (v % 64) & 1 == 1);
    let mut pick: Option<usize> = None;
    for (i, e) in edges.iter().enumerate() {
        if covered(e, chosen_mask) {
            continue;
        }
        if pick.is_none_or(|p| e.witness.len() < edges[p].witness.len()) {
            pick = Some(i);
        }
    }
    let Some(p) = pick else {
        let mut t = chosen.clone();
        t.sort_unstable();
        found.insert(t);
        return;
    };
    for &v in &edges[p].witness {
        chosen.push(v);
        chosen_mask[v as usize / 64] |= 1u64 << (v % 64);
        branch(edges, chosen, chosen_mask, found);
        chosen.pop();
        chosen_mask[v as usize / 64] &= !(1u64 << (v % 64));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::CircuitFamily;
    use crate::oracle::{self, Hypergraph};
    use crate::tropical::{is_tropical_basis, BasisTestMethod};

    fn s(els: &[u32]) -> ElementSubset {
        ElementSubset::from_elements(els.iter().copied()).unwrap()
    }

    fn matroid(n: u64, raw: &[&[u32]]) -> Matroid {
        let raw: Vec<Vec<u32>> = raw.iter().map(|r| r.to_vec()).collect();
        Matroid::new(CircuitFamily::validate(n, &raw).unwrap())
    }

    fn u24() -> Matroid {
        matroid(4, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])
    }

    /// Cross-check the branching enumeration against the naive transversal
    /// scan, vertex count permitting.
    fn oracle_bases(m: &Matroid, h: &WitnessHypergraph) -> Vec<Vec<ElementSubset>> {
        let edges: Vec<u64> = h
            .reduced()
            .iter()
            .map(|e| e.witness.iter().fold(0u64, |acc, &v| acc | 1 << v))
            .collect();
        let hg = Hypergraph::new(m.circuits().len() as u32, edges).unwrap();
        oracle::minimal_transversals(&hg)
            .unwrap()
            .into_iter()
            .map(|t| {
                (0..m.circuits().len())
                    .filter(|&i| t >> i & 1 == 1)
                    .map(|i| m.circuits()[i])
                    .collect()
            })
            .collect()
    }

    #[test]
    fn line_hypergraph_has_the_six_pair_edges() {
        let m = u24();
        let h = build_witness_hypergraph(&m, ScanOpts::default()).unwrap();
        assert_eq!(h.circuits().len(), 4);
        // Every 2-subset {a,b} is witnessed by the two circuits containing
        // both; e.g. {1,2} by circuits {1,2,3} and {1,2,4} (indices 0, 1).
        // Full circuits are witnessed by the other three, but those edges
        // contain pair edges and reduce away.
        assert_eq!(h.edges().len(), 10);
        assert_eq!(h.reduced().len(), 6);
        assert!(h.reduced().iter().all(|e| e.witness.len() == 2));
        let first = &h.reduced()[0];
        assert_eq!(first.witness, vec![0, 1]);
        assert_eq!(first.set, s(&[1, 2]));
    }

    #[test]
    fn line_has_exactly_the_four_triple_bases() {
        let m = u24();
        let result = enumerate_minimal_tropical_bases(&m, 64, ScanOpts::default()).unwrap();
        assert!(!result.truncated);
        assert_eq!(result.bases.len(), 4);
        for basis in &result.bases {
            assert_eq!(basis.len(), 3);
        }
        // Canonical order: the four 3-subsets of the circuit family.
        assert_eq!(result.bases[0], vec![s(&[1, 2, 3]), s(&[1, 2, 4]), s(&[1, 3, 4])]);
        let h = build_witness_hypergraph(&m, ScanOpts::default()).unwrap();
        assert_eq!(result.bases, oracle_bases(&m, &h));
    }

    #[test]
    fn truncation_reports_itself() {
        let m = u24();
        let result = enumerate_minimal_tropical_bases(&m, 3, ScanOpts::default()).unwrap();
        assert!(result.truncated);
        assert_eq!(result.bases.len(), 3);
        let full = enumerate_minimal_tropical_bases(&m, 4, ScanOpts::default()).unwrap();
        assert!(!full.truncated);
    }

    #[test]
    fn free_matroid_has_the_empty_basis() {
        let m = matroid(3, &[]);
        let h = build_witness_hypergraph(&m, ScanOpts::default()).unwrap();
        assert!(h.edges().is_empty());
        let result = minimal_bases_of_hypergraph(&h, 64);
        assert!(!result.truncated);
        assert_eq!(result.bases, vec![Vec::<ElementSubset>::new()]);
    }

    #[test]
    fn triangle_hypergraph_forces_its_circuit() {
        let m = matroid(3, &[&[1, 2, 3]]);
        let h = build_witness_hypergraph(&m, ScanOpts::default()).unwrap();
        // Non-closed sets are the three pairs; each is witnessed only by the
        // triangle itself.
        assert_eq!(h.edges().len(), 1);
        assert_eq!(h.edges()[0].witness, vec![0]);
        assert_eq!(h.edges()[0].set, s(&[1, 2]));
        let result = minimal_bases_of_hypergraph(&h, 64);
        assert_eq!(result.bases, vec![vec![s(&[1, 2, 3])]]);
    }

    #[test]
    fn enumerated_bases_all_verify_and_thread_count_does_not_matter() {
        let m = u24();
        let base = enumerate_minimal_tropical_bases(&m, 64, ScanOpts::default()).unwrap();
        for threads in [2, 5] {
            let opts = ScanOpts { threads, ..Default::default() };
            assert_eq!(enumerate_minimal_tropical_bases(&m, 64, opts).unwrap(), base);
        }
        for basis in &base.bases {
            for method in [BasisTestMethod::Definitional, BasisTestMethod::Orthogonality] {
                let verdict = is_tropical_basis(&m, basis, method, ScanOpts::default()).unwrap();
                assert!(verdict.is_basis && verdict.is_minimal);
            }
        }
    }
}
