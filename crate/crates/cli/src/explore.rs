//! Seeded searches over families of matroids, hunting for a non-binary one
//! that passes the closed-basis sufficiency check while still having a
//! non-closed circuit. No such matroid is known; every run records what it
//! scanned so a hit would be reproducible.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use tropbas::catalog::{p7_available, CatalogEntry};
use tropbas::gf::{matroid_from_gf_matrix, GfMatrix};
use tropbas::scan::ScanOpts;
use tropbas::tropical;
use tropbas::{Error, Matroid};

use crate::report::yes_no;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Gf2,
    Gf3,
    Catalog,
}

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::Gf2 => "gf2",
            Family::Gf3 => "gf3",
            Family::Catalog => "catalog",
        }
    }
}

/// One examined matroid, with the three predicate ingredients and the
/// uniqueness verdict for context.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub name: String,
    pub n: u32,
    pub rank: u32,
    pub circuit_count: usize,
    pub is_binary: bool,
    pub sufficient_condition_holds: bool,
    pub all_circuits_closed: bool,
    pub unique_minimal_basis: bool,
}

impl Candidate {
    /// The search target: non-binary, sufficiency holds, yet some circuit
    /// is not closed.
    fn matches(&self) -> bool {
        !self.is_binary && self.sufficient_condition_holds && !self.all_circuits_closed
    }

    /// Close but no cigar: non-binary with the sufficiency check passing
    /// only because every circuit is closed.
    fn near_miss(&self) -> bool {
        !self.is_binary && self.sufficient_condition_holds && self.all_circuits_closed
    }
}

/// A full-predicate hit, dumped with its circuits for reproduction.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct MatchedInstance {
    pub name: String,
    pub n: u32,
    pub circuits: Vec<Vec<u32>>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ExploreReport {
    pub family: String,
    pub seed: u64,
    pub n_max: u32,
    /// Simple matroids analyzed.
    pub examined: usize,
    /// Instances matching the full predicate (expected 0).
    pub found: usize,
    /// Non-binary instances where sufficiency holds trivially — every
    /// circuit closed.
    pub near_misses: Vec<String>,
    pub matches: Vec<MatchedInstance>,
    pub candidates: Vec<Candidate>,
}

/// Distinct nonzero columns over GF(p), normalized so the first nonzero
/// entry is 1 — distinct normalized columns mean no loops and no parallel
/// elements, so the column matroid is simple by construction.
fn random_simple_matrix(rng: &mut ChaCha8Rng, p: u64, rows: usize, n: usize) -> GfMatrix {
    let mut pool: Vec<Vec<i64>> = Vec::new();
    let mut column = vec![0i64; rows];
    loop {
        // enumerate all columns in odometer order
        let mut i = 0;
        loop {
            if i == rows {
                break;
            }
            column[i] += 1;
            if column[i] < p as i64 {
                break;
            }
            column[i] = 0;
            i += 1;
        }
        if i == rows {
            break;
        }
        if column.iter().all(|&e| e == 0) {
            continue;
        }
        let first_nonzero = column.iter().find(|&&e| e != 0).copied().unwrap();
        if first_nonzero == 1 {
            pool.push(column.clone());
        }
    }
    pool.shuffle(rng);
    pool.truncate(n);
    let mut entries = Vec::with_capacity(rows * n);
    for r in 0..rows {
        for col in &pool {
            entries.push(col[r]);
        }
    }
    GfMatrix::new(p, rows, n, &entries).expect("prime modulus and in-range size")
}

fn examine(name: String, m: &Matroid, opts: ScanOpts) -> Result<Candidate, Error> {
    let uniqueness = tropical::has_unique_minimal_basis(m, opts)?;
    let sufficiency = tropical::closed_basis_sufficiency(m)?;
    let all_closed = m.circuits().iter().all(|&c| m.is_closed(c));
    Ok(Candidate {
        name,
        n: m.n(),
        rank: m.rank(m.full_set()),
        circuit_count: m.circuits().len(),
        is_binary: m.is_binary(opts)?,
        sufficient_condition_holds: sufficiency.holds,
        all_circuits_closed: all_closed,
        unique_minimal_basis: uniqueness.unique,
    })
}

pub fn explore(
    family: Family,
    n_max: u32,
    count: usize,
    seed: u64,
    opts: ScanOpts,
) -> Result<ExploreReport, Error> {
    opts.check("exploration", n_max)?;
    let mut candidates = Vec::new();
    let mut matches = Vec::new();
    match family {
        Family::Gf2 | Family::Gf3 => {
            let p: u64 = if family == Family::Gf2 { 2 } else { 3 };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for trial in 0..count {
                let n = rng.gen_range(3..=n_max as usize);
                // Enough rows for n distinct normalized columns to exist.
                let min_rows = (2usize..)
                    .find(|&r| (p.pow(r as u32) - 1) / (p - 1) >= n as u64)
                    .unwrap();
                let rows = rng.gen_range(min_rows..=(min_rows + 2).min(n.max(min_rows)));
                let matrix = random_simple_matrix(&mut rng, p, rows, n);
                let m = matroid_from_gf_matrix(&matrix)?;
                let candidate =
                    examine(format!("gf{p} trial {trial} ({rows}x{n})"), &m, opts)?;
                if candidate.matches() {
                    matches.push(matched(&candidate.name, &m));
                }
                candidates.push(candidate);
            }
        }
        Family::Catalog => {
            for entry in catalog_candidates(n_max) {
                let m = entry.build()?;
                let candidate = examine(entry.name(), &m, opts)?;
                if candidate.matches() {
                    matches.push(matched(&candidate.name, &m));
                }
                candidates.push(candidate);
            }
        }
    }
    let near_misses: Vec<String> = candidates
        .iter()
        .filter(|c| c.near_miss())
        .map(|c| c.name.clone())
        .collect();
    Ok(ExploreReport {
        family: family.name().into(),
        seed,
        n_max,
        examined: candidates.len(),
        found: matches.len(),
        near_misses,
        matches,
        candidates,
    })
}

fn matched(name: &str, m: &Matroid) -> MatchedInstance {
    MatchedInstance {
        name: name.to_string(),
        n: m.n(),
        circuits: crate::report::family(m.circuits()),
    }
}

/// The built-in entries with at most `n_max` elements, in a fixed order.
fn catalog_candidates(n_max: u32) -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    if n_max >= 7 {
        out.push(CatalogEntry::Fano);
        out.push(CatalogEntry::NonFano);
        if p7_available().is_some() {
            out.push(CatalogEntry::P7);
        }
    }
    for size in 3..=n_max.min(9) {
        for rank in 2..size {
            out.push(CatalogEntry::Uniform { rank, size });
        }
    }
    for points in 3..=n_max / 2 {
        out.push(CatalogEntry::DoubledLineDual { points });
    }
    out
}

impl ExploreReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "explored {} candidates (family {}, n_max {}, seed {})\n",
            self.examined, self.family, self.n_max, self.seed
        ));
        for c in &self.candidates {
            out.push_str(&format!(
                "  {}: n={} rank={} circuits={} binary={} sufficiency={} all_closed={} unique_basis={}\n",
                c.name,
                c.n,
                c.rank,
                c.circuit_count,
                yes_no(c.is_binary),
                yes_no(c.sufficient_condition_holds),
                yes_no(c.all_circuits_closed),
                yes_no(c.unique_minimal_basis)
            ));
        }
        if self.near_misses.is_empty() {
            out.push_str("near misses (non-binary, sufficiency holds, all circuits closed): none\n");
        } else {
            out.push_str(&format!(
                "near misses (non-binary, sufficiency holds, all circuits closed): {}\n",
                self.near_misses.join(", ")
            ));
        }
        out.push_str(&format!(
            "matches (non-binary, sufficiency holds, some circuit not closed): {}\n",
            self.found
        ));
        for m in &self.matches {
            out.push_str(&format!("  {} on {} elements:\n", m.name, m.n));
            for c in &m.circuits {
                let parts: Vec<String> = c.iter().map(|e| e.to_string()).collect();
                out.push_str(&format!("    {}\n", parts.join(" ")));
            }
        }
        out
    }
}
