//! End-to-end acceptance checks, one numbered criterion per test, each
//! printing a single `[NN] PASS` / `[NN] FAIL` / `[NN] SKIPPED` line (visible
//! with `--nocapture`).
//!
//! Run with: `cargo test --test acceptance -- --nocapture --test-threads 1`

use std::collections::BTreeSet;
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use tropbas::catalog::{p7_available, CatalogEntry};
use tropbas::gf::{matroid_from_gf_matrix, GfMatrix};
use tropbas::oracle;
use tropbas::tropical::{
    basis_swap, closed_basis_sufficiency, closed_circuits, enumerate_minimal_tropical_bases,
    build_witness_hypergraph, has_unique_minimal_basis, is_tropical_basis, min_orthogonal_sets,
    BasisTestMethod,
};
use tropbas::{ElementSubset, Matroid, ScanOpts};

/// Deterministic pseudo-random stream for the seeded sweeps.
struct SplitMix64(u64);

impl SplitMix64 {
    fn new(seed: u64) -> Self {
        Self(seed)
    }

    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

fn opts() -> ScanOpts {
    ScanOpts::default()
}

/// The suite of named test matroids shared by the cross-cutting criteria.
fn suite() -> Vec<(&'static str, Matroid)> {
    [
        "uniform:2,3",
        "uniform:2,4",
        "uniform:2,5",
        "uniform:3,4",
        "uniform:3,5",
        "uniform:4,5",
        "uniform:3,6",
        "uniform:5,5",
        "fano",
        "nonfano",
        "doubled_line_dual:3",
        "doubled_line_dual:4",
        "graphic:1-2,1-3,1-4,2-3,2-4,3-4",
        "graphic:1-2,1-3,2-3,2-4,3-4",
    ]
    .into_iter()
    .map(|spec| {
        let m = CatalogEntry::parse(spec).unwrap().build().unwrap();
        (spec, m)
    })
    .collect()
}

/// Runs `body`, prints exactly one status line for the criterion, and
/// re-raises any failure so the harness still reports it.
fn criterion<F>(number: u32, label: &str, body: F)
where
    F: FnOnce() -> String,
{
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(detail) => println!("[{number:2}] PASS  {label}: {detail}"),
        Err(payload) => {
            let why = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            println!("[{number:2}] FAIL  {label}: {why}");
            resume_unwind(payload);
        }
    }
}

fn assert_within(elapsed: Duration, limit: Duration, what: &str) {
    assert!(
        elapsed <= limit,
        "{what} took {elapsed:?}, over the {limit:?} budget"
    );
}

fn build(spec: &str) -> Matroid {
    CatalogEntry::parse(spec).unwrap().build().unwrap()
}

fn rendered(family: &[ElementSubset]) -> Vec<String> {
    family.iter().map(|c| c.to_string()).collect()
}

#[test]
fn criterion_01_four_point_line() {
    criterion(1, "four-point line", || {
        let started = Instant::now();
        let m = build("uniform:2,4");
        let bases = enumerate_minimal_tropical_bases(&m, 10_000, opts()).unwrap();
        assert!(!bases.truncated);
        assert_eq!(bases.bases.len(), 4, "expected exactly 4 minimal bases");
        for basis in &bases.bases {
            assert_eq!(basis.len(), 3, "every minimal basis has 3 members");
        }
        assert!(!has_unique_minimal_basis(&m, opts()).unwrap().unique);

        // Independent route: minimal transversals of the reduced witness
        // hypergraph, via the naive reference implementation.
        let h = build_witness_hypergraph(&m, opts()).unwrap();
        let edge_masks: Vec<u64> = h
            .reduced()
            .iter()
            .map(|e| e.witness.iter().fold(0u64, |acc, &v| acc | 1 << v))
            .collect();
        let oracle_h = oracle::Hypergraph::new(m.circuits().len() as u32, edge_masks).unwrap();
        let transversals: BTreeSet<u64> =
            oracle::minimal_transversals(&oracle_h).unwrap().into_iter().collect();
        let enumerated: BTreeSet<u64> = bases
            .bases
            .iter()
            .map(|basis| {
                basis
                    .iter()
                    .map(|c| m.circuits().iter().position(|x| x == c).unwrap())
                    .fold(0u64, |acc, i| acc | 1 << i)
            })
            .collect();
        assert_eq!(enumerated, transversals, "enumeration disagrees with the oracle");
        let elapsed = started.elapsed();
        assert_within(elapsed, Duration::from_secs(1), "four-point line");
        format!("4 bases of size 3, not unique, oracle agrees ({elapsed:?})")
    });
}

#[test]
fn criterion_02_fano() {
    criterion(2, "Fano plane", || {
        let started = Instant::now();
        let m = build("fano");
        let lines: Vec<ElementSubset> = [
            [1, 2, 3],
            [1, 4, 5],
            [1, 6, 7],
            [2, 4, 6],
            [2, 5, 7],
            [3, 4, 7],
            [3, 5, 6],
        ]
        .into_iter()
        .map(|c| ElementSubset::from_elements(c).unwrap())
        .collect();
        let unique = has_unique_minimal_basis(&m, opts()).unwrap();
        assert!(unique.unique, "Fano must have a unique minimal basis");
        assert_eq!(unique.basis.as_deref(), Some(&lines[..]), "basis must be the 7 lines");
        assert!(closed_basis_sufficiency(&m).unwrap().holds, "sufficiency check");
        // Independent route: the enumeration agrees.
        let bases = enumerate_minimal_tropical_bases(&m, 10_000, opts()).unwrap();
        assert_eq!(bases.bases, vec![lines.clone()]);
        let elapsed = started.elapsed();
        assert_within(elapsed, Duration::from_secs(1), "Fano");
        format!("unique basis = the 7 three-point lines ({elapsed:?})")
    });
}

#[test]
fn criterion_03_binary_sweep() {
    criterion(3, "binary sweep", || {
        let started = Instant::now();
        let mut rng = SplitMix64::new(0xacce_5503);
        let mut checked = 0;
        while checked < 50 {
            let n = 3 + rng.below(8) as usize; // 3..=10
            let min_rows = (2usize..).find(|&r| (1 << r) > n).unwrap();
            let rows = min_rows + rng.below(2) as usize;
            let max_cols = (1usize << rows) - 1;
            // Fisher-Yates over the nonzero columns, keep the first n:
            // distinct nonzero columns make the matroid simple.
            let mut pool: Vec<u64> = (1..=max_cols as u64).collect();
            for i in (1..pool.len()).rev() {
                pool.swap(i, rng.below(i as u64 + 1) as usize);
            }
            let mut entries = vec![0i64; rows * n];
            for (col, &v) in pool[..n].iter().enumerate() {
                for row in 0..rows {
                    entries[row * n + col] = (v >> row & 1) as i64;
                }
            }
            let matrix = GfMatrix::new(2, rows, n, &entries).unwrap();
            let m = matroid_from_gf_matrix(&matrix).unwrap();
            assert!(m.is_simple());
            assert!(
                has_unique_minimal_basis(&m, opts()).unwrap().unique,
                "trial {checked} ({rows}x{n}) lacks a unique minimal basis"
            );
            let bases = enumerate_minimal_tropical_bases(&m, 10_000, opts()).unwrap();
            assert_eq!(
                bases.bases.len(),
                1,
                "trial {checked} ({rows}x{n}) enumerates {} bases",
                bases.bases.len()
            );
            checked += 1;
        }
        let elapsed = started.elapsed();
        assert_within(elapsed, Duration::from_secs(60), "binary sweep");
        format!("50 random simple GF(2) matroids, all unique ({elapsed:?})")
    });
}

#[test]
fn criterion_04_doubled_line_duals() {
    criterion(4, "doubled-line duals", || {
        let started = Instant::now();
        for points in [3u32, 4, 5] {
            let m = build(&format!("doubled_line_dual:{points}"));
            let full = m.full_set();
            let mut expected: Vec<ElementSubset> = (0..points)
                .map(|i| full.without(2 * i + 1).without(2 * i + 2))
                .collect();
            expected.sort();
            let bases = enumerate_minimal_tropical_bases(&m, 10_000, opts()).unwrap();
            assert_eq!(
                bases.bases,
                vec![expected.clone()],
                "doubled_line_dual:{points} basis mismatch"
            );
            for &c in &expected {
                assert!(m.is_closed(c), "doubled_line_dual:{points}: {c} is not closed");
            }
            if points >= 4 {
                assert!(
                    !m.is_binary(opts()).unwrap(),
                    "doubled_line_dual:{points} must not be binary"
                );
            }
        }
        let elapsed = started.elapsed();
        assert_within(elapsed, Duration::from_secs(5), "doubled-line duals");
        format!("3,4,5 points: unique basis = the pair complements, all closed; 4,5 non-binary ({elapsed:?})")
    });
}

#[test]
fn criterion_05_method_equivalence() {
    criterion(5, "basis-test equivalence", || {
        let mut exhaustive = 0u64;
        let mut sampled = 0u64;
        for (name, m) in suite() {
            let k = m.circuits().len();
            let check = |fam: u64| {
                let members: Vec<ElementSubset> = (0..k)
                    .filter(|i| fam >> i & 1 == 1)
                    .map(|i| m.circuits()[i])
                    .collect();
                let def = is_tropical_basis(&m, &members, BasisTestMethod::Definitional, opts())
                    .unwrap();
                let orth = is_tropical_basis(&m, &members, BasisTestMethod::Orthogonality, opts())
                    .unwrap();
                assert_eq!(def, orth, "{name}: methods disagree on subfamily {fam:b}");
            };
            if k <= 12 {
                for fam in 0..(1u64 << k) {
                    check(fam);
                    exhaustive += 1;
                }
            } else {
                let mut rng = SplitMix64::new(0xacce_5505);
                for _ in 0..200 {
                    check(rng.below(1u64 << k));
                    sampled += 1;
                }
            }
        }
        format!("{exhaustive} exhaustive + {sampled} sampled subfamilies, zero disagreements")
    });
}

#[test]
fn criterion_06_closed_circuit_forcing() {
    criterion(6, "closed-circuit forcing", || {
        let mut matroids = 0;
        for (name, m) in suite() {
            if m.n() > 9 {
                continue;
            }
            let closed = closed_circuits(&m);
            let bases = enumerate_minimal_tropical_bases(&m, 10_000, opts()).unwrap();
            assert!(!bases.truncated, "{name}: enumeration truncated");
            for basis in &bases.bases {
                for &c in &closed {
                    assert!(
                        basis.contains(&c),
                        "{name}: closed circuit {c} missing from a minimal basis"
                    );
                }
            }
            // The intersection of all minimal bases is exactly the closed
            // circuits: nothing else is forced.
            let mut intersection: Vec<ElementSubset> = bases.bases[0].clone();
            for basis in &bases.bases[1..] {
                intersection.retain(|c| basis.contains(c));
            }
            assert_eq!(intersection, closed, "{name}: forced members differ from closed circuits");
            matroids += 1;
        }
        format!("{matroids} matroids, intersection of bases = closed circuits")
    });
}

#[test]
fn criterion_07_swap_suite() {
    criterion(7, "basis swap", || {
        let mut swaps = 0;
        for (name, m) in suite() {
            let bases = enumerate_minimal_tropical_bases(&m, 10_000, opts()).unwrap();
            for basis in &bases.bases {
                for &c in basis.iter().filter(|&&c| !m.is_closed(c)) {
                    let swap = basis_swap(&m, basis, c, None)
                        .unwrap_or_else(|e| panic!("{name}: swap of {c} failed: {e}"));
                    assert!(!swap.family.contains(&c), "{name}: swap kept {c}");
                    let verdict = is_tropical_basis(
                        &m,
                        &swap.family,
                        BasisTestMethod::Definitional,
                        opts(),
                    )
                    .unwrap();
                    assert!(verdict.is_basis, "{name}: swapping {c} broke the basis");
                    swaps += 1;
                }
            }
        }
        format!("{swaps} swaps, all verified tropical bases excluding the removed circuit")
    });
}

#[test]
fn criterion_08_uniqueness_agreement() {
    criterion(8, "uniqueness agreement", || {
        let mut matroids = 0;
        for (name, m) in suite() {
            if m.n() > 9 {
                continue;
            }
            let unique = has_unique_minimal_basis(&m, opts()).unwrap().unique;
            let count = enumerate_minimal_tropical_bases(&m, 10_000, opts()).unwrap().bases.len();
            assert_eq!(
                unique,
                count == 1,
                "{name}: criterion says {unique}, enumeration found {count}"
            );
            matroids += 1;
        }
        format!("{matroids} matroids, criterion == (exactly one enumerated basis)")
    });
}

#[test]
fn criterion_09_cocircuit_recovery() {
    criterion(9, "cocircuit recovery", || {
        let mut families = 0;
        for (name, m) in suite() {
            let cocircuits = m.cocircuits(opts()).unwrap().circuits().to_vec();
            let mut verify = |family: &[ElementSubset], what: &str| {
                let recovered = min_orthogonal_sets(&m, family, opts()).unwrap();
                assert_eq!(
                    recovered,
                    cocircuits,
                    "{name}: {what} {:?} recovers the wrong cocircuits",
                    rendered(family)
                );
                families += 1;
            };
            // Every verified basis seen in the suites: the enumerated
            // minimal ones, every swap result, and the full family.
            let bases = enumerate_minimal_tropical_bases(&m, 10_000, opts()).unwrap();
            for basis in &bases.bases {
                verify(basis, "minimal basis");
                for &c in basis.iter().filter(|&&c| !m.is_closed(c)) {
                    let swap = basis_swap(&m, basis, c, None).unwrap();
                    verify(&swap.family, "swap result");
                }
            }
            verify(m.circuits(), "full family");
        }
        format!("{families} verified bases, every one recovers the cocircuits")
    });
}

#[test]
fn criterion_10_p7_conditional() {
    match p7_available() {
        None => println!("[10] SKIPPED  p7: no circuit data file present"),
        Some(path) => criterion(10, "p7", || {
            let started = Instant::now();
            let m = build("p7");
            assert_eq!(m.n(), 7);
            assert!(m.is_simple());
            assert!(has_unique_minimal_basis(&m, opts()).unwrap().unique);
            // Every non-closed set is certified by a three-point closed
            // circuit meeting it in exactly two elements.
            let closed_triples: Vec<ElementSubset> = closed_circuits(&m)
                .into_iter()
                .filter(|c| c.len() == 3)
                .collect();
            for mask in 0..=m.full_set().mask() {
                let x = ElementSubset::from_mask(mask);
                if m.is_closed(x) {
                    continue;
                }
                assert!(
                    closed_triples.iter().any(|&c| c.intersection(x).len() == 2),
                    "non-closed {x} misses every three-point closed circuit"
                );
            }
            let elapsed = started.elapsed();
            assert_within(elapsed, Duration::from_secs(5), "p7");
            format!("unique basis, three-point line certificates ({}, {elapsed:?})", path.display())
        }),
    }
}
