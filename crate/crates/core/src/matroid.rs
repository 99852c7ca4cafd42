//! Matroids given by their circuits: rank, closure, duality, binarity.

use std::sync::OnceLock;

use crate::circuits::CircuitFamily;
use crate::error::Result;
use crate::scan::{scan_collect, scan_find_first, ScanOpts};
use crate::subset::ElementSubset;

/// A matroid on `{1..n}`, presented by its circuit family.
///
/// Single queries (rank, closure) run greedily off the circuit list. Whole
/// subset-lattice scans build a memoized rank table first; those entry points
/// take [`ScanOpts`] and respect the scan caps.
pub struct Matroid {
    family: CircuitFamily,
    /// For each 0-based element, the indices of circuits containing it.
    through: Vec<Vec<u32>>,
    table: OnceLock<RankTable>,
}

impl Matroid {
    pub fn new(family: CircuitFamily) -> Self {
        let mut through = vec![Vec::new(); family.n() as usize];
        for (i, c) in family.circuits().iter().enumerate() {
            for e in c.iter() {
                through[(e - 1) as usize].push(i as u32);
            }
        }
        Self { family, through, table: OnceLock::new() }
    }

    pub fn n(&self) -> u32 {
        self.family.n()
    }

    pub fn full_set(&self) -> ElementSubset {
        ElementSubset::full(self.n())
    }

    pub fn family(&self) -> &CircuitFamily {
        &self.family
    }

    pub fn circuits(&self) -> &[ElementSubset] {
        self.family.circuits()
    }

    pub fn is_circuit(&self, c: ElementSubset) -> bool {
        self.family.contains(c)
    }

    /// Whether `x` contains no circuit.
    pub fn is_independent(&self, x: ElementSubset) -> bool {
        assert!(x.is_within(self.n()), "subset {x} leaves the ground set");
        if let Some(t) = self.table.get() {
            return t.rank(x) == x.len();
        }
        !self.circuits().iter().any(|c| c.is_subset_of(x))
    }

    /// Size of a largest circuit-free subset of `x`.
    ///
    /// Greedy insertion is exact here: independent sets of a matroid form its
    /// bases' downward closure, so local maximality implies global.
    pub fn rank(&self, x: ElementSubset) -> u32 {
        assert!(x.is_within(self.n()), "subset {x} leaves the ground set");
        if let Some(t) = self.table.get() {
            return t.rank(x);
        }
        let mut indep = ElementSubset::EMPTY;
        for e in x.iter() {
            let grown = indep.with(e);
            if !self.some_circuit_within(grown, e) {
                indep = grown;
            }
        }
        indep.len()
    }

    /// Whether some circuit through `e` lies inside `s` (with `e ∈ s`).
    fn some_circuit_within(&self, s: ElementSubset, e: u32) -> bool {
        self.through[(e - 1) as usize]
            .iter()
            .any(|&i| self.circuits()[i as usize].is_subset_of(s))
    }

    /// All elements whose addition leaves the rank of `x` unchanged.
    pub fn closure(&self, x: ElementSubset) -> ElementSubset {
        assert!(x.is_within(self.n()), "subset {x} leaves the ground set");
        if let Some(t) = self.table.get() {
            return t.closure(x);
        }
        let r = self.rank(x);
        let mut out = x;
        for e in x.complement(self.n()).iter() {
            if self.rank(x.with(e)) == r {
                out = out.with(e);
            }
        }
        out
    }

    pub fn is_closed(&self, x: ElementSubset) -> bool {
        self.closure(x) == x
    }

    /// A circuit with fewer than 3 elements, if any.
    pub fn simplicity_witness(&self) -> Option<ElementSubset> {
        self.circuits().iter().copied().find(|c| c.len() < 3)
    }

    /// No loops (1-circuits) and no parallel pairs (2-circuits).
    pub fn is_simple(&self) -> bool {
        self.simplicity_witness().is_none()
    }

    /// The memoized full rank table, building it on first use.
    pub fn rank_table(&self, opts: ScanOpts) -> Result<&RankTable> {
        if let Some(t) = self.table.get() {
            return Ok(t);
        }
        opts.check("subset-lattice scan", self.n())?;
        Ok(self.table.get_or_init(|| RankTable::build(&self.family)))
    }

    /// Complements of the hyperplanes, i.e. the circuits of the dual.
    pub fn cocircuits(&self, opts: ScanOpts) -> Result<CircuitFamily> {
        let t = self.rank_table(opts)?;
        let n = self.n();
        let r = t.rank(self.full_set());
        if r == 0 {
            return CircuitFamily::from_subsets(n, Vec::new());
        }
        let mut complements: Vec<ElementSubset> = scan_collect(n, opts, |mask| {
            let x = ElementSubset::from_mask(mask);
            (t.rank(x) == r - 1 && t.is_closed(x)).then(|| x.complement(n))
        });
        complements.sort();
        CircuitFamily::from_subsets(n, complements)
    }

    /// The dual matroid, built from the cocircuits.
    pub fn dual(&self, opts: ScanOpts) -> Result<Matroid> {
        Ok(Matroid::new(self.cocircuits(opts)?))
    }

    /// Whether the matroid is representable over the two-element field,
    /// decided by brute force: binary matroids are exactly those without a
    /// four-point-line minor, so scan all contractions for one.
    ///
    /// Contracting any set acts like contracting a maximal independent subset
    /// of it, so only independent contraction sets are scanned.
    pub fn is_binary(&self, opts: ScanOpts) -> Result<bool> {
        let t = self.rank_table(opts)?;
        let n = self.n();
        let full = self.full_set();
        let r = t.rank(full);
        if n < 4 || r < 2 {
            return Ok(true);
        }
        let hit = scan_find_first(n, opts, |mask| {
            let x = ElementSubset::from_mask(mask);
            let size = x.len();
            if size > r - 2 || t.rank(x) != size {
                return false;
            }
            let avail = x.complement(n);
            if avail.len() < 4 {
                return false;
            }
            has_four_point_line_minor(t, x, avail)
        });
        Ok(hit.is_none())
    }
}

/// Whether some 4 elements of `avail` form, after contracting `x`, four
/// pairwise non-parallel non-loops of rank 2 — a four-point line.
fn has_four_point_line_minor(t: &RankTable, x: ElementSubset, avail: ElementSubset) -> bool {
    let rx = t.rank(x);
    let minor_rank = |a: ElementSubset| t.rank(a | x) - rx;
    // Points of the would-be line must be rank-1 singletons.
    let mut pts = [0u32; 64];
    let mut k = 0;
    for e in avail.iter() {
        if minor_rank(ElementSubset::singleton(e)) == 1 {
            pts[k] = e;
            k += 1;
        }
    }
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                for d in c + 1..k {
                    let four = [pts[a], pts[b], pts[c], pts[d]];
                    let quad = four
                        .iter()
                        .fold(ElementSubset::EMPTY, |acc, &e| acc.with(e));
                    if minor_rank(quad) != 2 {
                        continue;
                    }
                    let pairs_ok = (0..4).all(|p| {
                        (p + 1..4).all(|q| {
                            minor_rank(ElementSubset::singleton(four[p]).with(four[q])) == 2
                        })
                    });
                    if pairs_ok {
                        return true;
                    }
                }
            }
        }
    }
    false
}

impl Clone for Matroid {
    fn clone(&self) -> Self {
        Matroid::new(self.family.clone())
    }
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family
    }
}

impl Eq for Matroid {}

impl std::fmt::Debug for Matroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Matroid")
            .field("n", &self.n())
            .field("circuits", &self.circuits())
            .finish()
    }
}

/// Ranks of every subset of `{1..n}`, as one flat table indexed by mask.
#[derive(Debug)]
pub struct RankTable {
    n: u32,
    rank: Vec<u8>,
}

impl RankTable {
    /// Subset dynamic program: a set is dependent when it is a circuit or has
    /// a dependent one-element deletion; its rank is then the best rank among
    /// those deletions, otherwise its size.
    fn build(family: &CircuitFamily) -> Self {
        let n = family.n();
        let size = 1usize << n;
        let mut rank = vec![0u8; size];
        let blocks = size.div_ceil(64);
        let mut dep = vec![0u64; blocks];
        let mut circ = vec![0u64; blocks];
        for c in family.circuits() {
            let m = c.mask() as usize;
            circ[m / 64] |= 1u64 << (m % 64);
        }
        for mask in 1..size {
            let mut best = 0u8;
            let mut is_dep = circ[mask / 64] >> (mask % 64) & 1 == 1;
            let mut bits = mask as u64;
            while bits != 0 {
                let low = bits & bits.wrapping_neg();
                bits ^= low;
                let sub = mask ^ low as usize;
                is_dep |= dep[sub / 64] >> (sub % 64) & 1 == 1;
                best = best.max(rank[sub]);
            }
            if is_dep {
                dep[mask / 64] |= 1u64 << (mask % 64);
                rank[mask] = best;
            } else {
                rank[mask] = (mask as u64).count_ones() as u8;
            }
        }
        Self { n, rank }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn rank_of_mask(&self, mask: u64) -> u32 {
        u32::from(self.rank[mask as usize])
    }

    pub fn rank(&self, x: ElementSubset) -> u32 {
        self.rank_of_mask(x.mask())
    }

    pub fn is_closed_mask(&self, mask: u64) -> bool {
        let r = self.rank[mask as usize];
        let mut rest = ElementSubset::full(self.n).mask() & !mask;
        while rest != 0 {
            let low = rest & rest.wrapping_neg();
            rest ^= low;
            if self.rank[(mask | low) as usize] == r {
                return false;
            }
        }
        true
    }

    pub fn is_closed(&self, x: ElementSubset) -> bool {
        self.is_closed_mask(x.mask())
    }

    pub fn closure_mask(&self, mask: u64) -> u64 {
        let r = self.rank[mask as usize];
        let mut out = mask;
        let mut rest = ElementSubset::full(self.n).mask() & !mask;
        while rest != 0 {
            let low = rest & rest.wrapping_neg();
            rest ^= low;
            if self.rank[(mask | low) as usize] == r {
                out |= low;
            }
        }
        out
    }

    pub fn closure(&self, x: ElementSubset) -> ElementSubset {
        ElementSubset::from_mask(self.closure_mask(x.mask()))
    }
}
