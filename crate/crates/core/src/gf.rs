//! Column matroids of matrices over prime fields.

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::oracle;
use crate::subset::MAX_GROUND_SIZE;

fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A matrix over GF(p), columns indexed 1-based as matroid elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GfMatrix {
    modulus: u64,
    rows: usize,
    cols: usize,
    /// Row-major, entries reduced into `0..modulus`.
    data: Vec<u64>,
}

impl GfMatrix {
    /// Builds a matrix from row-major entries; negative entries are reduced.
    pub fn new(modulus: u64, rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        if !is_prime(modulus) {
            return Err(Error::NonPrimeModulus { modulus });
        }
        if cols > MAX_GROUND_SIZE as usize {
            return Err(Error::GroundSetTooLarge { n: cols as u64 });
        }
        assert_eq!(entries.len(), rows * cols, "entry count must be rows * cols");
        let m = modulus as i64;
        let data = entries.iter().map(|&e| e.rem_euclid(m) as u64).collect();
        Ok(Self { modulus, rows, cols, data })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> u64 {
        self.data[row * self.cols + col]
    }

    /// Rank of the column set selected by `mask` (bit `j` picks column `j`),
    /// by Gaussian elimination over GF(p).
    pub fn rank_of_columns(&self, mask: u64) -> u32 {
        let p = self.modulus;
        let cols: Vec<usize> = (0..self.cols).filter(|&j| mask >> j & 1 == 1).collect();
        if cols.is_empty() || self.rows == 0 {
            return 0;
        }
        let mut m: Vec<Vec<u64>> = (0..self.rows)
            .map(|r| cols.iter().map(|&j| self.entry(r, j)).collect())
            .collect();
        let mut rank = 0usize;
        for col in 0..cols.len() {
            let Some(pivot) = (rank..self.rows).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, pivot);
            let inv = inv_mod(m[rank][col], p);
            let (top, below) = m.split_at_mut(rank + 1);
            let pivot_row = &top[rank];
            for row in below.iter_mut() {
                if row[col] == 0 {
                    continue;
                }
                let factor = row[col] * inv % p;
                for (c, cell) in row.iter_mut().enumerate().skip(col) {
                    *cell = (*cell + (p - factor) * pivot_row[c] % p) % p;
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank as u32
    }

    pub fn rank(&self) -> u32 {
        self.rank_of_columns(if self.cols == 64 { u64::MAX } else { (1u64 << self.cols) - 1 })
    }
}

/// `a^(p-2) mod p` — the inverse for prime `p` and `a != 0`.
fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a != 0 && a < p);
    let mut base = a;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// The matroid whose independent sets are the independent column sets.
pub fn matroid_from_gf_matrix(matrix: &GfMatrix) -> Result<Matroid> {
    let family = oracle::circuits_from_rank(|mask| matrix.rank_of_columns(mask), matrix.cols() as u32)?;
    Ok(Matroid::new(family))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subset::ElementSubset;

    #[test]
    fn rejects_composite_modulus() {
        assert!(matches!(
            GfMatrix::new(4, 1, 1, &[1]).unwrap_err(),
            Error::NonPrimeModulus { modulus: 4 }
        ));
        assert!(GfMatrix::new(2, 1, 1, &[1]).is_ok());
    }

    #[test]
    fn column_rank_over_gf2() {
        // Columns 1,2,3 with col3 = col1 + col2.
        let m = GfMatrix::new(2, 2, 3, &[1, 0, 1, 0, 1, 1]).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.rank_of_columns(0b001), 1);
        assert_eq!(m.rank_of_columns(0b011), 2);
        assert_eq!(m.rank_of_columns(0b111), 2);
        assert_eq!(m.rank_of_columns(0), 0);
    }

    #[test]
    fn negative_entries_are_reduced() {
        let m = GfMatrix::new(5, 1, 2, &[-1, 4]).unwrap();
        assert_eq!(m.entry(0, 0), 4);
        // Both columns are the same nonzero vector: rank 1.
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn matroid_of_a_dependent_triple() {
        let m = GfMatrix::new(2, 2, 3, &[1, 0, 1, 0, 1, 1]).unwrap();
        let matroid = matroid_from_gf_matrix(&m).unwrap();
        let rendered: Vec<String> =
            matroid.circuits().iter().map(|c| c.to_string()).collect();
        assert_eq!(rendered, ["{1,2,3}"]);
        assert_eq!(matroid.rank(ElementSubset::full(3)), 2);
    }

    #[test]
    fn gf3_distinguishes_signs() {
        // (1, 1) and (1, -1) are independent over GF(3) but equal over GF(2).
        let over3 = GfMatrix::new(3, 2, 2, &[1, 1, 1, -1]).unwrap();
        assert_eq!(over3.rank(), 2);
        let over2 = GfMatrix::new(2, 2, 2, &[1, 1, 1, 1]).unwrap();
        assert_eq!(over2.rank(), 1);
    }
}
