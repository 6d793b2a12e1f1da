use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::word::Word;

/// A dense matrix over GF(2), stored as one [`Word`] per row.
///
/// Columns are 1-based (they are word coordinates); rows are plain 0-based
/// container indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryMatrix {
    cols: u32,
    rows: Vec<Word>,
}

impl BinaryMatrix {
    /// Builds a matrix from rows of equal length.
    pub fn from_rows(rows: Vec<Word>) -> Result<Self> {
        let Some(first) = rows.first() else {
            return Err(Error::EmptyMatrix);
        };
        let cols = first.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::RaggedMatrix { row: i, expected: cols, got: row.len() });
            }
        }
        Ok(BinaryMatrix { cols, rows })
    }

    /// Builds a matrix from 0/1 strings, one row per string.
    pub fn from_bit_rows(rows: &[&str]) -> Result<Self> {
        let rows = rows.iter().map(|s| Word::from_bit_str(s)).collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    #[must_use]
    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    #[must_use]
    pub fn cols(&self) -> u32 {
        self.cols
    }

    #[must_use]
    pub fn row(&self, r: usize) -> &Word {
        &self.rows[r]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &Word> {
        self.rows.iter()
    }

    /// The entry at row `r` (0-based), column `c` (1-based).
    #[must_use]
    pub fn get(&self, r: usize, c: u32) -> bool {
        self.rows[r].get(c)
    }

    /// The column `c` read as a word of length `rows()` (bit `r + 1` is the
    /// entry of row `r`).
    #[must_use]
    pub fn column(&self, c: u32) -> Word {
        let mut w = Word::zero(self.rows.len() as u32);
        for (r, row) in self.rows.iter().enumerate() {
            if row.get(c) {
                w.set(r as u32 + 1, true);
            }
        }
        w
    }

    /// `M * w^T`: one parity bit per row. Panics if `w.len() != cols`.
    #[must_use]
    pub fn mul_vec(&self, w: &Word) -> Word {
        let mut out = Word::zero(self.rows.len() as u32);
        for (r, row) in self.rows.iter().enumerate() {
            if row.dot(w) {
                out.set(r as u32 + 1, true);
            }
        }
        out
    }

    /// Reduced row echelon form with zero rows dropped.
    ///
    /// Returns the reduced matrix and its pivot columns (1-based, ascending).
    /// The reduced matrix is the canonical basis of the row space: two
    /// matrices with the same row space reduce identically.
    #[must_use]
    pub fn rref(&self) -> (BinaryMatrix, Vec<u32>) {
        let mut rows = self.rows.clone();
        let mut pivots = Vec::new();
        let mut rank = 0usize;
        for col in 1..=self.cols {
            let Some(pivot) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
                continue;
            };
            rows.swap(rank, pivot);
            let pivot_row = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && row.get(col) {
                    *row ^= &pivot_row;
                }
            }
            pivots.push(col);
            rank += 1;
        }
        rows.truncate(rank);
        (BinaryMatrix { cols: self.cols, rows }, pivots)
    }

    #[must_use]
    pub fn rank(&self) -> u32 {
        self.rref().1.len() as u32
    }

    /// A basis of `{x : M x^T = 0}`, one word per free column of the RREF.
    ///
    /// Each basis word has a 1 at its free column and at the pivot columns
    /// whose rows have a 1 in that free column; the basis is empty exactly
    /// when the matrix has full column rank.
    #[must_use]
    pub fn null_space_basis(&self) -> Vec<Word> {
        let (red, pivots) = self.rref();
        null_space_of_rref(&red, &pivots)
    }
}

/// Null-space basis computed from an already-reduced matrix; see
/// [`BinaryMatrix::null_space_basis`].
pub(crate) fn null_space_of_rref(red: &BinaryMatrix, pivots: &[u32]) -> Vec<Word> {
    let n = red.cols();
    let mut is_pivot = alloc::vec![false; n as usize + 1];
    for &p in pivots {
        is_pivot[p as usize] = true;
    }
    let mut basis = Vec::with_capacity(n as usize - pivots.len());
    for free in 1..=n {
        if is_pivot[free as usize] {
            continue;
        }
        let mut v = Word::basis(n, free);
        for (r, &p) in pivots.iter().enumerate() {
            if red.get(r, free) {
                v.set(p, true);
            }
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn ragged_rows_rejected() {
        let rows = vec![Word::zero(3), Word::zero(4)];
        assert_eq!(
            BinaryMatrix::from_rows(rows),
            Err(Error::RaggedMatrix { row: 1, expected: 3, got: 4 })
        );
        assert_eq!(BinaryMatrix::from_rows(vec![]), Err(Error::EmptyMatrix));
    }

    #[test]
    fn rref_is_canonical_for_row_space() {
        let a = BinaryMatrix::from_bit_rows(&["1010", "0110"]).unwrap();
        // Same row space, different presentation (second row replaced by sum).
        let b = BinaryMatrix::from_bit_rows(&["1100", "0110", "1010"]).unwrap();
        assert_eq!(a.rref(), b.rref());
        assert_eq!(a.rank(), 2);
        assert_eq!(b.rank(), 2);
    }

    #[test]
    fn rref_drops_zero_rows_and_orders_pivots() {
        let m = BinaryMatrix::from_bit_rows(&["0000", "0110", "0110"]).unwrap();
        let (red, pivots) = m.rref();
        assert_eq!(red.rows(), 1);
        assert_eq!(pivots, [2]);
        assert_eq!(red.row(0).to_bit_string(), "0110");
    }

    #[test]
    fn null_space_is_orthogonal_complement() {
        let m = BinaryMatrix::from_bit_rows(&["10110", "01011"]).unwrap();
        let basis = m.null_space_basis();
        assert_eq!(basis.len(), 3);
        for v in &basis {
            assert!(m.mul_vec(v).is_zero());
        }
        // Basis words are linearly independent: each has a private free column.
        let (_, pivots) = m.rref();
        for v in &basis {
            assert!(v.support().filter(|c| !pivots.contains(c)).count() == 1);
        }
    }

    #[test]
    fn mul_vec_extracts_columns_on_basis_words() {
        let m = BinaryMatrix::from_bit_rows(&["101", "011"]).unwrap();
        assert_eq!(m.mul_vec(&Word::basis(3, 1)).to_bit_string(), "10");
        assert_eq!(m.mul_vec(&Word::basis(3, 2)).to_bit_string(), "01");
        assert_eq!(m.mul_vec(&Word::basis(3, 3)).to_bit_string(), "11");
        assert_eq!(m.column(3).to_bit_string(), "11");
    }
}
