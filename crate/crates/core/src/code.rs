use core::sync::atomic::{AtomicU32, Ordering};

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::{null_space_of_rref, BinaryMatrix};
use crate::word::Word;

/// Largest dimension for which full codeword enumeration is permitted.
pub const MAX_ENUMERATION_DIMENSION: u32 = 30;

/// A binary linear `[n, k]` code, presented by a parity-check matrix.
///
/// Construction reduces the given matrix to reduced row echelon form, so the
/// stored parity-check matrix is full rank and canonical for the row space:
/// any two presentations of the same code yield byte-identical syndromes.
pub struct LinearCode {
    n: u32,
    parity_check: BinaryMatrix,
    pivot_columns: Vec<u32>,
    generator: BinaryMatrix,
    d_cache: AtomicU32,
}

impl LinearCode {
    /// Builds the code `{x : H x^T = 0}` from a parity-check matrix `H`.
    ///
    /// Fails with [`Error::ZeroRank`] if `H` has no nonzero rows (the code
    /// would be the whole space) and with [`Error::ZeroDimension`] if `H` has
    /// full column rank (the code would be `{0}`).
    pub fn from_parity_check(h: &BinaryMatrix) -> Result<Self> {
        let (reduced, pivots) = h.rref();
        if pivots.is_empty() {
            return Err(Error::ZeroRank);
        }
        if pivots.len() == h.cols() as usize {
            return Err(Error::ZeroDimension);
        }
        let generator = BinaryMatrix::from_rows(null_space_of_rref(&reduced, &pivots))
            .expect("k >= 1 rows");
        Ok(LinearCode {
            n: h.cols(),
            parity_check: reduced,
            pivot_columns: pivots,
            generator,
            d_cache: AtomicU32::new(0),
        })
    }

    /// Convenience: parse 0/1 strings as parity-check rows.
    pub fn from_parity_check_strs(rows: &[&str]) -> Result<Self> {
        Self::from_parity_check(&BinaryMatrix::from_bit_rows(rows)?)
    }

    /// Block length `n`.
    #[must_use]
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Dimension `k`.
    #[must_use]
    pub fn k(&self) -> u32 {
        self.n - self.pivot_columns.len() as u32
    }

    /// Redundancy `n - k`, the number of parity-check rows.
    #[must_use]
    pub fn redundancy(&self) -> u32 {
        self.pivot_columns.len() as u32
    }

    /// The reduced, full-rank parity-check matrix.
    #[must_use]
    pub fn parity_check(&self) -> &BinaryMatrix {
        &self.parity_check
    }

    /// Pivot columns of the reduced parity-check matrix (1-based, ascending).
    ///
    /// Flipping these coordinates reaches every syndrome: they index a
    /// transversal of the coset space.
    #[must_use]
    pub fn pivot_columns(&self) -> &[u32] {
        &self.pivot_columns
    }

    /// A generator matrix whose `k` rows are a null-space basis of the
    /// parity-check matrix.
    #[must_use]
    pub fn generator(&self) -> &BinaryMatrix {
        &self.generator
    }

    /// `S(y) = H y^T` against the reduced parity-check matrix.
    #[must_use]
    pub fn syndrome(&self, y: &Word) -> Word {
        self.parity_check.mul_vec(y)
    }

    /// Whether `y` lies in the code.
    #[must_use]
    pub fn is_codeword(&self, y: &Word) -> bool {
        self.syndrome(y).is_zero()
    }

    /// Iterates all `2^k` codewords (Gray-code order, starting at zero).
    ///
    /// Fails with [`Error::EnumerationGuard`] when `k` exceeds
    /// [`MAX_ENUMERATION_DIMENSION`].
    pub fn codewords(&self) -> Result<Codewords<'_>> {
        let k = self.k();
        if k > MAX_ENUMERATION_DIMENSION {
            return Err(Error::EnumerationGuard { k, max: MAX_ENUMERATION_DIMENSION });
        }
        Ok(Codewords {
            generator: &self.generator,
            state: Word::zero(self.n),
            index: 0,
            total: 1u64 << k,
        })
    }

    /// Minimum distance `d`, by codeword enumeration (cached after the first
    /// call). Same guard as [`LinearCode::codewords`].
    pub fn min_distance(&self) -> Result<u32> {
        let cached = self.d_cache.load(Ordering::Relaxed);
        if cached != 0 {
            return Ok(cached);
        }
        let d = self
            .codewords()?
            .filter(|c| !c.is_zero())
            .map(|c| c.weight())
            .min()
            .expect("k >= 1 gives a nonzero codeword");
        self.d_cache.store(d, Ordering::Relaxed);
        Ok(d)
    }

    /// Error-correction capacity `t = floor((d - 1) / 2)`.
    pub fn error_capacity(&self) -> Result<u32> {
        Ok((self.min_distance()? - 1) / 2)
    }
}

impl Clone for LinearCode {
    fn clone(&self) -> Self {
        LinearCode {
            n: self.n,
            parity_check: self.parity_check.clone(),
            pivot_columns: self.pivot_columns.clone(),
            generator: self.generator.clone(),
            d_cache: AtomicU32::new(self.d_cache.load(Ordering::Relaxed)),
        }
    }
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        // The reduced parity-check matrix is canonical for the code.
        self.n == other.n && self.parity_check == other.parity_check
    }
}

impl Eq for LinearCode {}

impl core::fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("LinearCode")
            .field("n", &self.n)
            .field("k", &self.k())
            .field("parity_check", &self.parity_check)
            .finish()
    }
}

/// Iterator over all codewords; see [`LinearCode::codewords`].
#[derive(Debug)]
pub struct Codewords<'a> {
    generator: &'a BinaryMatrix,
    state: Word,
    index: u64,
    total: u64,
}

impl Iterator for Codewords<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.index == self.total {
            return None;
        }
        if self.index > 0 {
            // Gray-code step: gray(i) and gray(i-1) differ exactly in bit
            // trailing_zeros(i), so one row XOR advances the codeword.
            let row = self.index.trailing_zeros() as usize;
            self.state ^= self.generator.row(row);
        }
        self.index += 1;
        Some(self.state.clone())
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.total - self.index) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for Codewords<'_> {}
