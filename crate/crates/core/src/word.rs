use alloc::string::String;
use core::fmt;
use core::ops::{Add, BitXor, BitXorAssign};

use smallvec::{smallvec, SmallVec};

use crate::error::{Error, Result};

const LIMB_BITS: u32 = 64;

/// A fixed-length vector over GF(2).
///
/// Coordinates are 1-based everywhere in the public API, matching the
/// `e_1, ..., e_n` convention of the underlying theory; bit `i` lives at
/// position `i - 1` of the packed limbs. Lengths up to 64 stay inline in a
/// single machine word; longer vectors spill to a heap-allocated limb array.
///
/// The derived `Ord`/`PartialOrd` is an arbitrary canonical order useful for
/// plain collections (`BTreeSet<Word>` and friends). The weight-compatible
/// term orders live in [`crate::order::WeightCompatibleOrder`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    len: u32,
    limbs: SmallVec<[u64; 1]>,
}

fn limb_count(len: u32) -> usize {
    len.div_ceil(LIMB_BITS) as usize
}

impl Word {
    /// The zero word of length `len`. Panics if `len == 0`.
    #[must_use]
    pub fn zero(len: u32) -> Self {
        assert!(len > 0, "words must have positive length");
        Word { len, limbs: smallvec![0; limb_count(len)] }
    }

    /// The standard basis word `e_coord` (1-based). Panics if out of range.
    #[must_use]
    pub fn basis(len: u32, coord: u32) -> Self {
        let mut w = Word::zero(len);
        w.set(coord, true);
        w
    }

    /// A word with ones exactly at the given 1-based coordinates.
    #[must_use]
    pub fn from_support(len: u32, support: &[u32]) -> Self {
        let mut w = Word::zero(len);
        for &i in support {
            w.set(i, true);
        }
        w
    }

    /// Parses a 0/1 string; the leftmost character is coordinate 1.
    pub fn from_bit_str(s: &str) -> Result<Self> {
        if s.is_empty() {
            return Err(Error::BitParse { position: 0 });
        }
        let mut w = Word::zero(s.len() as u32);
        for (idx, ch) in s.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => w.set(idx as u32 + 1, true),
                _ => return Err(Error::BitParse { position: idx }),
            }
        }
        Ok(w)
    }

    /// Builds a word of length `len <= 64` from packed bits
    /// (bit `i - 1` of `bits` is coordinate `i`).
    #[must_use]
    pub fn from_u64(len: u32, bits: u64) -> Self {
        assert!(len > 0 && len <= 64, "from_u64 requires 1 <= len <= 64");
        let mask = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        Word { len, limbs: smallvec![bits & mask] }
    }

    /// Builds a word directly from masked limbs (no garbage above `len`).
    pub(crate) fn from_limbs(len: u32, limbs: SmallVec<[u64; 1]>) -> Self {
        debug_assert_eq!(limbs.len(), limb_count(len));
        debug_assert!(
            len.is_multiple_of(LIMB_BITS) || limbs[limbs.len() - 1] >> (len % LIMB_BITS) == 0
        );
        Word { len, limbs }
    }

    /// Packs a word of length `<= 64` into a `u64`. Panics on longer words.
    #[must_use]
    pub fn to_u64(&self) -> u64 {
        assert!(self.len <= 64, "to_u64 requires len <= 64");
        self.limbs[0]
    }

    #[must_use]
    pub fn len(&self) -> u32 {
        self.len
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Hamming weight.
    #[must_use]
    pub fn weight(&self) -> u32 {
        self.limbs.iter().map(|l| l.count_ones()).sum()
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.limbs.iter().all(|&l| l == 0)
    }

    /// The bit at 1-based coordinate `coord`. Panics if out of range.
    #[must_use]
    pub fn get(&self, coord: u32) -> bool {
        assert!(coord >= 1 && coord <= self.len, "coordinate {coord} out of 1..={}", self.len);
        let bit = coord - 1;
        (self.limbs[(bit / LIMB_BITS) as usize] >> (bit % LIMB_BITS)) & 1 == 1
    }

    /// Sets the bit at 1-based coordinate `coord`.
    pub fn set(&mut self, coord: u32, value: bool) {
        assert!(coord >= 1 && coord <= self.len, "coordinate {coord} out of 1..={}", self.len);
        let bit = coord - 1;
        let limb = &mut self.limbs[(bit / LIMB_BITS) as usize];
        if value {
            *limb |= 1 << (bit % LIMB_BITS);
        } else {
            *limb &= !(1 << (bit % LIMB_BITS));
        }
    }

    /// Flips the bit at 1-based coordinate `coord`.
    pub fn flip(&mut self, coord: u32) {
        assert!(coord >= 1 && coord <= self.len, "coordinate {coord} out of 1..={}", self.len);
        let bit = coord - 1;
        self.limbs[(bit / LIMB_BITS) as usize] ^= 1 << (bit % LIMB_BITS);
    }

    /// `self + e_coord`: a copy with one coordinate flipped.
    #[must_use]
    pub fn with_flipped(&self, coord: u32) -> Self {
        let mut w = self.clone();
        w.flip(coord);
        w
    }

    /// Iterates the support (1-based coordinates of ones) in ascending order.
    pub fn support(&self) -> Support<'_> {
        Support { limbs: &self.limbs, index: 0, current: self.limbs[0] }
    }

    /// Hamming distance to another word of the same length. Panics on
    /// mismatched lengths.
    #[must_use]
    pub fn distance(&self, other: &Word) -> u32 {
        assert_eq!(self.len, other.len, "length mismatch in distance");
        self.limbs.iter().zip(&other.limbs).map(|(a, b)| (a ^ b).count_ones()).sum()
    }

    /// Inner product over GF(2) (parity of the AND). Panics on mismatched
    /// lengths.
    #[must_use]
    pub fn dot(&self, other: &Word) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        let ones: u32 = self.limbs.iter().zip(&other.limbs).map(|(a, b)| (a & b).count_ones()).sum();
        ones & 1 == 1
    }

    /// The packed limbs, least-significant coordinates first.
    #[must_use]
    pub fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    /// Renders as a 0/1 string, leftmost character = coordinate 1.
    #[must_use]
    pub fn to_bit_string(&self) -> String {
        let mut s = String::with_capacity(self.len as usize);
        for i in 1..=self.len {
            s.push(if self.get(i) { '1' } else { '0' });
        }
        s
    }
}

/// Iterator over a word's support; see [`Word::support`].
pub struct Support<'a> {
    limbs: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Support<'_> {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros();
                self.current &= self.current - 1;
                return Some(self.index as u32 * LIMB_BITS + bit + 1);
            }
            if self.index + 1 >= self.limbs.len() {
                return None;
            }
            self.index += 1;
            self.current = self.limbs[self.index];
        }
    }
}

impl BitXor for &Word {
    type Output = Word;

    /// Addition over GF(2). Panics on mismatched lengths.
    fn bitxor(self, rhs: &Word) -> Word {
        assert_eq!(self.len, rhs.len, "length mismatch in add");
        let limbs = self.limbs.iter().zip(&rhs.limbs).map(|(a, b)| a ^ b).collect();
        Word { len: self.len, limbs }
    }
}

impl BitXorAssign<&Word> for Word {
    fn bitxor_assign(&mut self, rhs: &Word) {
        assert_eq!(self.len, rhs.len, "length mismatch in add");
        for (a, b) in self.limbs.iter_mut().zip(&rhs.limbs) {
            *a ^= b;
        }
    }
}

impl Add for &Word {
    type Output = Word;

    /// Addition over GF(2), identical to `^`. Panics on mismatched lengths.
    #[allow(clippy::suspicious_arithmetic_impl)] // in GF(2), + is xor
    fn add(self, rhs: &Word) -> Word {
        self ^ rhs
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}
