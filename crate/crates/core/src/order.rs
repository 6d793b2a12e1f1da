use core::cmp::Ordering;

use smallvec::SmallVec;

use crate::word::Word;

/// How a weight tie between two words is resolved.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum TieBreak {
    /// Degree-reverse-lexicographic: at the smallest coordinate where the
    /// words differ, the word holding a 1 is the *smaller* one.
    #[default]
    DegRevLex,
    /// Lexicographic: at the smallest coordinate where the words differ, the
    /// word holding a 0 is the smaller one.
    Lex,
}

/// A total order on words of length `n` that sorts by Hamming weight first.
///
/// Weight compatibility (`wt(a) < wt(b)` implies `a < b`) is what makes the
/// order usable for coset-leader enumeration: the minimum of a coset under
/// any such order is a minimum-weight vector of the coset. The two tie-breaks
/// come from the monomial orders they mirror; [`TieBreak::DegRevLex`] is the
/// default used throughout.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct WeightCompatibleOrder {
    n: u32,
    tie_break: TieBreak,
}

impl WeightCompatibleOrder {
    #[must_use]
    pub fn new(n: u32, tie_break: TieBreak) -> Self {
        assert!(n > 0, "order needs a positive length");
        WeightCompatibleOrder { n, tie_break }
    }

    #[must_use]
    pub fn degrevlex(n: u32) -> Self {
        Self::new(n, TieBreak::DegRevLex)
    }

    #[must_use]
    pub fn lex(n: u32) -> Self {
        Self::new(n, TieBreak::Lex)
    }

    #[must_use]
    pub fn n(&self) -> u32 {
        self.n
    }

    #[must_use]
    pub fn tie_break(&self) -> TieBreak {
        self.tie_break
    }

    /// Recodes one limb so that plain integer comparison of coded limbs
    /// (first limb most significant) realises the tie-break.
    ///
    /// `reverse_bits` moves coordinate 1 to the most significant bit; the
    /// extra complement for DegRevLex makes a 1 at the first differing
    /// coordinate sort *low*. Garbage bits above `n` are zero in every word,
    /// so they code identically and never decide a comparison.
    fn code_limb(&self, limb: u64) -> u64 {
        match self.tie_break {
            TieBreak::DegRevLex => !limb.reverse_bits(),
            TieBreak::Lex => limb.reverse_bits(),
        }
    }

    fn decode_limb(&self, coded: u64) -> u64 {
        match self.tie_break {
            TieBreak::DegRevLex => (!coded).reverse_bits(),
            TieBreak::Lex => coded.reverse_bits(),
        }
    }

    /// Compares two words of length `n` under the order, without allocating.
    #[must_use]
    pub fn compare(&self, a: &Word, b: &Word) -> Ordering {
        debug_assert_eq!(a.len(), self.n);
        debug_assert_eq!(b.len(), self.n);
        a.weight().cmp(&b.weight()).then_with(|| {
            for (&la, &lb) in a.limbs().iter().zip(b.limbs()) {
                let ord = self.code_limb(la).cmp(&self.code_limb(lb));
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            Ordering::Equal
        })
    }

    /// The minimum of a nonempty iterator under the order.
    pub fn min_of<I: IntoIterator<Item = Word>>(&self, words: I) -> Option<Word> {
        words.into_iter().min_by(|a, b| self.compare(a, b))
    }

    /// Sorts a slice ascending under the order.
    pub fn sort(&self, words: &mut [Word]) {
        words.sort_by_cached_key(|w| self.sort_key(w));
    }

    /// A key whose derived `Ord` equals the order: `sort_key(a) <
    /// sort_key(b)` iff `a` precedes `b`. Suitable for `BTreeSet` frontiers.
    #[must_use]
    pub fn sort_key(&self, w: &Word) -> SortKey {
        debug_assert_eq!(w.len(), self.n);
        SortKey {
            weight: w.weight(),
            coded: w.limbs().iter().map(|&l| self.code_limb(l)).collect(),
        }
    }

    /// Inverse of [`WeightCompatibleOrder::sort_key`].
    #[must_use]
    pub fn word_of_key(&self, key: &SortKey) -> Word {
        let mut limbs: SmallVec<[u64; 1]> =
            key.coded.iter().map(|&l| self.decode_limb(l)).collect();
        // DegRevLex decoding resurrects garbage above n (complement of zero);
        // mask the last limb back down.
        let tail_bits = self.n % 64;
        if tail_bits != 0 {
            let last = limbs.len() - 1;
            limbs[last] &= (1u64 << tail_bits) - 1;
        }
        let w = Word::from_limbs(self.n, limbs);
        debug_assert_eq!(w.weight(), key.weight);
        w
    }
}

/// Comparison key produced by [`WeightCompatibleOrder::sort_key`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SortKey {
    weight: u32,
    coded: SmallVec<[u64; 1]>,
}

impl SortKey {
    #[must_use]
    pub fn weight(&self) -> u32 {
        self.weight
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn ranked(order: &WeightCompatibleOrder, bits: &[&str]) -> Vec<Word> {
        let mut words: Vec<Word> =
            bits.iter().map(|s| Word::from_bit_str(s).unwrap()).collect();
        order.sort(&mut words);
        words
    }

    #[test]
    fn degrevlex_chain_n3() {
        let order = WeightCompatibleOrder::degrevlex(3);
        let sorted = ranked(&order, &["011", "111", "010", "110", "000", "101", "001", "100"]);
        let expect = ["000", "100", "010", "001", "110", "101", "011", "111"];
        for (w, e) in sorted.iter().zip(expect) {
            assert_eq!(w.to_bit_string(), e);
        }
    }

    #[test]
    fn lex_chain_n3() {
        let order = WeightCompatibleOrder::lex(3);
        let sorted = ranked(&order, &["011", "111", "010", "110", "000", "101", "001", "100"]);
        let expect = ["000", "001", "010", "100", "011", "101", "110", "111"];
        for (w, e) in sorted.iter().zip(expect) {
            assert_eq!(w.to_bit_string(), e);
        }
    }

    #[test]
    fn key_order_matches_compare_exhaustively() {
        for tie in [TieBreak::DegRevLex, TieBreak::Lex] {
            let n = 6;
            let order = WeightCompatibleOrder::new(n, tie);
            let words: Vec<Word> = (0..1u64 << n).map(|b| Word::from_u64(n, b)).collect();
            for a in &words {
                for b in &words {
                    assert_eq!(
                        order.sort_key(a).cmp(&order.sort_key(b)),
                        order.compare(a, b),
                        "{a} vs {b} under {tie:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn weight_dominates() {
        let order = WeightCompatibleOrder::degrevlex(8);
        for a in 0..1u64 << 8 {
            for b in 0..1u64 << 8 {
                let (wa, wb) = (Word::from_u64(8, a), Word::from_u64(8, b));
                if wa.weight() < wb.weight() {
                    assert_eq!(order.compare(&wa, &wb), Ordering::Less);
                }
            }
        }
    }

    #[test]
    fn key_round_trips_across_limb_boundary() {
        for tie in [TieBreak::DegRevLex, TieBreak::Lex] {
            let order = WeightCompatibleOrder::new(130, tie);
            for w in [
                Word::zero(130),
                Word::basis(130, 1),
                Word::basis(130, 64),
                Word::basis(130, 65),
                Word::basis(130, 130),
                Word::from_support(130, &[1, 63, 64, 65, 128, 129, 130]),
            ] {
                assert_eq!(order.word_of_key(&order.sort_key(&w)), w);
            }
        }
    }

    #[test]
    fn multi_limb_tie_breaks() {
        let e1 = Word::basis(70, 1);
        let e65 = Word::basis(70, 65);
        // First differing coordinate is 1 in both conventions.
        let drl = WeightCompatibleOrder::degrevlex(70);
        assert_eq!(drl.compare(&e1, &e65), Ordering::Less);
        let lex = WeightCompatibleOrder::lex(70);
        assert_eq!(lex.compare(&e65, &e1), Ordering::Less);
        assert_eq!(drl.min_of([e65.clone(), e1.clone()]), Some(e1.clone()));
        assert_eq!(lex.min_of([e65.clone(), e1]), Some(e65));
    }
}
