//! Complete minimum-distance decoding.
//!
//! Three interchangeable decoders: direct syndrome lookup in the coset
//! table, table lookup through the `Matphi` reduction (no syndrome
//! computation at decode time), and gradient descent over a test set (no
//! table at decode time at all). All three return a nearest codeword; on
//! cosets with a unique leader that codeword is the unique nearest one.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::cosets::{CosetTable, Matphi};
use crate::error::{Error, Result};
use crate::order::WeightCompatibleOrder;
use crate::word::Word;

/// Outcome of decoding a received word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecodeResult {
    /// A nearest codeword to the received word.
    pub codeword: Word,
    /// The corrected error: `received + codeword`, a coset leader.
    pub error_pattern: Word,
}

/// Gradient descent over a test set: repeatedly add the first element that
/// lowers the weight, until none does; the survivor is the residual error
/// pattern.
///
/// `test_set` is scanned in slice order, so pass it ascending under the
/// preferred order for the canonical descent. When `test_set` is a true test
/// set (for example `L(C)` or `L1(C)`), the result is a coset leader of `y`;
/// for an arbitrary set of codewords the descent still terminates, but may
/// stall above the coset weight. Each step strictly lowers the weight, so
/// more than `wt(y)` steps are impossible; the defensive cap returns
/// [`Error::NotATestSet`] if that invariant is ever broken.
pub fn gradient_descent(y: &Word, test_set: &[Word]) -> Result<Word> {
    let mut z = y.clone();
    for _ in 0..=y.len() {
        match test_set.iter().find(|t| (&z ^ t).weight() < z.weight()) {
            Some(t) => z ^= t,
            None => return Ok(z),
        }
    }
    Err(Error::NotATestSet)
}

/// Reduces `y` to the record index of its coset by folding `phi` over the
/// support of `y`, starting from the zero coset. No syndrome is computed.
///
/// The fold order is immaterial: each step moves between cosets differing by
/// one basis word, and those moves commute.
#[must_use]
pub fn matphi_reduce(matphi: &Matphi, y: &Word) -> u32 {
    assert_eq!(y.len(), matphi.n(), "word length does not match the table");
    y.support().fold(0, |record, i| matphi.apply(record, i))
}

/// All coset leaders of the coset of `base`, recovered from the *fixed* base:
/// `{base} ∪ {base + c : c in leader_codewords, wt(base + c) = wt(base)}`,
/// ascending under the order.
///
/// `base` must itself be a coset leader and `leader_codewords` must contain
/// `L(C)`; under those premises the result is the complete leader set of the
/// coset — no iteration or re-basing is needed.
#[must_use]
pub fn all_coset_leaders_of(
    base: &Word,
    leader_codewords: &[Word],
    order: &WeightCompatibleOrder,
) -> Vec<Word> {
    let mut out: Vec<Word> = leader_codewords
        .iter()
        .map(|c| base ^ c)
        .filter(|candidate| candidate.weight() == base.weight())
        .collect();
    out.push(base.clone());
    order.sort(&mut out);
    out.dedup();
    out
}

/// Experimental variant of [`all_coset_leaders_of`] that re-bases: newly
/// found leaders are themselves translated by the leader codewords until the
/// set closes. Sound (returns only coset leaders of `base`'s coset, given the
/// premises) and never smaller than the fixed-base set; kept for comparing
/// search strategies.
#[must_use]
pub fn all_coset_leaders_rebasing(
    base: &Word,
    leader_codewords: &[Word],
    order: &WeightCompatibleOrder,
) -> Vec<Word> {
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    seen.insert(base.clone());
    let mut queue: Vec<Word> = Vec::new();
    queue.push(base.clone());
    while let Some(u) = queue.pop() {
        for c in leader_codewords {
            let candidate = &u ^ c;
            if candidate.weight() == u.weight() && seen.insert(candidate.clone()) {
                queue.push(candidate);
            }
        }
    }
    let mut out: Vec<Word> = seen.into_iter().collect();
    order.sort(&mut out);
    out
}

/// A complete decoder; all variants decode every received word.
#[derive(Clone, Copy, Debug)]
pub enum Decoder<'a> {
    /// Syndrome lookup in the complete coset table; corrects by the
    /// canonical coset representative.
    Table(&'a CosetTable),
    /// Like [`Decoder::Table`], but the coset is found by folding `Matphi`
    /// over the received support instead of computing a syndrome.
    Matphi {
        table: &'a CosetTable,
        matphi: &'a Matphi,
    },
    /// Gradient descent over a test set, ascending under the preferred
    /// order; needs no coset table at decode time.
    GradientDescent { test_set: &'a [Word] },
}

impl Decoder<'_> {
    /// Decodes `y` to a nearest codeword.
    pub fn decode(&self, y: &Word) -> Result<DecodeResult> {
        let error_pattern = match self {
            Decoder::Table(table) => table.representative_of(y).clone(),
            Decoder::Matphi { table, matphi } => {
                let record = matphi_reduce(matphi, y);
                table.records()[record as usize].representative.clone()
            }
            Decoder::GradientDescent { test_set } => gradient_descent(y, test_set)?,
        };
        Ok(DecodeResult { codeword: y ^ &error_pattern, error_pattern })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes;
    use crate::cosets::compute_coset_table;
    use crate::leader_codewords::leader_codewords_of_table;

    #[test]
    fn hamming7_corrects_single_errors() {
        let code = codes::hamming7();
        let order = WeightCompatibleOrder::degrevlex(7);
        let table = compute_coset_table(&code, &order).unwrap();
        let matphi = table.matphi();
        let lead = leader_codewords_of_table(&table);
        let test_set = lead.sorted_words();
        let decoders = [
            Decoder::Table(&table),
            Decoder::Matphi { table: &table, matphi: &matphi },
            Decoder::GradientDescent { test_set: &test_set },
        ];
        for c in code.codewords().unwrap() {
            for i in 1..=7 {
                let received = c.with_flipped(i);
                for decoder in &decoders {
                    let result = decoder.decode(&received).unwrap();
                    assert_eq!(result.codeword, c);
                    assert_eq!(result.error_pattern, Word::basis(7, i));
                }
            }
        }
    }

    #[test]
    fn example1_decoders_agree_exhaustively() {
        let code = codes::example1();
        let order = WeightCompatibleOrder::degrevlex(10);
        let table = compute_coset_table(&code, &order).unwrap();
        let matphi = table.matphi();
        let lead = leader_codewords_of_table(&table);
        let full = lead.sorted_words();
        let l1 = lead.l1_subset();
        for packed in 0..1u64 << 10 {
            let y = Word::from_u64(10, packed);
            let rec = table.record_of(&y);
            let via_table = Decoder::Table(&table).decode(&y).unwrap();
            let via_matphi =
                Decoder::Matphi { table: &table, matphi: &matphi }.decode(&y).unwrap();
            assert_eq!(via_table, via_matphi);
            assert_eq!(via_table.error_pattern, rec.representative);
            assert!(code.is_codeword(&via_table.codeword));
            // Gradient descent lands on *some* leader: distance is optimal.
            for test_set in [&full, &l1] {
                let via_gd =
                    Decoder::GradientDescent { test_set }.decode(&y).unwrap();
                assert_eq!(via_gd.error_pattern.weight(), rec.weight);
                assert!(rec.leaders.contains(&via_gd.error_pattern));
                assert!(code.is_codeword(&via_gd.codeword));
            }
        }
    }

    #[test]
    fn leader_recovery_from_any_base() {
        let code = codes::example1();
        let order = WeightCompatibleOrder::degrevlex(10);
        let table = compute_coset_table(&code, &order).unwrap();
        let lead = leader_codewords_of_table(&table).sorted_words();
        for rec in table.records() {
            for base in &rec.leaders {
                let fixed = all_coset_leaders_of(base, &lead, &order);
                assert_eq!(fixed, rec.leaders, "complete from base {base}");
                let rebased = all_coset_leaders_rebasing(base, &lead, &order);
                assert_eq!(rebased, rec.leaders);
            }
        }
    }

    #[test]
    fn descent_with_empty_set_stalls_in_place() {
        let y = Word::from_bit_str("1101").unwrap();
        assert_eq!(gradient_descent(&y, &[]).unwrap(), y);
    }

    #[test]
    fn matphi_reduce_matches_syndrome_lookup() {
        let code = codes::example1();
        let order = WeightCompatibleOrder::degrevlex(10);
        let table = compute_coset_table(&code, &order).unwrap();
        let matphi = table.matphi();
        for packed in 0..1u64 << 10 {
            let y = Word::from_u64(10, packed);
            let rec = &table.records()[matphi_reduce(&matphi, &y) as usize];
            assert_eq!(rec.syndrome, code.syndrome(&y));
        }
    }
}
