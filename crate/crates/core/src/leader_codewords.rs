//! Leader codewords: the test set distilled from the coset table.
//!
//! A codeword is a *leader codeword* when it can be written as
//! `n1 + e_i + n2` with `n1` a coset leader, `i` outside the support of `n1`,
//! `n1 + e_i` heavier than its coset (not itself a leader), and `n2` a coset
//! leader of `n1 + e_i`. The set `L(C)` of all of them is a test set for
//! gradient-descent decoding and recovers all coset leaders of a coset from
//! any one of them; the subset `L1(C)` keeps only the instances where `n2` is
//! the canonical representative of its coset.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::code::LinearCode;
use crate::cosets::{compute_coset_table_with_budget, CosetTable, DEFAULT_MAX_COSETS};
use crate::error::Result;
use crate::order::{SortKey, WeightCompatibleOrder};
use crate::word::Word;

/// The decomposition certifying a leader codeword: `word = n1 + e_coord + n2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    /// A coset leader with `coord` outside its support.
    pub n1: Word,
    /// A coset leader of `n1 + e_coord`, strictly lighter than it.
    pub n2: Word,
    /// The flipped coordinate `i` (1-based).
    pub coord: u32,
}

/// One leader codeword with its first discovered witness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeaderCodeword {
    pub word: Word,
    /// The first witness in enumeration order (further decompositions may
    /// exist).
    pub witness: Witness,
    /// Whether some witness uses the canonical representative as `n2`,
    /// placing the word in `L1(C)`.
    pub in_l1: bool,
}

/// `L(C)` with witnesses and the `L1(C)` marking, ascending under the order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LeaderCodewordSet {
    order: WeightCompatibleOrder,
    entries: Vec<LeaderCodeword>,
}

impl LeaderCodewordSet {
    #[must_use]
    pub fn order(&self) -> &WeightCompatibleOrder {
        &self.order
    }

    /// `|L(C)|`.
    #[must_use]
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `|L1(C)|`.
    #[must_use]
    pub fn l1_len(&self) -> usize {
        self.entries.iter().filter(|e| e.in_l1).count()
    }

    pub fn iter(&self) -> impl Iterator<Item = &LeaderCodeword> {
        self.entries.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.entries.iter().map(|e| &e.word)
    }

    /// All of `L(C)` as owned words, ascending under the order.
    #[must_use]
    pub fn sorted_words(&self) -> Vec<Word> {
        self.words().cloned().collect()
    }

    /// `L1(C)` as owned words, ascending under the order.
    #[must_use]
    pub fn l1_subset(&self) -> Vec<Word> {
        self.entries.iter().filter(|e| e.in_l1).map(|e| e.word.clone()).collect()
    }

    /// Whether `w` is a leader codeword (binary search).
    #[must_use]
    pub fn contains(&self, w: &Word) -> bool {
        let key = self.order.sort_key(w);
        self.entries
            .binary_search_by(|e| self.order.sort_key(&e.word).cmp(&key))
            .is_ok()
    }

    /// Checks the weight bound: every leader codeword weighs at most
    /// `2 * covering_radius + 1`.
    #[must_use]
    pub fn verify_weight_bound(&self, covering_radius: u32) -> bool {
        self.entries.iter().all(|e| e.word.weight() <= 2 * covering_radius + 1)
    }
}

impl<'a> IntoIterator for &'a LeaderCodewordSet {
    type Item = &'a LeaderCodeword;
    type IntoIter = core::slice::Iter<'a, LeaderCodeword>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

/// Enumerates `L(C)` from a finished coset table.
///
/// Walks the defining rewriting exhaustively: every leader `n1`, every
/// coordinate `i` off its support, and — whenever `n1 + e_i` exceeds the
/// weight of its coset — every leader `n2` of that coset. The first witness
/// found for a word is kept; `in_l1` is the union over all witnesses of
/// "`n2` is its coset's representative".
#[must_use]
pub fn leader_codewords_of_table(table: &CosetTable) -> LeaderCodewordSet {
    let order = *table.order();
    let n = table.code().n();
    let mut map: BTreeMap<SortKey, LeaderCodeword> = BTreeMap::new();
    for rec in table.records() {
        for n1 in &rec.leaders {
            for i in (1..=n).filter(|&i| !n1.get(i)) {
                let y = n1.with_flipped(i);
                let adjacent = table.record_of(&y);
                if y.weight() <= adjacent.weight {
                    continue;
                }
                for (rank, n2) in adjacent.leaders.iter().enumerate() {
                    let word = &y ^ n2;
                    debug_assert!(!word.is_zero());
                    let canonical = rank == 0;
                    match map.entry(order.sort_key(&word)) {
                        Entry::Vacant(slot) => {
                            slot.insert(LeaderCodeword {
                                word,
                                witness: Witness { n1: n1.clone(), n2: n2.clone(), coord: i },
                                in_l1: canonical,
                            });
                        }
                        Entry::Occupied(mut slot) => {
                            slot.get_mut().in_l1 |= canonical;
                        }
                    }
                }
            }
        }
    }
    LeaderCodewordSet { order, entries: map.into_values().collect() }
}

/// Computes the coset table and distils `L(C)` from it, under the default
/// coset budget.
pub fn compute_leader_codewords(
    code: &LinearCode,
    order: &WeightCompatibleOrder,
) -> Result<LeaderCodewordSet> {
    compute_leader_codewords_with_budget(code, order, DEFAULT_MAX_COSETS)
}

/// As [`compute_leader_codewords`], refusing codes with more than
/// `max_cosets` cosets.
pub fn compute_leader_codewords_with_budget(
    code: &LinearCode,
    order: &WeightCompatibleOrder,
    max_cosets: u64,
) -> Result<LeaderCodewordSet> {
    let table = compute_coset_table_with_budget(code, order, max_cosets)?;
    Ok(leader_codewords_of_table(&table))
}
