//! Incremental coset-leader enumeration (the coset-table sweep).
//!
//! One pass over an ascending frontier of words discovers every coset, every
//! coset leader, and the weight structure of the leader set, without touching
//! the `2^n` word space: only leaders and their one-bit extensions are ever
//! visited.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::order::{SortKey, WeightCompatibleOrder};
use crate::word::Word;

/// Default ceiling on the number of cosets (`2^(n-k)`) a table may hold.
pub const DEFAULT_MAX_COSETS: u64 = 1 << 24;

/// The sweep frontier: a de-duplicating min-queue under the order.
pub type Listing = BTreeSet<SortKey>;

/// Sentinel in the syndrome index for cosets not yet discovered.
const UNSEEN: u32 = u32::MAX;

/// One coset of the code.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CosetRecord {
    /// Common syndrome of the coset (length `n - k`).
    pub syndrome: Word,
    /// Canonical coset representative: the smallest leader under the order.
    pub representative: Word,
    /// Every coset leader (minimum-weight word of the coset), ascending
    /// under the order.
    pub leaders: Vec<Word>,
    /// Weight of the coset: the weight of each of its leaders.
    pub weight: u32,
}

/// The complete coset table of a code: all `2^(n-k)` cosets with all their
/// leaders, in discovery order (ascending representatives under the order).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CosetTable {
    code: LinearCode,
    order: WeightCompatibleOrder,
    records: Vec<CosetRecord>,
    index: Vec<u32>,
    iterations: u64,
}

/// Packed syndromes of the basis words `e_1..e_n`.
fn packed_columns(code: &LinearCode) -> Vec<u64> {
    (1..=code.n()).map(|i| code.parity_check().column(i).to_u64()).collect()
}

fn packed_syndrome(columns: &[u64], w: &Word) -> u64 {
    w.support().fold(0, |acc, i| acc ^ columns[(i - 1) as usize])
}

/// Computes the complete coset table under the default coset budget.
pub fn compute_coset_table(
    code: &LinearCode,
    order: &WeightCompatibleOrder,
) -> Result<CosetTable> {
    compute_coset_table_with_budget(code, order, DEFAULT_MAX_COSETS)
}

/// Computes the complete coset table, refusing codes with more than
/// `max_cosets` cosets.
///
/// The sweep pops words in ascending order from a frontier seeded with the
/// zero word. The first word popped for a syndrome is the canonical leader of
/// that coset; later pops of the same weight are its further leaders; every
/// leader enqueues its one-bit extensions. Every coset leader of the code is
/// reached this way because any leader with one support coordinate removed is
/// again a leader (of its own coset).
pub fn compute_coset_table_with_budget(
    code: &LinearCode,
    order: &WeightCompatibleOrder,
    max_cosets: u64,
) -> Result<CosetTable> {
    assert_eq!(order.n(), code.n(), "order and code disagree on block length");
    let n = code.n();
    let r = code.redundancy();
    if u64::from(r) >= 64 || 1u64 << r > max_cosets {
        return Err(Error::CosetBudget { redundancy: r, max_cosets });
    }
    let coset_count = 1usize << r;
    let columns = packed_columns(code);

    let mut index = vec![UNSEEN; coset_count];
    let mut records: Vec<CosetRecord> = Vec::new();
    let mut listing = Listing::new();
    listing.insert(order.sort_key(&Word::zero(n)));
    let mut iterations = 0u64;

    while let Some(key) = listing.pop_first() {
        iterations += 1;
        let t = order.word_of_key(&key);
        let s = packed_syndrome(&columns, &t) as usize;
        if index[s] == UNSEEN {
            index[s] = records.len() as u32;
            enqueue_extensions(&mut listing, order, &t);
            records.push(CosetRecord {
                syndrome: Word::from_u64(r, s as u64),
                representative: t.clone(),
                leaders: vec![t],
                weight: key.weight(),
            });
        } else {
            let record = &mut records[index[s] as usize];
            debug_assert!(key.weight() >= record.weight, "pops ascend in the order");
            if key.weight() == record.weight {
                enqueue_extensions(&mut listing, order, &t);
                record.leaders.push(t);
            }
        }
    }

    debug_assert_eq!(records.len(), coset_count, "full-rank H reaches every syndrome");
    debug_assert!(records[0].representative.is_zero());
    Ok(CosetTable { code: code.clone(), order: *order, records, index, iterations })
}

fn enqueue_extensions(listing: &mut Listing, order: &WeightCompatibleOrder, t: &Word) {
    for k in (1..=t.len()).filter(|&k| !t.get(k)) {
        listing.insert(order.sort_key(&t.with_flipped(k)));
    }
}

impl CosetTable {
    #[must_use]
    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    #[must_use]
    pub fn order(&self) -> &WeightCompatibleOrder {
        &self.order
    }

    /// All cosets, in discovery order (ascending representatives).
    #[must_use]
    pub fn records(&self) -> &[CosetRecord] {
        &self.records
    }

    /// Number of cosets, `2^(n-k)`.
    #[must_use]
    pub fn coset_count(&self) -> u64 {
        self.records.len() as u64
    }

    /// Number of words popped from the frontier during the sweep.
    #[must_use]
    pub fn iteration_count(&self) -> u64 {
        self.iterations
    }

    /// Total number of coset leaders, `|CL(C)|`.
    #[must_use]
    pub fn leader_count(&self) -> u64 {
        self.records.iter().map(|rec| rec.leaders.len() as u64).sum()
    }

    /// All coset leaders, coset by coset in discovery order.
    pub fn leaders(&self) -> impl Iterator<Item = &Word> {
        self.records.iter().flat_map(|rec| rec.leaders.iter())
    }

    /// The record index of the coset with the given packed syndrome.
    fn record_index_of_packed(&self, packed: u64) -> u32 {
        self.index[packed as usize]
    }

    /// The coset with the given syndrome (a word of length `n - k`).
    #[must_use]
    pub fn record_of_syndrome(&self, syndrome: &Word) -> Option<&CosetRecord> {
        if syndrome.len() != self.code.redundancy() {
            return None;
        }
        let idx = self.record_index_of_packed(syndrome.to_u64());
        debug_assert_ne!(idx, UNSEEN);
        self.records.get(idx as usize)
    }

    /// The coset containing `y` (a word of length `n`).
    #[must_use]
    pub fn record_of(&self, y: &Word) -> &CosetRecord {
        let syndrome = self.code.syndrome(y);
        let idx = self.record_index_of_packed(syndrome.to_u64());
        &self.records[idx as usize]
    }

    /// The canonical form `N(y)`: the canonical leader of the coset of `y`.
    #[must_use]
    pub fn representative_of(&self, y: &Word) -> &Word {
        &self.record_of(y).representative
    }

    /// Whether `y` is a coset leader, i.e. of minimum weight in its coset.
    #[must_use]
    pub fn is_leader(&self, y: &Word) -> bool {
        y.weight() == self.record_of(y).weight
    }

    /// Weight distribution of coset leaders: entry `w` counts the cosets of
    /// weight `w`, for `w = 0..=n`.
    #[must_use]
    pub fn wdcl(&self) -> Vec<u64> {
        let mut hist = vec![0u64; self.code.n() as usize + 1];
        for rec in &self.records {
            hist[rec.weight as usize] += 1;
        }
        hist
    }

    /// Rows `(weight, cosets, leaders)` for each occupied coset weight,
    /// ascending: how many cosets have that weight and how many leaders they
    /// carry in total.
    #[must_use]
    pub fn leader_count_histogram(&self) -> Vec<(u32, u64, u64)> {
        let mut rows: Vec<(u32, u64, u64)> = Vec::new();
        for rec in &self.records {
            match rows.iter_mut().find(|row| row.0 == rec.weight) {
                Some(row) => {
                    row.1 += 1;
                    row.2 += rec.leaders.len() as u64;
                }
                None => rows.push((rec.weight, 1, rec.leaders.len() as u64)),
            }
        }
        rows.sort_unstable_by_key(|row| row.0);
        rows
    }

    /// Covering radius: the largest coset weight.
    #[must_use]
    pub fn covering_radius(&self) -> u32 {
        self.records.last().expect("at least the zero coset").weight
    }

    /// Newton radius: the largest coset weight among cosets with a unique
    /// leader (the largest weight of a uniquely correctable error pattern).
    #[must_use]
    pub fn newton_radius(&self) -> u32 {
        self.records
            .iter()
            .filter(|rec| rec.leaders.len() == 1)
            .map(|rec| rec.weight)
            .max()
            .expect("the zero coset has the unique leader 0")
    }

    /// Number of cosets with a unique leader.
    #[must_use]
    pub fn unique_leader_coset_count(&self) -> u64 {
        self.records.iter().filter(|rec| rec.leaders.len() == 1).count() as u64
    }

    /// Builds the coset-adjacency table `Matphi` for this table.
    #[must_use]
    pub fn matphi(&self) -> Matphi {
        let n = self.code.n();
        let columns = packed_columns(&self.code);
        let mut entries = Vec::with_capacity(self.records.len() * n as usize);
        for rec in &self.records {
            let s = rec.syndrome.to_u64();
            for &col in &columns {
                entries.push(self.record_index_of_packed(s ^ col));
            }
        }
        Matphi { n, entries }
    }
}

/// The function `phi : cosets x coordinates -> cosets` mapping a coset `[y]`
/// and a coordinate `k` to the coset `[y + e_k]`, tabulated over record
/// indices of a [`CosetTable`].
///
/// Applying `phi` along the support of `y`, starting from the zero coset,
/// reduces `y` to its coset record without computing a syndrome; see
/// [`crate::decode::matphi_reduce`]. Since flipping the same coordinate twice
/// returns to the original coset, every column of the table is an involution.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matphi {
    n: u32,
    entries: Vec<u32>,
}

impl Matphi {
    /// Block length (number of columns).
    #[must_use]
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of cosets (number of rows).
    #[must_use]
    pub fn record_count(&self) -> u32 {
        (self.entries.len() / self.n as usize) as u32
    }

    /// The record index of `[representative(record) + e_coord]`
    /// (`coord` 1-based).
    #[must_use]
    pub fn apply(&self, record: u32, coord: u32) -> u32 {
        assert!(coord >= 1 && coord <= self.n, "coordinate out of range");
        self.entries[record as usize * self.n as usize + (coord - 1) as usize]
    }
}
