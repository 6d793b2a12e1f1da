//! Independent brute-force oracles.
//!
//! Everything here recomputes coset data by exhaustive enumeration, with no
//! shared machinery beyond [`Word`] arithmetic and syndrome evaluation. The
//! incremental algorithms in [`crate::cosets`], [`crate::leader_codewords`]
//! and [`crate::decode`] are validated against these oracles, never the other
//! way round.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::order::WeightCompatibleOrder;
use crate::word::Word;

/// Size guards for the exhaustive oracles.
///
/// Each limit bounds the block length `n` admitted by one family of oracles;
/// beyond it the oracle refuses with [`Error::OracleGuard`] instead of
/// attempting an infeasible scan.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct OracleLimits {
    /// Largest `n` for the `2^n` coset-leader and leader-codeword scans.
    pub max_scan_n: u32,
    /// Largest `n` for Voronoi-region construction (a `2^n x 2^k` distance
    /// table).
    pub max_voronoi_n: u32,
    /// Largest `n` for greedy test-set extraction.
    pub max_cover_n: u32,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_scan_n: 20, max_voronoi_n: 14, max_cover_n: 12 }
    }
}

fn guard(n: u32, max: u32) -> Result<()> {
    if n > max {
        return Err(Error::OracleGuard { n, max });
    }
    Ok(())
}

/// One coset as seen by the brute-force oracles.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BruteStratum {
    /// Syndrome of every word in the coset.
    pub syndrome: Word,
    /// Weight of the coset: the minimal weight attained in it.
    pub weight: u32,
    /// All minimum-weight words of the coset, ascending under the order.
    pub leaders: Vec<Word>,
}

impl BruteStratum {
    /// The canonical coset leader: the smallest leader under the order.
    #[must_use]
    pub fn representative(&self) -> &Word {
        &self.leaders[0]
    }
}

/// The complete coset-leader partition of a code, brute-forced.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BruteCosets {
    n: u32,
    strata: Vec<BruteStratum>,
    index: BTreeMap<Word, usize>,
}

impl BruteCosets {
    fn from_strata(n: u32, order: &WeightCompatibleOrder, mut strata: Vec<BruteStratum>) -> Self {
        strata.sort_by_cached_key(|s| order.sort_key(s.representative()));
        let index =
            strata.iter().enumerate().map(|(i, s)| (s.syndrome.clone(), i)).collect();
        BruteCosets { n, strata, index }
    }

    /// Strata ascending by their representative under the order (which is
    /// also the discovery order of the incremental algorithm).
    #[must_use]
    pub fn strata(&self) -> &[BruteStratum] {
        &self.strata
    }

    #[must_use]
    pub fn stratum_of(&self, syndrome: &Word) -> Option<&BruteStratum> {
        self.index.get(syndrome).map(|&i| &self.strata[i])
    }

    /// Total number of coset leaders, `|CL(C)|`.
    #[must_use]
    pub fn leader_count(&self) -> u64 {
        self.strata.iter().map(|s| s.leaders.len() as u64).sum()
    }

    /// Weight distribution of coset leaders: entry `w` counts the cosets of
    /// weight `w`, for `w = 0..=n`.
    #[must_use]
    pub fn wdcl(&self) -> Vec<u64> {
        let mut hist = vec![0u64; self.n as usize + 1];
        for s in &self.strata {
            hist[s.weight as usize] += 1;
        }
        hist
    }

    /// Covering radius: the largest coset weight.
    #[must_use]
    pub fn covering_radius(&self) -> u32 {
        self.strata.iter().map(|s| s.weight).max().expect("at least the zero coset")
    }

    /// Newton radius: the largest coset weight among cosets with a *unique*
    /// leader (the largest weight of a uniquely correctable error).
    #[must_use]
    pub fn newton_radius(&self) -> u32 {
        self.strata
            .iter()
            .filter(|s| s.leaders.len() == 1)
            .map(|s| s.weight)
            .max()
            .expect("the zero coset has the unique leader 0")
    }

    /// Number of cosets with a unique leader.
    #[must_use]
    pub fn unique_leader_coset_count(&self) -> u64 {
        self.strata.iter().filter(|s| s.leaders.len() == 1).count() as u64
    }
}

/// Packs the syndromes of the basis words `e_1..e_n`; the syndrome of any
/// word is the XOR of the entries over its support.
fn packed_syndrome_columns(code: &LinearCode) -> Vec<u64> {
    (1..=code.n()).map(|i| code.parity_check().column(i).to_u64()).collect()
}

/// Brute-forces every coset leader by scanning all `2^n` words.
///
/// Strategy: walk the full space in Gray-code order, maintaining the packed
/// syndrome incrementally, and keep the minimum-weight words per syndrome.
pub fn brute_coset_leaders_scan(
    code: &LinearCode,
    order: &WeightCompatibleOrder,
    limits: &OracleLimits,
) -> Result<BruteCosets> {
    let n = code.n();
    guard(n, limits.max_scan_n)?;
    let r = code.redundancy();
    let columns = packed_syndrome_columns(code);
    let mut weights = vec![u32::MAX; 1usize << r];
    let mut buckets: Vec<Vec<u64>> = vec![Vec::new(); 1usize << r];
    let mut packed = 0u64;
    let mut syn = 0u64;
    for i in 0..1u64 << n {
        if i > 0 {
            let bit = i.trailing_zeros();
            packed ^= 1 << bit;
            syn ^= columns[bit as usize];
        }
        let s = syn as usize;
        let wt = packed.count_ones();
        match wt.cmp(&weights[s]) {
            core::cmp::Ordering::Less => {
                weights[s] = wt;
                buckets[s].clear();
                buckets[s].push(packed);
            }
            core::cmp::Ordering::Equal => buckets[s].push(packed),
            core::cmp::Ordering::Greater => {}
        }
    }
    let strata = buckets
        .iter()
        .enumerate()
        .map(|(s, bucket)| {
            debug_assert!(!bucket.is_empty(), "full-rank H reaches every syndrome");
            let mut leaders: Vec<Word> =
                bucket.iter().map(|&p| Word::from_u64(n, p)).collect();
            order.sort(&mut leaders);
            BruteStratum { syndrome: Word::from_u64(r, s as u64), weight: weights[s], leaders }
        })
        .collect();
    Ok(BruteCosets::from_strata(n, order, strata))
}

/// Brute-forces every coset leader coset-by-coset.
///
/// Strategy: for each syndrome, build one word with that syndrome by flipping
/// pivot coordinates of the reduced parity-check matrix, then minimise over
/// its `2^k` translates by codewords. Same output as
/// [`brute_coset_leaders_scan`] by a different route; the pair is used to
/// cross-check the oracles themselves.
pub fn brute_coset_leaders_translate(
    code: &LinearCode,
    order: &WeightCompatibleOrder,
    limits: &OracleLimits,
) -> Result<BruteCosets> {
    let n = code.n();
    guard(n, limits.max_scan_n)?;
    let r = code.redundancy();
    let pivots = code.pivot_columns();
    let mut strata = Vec::with_capacity(1usize << r);
    for s in 0..1u64 << r {
        let mut base = Word::zero(n);
        for (row, &p) in pivots.iter().enumerate() {
            if (s >> row) & 1 == 1 {
                base.set(p, true);
            }
        }
        let syndrome = Word::from_u64(r, s);
        debug_assert_eq!(code.syndrome(&base), syndrome);
        let mut weight = u32::MAX;
        let mut leaders = Vec::new();
        for c in code.codewords()? {
            let w = &base ^ &c;
            match w.weight().cmp(&weight) {
                core::cmp::Ordering::Less => {
                    weight = w.weight();
                    leaders.clear();
                    leaders.push(w);
                }
                core::cmp::Ordering::Equal => leaders.push(w),
                core::cmp::Ordering::Greater => {}
            }
        }
        order.sort(&mut leaders);
        strata.push(BruteStratum { syndrome, weight, leaders });
    }
    Ok(BruteCosets::from_strata(n, order, strata))
}

/// Brute-forces the complete coset-leader partition (scan strategy).
pub fn brute_coset_leaders(
    code: &LinearCode,
    order: &WeightCompatibleOrder,
    limits: &OracleLimits,
) -> Result<BruteCosets> {
    brute_coset_leaders_scan(code, order, limits)
}

/// All coset leaders of the single coset `y + C`, ascending under the order.
///
/// Costs `2^k` (one pass over the codewords), so it stays usable on codes far
/// beyond the full-scan limits.
pub fn brute_coset_leaders_of(
    code: &LinearCode,
    order: &WeightCompatibleOrder,
    y: &Word,
) -> Result<Vec<Word>> {
    let mut weight = u32::MAX;
    let mut leaders = Vec::new();
    for c in code.codewords()? {
        let w = y ^ &c;
        match w.weight().cmp(&weight) {
            core::cmp::Ordering::Less => {
                weight = w.weight();
                leaders.clear();
                leaders.push(w);
            }
            core::cmp::Ordering::Equal => leaders.push(w),
            core::cmp::Ordering::Greater => {}
        }
    }
    order.sort(&mut leaders);
    Ok(leaders)
}

/// Leader codewords and their canonical-representative subset, brute-forced.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BruteLeaderCodewords {
    /// `L(C)`, ascending under the order.
    pub words: Vec<Word>,
    /// `L1(C)`: the subset generated when the second leader is forced to be
    /// the canonical representative of its coset. Ascending under the order.
    pub l1: Vec<Word>,
}

/// Brute-forces the leader codewords from the defining rewriting:
///
/// `L(C) = { n1 + e_i + n2 }` over all coset leaders `n1`, coordinates `i`
/// outside the support of `n1`, and coset leaders `n2` of `n1 + e_i`, subject
/// to `wt(n1 + e_i)` exceeding the weight of its coset (that is, `n1 + e_i`
/// is not itself a leader). `L1(C)` restricts `n2` to the canonical
/// representative of its coset.
pub fn brute_leader_codewords(
    code: &LinearCode,
    order: &WeightCompatibleOrder,
    limits: &OracleLimits,
) -> Result<BruteLeaderCodewords> {
    let cosets = brute_coset_leaders_scan(code, order, limits)?;
    let n = code.n();
    let mut words = BTreeMap::new();
    let mut l1 = BTreeMap::new();
    for stratum in cosets.strata() {
        for n1 in &stratum.leaders {
            for i in (1..=n).filter(|&i| !n1.get(i)) {
                let y = n1.with_flipped(i);
                let adjacent = cosets
                    .stratum_of(&code.syndrome(&y))
                    .expect("every syndrome has a stratum");
                if y.weight() > adjacent.weight {
                    for n2 in &adjacent.leaders {
                        let c = &y ^ n2;
                        debug_assert!(code.is_codeword(&c) && !c.is_zero());
                        words.insert(order.sort_key(&c), c);
                    }
                    let c = &y ^ adjacent.representative();
                    l1.insert(order.sort_key(&c), c);
                }
            }
        }
    }
    Ok(BruteLeaderCodewords {
        words: words.into_values().collect(),
        l1: l1.into_values().collect(),
    })
}

/// A plain bit set over the packed word space `0..2^n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bitset {
    capacity: u64,
    limbs: Vec<u64>,
}

impl Bitset {
    #[must_use]
    pub fn new(capacity: u64) -> Self {
        Bitset { capacity, limbs: vec![0; capacity.div_ceil(64) as usize] }
    }

    /// Number of addressable positions (not the number of set bits).
    #[must_use]
    pub fn capacity(&self) -> u64 {
        self.capacity
    }

    #[must_use]
    pub fn get(&self, i: u64) -> bool {
        debug_assert!(i < self.capacity);
        self.limbs[(i / 64) as usize] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, i: u64) {
        debug_assert!(i < self.capacity);
        self.limbs[(i / 64) as usize] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: u64) {
        debug_assert!(i < self.capacity);
        self.limbs[(i / 64) as usize] &= !(1 << (i % 64));
    }

    #[must_use]
    pub fn count(&self) -> u64 {
        self.limbs.iter().map(|l| u64::from(l.count_ones())).sum()
    }

    #[must_use]
    pub fn intersects(&self, other: &Bitset) -> bool {
        self.limbs.iter().zip(&other.limbs).any(|(a, b)| a & b != 0)
    }

    #[must_use]
    pub fn intersection_count(&self, other: &Bitset) -> u64 {
        self.limbs
            .iter()
            .zip(&other.limbs)
            .map(|(a, b)| u64::from((a & b).count_ones()))
            .sum()
    }

    /// Whether every member of `other` is a member of `self`.
    #[must_use]
    pub fn is_superset_of(&self, other: &Bitset) -> bool {
        self.limbs.iter().zip(&other.limbs).all(|(a, b)| b & !a == 0)
    }

    pub fn union_with(&mut self, other: &Bitset) {
        for (a, b) in self.limbs.iter_mut().zip(&other.limbs) {
            *a |= b;
        }
    }

    pub fn subtract(&mut self, other: &Bitset) {
        for (a, b) in self.limbs.iter_mut().zip(&other.limbs) {
            *a &= !b;
        }
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = u64> + '_ {
        self.limbs.iter().enumerate().flat_map(|(li, &limb)| {
            let mut rest = limb;
            core::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros();
                rest &= rest - 1;
                Some(li as u64 * 64 + u64::from(bit))
            })
        })
    }
}

/// `X(A)`: the words at Hamming distance exactly 1 from `A` (outside `A`,
/// adjacent to it). Indices are packed words of length `n`.
#[must_use]
pub fn frontier(a: &Bitset, n: u32) -> Bitset {
    let mut x = Bitset::new(a.capacity());
    for idx in a.iter_ones() {
        for bit in 0..n {
            x.insert(idx ^ (1u64 << bit));
        }
    }
    x.subtract(a);
    x
}

/// The boundary `delta(A) = X(A) ∪ X(complement of A)`: words adjacent to
/// the other side, taken from both sides.
#[must_use]
pub fn boundary(a: &Bitset, n: u32) -> Bitset {
    let mut out = frontier(a, n);
    for idx in a.iter_ones() {
        if (0..n).any(|bit| !a.get(idx ^ (1u64 << bit))) {
            out.insert(idx);
        }
    }
    out
}

/// Voronoi regions of all codewords over the full word space.
///
/// `D(c) = { y : d(y, c) <= d(y, c + c') for every nonzero codeword c' }`:
/// the words at least as close to `c` as to any other codeword. Regions
/// overlap where distances tie; `D(0)` is exactly the set of coset leaders.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VoronoiAtlas {
    /// Block length; regions index packed words of this length.
    pub n: u32,
    /// All codewords; entry 0 is the zero word.
    pub codewords: Vec<Word>,
    /// `regions[j]` is `D(codewords[j])`.
    pub regions: Vec<Bitset>,
}

impl VoronoiAtlas {
    /// `D(0)`, the region of the zero codeword.
    #[must_use]
    pub fn zero_region(&self) -> &Bitset {
        &self.regions[0]
    }
}

/// Brute-forces the Voronoi atlas by a full `2^n x 2^k` distance table.
pub fn brute_voronoi(code: &LinearCode, limits: &OracleLimits) -> Result<VoronoiAtlas> {
    let n = code.n();
    guard(n, limits.max_voronoi_n)?;
    let codewords: Vec<Word> = code.codewords()?.collect();
    debug_assert!(codewords[0].is_zero());
    let packed: Vec<u64> = codewords.iter().map(Word::to_u64).collect();
    let mut regions = vec![Bitset::new(1u64 << n); codewords.len()];
    for y in 0..1u64 << n {
        let best = packed.iter().map(|&c| (y ^ c).count_ones()).min().expect("k >= 1");
        for (j, &c) in packed.iter().enumerate() {
            if (y ^ c).count_ones() == best {
                regions[j].insert(y);
            }
        }
    }
    Ok(VoronoiAtlas { n, codewords, regions })
}

/// The two brute-force notions of "codewords neighbouring zero".
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZeroNeighbours {
    /// Nonzero codewords whose region boundary meets the boundary of `D(0)`:
    /// `delta(D(0)) ∩ delta(D(c))` nonempty. Ascending under the order.
    pub boundary_touching: Vec<Word>,
    /// Nonzero codewords whose region absorbs a one-step exit from `D(0)`:
    /// `X(D(0)) ∩ D(c)` nonempty. This set coincides with the leader
    /// codewords `L(C)`. Ascending under the order.
    pub frontier_reaching: Vec<Word>,
}

/// Brute-forces both zero-neighbour sets from the Voronoi atlas.
pub fn brute_zero_neighbours(
    code: &LinearCode,
    order: &WeightCompatibleOrder,
    limits: &OracleLimits,
) -> Result<ZeroNeighbours> {
    let atlas = brute_voronoi(code, limits)?;
    let n = atlas.n;
    let x0 = frontier(atlas.zero_region(), n);
    let delta0 = boundary(atlas.zero_region(), n);
    let mut boundary_touching = Vec::new();
    let mut frontier_reaching = Vec::new();
    for (j, c) in atlas.codewords.iter().enumerate().skip(1) {
        let region = &atlas.regions[j];
        if delta0.intersects(&boundary(region, n)) {
            boundary_touching.push(c.clone());
        }
        if x0.intersects(region) {
            frontier_reaching.push(c.clone());
        }
    }
    order.sort(&mut boundary_touching);
    order.sort(&mut frontier_reaching);
    Ok(ZeroNeighbours { boundary_touching, frontier_reaching })
}

/// Minimum coset weight for every packed syndrome, by one Gray-code sweep.
fn dense_coset_weights(code: &LinearCode) -> Vec<u32> {
    let mut weights = vec![u32::MAX; 1usize << code.redundancy()];
    let columns = packed_syndrome_columns(code);
    let mut packed = 0u64;
    let mut syn = 0u64;
    for i in 0..1u64 << code.n() {
        if i > 0 {
            let bit = i.trailing_zeros();
            packed ^= 1 << bit;
            syn ^= columns[bit as usize];
        }
        let wt = packed.count_ones();
        if wt < weights[syn as usize] {
            weights[syn as usize] = wt;
        }
    }
    weights
}

/// Finds the smallest (by packed value) word witnessing that `set` is *not*
/// a test set: a word that is not a coset leader yet has no element of `set`
/// lowering its weight. `None` means `set` is a test set.
///
/// Fails with [`Error::NotATestSet`] if `set` contains a non-codeword (such a
/// set can never serve as a test set: descending by it may leave the coset).
pub fn test_set_counterexample(
    code: &LinearCode,
    set: &[Word],
    limits: &OracleLimits,
) -> Result<Option<Word>> {
    let n = code.n();
    guard(n, limits.max_scan_n)?;
    if set.iter().any(|z| !code.is_codeword(z)) {
        return Err(Error::NotATestSet);
    }
    let weights = dense_coset_weights(code);
    let columns = packed_syndrome_columns(code);
    let packed_set: Vec<u64> = set.iter().map(Word::to_u64).collect();
    let mut packed = 0u64;
    let mut syn = 0u64;
    let mut worst: Option<u64> = None;
    for i in 0..1u64 << n {
        if i > 0 {
            let bit = i.trailing_zeros();
            packed ^= 1 << bit;
            syn ^= columns[bit as usize];
        }
        let wt = packed.count_ones();
        if wt == weights[syn as usize] {
            continue; // a coset leader needs no descent
        }
        if packed_set.iter().any(|&z| (packed ^ z).count_ones() < wt) {
            continue;
        }
        if worst.is_none_or(|w| packed < w) {
            worst = Some(packed);
        }
    }
    Ok(worst.map(|p| Word::from_u64(n, p)))
}

/// Whether `set` satisfies the test-set property: every word that is not a
/// coset leader has some element of `set` lowering its weight.
pub fn verify_test_set(code: &LinearCode, set: &[Word], limits: &OracleLimits) -> Result<bool> {
    Ok(test_set_counterexample(code, set, limits)?.is_none())
}

/// Greedily extracts a minimal test set from the leader codewords.
///
/// Covers the non-leaders by greedy max-coverage over `L(C)` (ties broken
/// toward the smaller codeword under the order), then prunes elements whose
/// removal keeps the cover intact. The result is minimal (no proper subset of
/// it is a test set) but not necessarily minimum. Fails with
/// [`Error::CoverageGap`] if some non-leader is lowered by no leader codeword
/// (impossible for a correct `L(C)`; the check keeps the oracle honest).
pub fn greedy_min_testset(
    code: &LinearCode,
    order: &WeightCompatibleOrder,
    limits: &OracleLimits,
) -> Result<Vec<Word>> {
    let n = code.n();
    guard(n, limits.max_cover_n)?;
    let relaxed = OracleLimits { max_scan_n: n.max(limits.max_scan_n), ..*limits };
    let lead = brute_leader_codewords(code, order, &relaxed)?;
    let weights = dense_coset_weights(code);
    let columns = packed_syndrome_columns(code);

    let mut need = Bitset::new(1u64 << n);
    let mut packed = 0u64;
    let mut syn = 0u64;
    for i in 0..1u64 << n {
        if i > 0 {
            let bit = i.trailing_zeros();
            packed ^= 1 << bit;
            syn ^= columns[bit as usize];
        }
        if packed.count_ones() > weights[syn as usize] {
            need.insert(packed);
        }
    }

    let covers: Vec<Bitset> = lead
        .words
        .iter()
        .map(|z| {
            let zp = z.to_u64();
            let mut cover = Bitset::new(1u64 << n);
            for y in need.iter_ones() {
                if (y ^ zp).count_ones() < y.count_ones() {
                    cover.insert(y);
                }
            }
            cover
        })
        .collect();

    let mut covered = Bitset::new(1u64 << n);
    for c in &covers {
        covered.union_with(c);
    }
    if !covered.is_superset_of(&need) {
        return Err(Error::CoverageGap);
    }

    let mut remaining = need.clone();
    let mut selected: Vec<usize> = Vec::new();
    while remaining.count() > 0 {
        let pick = (0..covers.len())
            .filter(|i| !selected.contains(i))
            .max_by_key(|&i| (covers[i].intersection_count(&remaining), core::cmp::Reverse(i)))
            .expect("coverage verified above");
        selected.push(pick);
        remaining.subtract(&covers[pick]);
    }

    selected.sort_unstable();
    let mut pruned = selected.clone();
    for &candidate in &selected {
        let mut union = Bitset::new(1u64 << n);
        for &other in pruned.iter().filter(|&&o| o != candidate) {
            union.union_with(&covers[other]);
        }
        if union.is_superset_of(&need) {
            pruned.retain(|&o| o != candidate);
        }
    }
    Ok(pruned.into_iter().map(|i| lead.words[i].clone()).collect())
}
