#![allow(dead_code)]

use cosetforge_core::{BinaryMatrix, LinearCode, TieBreak, Word};
use proptest::prelude::*;

/// A random `[n, k]` binary code from `r` random parity rows, `min_n <= n <=
/// max_n`. Degenerate (all-zero) parity matrices are filtered out; row-rank
/// deficiencies are fine, `LinearCode` reduces them away.
pub fn arb_code(min_n: u32, max_n: u32) -> impl Strategy<Value = LinearCode> {
    (min_n..=max_n).prop_flat_map(move |n| {
        (1..n).prop_flat_map(move |r| {
            proptest::collection::vec(0u64..(1u64 << n), r as usize).prop_filter_map(
                "parity matrix must have nonzero rank",
                move |rows| {
                    let words: Vec<Word> =
                        rows.into_iter().map(|bits| Word::from_u64(n, bits)).collect();
                    let matrix = BinaryMatrix::from_rows(words).ok()?;
                    LinearCode::from_parity_check(&matrix).ok()
                },
            )
        })
    })
}

/// A random word of length `n`.
pub fn arb_word(n: u32) -> impl Strategy<Value = Word> {
    proptest::collection::btree_set(1..=n, 0..=(n as usize))
        .prop_map(move |support| {
            let support: Vec<u32> = support.into_iter().collect();
            Word::from_support(n, &support)
        })
}

/// A random word length spanning one to three limbs.
pub fn arb_len() -> impl Strategy<Value = u32> {
    1u32..=130
}

pub fn arb_tie_break() -> impl Strategy<Value = TieBreak> {
    prop_oneof![Just(TieBreak::DegRevLex), Just(TieBreak::Lex)]
}
