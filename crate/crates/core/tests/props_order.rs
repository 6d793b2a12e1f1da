//! Laws of the weight-compatible orders, cross-checked against a naive
//! restatement of their definitions.

mod common;

use core::cmp::Ordering;

use common::{arb_len, arb_tie_break, arb_word};
use cosetforge_core::{TieBreak, WeightCompatibleOrder, Word};
use proptest::prelude::*;

/// The definition, stated directly: weight first, then scan coordinates
/// ascending for the first disagreement.
fn naive_compare(tie: TieBreak, a: &Word, b: &Word) -> Ordering {
    match a.weight().cmp(&b.weight()) {
        Ordering::Equal => {}
        other => return other,
    }
    for i in 1..=a.len() {
        match (a.get(i), b.get(i)) {
            (true, false) => {
                return match tie {
                    TieBreak::DegRevLex => Ordering::Less,
                    TieBreak::Lex => Ordering::Greater,
                }
            }
            (false, true) => {
                return match tie {
                    TieBreak::DegRevLex => Ordering::Greater,
                    TieBreak::Lex => Ordering::Less,
                }
            }
            _ => {}
        }
    }
    Ordering::Equal
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn compare_matches_naive_definition((tie, a, b) in (arb_tie_break(), arb_len())
        .prop_flat_map(|(tie, n)| (Just(tie), arb_word(n), arb_word(n))))
    {
        let order = WeightCompatibleOrder::new(a.len(), tie);
        prop_assert_eq!(order.compare(&a, &b), naive_compare(tie, &a, &b));
    }

    #[test]
    fn keys_realise_the_order((tie, a, b) in (arb_tie_break(), arb_len())
        .prop_flat_map(|(tie, n)| (Just(tie), arb_word(n), arb_word(n))))
    {
        let order = WeightCompatibleOrder::new(a.len(), tie);
        prop_assert_eq!(order.sort_key(&a).cmp(&order.sort_key(&b)), order.compare(&a, &b));
        prop_assert_eq!(&order.word_of_key(&order.sort_key(&a)), &a);
        prop_assert_eq!(order.sort_key(&a).weight(), a.weight());
    }

    #[test]
    fn weight_compatibility((tie, a, b) in (arb_tie_break(), arb_len())
        .prop_flat_map(|(tie, n)| (Just(tie), arb_word(n), arb_word(n))))
    {
        let order = WeightCompatibleOrder::new(a.len(), tie);
        if a.weight() < b.weight() {
            prop_assert_eq!(order.compare(&a, &b), Ordering::Less);
        }
        // Corollary: adding any coordinate moves a word strictly later.
        for i in (1..=a.len()).filter(|&i| !a.get(i)).take(4) {
            prop_assert_eq!(order.compare(&a, &a.with_flipped(i)), Ordering::Less);
        }
    }

    #[test]
    fn sorting_agrees_with_min((tie, words) in (arb_tie_break(), 1u32..=64)
        .prop_flat_map(|(tie, n)| {
            (Just(tie), proptest::collection::vec(common::arb_word(n), 1..20))
        }))
    {
        let order = WeightCompatibleOrder::new(words[0].len(), tie);
        let mut sorted = words.clone();
        order.sort(&mut sorted);
        prop_assert!(sorted
            .windows(2)
            .all(|p| order.compare(&p[0], &p[1]) != Ordering::Greater));
        prop_assert_eq!(order.min_of(words.iter().cloned()), Some(sorted[0].clone()));
    }
}

#[test]
fn exhaustive_small_n_total_order() {
    for tie in [TieBreak::DegRevLex, TieBreak::Lex] {
        let n = 8;
        let order = WeightCompatibleOrder::new(n, tie);
        let mut all: Vec<Word> = (0..1u64 << n).map(|b| Word::from_u64(n, b)).collect();
        order.sort(&mut all);
        for pair in all.windows(2) {
            assert_eq!(order.compare(&pair[0], &pair[1]), Ordering::Less);
            assert_eq!(naive_compare(tie, &pair[0], &pair[1]), Ordering::Less);
        }
        // Every proper subword sits strictly earlier.
        for w in &all {
            for i in w.support() {
                let sub = w.with_flipped(i);
                assert_eq!(order.compare(&sub, w), Ordering::Less);
            }
        }
    }
}
