//! Leader codewords on random codes: oracle equivalence, witnesses, weight
//! bounds, and test-set behaviour.

mod common;

use common::{arb_code, arb_tie_break};
use cosetforge_core::leader_codewords::leader_codewords_of_table;
use cosetforge_core::oracle::{
    brute_leader_codewords, greedy_min_testset, verify_test_set, OracleLimits,
};
use cosetforge_core::{compute_coset_table, WeightCompatibleOrder};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn engine_equals_oracle((code, tie) in (arb_code(4, 12), arb_tie_break())) {
        let order = WeightCompatibleOrder::new(code.n(), tie);
        let table = compute_coset_table(&code, &order).unwrap();
        let lead = leader_codewords_of_table(&table);
        let brute = brute_leader_codewords(&code, &order, &OracleLimits::default()).unwrap();
        prop_assert_eq!(lead.sorted_words(), brute.words);
        prop_assert_eq!(lead.l1_subset(), brute.l1);
    }

    #[test]
    fn witnesses_certify_membership(code in arb_code(4, 12)) {
        let order = WeightCompatibleOrder::degrevlex(code.n());
        let table = compute_coset_table(&code, &order).unwrap();
        let lead = leader_codewords_of_table(&table);
        for entry in &lead {
            let w = &entry.witness;
            prop_assert!(!w.n1.get(w.coord));
            prop_assert!(table.is_leader(&w.n1));
            prop_assert!(table.is_leader(&w.n2));
            let y = w.n1.with_flipped(w.coord);
            prop_assert!(y.weight() > table.record_of(&y).weight);
            prop_assert_eq!(&(&y ^ &w.n2), &entry.word);
            prop_assert!(code.is_codeword(&entry.word));
            prop_assert!(!entry.word.is_zero());
        }
    }

    #[test]
    fn weight_bound_and_min_weight_membership(code in arb_code(4, 10)) {
        let order = WeightCompatibleOrder::degrevlex(code.n());
        let table = compute_coset_table(&code, &order).unwrap();
        let lead = leader_codewords_of_table(&table);
        prop_assert!(lead.verify_weight_bound(table.covering_radius()));
        // Every minimum-weight codeword is a leader codeword.
        let d = code.min_distance().unwrap();
        for c in code.codewords().unwrap() {
            if c.weight() == d {
                prop_assert!(lead.contains(&c), "missing minimal codeword {}", c);
            }
        }
    }

    #[test]
    fn l_and_l1_are_test_sets(code in arb_code(4, 12)) {
        let order = WeightCompatibleOrder::degrevlex(code.n());
        let lead = cosetforge_core::compute_leader_codewords(&code, &order).unwrap();
        let limits = OracleLimits::default();
        prop_assert!(verify_test_set(&code, &lead.sorted_words(), &limits).unwrap());
        prop_assert!(verify_test_set(&code, &lead.l1_subset(), &limits).unwrap());
    }

    #[test]
    fn greedy_subsets_stay_inside_l(code in arb_code(4, 10)) {
        let order = WeightCompatibleOrder::degrevlex(code.n());
        let lead = cosetforge_core::compute_leader_codewords(&code, &order).unwrap();
        let limits = OracleLimits::default();
        let picked = greedy_min_testset(&code, &order, &limits).unwrap();
        prop_assert!(picked.iter().all(|z| lead.contains(z)));
        prop_assert!(verify_test_set(&code, &picked, &limits).unwrap());
        prop_assert!(picked.len() <= lead.len());
    }
}
