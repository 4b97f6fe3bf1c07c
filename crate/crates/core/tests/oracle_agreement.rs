mod common;

use common::*;
use slt_core::{congruence_closure, freest_model, oracle_equiv, Guards, Model, Theory};

#[test]
fn freest_model_matches_congruence_closure_up_to_six_constants() {
    let g = Guards::default();
    let mut rng = rng(0x5eed);
    for n in 1..=6 {
        let cases = if n <= 4 { 150 } else { 40 };
        for _ in 0..cases {
            let (r, m) = presented_model(&mut rng, n);
            let oracle = congruence_closure(table(n), &r, &g).unwrap();
            let verdict = oracle_equiv(&m, &oracle, &g).unwrap();
            assert!(
                verdict.agrees(),
                "n={n} r={r:?} -> {:?}",
                verdict.counterexample
            );
            let pairs = ((1u64 << n) - 1).pow(2);
            assert_eq!(verdict.pairs_checked, pairs);
        }
    }
}

#[test]
fn constructive_atomization_spawns_the_quotient() {
    let g = Guards::default();
    let mut rng = rng(7);
    for n in 1..=5 {
        for _ in 0..40 {
            let (r, m) = presented_model(&mut rng, n);
            let oracle = congruence_closure(table(n), &r, &g).unwrap();
            let built = oracle.atomize();
            assert_eq!(Theory::of_model(&built, &g).unwrap(), oracle.theory());
            assert_eq!(Theory::of_model(&m, &g).unwrap(), oracle.theory());
        }
    }
}

#[test]
fn disagreement_is_reported_in_lex_order() {
    let g = Guards::default();
    let t = table(2);
    let r = [le(&t, &["c0"], &["c1"])];
    let oracle = congruence_closure(t.clone(), &r, &g).unwrap();
    let verdict = oracle_equiv(&Model::freest(t.clone()), &oracle, &g).unwrap();
    let ce = verdict.counterexample.unwrap();
    assert_eq!(ce.duple, le(&t, &["c0"], &["c1"]));
    assert!(!ce.model_says && ce.oracle_says);
}

#[test]
fn class_counts_of_small_presentations() {
    let g = Guards::default();
    let t = table(3);
    let free = congruence_closure(t.clone(), &[], &g).unwrap();
    assert_eq!(free.class_count(), 7);
    let chain = [le(&t, &["c0"], &["c1"]), le(&t, &["c1"], &["c2"])];
    let o = congruence_closure(t.clone(), &chain, &g).unwrap();
    assert_eq!(o.class_count(), 3);
    let m = freest_model(t.clone(), &chain).unwrap();
    assert!(oracle_equiv(&m, &o, &g).unwrap().agrees());
}
