//! Randomized cross-module properties. The exhaustive small-order laws live
//! in `quandles::verify`; these cover what exhaustion cannot reach cheaply:
//! arbitrary relabellings, arbitrary chains, and text round-trips.

use proptest::prelude::*;
use quandles::enumerate::{are_isomorphic, canonical_form, enumerate_quandles};
use quandles::text::{format_quandle, parse_quandle};
use quandles::{Quandle, Sign};

fn universe() -> Vec<Quandle> {
    (1..=5).flat_map(|n| enumerate_quandles(n).unwrap()).collect()
}

fn arb_quandle() -> impl Strategy<Value = Quandle> {
    let all = universe();
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn arb_quandle_with_perm() -> impl Strategy<Value = (Quandle, Vec<usize>)> {
    arb_quandle().prop_flat_map(|q| {
        let n = q.order();
        (Just(q), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
    })
}

proptest! {
    #[test]
    fn canonical_form_ignores_labelling((q, perm) in arb_quandle_with_perm()) {
        let relabelled = q.relabel(&perm);
        prop_assert_eq!(
            canonical_form(&q).unwrap(),
            canonical_form(&relabelled).unwrap()
        );
        prop_assert!(are_isomorphic(&q, &relabelled).is_some());
    }

    #[test]
    fn isomorphism_witness_transports_the_table((q, perm) in arb_quandle_with_perm()) {
        let relabelled = q.relabel(&perm);
        let found = are_isomorphic(&q, &relabelled).unwrap();
        prop_assert_eq!(q.relabel(&found), relabelled);
    }

    #[test]
    fn text_round_trip(q in arb_quandle()) {
        let text = format_quandle(&q);
        let parsed = parse_quandle(&text).unwrap();
        prop_assert_eq!(&parsed, &q);
        // canonical output is a fixpoint of parse ∘ format
        prop_assert_eq!(format_quandle(&parsed), text);
    }

    #[test]
    fn chains_fold_left(
        (q, raw_steps) in arb_quandle().prop_flat_map(|q| {
            let n = q.order();
            let steps = proptest::collection::vec((any::<bool>(), 0..n), 0..12);
            (Just(q), steps)
        }),
        start_index in any::<proptest::sample::Index>(),
    ) {
        let x = start_index.index(q.order());
        let steps: Vec<(Sign, usize)> = raw_steps
            .iter()
            .map(|&(plus, y)| (if plus { Sign::Plus } else { Sign::Minus }, y))
            .collect();
        let mut acc = x;
        for &(sign, y) in &steps {
            acc = match sign {
                Sign::Plus => q.op(acc, y),
                Sign::Minus => q.inv_op(acc, y),
            };
        }
        prop_assert_eq!(q.chain(x, &steps), acc);
        prop_assert_eq!(q.chain(x, &[]), x);
    }

    #[test]
    fn products_project_componentwise(
        (q1, q2) in (arb_quandle(), arb_quandle()),
        a in any::<proptest::sample::Index>(),
        b in any::<proptest::sample::Index>(),
    ) {
        let p = q1.product(&q2).unwrap();
        prop_assume!(p.order() > 0);
        let n2 = q2.order();
        let x = a.index(p.order());
        let y = b.index(p.order());
        let z = p.op(x, y);
        prop_assert_eq!(z / n2, q1.op(x / n2, y / n2));
        prop_assert_eq!(z % n2, q2.op(x % n2, y % n2));
    }
}
