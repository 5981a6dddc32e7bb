use std::sync::Arc;

use sact_core::structure::{DEFAULT_FAMILY_BOUND, DEFAULT_SUMMAND_SIZE};
use sact_core::{
    acc_cyclic_subacts_report, cyclic_acts, enumerate_acts, enumerate_left_congruences,
    enumerate_monoids_up_to, is_compact_bounded, is_cyclic, is_hollow, is_left_0perfect,
    is_left_0steady, is_left_perfect, is_left_steady, Category, Monoid, Verdict,
};

fn monoids(n: usize) -> Vec<Arc<Monoid>> {
    enumerate_monoids_up_to(n)
        .unwrap()
        .into_iter()
        .map(Arc::new)
        .collect()
}

#[test]
fn perfect_and_zero_perfect_agree() {
    for m in monoids(4) {
        let p = is_left_perfect(&m, 4).unwrap();
        let z = is_left_0perfect(&m, 4).unwrap();
        assert_eq!(p.verdict, Verdict::HoldsWithinBounds);
        assert_eq!(z.verdict, p.verdict);
        assert!(p.recheck().is_ok() && z.recheck().is_ok());
    }
}

#[test]
fn steady_sweeps_find_no_hollow_non_cyclic_act() {
    for m in monoids(4) {
        let steady = is_left_steady(&m, 5).unwrap();
        let zero_steady = is_left_0steady(&m, 5).unwrap();
        let acc = acc_cyclic_subacts_report(&m, 5).unwrap();
        assert_eq!(steady.verdict, Verdict::HoldsWithinBounds);
        assert_eq!(zero_steady.verdict, Verdict::HoldsWithinBounds);
        assert_eq!(acc.verdict, Verdict::Holds);
        let profile = acc.chain_profile.unwrap();
        assert!(profile.len() - 1 <= m.size());
    }
}

#[test]
fn cyclic_acts_are_quotients_of_the_monoid() {
    for m in monoids(4) {
        for c in Category::ALL {
            let acts = cyclic_acts(&m, c).unwrap();
            assert!(acts.len() <= enumerate_left_congruences(&m).unwrap().len());
            assert_eq!(acts[0].size(), m.size());
            assert_eq!(acts.last().unwrap().size(), 1);
            assert!(acts.iter().all(|a| is_cyclic(a).unwrap().is_some()));
            let all_cyclic = enumerate_acts(&m, m.size(), c)
                .unwrap()
                .into_iter()
                .filter(|a| !a.is_empty() && is_cyclic(a).unwrap().is_some())
                .count();
            assert_eq!(acts.len(), all_cyclic);
        }
    }
}

#[test]
fn zeroed_compactness_is_hollowness_at_small_sizes() {
    for m in monoids(3) {
        for a in enumerate_acts(&m, 4, Category::Zeroed).unwrap() {
            let compact = is_compact_bounded(
                &a,
                Category::Zeroed,
                DEFAULT_FAMILY_BOUND,
                DEFAULT_SUMMAND_SIZE,
            )
            .unwrap();
            assert_eq!(compact, is_hollow(&a, Category::Zeroed).unwrap(), "{a:?}");
        }
    }
}
