use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use proptest::sample::{select, Index};
use sact_core::{
    all_subacts, canonical_act, enumerate_acts, enumerate_monoids_up_to, is_isomorphic, Act,
    Category, Subact,
};

/// All nonempty plain acts of size at most 4 over each monoid of order at
/// most 3.
fn pools() -> &'static Vec<Vec<Act>> {
    static POOLS: OnceLock<Vec<Vec<Act>>> = OnceLock::new();
    POOLS.get_or_init(|| {
        enumerate_monoids_up_to(3)
            .unwrap()
            .into_iter()
            .map(|m| {
                let m = Arc::new(m);
                enumerate_acts(&m, 4, Category::Plain)
                    .unwrap()
                    .into_iter()
                    .filter(|a| !a.is_empty())
                    .collect()
            })
            .collect()
    })
}

fn relabel(a: &Act, perm: &[usize]) -> Act {
    // element x of `a` becomes element perm[x]
    let n = a.size();
    let mut rows = vec![vec![0; n]; a.monoid().size()];
    for s in a.monoid().elements() {
        for x in a.elements() {
            rows[s][perm[x]] = perm[a.act(s, x)];
        }
    }
    let mut labels = vec![String::new(); n];
    for x in a.elements() {
        labels[perm[x]] = a.label(x).to_owned();
    }
    Act::new(a.monoid_arc().clone(), labels, rows, a.category()).unwrap()
}

fn pick(pool: Index, act: Index) -> Act {
    let pool = pool.get(pools());
    act.get(pool).clone()
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn canonical_form_ignores_relabelling((a, perm) in (any::<Index>(), any::<Index>())
        .prop_map(|(p, i)| pick(p, i))
        .prop_flat_map(|a| { let n = a.size(); (Just(a), permutation(n)) }))
    {
        let b = relabel(&a, &perm);
        prop_assert!(is_isomorphic(&a, &b).is_some());
        prop_assert_eq!(canonical_act(&a), canonical_act(&b));
    }

    #[test]
    fn canonical_form_decides_isomorphism(p in any::<Index>(), i in any::<Index>(), j in any::<Index>(), shuffle in any::<bool>()) {
        let pool = p.get(pools());
        let a = i.get(pool);
        let mut b = j.get(pool).clone();
        if shuffle {
            let n = b.size();
            let perm: Vec<usize> = (0..n).map(|x| (x + 1) % n).collect();
            b = relabel(&b, &perm);
        }
        prop_assert_eq!(canonical_act(a) == canonical_act(&b), is_isomorphic(a, &b).is_some());
    }

    #[test]
    fn zero_set_is_a_subact_fixed_pointwise(p in any::<Index>(), i in any::<Index>()) {
        let a = pick(p, i);
        let z = a.zero_set();
        prop_assert!(z.is_closed_in(&a));
        for s in a.monoid().elements() {
            for x in z.members() {
                prop_assert_eq!(a.act(s, x), x);
            }
        }
    }

    #[test]
    fn subacts_are_closed_under_union_and_intersection(p in any::<Index>(), i in any::<Index>(), x in any::<Index>(), y in any::<Index>()) {
        let a = pick(p, i);
        let subs = all_subacts(&a);
        let (b, c): (&Subact, &Subact) = (x.get(&subs), y.get(&subs));
        prop_assert!(b.union(c).is_closed_in(&a));
        prop_assert!(b.intersection(c).is_closed_in(&a));
    }

    #[test]
    fn action_is_compatible(p in any::<Index>(), i in any::<Index>()) {
        let a = pick(p, i);
        let m = a.monoid();
        for (s, t, x) in itertools::iproduct!(m.elements(), m.elements(), a.elements()) {
            prop_assert_eq!(a.act(m.mul(s, t), x), a.act(s, a.act(t, x)));
        }
    }

    #[test]
    fn zeroed_view_exists_exactly_with_one_zero(p in any::<Index>(), i in any::<Index>(), c in select(Category::ALL.to_vec())) {
        let a = pick(p, i);
        let ok = a.view(c).is_ok();
        prop_assert_eq!(ok, c == Category::Plain || a.zero_elements().len() == 1);
    }
}
