mod oracle;

use std::collections::HashSet;
use std::sync::Arc;

use itertools::Itertools;
use sact_core::fixtures;
use sact_core::{
    all_subacts, coproduct, enumerate_acts, enumerate_homs, enumerate_monoids_up_to, functor_f_mor,
    functor_f_obj, is_isomorphic, product, rees_quotient, Act, ActHom, Category,
};

fn pools(max_act: usize) -> Vec<Vec<Act>> {
    enumerate_monoids_up_to(3)
        .unwrap()
        .into_iter()
        .map(|m| {
            let m = Arc::new(m);
            enumerate_acts(&m, max_act, Category::Plain)
                .unwrap()
                .into_iter()
                .filter(|a| !a.is_empty())
                .collect()
        })
        .collect()
}

#[test]
fn coproducts_have_the_universal_property() {
    for pool in pools(2) {
        for c in Category::ALL {
            let pool: Vec<Act> = pool.iter().filter_map(|a| a.view(c).ok()).collect();
            for k in 1..=3 {
                for family in pool.iter().combinations_with_replacement(k) {
                    let parts: Vec<Act> = family.into_iter().cloned().collect();
                    let (sum, tag) = coproduct(c, &parts).unwrap();
                    for t in &pool {
                        let from_sum = oracle::homs(&sum, t, c);
                        let expected: usize =
                            parts.iter().map(|p| oracle::homs(p, t, c).len()).product();
                        assert_eq!(from_sum.len(), expected);
                        // distinct mediating maps restrict to distinct cocones
                        let cocones: HashSet<Vec<Vec<usize>>> = from_sum
                            .iter()
                            .map(|h| {
                                tag.injections
                                    .iter()
                                    .map(|inj| inj.map().iter().map(|&x| h[x]).collect())
                                    .collect()
                            })
                            .collect();
                        assert_eq!(cocones.len(), expected);
                    }
                }
            }
        }
    }
}

#[test]
fn functor_preserves_coproducts() {
    for pool in pools(3) {
        for k in 1..=3 {
            for family in pool.iter().combinations_with_replacement(k) {
                let parts: Vec<Act> = family.into_iter().cloned().collect();
                let (sum, _) = coproduct(Category::Plain, &parts).unwrap();
                let (f_sum, _) = functor_f_obj(&sum).unwrap();
                let images: Vec<Act> = parts.iter().map(|p| functor_f_obj(p).unwrap().0).collect();
                let (wedge, _) = coproduct(Category::Zeroed, &images).unwrap();
                assert!(is_isomorphic(&f_sum, &wedge).is_some());
            }
        }
    }
}

#[test]
fn functor_size_and_idempotence() {
    for pool in pools(4) {
        for a in pool {
            let (fa, pi) = functor_f_obj(&a).unwrap();
            assert_eq!(fa.size(), a.size() - a.zero_elements().len() + 1);
            assert!(pi.is_surjective());
            let (ffa, _) = functor_f_obj(&fa).unwrap();
            assert!(is_isomorphic(&ffa, &fa).is_some());
        }
    }
}

#[test]
fn functor_respects_composition() {
    for pool in pools(2) {
        for (a, b, c) in pool
            .iter()
            .cartesian_product(&pool)
            .cartesian_product(&pool)
            .map(|((a, b), c)| (a, b, c))
        {
            for f in enumerate_homs(a, b, Category::Plain).unwrap() {
                for g in enumerate_homs(b, c, Category::Plain).unwrap() {
                    let lhs = functor_f_mor(&f.then(&g).unwrap()).unwrap();
                    let rhs = functor_f_mor(&f)
                        .unwrap()
                        .then(&functor_f_mor(&g).unwrap())
                        .unwrap();
                    assert_eq!(lhs.map(), rhs.map());
                }
            }
        }
    }
}

#[test]
fn functor_is_not_left_exact_on_products() {
    let b = fixtures::act_b();
    let (fbb, _) =
        functor_f_obj(&product(Category::Plain, &[b.clone(), b.clone()]).unwrap()).unwrap();
    let (fb, _) = functor_f_obj(&b).unwrap();
    let fb_fb = product(Category::Zeroed, &[fb.clone(), fb]).unwrap();
    assert_eq!((fbb.size(), fb_fb.size()), (6, 4));
}

#[test]
fn zeroed_homs_are_the_zero_preserving_plain_homs() {
    for pool in pools(3) {
        let zeroed: Vec<Act> = pool
            .iter()
            .filter_map(|a| a.view(Category::Zeroed).ok())
            .collect();
        for (a, b) in zeroed.iter().cartesian_product(&zeroed) {
            let z: HashSet<Vec<usize>> = enumerate_homs(a, b, Category::Zeroed)
                .unwrap()
                .iter()
                .map(|h| h.map().to_vec())
                .collect();
            let (pa, pb) = (
                a.view(Category::Plain).unwrap(),
                b.view(Category::Plain).unwrap(),
            );
            let p: HashSet<Vec<usize>> = enumerate_homs(&pa, &pb, Category::Plain)
                .unwrap()
                .iter()
                .map(|h| h.map().to_vec())
                .collect();
            assert_eq!(z, p);
        }
    }
}

#[test]
fn homs_killing_a_subact_factor_through_its_rees_quotient() {
    for pool in pools(3) {
        for (a, t) in pool.iter().cartesian_product(&pool) {
            for sub in all_subacts(a).into_iter().filter(|s| !s.is_empty()) {
                let (q, pi) = rees_quotient(a, &sub).unwrap();
                let homs_q = enumerate_homs(&q, t, Category::Plain).unwrap();
                for f in enumerate_homs(a, t, Category::Plain).unwrap() {
                    let kills = sub.members().map(|x| f.apply(x)).all_equal();
                    let factors: Vec<&ActHom> = homs_q
                        .iter()
                        .filter(|g| a.elements().all(|x| g.apply(pi.apply(x)) == f.apply(x)))
                        .collect();
                    assert_eq!(factors.len(), usize::from(kills));
                }
            }
        }
    }
}
