//! Coproducts and products in both categories, the zero-gluing functor `F`
//! and its reflection property, zero adjunction and substantial summands.

use std::sync::Arc;

use itertools::Itertools;

use crate::act::{Act, Category};
use crate::error::{Error, Result};
use crate::hom::ActHom;
use crate::monoid::{Monoid, PlainMonoid};
use crate::structure::decompose;
use crate::subact::{rees_quotient, Subact};

/// Default cap on the number of factors accepted by [`product`].
pub const MAX_PRODUCT_FACTORS: usize = 4;

/// The injections of a coproduct, one per summand.
///
/// In the plain category the images partition the carrier; in the zeroed
/// category any two images meet exactly in `θ`.
#[derive(Clone, Debug)]
pub struct CoproductTag {
    pub category: Category,
    pub injections: Vec<ActHom>,
    owner: Vec<Option<usize>>,
}

impl CoproductTag {
    /// Index of the summand whose injection hits `x`; `None` for the shared
    /// zero of a zeroed coproduct.
    pub fn summand_of(&self, x: usize) -> Option<usize> {
        self.owner[x]
    }
}

fn check_same_monoid(parts: &[Act]) -> Result<()> {
    match parts.split_first() {
        Some((first, rest)) if rest.iter().any(|p| !p.same_monoid(first)) => {
            Err(Error::MonoidMismatch)
        }
        _ => Ok(()),
    }
}

/// Coproduct of a nonempty family. See [`coproduct_over`] for the empty one.
///
/// Plain: disjoint union, `Σ|Aᵢ|` elements labelled `(i,x)`. Zeroed: the
/// wedge, `Σ(|Aᵢ|-1) + 1` elements, the glued zero labelled `θ`.
pub fn coproduct(category: Category, parts: &[Act]) -> Result<(Act, CoproductTag)> {
    let first = parts.first().ok_or(Error::EmptyFamily)?;
    coproduct_over(first.monoid_arc(), category, parts)
}

/// Coproduct over an explicit monoid, so that the empty family yields the
/// initial object (`∅` or `θ`).
pub fn coproduct_over(
    monoid: &Arc<Monoid>,
    category: Category,
    parts: &[Act],
) -> Result<(Act, CoproductTag)> {
    check_same_monoid(parts)?;
    if parts.first().is_some_and(|p| *p.monoid() != **monoid) {
        return Err(Error::MonoidMismatch);
    }
    let parts: Vec<Act> = parts
        .iter()
        .map(|p| p.view(category))
        .collect::<Result<_>>()?;
    let ms = monoid.size();

    // position of (part, element) in the result
    let mut pos: Vec<Vec<usize>> = Vec::with_capacity(parts.len());
    let mut labels = Vec::new();
    let mut owner = Vec::new();
    if category == Category::Zeroed {
        labels.push("θ".to_owned());
        owner.push(None);
    }
    for (i, p) in parts.iter().enumerate() {
        let mut here = Vec::with_capacity(p.size());
        for a in p.elements() {
            if Some(a) == p.zero() {
                here.push(0);
            } else {
                here.push(labels.len());
                labels.push(format!("({i},{})", p.label(a)));
                owner.push(Some(i));
            }
        }
        pos.push(here);
    }
    let n = labels.len();
    let mut action = vec![0; ms * n];
    for s in monoid.elements() {
        if category == Category::Zeroed {
            action[s * n] = 0;
        }
        for (i, p) in parts.iter().enumerate() {
            for a in p.elements() {
                action[s * n + pos[i][a]] = pos[i][p.act(s, a)];
            }
        }
    }
    let total = Arc::new(Act::from_parts_unchecked(
        monoid.clone(),
        labels,
        action,
        category,
    ));
    let injections = parts
        .into_iter()
        .zip(pos)
        .map(|(p, map)| ActHom::new_unchecked(Arc::new(p), total.clone(), map, category))
        .collect();
    Ok((
        Act::clone(&total),
        CoproductTag {
            category,
            injections,
            owner,
        },
    ))
}

/// Cartesian product with componentwise action, at most
/// [`MAX_PRODUCT_FACTORS`] factors.
pub fn product(category: Category, parts: &[Act]) -> Result<Act> {
    product_bounded(category, parts, MAX_PRODUCT_FACTORS)
}

/// [`product`] with an explicit factor limit. Tuples are ordered
/// lexicographically; in the zeroed category the zero is the tuple of zeros.
pub fn product_bounded(category: Category, parts: &[Act], max_factors: usize) -> Result<Act> {
    let first = parts.first().ok_or(Error::EmptyFamily)?;
    if parts.len() > max_factors {
        return Err(Error::TooManyFactors {
            limit: max_factors,
            got: parts.len(),
        });
    }
    check_same_monoid(parts)?;
    let parts: Vec<Act> = parts
        .iter()
        .map(|p| p.view(category))
        .collect::<Result<_>>()?;
    let tuples: Vec<Vec<usize>> = parts
        .iter()
        .map(|p| p.elements())
        .multi_cartesian_product()
        .collect();
    let n = tuples.len();
    let index_of = |t: &[usize]| {
        t.iter()
            .zip(&parts)
            .fold(0, |acc, (&x, p)| acc * p.size() + x)
    };
    let labels = tuples
        .iter()
        .map(|t| {
            let inner = t.iter().zip(&parts).map(|(&x, p)| p.label(x)).join(",");
            format!("({inner})")
        })
        .collect();
    let monoid = first.monoid_arc().clone();
    let mut action = Vec::with_capacity(monoid.size() * n);
    let mut image = vec![0; parts.len()];
    for s in monoid.elements() {
        for t in &tuples {
            for (k, (&x, p)) in t.iter().zip(&parts).enumerate() {
                image[k] = p.act(s, x);
            }
            action.push(index_of(&image));
        }
    }
    Ok(Act::from_parts_unchecked(monoid, labels, action, category))
}

/// `F(A) = A/0A` in the zeroed category, with the projection `π_{0A}`.
///
/// `π_{0A}` is returned as a plain morphism (its source may have several
/// zeros); its target is `F(A)` viewed in the plain category.
/// `|F(A)| = |A| - |0A| + 1`.
pub fn functor_f_obj(act: &Act) -> Result<(Act, ActHom)> {
    let plain = act.view(Category::Plain)?;
    if plain.is_empty() {
        return Err(Error::EmptyAct);
    }
    let (q, pi) = rees_quotient(&plain, &plain.zero_set())?;
    Ok((q.view(Category::Zeroed)?, pi))
}

/// `F(α)`: the unique zeroed morphism with `F(α)∘π_{0A} = π_{0B}∘α`,
/// i.e. `[a] ↦ [α(a)]`.
pub fn functor_f_mor(alpha: &ActHom) -> Result<ActHom> {
    let (fa, pa) = functor_f_obj(alpha.source())?;
    let (fb, pb) = functor_f_obj(alpha.target())?;
    let mut map = vec![usize::MAX; fa.size()];
    for a in alpha.source().elements() {
        map[pa.apply(a)] = pb.apply(alpha.apply(a));
    }
    ActHom::new(Arc::new(fa), Arc::new(fb), map, Category::Zeroed)
}

/// Factors a plain morphism `f: A → X` with `X` having a single zero
/// through `π_{0A}`: returns the unique `g: F(A) → X` with `g∘π_{0A} = f`.
pub fn reflection_factorization(f: &ActHom) -> Result<ActHom> {
    let x = f.target().view(Category::Zeroed)?;
    let (fa, pa) = functor_f_obj(f.source())?;
    let mut map = vec![usize::MAX; fa.size()];
    for a in f.source().elements() {
        let slot = &mut map[pa.apply(a)];
        debug_assert!(*slot == usize::MAX || *slot == f.apply(a));
        *slot = f.apply(a);
    }
    ActHom::new(Arc::new(fa), Arc::new(x), map, Category::Zeroed)
}

/// Adjoins a new absorbing element labelled `0`.
pub fn adjoin_zero(m: &PlainMonoid) -> Result<Monoid> {
    adjoin_zero_labeled(m, "0")
}

/// Adjoins a new absorbing element with the given label.
pub fn adjoin_zero_labeled(m: &PlainMonoid, label: &str) -> Result<Monoid> {
    if m.labels().iter().any(|l| l == label) {
        return Err(Error::LabelClash(label.to_owned()));
    }
    let n = m.size();
    let mut labels = m.labels().to_vec();
    labels.push(label.to_owned());
    let table = (0..=n)
        .map(|x| {
            (0..=n)
                .map(|y| if x == n || y == n { n } else { m.mul(x, y) })
                .collect()
        })
        .collect();
    Monoid::new(labels, table, m.one(), n)
}

/// `A ≅ A' ⊔ θ ⊔ ... ⊔ θ` with `A'` the substantial summand.
#[derive(Clone, Debug)]
pub struct SubstantialDecomposition {
    pub substantial: Subact,
    /// Zero elements split off as separate one-element summands, ascending.
    pub discrete_zeros: Vec<usize>,
    /// The isomorphism `substantial ⊔ θ ⊔ ... ⊔ θ → A`, checked on construction.
    pub reconstruction: ActHom,
}

/// Splits off every one-element zero component.
///
/// The substantial summand is the union of the indecomposable components
/// that are not contained in `0A`. If every component is a single zero, the
/// first one is kept as the substantial summand.
pub fn substantial_summand(act: &Act) -> Result<SubstantialDecomposition> {
    let plain = act.view(Category::Plain)?;
    let dec = decompose(&plain, Category::Plain)?;
    let (discrete, rest): (Vec<&Subact>, Vec<&Subact>) = dec
        .components
        .iter()
        .partition(|c| c.members().all(|x| plain.is_zero_element(x)));
    let (substantial, discrete_zeros) = if rest.is_empty() {
        let mut zeros: Vec<usize> = discrete.iter().flat_map(|c| c.members()).collect();
        zeros.sort_unstable();
        let keep = zeros.remove(0);
        (Subact::from_indices_unchecked(plain.size(), [keep]), zeros)
    } else {
        let sub = rest.iter().fold(
            Subact::from_indices_unchecked(plain.size(), []),
            |acc, c| acc.union(c),
        );
        let mut zeros: Vec<usize> = discrete.iter().flat_map(|c| c.members()).collect();
        zeros.sort_unstable();
        (sub, zeros)
    };
    let mut parts = vec![substantial.to_act(&plain)];
    parts.extend(
        discrete_zeros
            .iter()
            .map(|_| Act::theta(plain.monoid_arc().clone(), Category::Plain)),
    );
    let (glued, _) = coproduct(Category::Plain, &parts)?;
    let map: Vec<usize> = substantial
        .members()
        .chain(discrete_zeros.iter().copied())
        .collect();
    let reconstruction = ActHom::new(Arc::new(glued), Arc::new(plain), map, Category::Plain)?;
    debug_assert!(reconstruction.is_bijective());
    Ok(SubstantialDecomposition {
        substantial,
        discrete_zeros,
        reconstruction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::hom::{enumerate_homs, is_isomorphic};
    use crate::projectivity::idempotents;

    #[test]
    fn coproduct_sizes() {
        let b = fixtures::act_b();
        let (c, tag) = coproduct(
            Category::Plain,
            &[fixtures::act_a(Category::Plain), fixtures::a1()],
        )
        .unwrap();
        assert_eq!(c.size(), 3);
        assert!(is_isomorphic(&c, &b.relabel(c.labels().to_vec()).unwrap()).is_some());
        assert_eq!(tag.injections.len(), 2);

        let a0 = fixtures::act_a(Category::Zeroed);
        let (w, tag) = coproduct(Category::Zeroed, &[a0.clone(), a0]).unwrap();
        assert_eq!(w.size(), 3);
        assert_eq!(tag.summand_of(0), None);
        assert!(is_isomorphic(&w, &fixtures::act_w(Category::Zeroed)).is_some());

        let (d, _) = coproduct(Category::Plain, &[fixtures::a1(), fixtures::a1()]).unwrap();
        assert!(is_isomorphic(&d, &fixtures::a2()).is_some());
    }

    #[test]
    fn empty_coproducts_are_initial_objects() {
        let s = fixtures::s2();
        let (e, _) = coproduct_over(&s, Category::Plain, &[]).unwrap();
        assert!(e.is_empty());
        let (t, _) = coproduct_over(&s, Category::Zeroed, &[]).unwrap();
        assert_eq!(t.size(), 1);
        assert_eq!(
            coproduct(Category::Plain, &[]).unwrap_err(),
            Error::EmptyFamily
        );
        // ∅ is a unit for the plain coproduct
        let w = fixtures::act_w(Category::Plain);
        let (c, _) = coproduct(Category::Plain, &[w.clone(), Act::empty(s)]).unwrap();
        assert!(is_isomorphic(&c, &w.relabel(c.labels().to_vec()).unwrap()).is_some());
    }

    #[test]
    fn product_sizes() {
        let b = fixtures::act_b();
        let bb = product(Category::Plain, &[b.clone(), b.clone()]).unwrap();
        assert_eq!(bb.size(), 9);
        let a = fixtures::act_a(Category::Zeroed);
        assert_eq!(
            product(Category::Zeroed, &[a.clone(), a.clone()])
                .unwrap()
                .size(),
            4
        );
        let unary = product(Category::Plain, std::slice::from_ref(&b)).unwrap();
        assert!(is_isomorphic(&unary, &b.relabel(unary.labels().to_vec()).unwrap()).is_some());
        assert!(matches!(
            product(Category::Plain, &vec![b; 5]),
            Err(Error::TooManyFactors { limit: 4, got: 5 })
        ));
    }

    #[test]
    fn functor_on_objects() {
        let (f2, _) = functor_f_obj(&fixtures::a2()).unwrap();
        let (f1, _) = functor_f_obj(&fixtures::a1()).unwrap();
        assert_eq!(f2.size(), 1);
        assert!(is_isomorphic(&f1, &f2.relabel(f1.labels().to_vec()).unwrap()).is_some());

        let (fb, pi) = functor_f_obj(&fixtures::act_b()).unwrap();
        let a = fixtures::act_a(Category::Zeroed);
        assert!(is_isomorphic(&fb, &a.relabel(fb.labels().to_vec()).unwrap()).is_some());
        assert!(pi.is_surjective());

        let w = fixtures::act_w(Category::Plain);
        let (fw, pi) = functor_f_obj(&w).unwrap();
        assert_eq!(fw.labels(), w.labels());
        assert!(pi.is_bijective());

        assert_eq!(
            functor_f_obj(&Act::empty(fixtures::s2())).unwrap_err(),
            Error::EmptyAct
        );
    }

    #[test]
    fn functor_is_not_faithful() {
        let homs = enumerate_homs(&fixtures::a1(), &fixtures::a2(), Category::Plain).unwrap();
        assert_eq!(homs.len(), 2);
        let images: Vec<ActHom> = homs.iter().map(|h| functor_f_mor(h).unwrap()).collect();
        assert_eq!(images[0], images[1]);
    }

    #[test]
    fn functor_preserves_identities_and_composition() {
        let b = fixtures::act_b();
        let id = ActHom::identity(&b);
        let fid = functor_f_mor(&id).unwrap();
        assert_eq!(fid, ActHom::identity(fid.source()));

        // the square F(α)∘π_B = π_B∘α for the identity of B
        let (_, pi) = functor_f_obj(&b).unwrap();
        for x in b.elements() {
            assert_eq!(fid.apply(pi.apply(x)), pi.apply(id.apply(x)));
        }

        let homs = enumerate_homs(&b, &b, Category::Plain).unwrap();
        for f in &homs {
            for g in &homs {
                let fg = f.then(g).unwrap();
                let lhs = functor_f_mor(&fg).unwrap();
                let rhs = functor_f_mor(f)
                    .unwrap()
                    .then(&functor_f_mor(g).unwrap())
                    .unwrap();
                assert_eq!(lhs.map(), rhs.map());
            }
        }
    }

    #[test]
    fn reflection_factors_uniquely() {
        let b = fixtures::act_b();
        let a = fixtures::act_a(Category::Plain);
        let (fb, pi) = functor_f_obj(&b).unwrap();
        let az = a.view(Category::Zeroed).unwrap();
        for f in enumerate_homs(&b, &a, Category::Plain).unwrap() {
            let g = reflection_factorization(&f).unwrap();
            for x in b.elements() {
                assert_eq!(g.apply(pi.apply(x)), f.apply(x));
            }
            let matching = enumerate_homs(&fb, &az, Category::Zeroed)
                .unwrap()
                .into_iter()
                .filter(|h| b.elements().all(|x| h.apply(pi.apply(x)) == f.apply(x)))
                .count();
            assert_eq!(matching, 1);
        }
        for f in enumerate_homs(&fixtures::a2(), &a, Category::Plain).unwrap() {
            let g = reflection_factorization(&f).unwrap();
            assert_eq!(g.source().size(), 1);
        }
        // target with two zeros has no zeroed view
        let f = ActHom::identity(&b);
        assert!(matches!(
            reflection_factorization(&f),
            Err(Error::ZeroSetNotSingleton(_))
        ));
    }

    #[test]
    fn adjoining_a_zero() {
        let trivial = PlainMonoid::cyclic_group(1).unwrap();
        let s = adjoin_zero(&trivial).unwrap();
        assert_eq!(s, *fixtures::s2());

        let g0 = adjoin_zero(&PlainMonoid::cyclic_group(2).unwrap()).unwrap();
        assert_eq!(g0.size(), 3);
        let idem: Vec<&str> = idempotents(&g0).iter().map(|&e| g0.label(e)).collect();
        assert_eq!(idem, ["1", "0"]);

        let s2 = fixtures::s2().to_plain();
        assert_eq!(adjoin_zero(&s2), Err(Error::LabelClash("0".into())));
        let t = adjoin_zero_labeled(&s2, "z").unwrap();
        assert_eq!(t.label(t.zero()), "z");
        let old = t.index_of("0").unwrap();
        assert_ne!(t.mul(old, t.zero()), old);
    }

    #[test]
    fn substantial_summands() {
        let b = fixtures::act_b();
        let d = substantial_summand(&b).unwrap();
        assert_eq!(d.substantial.labels(&b), ["θA", "a"]);
        assert_eq!(d.discrete_zeros, vec![b.index_of("θS").unwrap()]);
        assert!(d.reconstruction.is_bijective());

        let w = fixtures::act_w(Category::Plain);
        let d = substantial_summand(&w).unwrap();
        assert_eq!(d.substantial, Subact::full(&w));
        assert!(d.discrete_zeros.is_empty());

        let a2 = fixtures::a2();
        let d = substantial_summand(&a2).unwrap();
        assert_eq!(d.substantial.labels(&a2), ["θ1"]);
        assert_eq!(d.discrete_zeros, vec![1]);
    }
}
