//! The `verify-paper` battery: the worked examples and every structural
//! statement about the functor, projectivity and the classifiers, checked
//! over all small monoids and acts.

use std::sync::Arc;

use itertools::Itertools;
use sact_core::classifiers::{acc_cyclic_subacts_report, Property};
use sact_core::{
    coproduct, count_homs, enumerate_acts, enumerate_monoids_up_to, fixtures, functor_f_mor,
    functor_f_obj, is_cover, is_cyclic, is_hollow, is_isomorphic, is_left_0perfect,
    is_left_0steady, is_left_perfect, is_left_steady, is_projective, is_superfluous, product,
    projective_covers, substantial_summand, Act, Category, Monoid, Verdict,
};

use crate::workspace::Bounds;

/// Largest monoid order in the functor and lemma checks.
pub const LEMMA_MONOID_SIZE: usize = 3;
/// Largest act size in the coproduct check (families have up to three
/// members).
pub const COPRODUCT_ACT_SIZE: usize = 3;
pub const COPRODUCT_FAMILY_SIZE: usize = 3;
/// Largest act size in the projectivity and structural lemma checks.
pub const LEMMA_ACT_SIZE: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Outcome = Result<String, String>;
type Runner<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn monoids(max: usize) -> Vec<Arc<Monoid>> {
    enumerate_monoids_up_to(max)
        .expect("sizes within the enumeration cap")
        .into_iter()
        .map(Arc::new)
        .collect()
}

fn plain_acts(m: &Arc<Monoid>, size: usize) -> Vec<Act> {
    enumerate_acts(m, size, Category::Plain)
        .expect("sizes within the enumeration cap")
        .into_iter()
        .filter(|a| !a.is_empty())
        .collect()
}

fn show(a: &Act) -> String {
    format!("{a:?}")
}

/// `|Hom(A1, A2)| = 2` in the plain category but `F(A1) = F(A2) = θ`.
pub fn f_not_faithful() -> Outcome {
    let (a1, a2) = (fixtures::a1(), fixtures::a2());
    let plain = count_homs(&a1, &a2, Category::Plain).map_err(|e| e.to_string())?;
    let (f1, _) = functor_f_obj(&a1).map_err(|e| e.to_string())?;
    let (f2, _) = functor_f_obj(&a2).map_err(|e| e.to_string())?;
    let zeroed = count_homs(&f1, &f2, Category::Zeroed).map_err(|e| e.to_string())?;
    let detail = format!("hom counts {plain} -> {zeroed}");
    if (plain, zeroed) == (2, 1) {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// `|F(B × B)| = 6` while `|F(B) × F(B)| = 4`.
pub fn f_not_left_exact() -> Outcome {
    let b = fixtures::act_b();
    let bb = product(Category::Plain, &[b.clone(), b.clone()]).map_err(|e| e.to_string())?;
    let (fbb, _) = functor_f_obj(&bb).map_err(|e| e.to_string())?;
    let (fb, _) = functor_f_obj(&b).map_err(|e| e.to_string())?;
    let fb_fb = product(Category::Zeroed, &[fb.clone(), fb]).map_err(|e| e.to_string())?;
    let detail = format!("sizes {} vs {}", fbb.size(), fb_fb.size());
    if (fbb.size(), fb_fb.size()) == (6, 4) {
        Ok(detail)
    } else {
        Err(detail)
    }
}

/// `F(∐ Aᵢ) ≅ ∐₀ F(Aᵢ)` for every family.
pub fn f_preserves_coproducts() -> Outcome {
    let mut families = 0;
    for m in monoids(LEMMA_MONOID_SIZE) {
        let pool = plain_acts(&m, COPRODUCT_ACT_SIZE);
        for k in 1..=COPRODUCT_FAMILY_SIZE {
            for family in pool.iter().combinations_with_replacement(k) {
                let parts: Vec<Act> = family.into_iter().cloned().collect();
                let (sum, _) = coproduct(Category::Plain, &parts).map_err(|e| e.to_string())?;
                let (lhs, _) = functor_f_obj(&sum).map_err(|e| e.to_string())?;
                let images: Vec<Act> = parts
                    .iter()
                    .map(|p| functor_f_obj(p).map(|x| x.0))
                    .collect::<Result<_, _>>()
                    .map_err(|e| e.to_string())?;
                let (rhs, _) = coproduct(Category::Zeroed, &images).map_err(|e| e.to_string())?;
                if is_isomorphic(&lhs, &rhs).is_none() {
                    return Err(format!("family {}", parts.iter().map(show).join(" + ")));
                }
                families += 1;
            }
        }
    }
    Ok(format!("{families} families"))
}

/// `F(P)` is projective whenever `P` is.
pub fn f_preserves_projectives() -> Outcome {
    let mut count = 0;
    for m in monoids(LEMMA_MONOID_SIZE) {
        for p in plain_acts(&m, LEMMA_ACT_SIZE) {
            if is_projective(&p, Category::Plain)
                .map_err(|e| e.to_string())?
                .is_none()
            {
                continue;
            }
            let (fp, _) = functor_f_obj(&p).map_err(|e| e.to_string())?;
            if is_projective(&fp, Category::Zeroed)
                .map_err(|e| e.to_string())?
                .is_none()
            {
                return Err(format!("P = {}", show(&p)));
            }
            count += 1;
        }
    }
    Ok(format!("{count} projective acts"))
}

/// `(F(P), F(f))` is a projective cover whenever `(P, f)` is.
pub fn f_preserves_covers() -> Outcome {
    let mut count = 0;
    for m in monoids(LEMMA_MONOID_SIZE) {
        for a in plain_acts(&m, LEMMA_ACT_SIZE) {
            let covers = projective_covers(&a, Category::Plain, None).map_err(|e| e.to_string())?;
            if covers.is_empty() {
                return Err(format!("no projective cover found for {}", show(&a)));
            }
            for c in covers {
                let ff = functor_f_mor(&c.epi).map_err(|e| e.to_string())?;
                let projective = is_projective(ff.source(), Category::Zeroed)
                    .map_err(|e| e.to_string())?
                    .is_some();
                if !projective || is_cover(&ff).is_none() {
                    return Err(format!("cover of {}", show(&a)));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} covers"))
}

/// Cyclic acts have exactly one zero.
pub fn unique_zero() -> Outcome {
    let mut count = 0;
    for m in monoids(LEMMA_MONOID_SIZE) {
        for a in plain_acts(&m, LEMMA_ACT_SIZE) {
            if is_cyclic(&a).map_err(|e| e.to_string())?.is_some() {
                if a.zero_elements().len() != 1 {
                    return Err(show(&a));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} cyclic acts"))
}

/// Hollow acts are indecomposable, and when `0A` is superfluous, `A` is
/// hollow exactly when `F(A)` is.
pub fn hollow_lemmas() -> Outcome {
    let mut count = 0;
    for m in monoids(LEMMA_MONOID_SIZE) {
        for a in plain_acts(&m, LEMMA_ACT_SIZE) {
            let hollow = is_hollow(&a, Category::Plain).map_err(|e| e.to_string())?;
            if hollow
                && !sact_core::decompose(&a, Category::Plain)
                    .map_err(|e| e.to_string())?
                    .is_indecomposable()
            {
                return Err(format!("hollow but decomposable: {}", show(&a)));
            }
            if is_superfluous(&a, &a.zero_set()).map_err(|e| e.to_string())? {
                let (fa, _) = functor_f_obj(&a).map_err(|e| e.to_string())?;
                if hollow != is_hollow(&fa, Category::Zeroed).map_err(|e| e.to_string())? {
                    return Err(format!("hollowness not reflected: {}", show(&a)));
                }
                count += 1;
            }
        }
    }
    Ok(format!("{count} acts with superfluous zero set"))
}

/// The substantial decomposition reassembles the act, and a cyclic
/// nonzero `F(A)` forces a cyclic substantial summand.
pub fn substantial_summands() -> Outcome {
    let mut count = 0;
    for m in monoids(LEMMA_MONOID_SIZE) {
        for a in plain_acts(&m, LEMMA_ACT_SIZE) {
            let d = substantial_summand(&a).map_err(|e| e.to_string())?;
            if !d.reconstruction.is_bijective() {
                return Err(format!("reconstruction of {}", show(&a)));
            }
            let (fa, _) = functor_f_obj(&a).map_err(|e| e.to_string())?;
            if fa.size() > 1 && is_cyclic(&fa).map_err(|e| e.to_string())?.is_some() {
                let part = d.substantial.to_act(&a);
                if is_cyclic(&part).map_err(|e| e.to_string())?.is_none() {
                    return Err(format!("substantial summand not cyclic: {}", show(&a)));
                }
            }
            count += 1;
        }
    }
    Ok(format!("{count} acts"))
}

fn act_size(bounds: &Bounds, p: Property) -> usize {
    bounds.act_size.unwrap_or_else(|| p.default_act_size())
}

/// Left perfect and left 0-perfect agree (and hold) on every small monoid.
pub fn char_0perfect(bounds: &Bounds) -> Outcome {
    let ms = monoids(bounds.monoid_size);
    let size = act_size(bounds, Property::LeftPerfect);
    for m in &ms {
        let p = is_left_perfect(m, size).map_err(|e| e.to_string())?;
        let z = is_left_0perfect(m, size).map_err(|e| e.to_string())?;
        if p.verdict != Verdict::HoldsWithinBounds || z.verdict != p.verdict {
            let w = p.witnesses.iter().chain(&z.witnesses).next();
            return Err(format!(
                "perfect {} vs 0-perfect {}{}",
                p.verdict,
                z.verdict,
                w.map(|w| format!("; {}: {}", w.reason, show(&w.act)))
                    .unwrap_or_default()
            ));
        }
    }
    Ok(format!("{} monoids, acts up to size {size}", ms.len()))
}

/// No hollow non-cyclic act in either category, matching the chain
/// condition.
pub fn char_0steady(bounds: &Bounds) -> Outcome {
    let ms = monoids(bounds.monoid_size);
    let size = act_size(bounds, Property::Left0Steady);
    for m in &ms {
        let s = is_left_steady(m, size).map_err(|e| e.to_string())?;
        let z = is_left_0steady(m, size).map_err(|e| e.to_string())?;
        let acc = acc_cyclic_subacts_report(m, size).map_err(|e| e.to_string())?;
        if s.verdict.is_fail() || z.verdict.is_fail() || acc.verdict.is_fail() {
            let w = s
                .witnesses
                .iter()
                .chain(&z.witnesses)
                .chain(&acc.witnesses)
                .next();
            return Err(format!(
                "steady {}, 0-steady {}, acc {}{}",
                s.verdict,
                z.verdict,
                acc.verdict,
                w.map(|w| format!("; {}: {}", w.reason, show(&w.act)))
                    .unwrap_or_default()
            ));
        }
    }
    Ok(format!("{} monoids, acts up to size {size}", ms.len()))
}

/// Runs every check in a fixed order.
pub fn run_checks(bounds: &Bounds) -> Vec<Check> {
    let checks: Vec<(&'static str, Runner)> = vec![
        ("F_not_faithful", Box::new(f_not_faithful)),
        ("F_not_left_exact", Box::new(f_not_left_exact)),
        ("F_preserves_coproducts", Box::new(f_preserves_coproducts)),
        ("F_preserves_projectives", Box::new(f_preserves_projectives)),
        ("F_preserves_covers", Box::new(f_preserves_covers)),
        ("unique_zero", Box::new(unique_zero)),
        ("hollow_lemmas", Box::new(hollow_lemmas)),
        ("substantial_summands", Box::new(substantial_summands)),
        ("char_0perfect", Box::new(|| char_0perfect(bounds))),
        ("char_0steady", Box::new(|| char_0steady(bounds))),
    ];
    checks
        .into_iter()
        .map(|(name, f)| {
            let (passed, detail) = match f() {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            Check {
                name,
                passed,
                detail,
            }
        })
        .collect()
}
