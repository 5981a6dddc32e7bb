//! Idempotents, the acts `Se`, projectivity and (projective) covers.

use std::ops::ControlFlow;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use itertools::Itertools;

use crate::act::{Act, Category};
use crate::constructions::coproduct;
use crate::error::{Error, Result};
use crate::hom::{is_isomorphic, ActHom};
use crate::monoid::Monoid;
use crate::structure::{decompose, maximal_proper_subacts};
use crate::subact::Subact;

/// All `e` with `e·e = e`, ascending. Always contains `1` and `0`.
pub fn idempotents(monoid: &Monoid) -> Vec<usize> {
    monoid
        .elements()
        .filter(|&e| monoid.mul(e, e) == e)
        .collect()
}

/// `Se = {s·e}` under left multiplication, labels taken from the monoid.
pub fn principal_act(monoid: &Arc<Monoid>, e: usize, category: Category) -> Result<Act> {
    if e >= monoid.size() {
        return Err(Error::ElementOutOfRange(e));
    }
    if monoid.mul(e, e) != e {
        return Err(Error::NotIdempotent(monoid.label(e).to_owned()));
    }
    let mut members = FixedBitSet::with_capacity(monoid.size());
    members.extend(monoid.elements().map(|s| monoid.mul(s, e)));
    let members: Vec<usize> = members.ones().collect();
    let mut pos = vec![usize::MAX; monoid.size()];
    for (i, &x) in members.iter().enumerate() {
        pos[x] = i;
    }
    let rows = monoid
        .elements()
        .map(|s| members.iter().map(|&x| pos[monoid.mul(s, x)]).collect())
        .collect();
    let labels = members
        .iter()
        .map(|&x| monoid.label(x).to_owned())
        .collect();
    Act::new(monoid.clone(), labels, rows, category)
}

/// One indecomposable summand `≅ Se` of a projective act.
#[derive(Clone, Debug)]
pub struct ProjectiveSummand {
    pub component: Subact,
    pub idempotent: usize,
    /// `Se → component`, the component taken as an act on its own.
    pub iso: ActHom,
}

#[derive(Clone, Debug)]
pub struct ProjectiveCertificate {
    pub summands: Vec<ProjectiveSummand>,
}

/// Decides projectivity: an act is projective exactly when each of its
/// indecomposable components is isomorphic to some `Se` with `e`
/// idempotent. Returns the matching `(component, e, iso)` triples.
pub fn is_projective(act: &Act, category: Category) -> Result<Option<ProjectiveCertificate>> {
    let dec = decompose(act, category)?;
    let monoid = dec.parent.monoid_arc();
    let principals: Vec<(usize, Act)> = idempotents(monoid)
        .into_iter()
        .map(|e| {
            (
                e,
                principal_act(monoid, e, category).expect("e is idempotent"),
            )
        })
        .collect();
    let mut summands = Vec::with_capacity(dec.components.len());
    for component in dec.components {
        let part = component.to_act(&dec.parent);
        let found = principals
            .iter()
            .find_map(|(e, se)| is_isomorphic(se, &part).map(|iso| (*e, iso)));
        match found {
            Some((idempotent, iso)) => summands.push(ProjectiveSummand {
                component,
                idempotent,
                iso,
            }),
            None => return Ok(None),
        }
    }
    Ok(Some(ProjectiveCertificate { summands }))
}

/// A surjective morphism `P → A` that no proper subact of `P` maps onto.
#[derive(Clone, Debug)]
pub struct Cover {
    pub epi: ActHom,
    pub category: Category,
    /// For each maximal proper subact `M` of `P`, an element of `A` missed
    /// by `epi(M)`.
    pub evidence: Vec<(Subact, usize)>,
}

/// Checks the cover condition. Any proper subact lies in a maximal one, so
/// it suffices that every maximal proper subact fails to map onto `A`.
pub fn is_cover(f: &ActHom) -> Option<Cover> {
    if !f.is_surjective() {
        return None;
    }
    let mut evidence = Vec::new();
    for m in maximal_proper_subacts(f.source()) {
        let image = f.image_of(&m);
        let missed = f.target().elements().find(|&a| !image.contains(a))?;
        evidence.push((m, missed));
    }
    Some(Cover {
        epi: f.clone(),
        category: f.category(),
        evidence,
    })
}

/// Default size bound for [`projective_cover`].
///
/// A projective cover of a finite act needs at most one summand `Se` per
/// element of `A` (per non-zero element in the zeroed category), each with
/// at most `|S|` elements; the bound is that, and never below `|A| + |S|`.
pub fn default_cover_bound(act_size: usize, monoid_size: usize, category: Category) -> usize {
    let generous = match category {
        Category::Plain => act_size * monoid_size,
        Category::Zeroed => act_size.saturating_sub(1) * monoid_size.saturating_sub(1) + 1,
    };
    generous.max(act_size + monoid_size)
}

/// The first projective cover `∐ Seᵢ → A` with `|P| ≤ size_bound`, or
/// `None` if there is none within the bound. `size_bound` defaults to
/// [`default_cover_bound`].
///
/// Candidates are multisets of idempotents, fewest summands first and
/// lexicographic within a count; for each, the images of the generators
/// `eᵢ ↦ aᵢ` (with `eᵢ·aᵢ = aᵢ`) are tried in lexicographic order.
pub fn projective_cover(
    act: &Act,
    category: Category,
    size_bound: Option<usize>,
) -> Result<Option<Cover>> {
    let mut first = None;
    search_projective_covers(act, category, size_bound, |c| {
        first = Some(c);
        ControlFlow::Break(())
    })?;
    Ok(first)
}

/// Every projective cover the search of [`projective_cover`] visits, in
/// order. Equal idempotents get strictly increasing images, so covers that
/// differ only by permuting identical summands appear once.
pub fn projective_covers(
    act: &Act,
    category: Category,
    size_bound: Option<usize>,
) -> Result<Vec<Cover>> {
    let mut all = Vec::new();
    search_projective_covers(act, category, size_bound, |c| {
        all.push(c);
        ControlFlow::Continue(())
    })?;
    Ok(all)
}

fn search_projective_covers<F>(
    act: &Act,
    category: Category,
    size_bound: Option<usize>,
    mut visit: F,
) -> Result<()>
where
    F: FnMut(Cover) -> ControlFlow<()>,
{
    let target = act.view(category)?;
    if target.is_empty() {
        return Err(Error::EmptyAct);
    }
    let monoid = target.monoid_arc().clone();
    let bound =
        size_bound.unwrap_or_else(|| default_cover_bound(target.size(), monoid.size(), category));
    let target = Arc::new(target);

    let kinds: Vec<usize> = idempotents(&monoid)
        .into_iter()
        .filter(|&e| category == Category::Plain || e != monoid.zero() || target.size() == 1)
        .collect();
    let principals: Vec<Act> = kinds
        .iter()
        .map(|&e| principal_act(&monoid, e, category).expect("idempotent"))
        .collect();
    let fixed: Vec<Vec<usize>> = kinds
        .iter()
        .map(|&e| {
            target
                .elements()
                .filter(|&a| target.act(e, a) == a)
                .collect()
        })
        .collect();
    let orbits = target.orbits();
    let max_summands = match category {
        Category::Plain => target.size(),
        Category::Zeroed => (target.size() - 1).max(1),
    };

    for k in 1..=max_summands {
        for combo in (0..kinds.len()).combinations_with_replacement(k) {
            let size: usize = match category {
                Category::Plain => combo.iter().map(|&i| principals[i].size()).sum(),
                Category::Zeroed => {
                    combo
                        .iter()
                        .map(|&i| principals[i].size() - 1)
                        .sum::<usize>()
                        + 1
                }
            };
            if size > bound {
                continue;
            }
            let parts: Vec<Act> = combo.iter().map(|&i| principals[i].clone()).collect();
            let mut chosen = Vec::with_capacity(k);
            let flow = choose_images(&combo, &fixed, &mut chosen, &mut |images: &[usize]| {
                let mut covered = FixedBitSet::with_capacity(target.size());
                for &a in images {
                    covered.union_with(&orbits[a]);
                }
                if covered.count_ones(..) != target.size() {
                    return ControlFlow::Continue(());
                }
                let (p, tag) =
                    coproduct(category, &parts).expect("principal acts share the monoid");
                let mut map = vec![usize::MAX; p.size()];
                for (inj, &a) in tag.injections.iter().zip(images) {
                    // x ∈ Se satisfies x = x·e, so the generator map e ↦ a sends x to x·a
                    let se = inj.source();
                    for x in se.elements() {
                        let as_monoid = monoid
                            .index_of(se.label(x))
                            .expect("Se labels are monoid labels");
                        map[inj.apply(x)] = target.act(as_monoid, a);
                    }
                }
                let epi = ActHom::new(Arc::new(p), target.clone(), map, category)
                    .expect("generator maps are homs");
                match is_cover(&epi) {
                    Some(cover) => visit(cover),
                    None => ControlFlow::Continue(()),
                }
            });
            if flow.is_break() {
                return Ok(());
            }
        }
    }
    Ok(())
}

fn choose_images<F>(
    combo: &[usize],
    fixed: &[Vec<usize>],
    chosen: &mut Vec<usize>,
    f: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let j = chosen.len();
    if j == combo.len() {
        return f(chosen);
    }
    for &a in &fixed[combo[j]] {
        if j > 0 && combo[j] == combo[j - 1] && a <= chosen[j - 1] {
            continue;
        }
        chosen.push(a);
        let flow = choose_images(combo, fixed, chosen, f);
        chosen.pop();
        flow?;
    }
    ControlFlow::Continue(())
}
