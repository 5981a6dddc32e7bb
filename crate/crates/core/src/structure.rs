//! Structural predicates: cyclicity, superfluous subacts, hollowness,
//! indecomposable decompositions and bounded compactness.

use std::ops::ControlFlow;

use fixedbitset::FixedBitSet;
use itertools::Itertools;
use petgraph::unionfind::UnionFind;
use rayon::prelude::*;

use crate::act::{Act, Category};
use crate::constructions::coproduct;
use crate::enumeration::enumerate_acts;
use crate::error::{Error, Result};
use crate::hom::for_each_hom_map;
use crate::subact::{closure, Subact};

/// Default number of summands tried by [`is_compact_bounded`].
pub const DEFAULT_FAMILY_BOUND: usize = 3;
/// Default summand size tried by [`is_compact_bounded`].
pub const DEFAULT_SUMMAND_SIZE: usize = 4;

fn nonempty(act: &Act) -> Result<()> {
    if act.is_empty() {
        Err(Error::EmptyAct)
    } else {
        Ok(())
    }
}

/// The lowest-index generator `g` with `Sg = A`, if any.
pub fn is_cyclic(act: &Act) -> Result<Option<usize>> {
    nonempty(act)?;
    Ok(act
        .elements()
        .find(|&g| act.orbit(g).count_ones(..) == act.size()))
}

/// Whether every pair of elements lies in a common cyclic subact.
pub fn is_locally_cyclic(act: &Act) -> Result<bool> {
    nonempty(act)?;
    Ok(locally_cyclic_witness(act).is_none())
}

/// A pair with no common cyclic upper bound.
pub fn locally_cyclic_witness(act: &Act) -> Option<(usize, usize)> {
    let orbits = act.orbits();
    act.elements()
        .tuple_combinations()
        .find(|&(x, y)| !orbits.iter().any(|o| o.contains(x) && o.contains(y)))
}

/// Whether `sub` is superfluous: `sub ∪ C ≠ A` for every proper nonempty
/// subact `C`.
///
/// The least subact `C` with `sub ∪ C = A` is the one generated by
/// `A \ sub`, so for a proper `sub` this reduces to `⟨A \ sub⟩ = A`. For
/// `sub = A` the condition holds only when `A` has no proper nonempty
/// subact at all.
pub fn is_superfluous(act: &Act, sub: &Subact) -> Result<bool> {
    if !sub.is_closed_in(act) {
        return Err(Error::NotASubact);
    }
    if sub.len() == act.size() {
        return Ok(maximal_proper_subacts(act).is_empty());
    }
    let rest = act.elements().filter(|&a| !sub.contains(a));
    Ok(closure(act, rest).count_ones(..) == act.size())
}

/// The maximal elements among proper nonempty subacts, by member list.
///
/// Under the preorder `a ≤ b ⟺ a ∈ Sb`, subacts are down-sets, and the
/// maximal proper ones are the complements of the top classes.
pub fn maximal_proper_subacts(act: &Act) -> Vec<Subact> {
    let orbits = act.orbits();
    let mut tops: Vec<FixedBitSet> = Vec::new();
    for a in act.elements() {
        let oa = &orbits[a];
        let dominated = orbits
            .iter()
            .any(|ob| oa.is_subset(ob) && !ob.is_subset(oa));
        if dominated {
            continue;
        }
        // the class of a is {b : Sb = Sa}
        let mut class = FixedBitSet::with_capacity(act.size());
        class.extend(act.elements().filter(|&b| orbits[b] == *oa));
        if !tops.contains(&class) {
            tops.push(class);
        }
    }
    let mut out: Vec<Subact> = tops
        .into_iter()
        .filter_map(|class| {
            let mut rest = FixedBitSet::with_capacity(act.size());
            rest.insert_range(..);
            rest.difference_with(&class);
            (!rest.is_clear()).then(|| Subact::from_bits(rest))
        })
        .collect();
    out.sort_by_cached_key(Subact::to_vec);
    out
}

/// Whether every proper subact is superfluous, decided as "at most one
/// maximal proper subact".
///
/// The act is viewed in `category` first, which fails for a zeroed view of
/// an act with several zeros.
pub fn is_hollow(act: &Act, category: Category) -> Result<bool> {
    let act = act.view(category)?;
    nonempty(&act)?;
    Ok(maximal_proper_subacts(&act).len() <= 1)
}

/// The unique decomposition into indecomposable subacts.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub parent: Act,
    pub category: Category,
    /// Ordered by smallest non-zero member.
    pub components: Vec<Subact>,
}

impl Decomposition {
    pub fn is_indecomposable(&self) -> bool {
        self.components.len() == 1
    }
}

/// Decomposes into indecomposables.
///
/// Plain: connected components of the Cayley digraph (`a ~ b` when `Sa`
/// and `Sb` meet). Zeroed: the zero is removed before taking components and
/// added back to each, since every subact contains it.
pub fn decompose(act: &Act, category: Category) -> Result<Decomposition> {
    let act = act.view(category)?;
    nonempty(&act)?;
    let zero = act.zero();
    let mut uf = UnionFind::<usize>::new(act.size());
    for a in act.elements() {
        if Some(a) == zero {
            continue;
        }
        for s in act.monoid().elements() {
            let b = act.act(s, a);
            if Some(b) != zero {
                uf.union(a, b);
            }
        }
    }
    let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
    for a in act.elements() {
        if Some(a) == zero {
            continue;
        }
        let root = uf.find(a);
        match groups.iter_mut().find(|(r, _)| *r == root) {
            Some((_, members)) => members.push(a),
            None => groups.push((root, vec![a])),
        }
    }
    let mut components: Vec<Subact> = groups
        .into_iter()
        .map(|(_, members)| {
            Subact::from_indices_unchecked(act.size(), members.into_iter().chain(zero))
        })
        .collect();
    if components.is_empty() {
        // only the zero itself
        components.push(Subact::full(&act));
    }
    Ok(Decomposition {
        parent: act,
        category,
        components,
    })
}

/// Bounded compactness: every morphism from `act` into a coproduct of at
/// most `family_bound` acts, each of size at most `size_bound` (taken up to
/// isomorphism), factors through a single coproduct injection.
///
/// This only approximates compactness, whose definition ranges over all
/// families. In the plain category a hom out of an indecomposable act always
/// lands in one summand, so there the answer is "indecomposable".
pub fn is_compact_bounded(
    act: &Act,
    category: Category,
    family_bound: usize,
    size_bound: usize,
) -> Result<bool> {
    let act = act.view(category)?;
    nonempty(&act)?;
    let pool: Vec<Act> = enumerate_acts(act.monoid_arc(), size_bound, category)?
        .into_iter()
        .filter(|a| !a.is_empty())
        .collect();
    let families: Vec<Vec<usize>> = (2..=family_bound)
        .flat_map(|k| (0..pool.len()).combinations_with_replacement(k))
        .collect();
    Ok(families.par_iter().all(|family| {
        let parts: Vec<Act> = family.iter().map(|&i| pool[i].clone()).collect();
        let (sum, tag) = coproduct(category, &parts).expect("pool acts share the monoid");
        let mut factors = true;
        for_each_hom_map(&act, &sum, category, |m| {
            let mut hit = m.iter().filter_map(|&x| tag.summand_of(x));
            let first = hit.next();
            if hit.any(|i| Some(i) != first) {
                factors = false;
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        factors
    }))
}
