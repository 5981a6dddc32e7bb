//! Subacts, left congruences and Rees quotients.

use std::collections::HashSet;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::act::{Act, Category};
use crate::error::{Error, Result};
use crate::hom::ActHom;

/// An action-closed subset of some parent act, stored as a bitset over the
/// parent's element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subact {
    members: FixedBitSet,
}

impl Subact {
    /// Checks closure under the action and the nonemptiness rule of the
    /// parent's category.
    pub fn new(parent: &Act, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut set = FixedBitSet::with_capacity(parent.size());
        for a in members {
            if a >= parent.size() {
                return Err(Error::ElementOutOfRange(a));
            }
            set.insert(a);
        }
        let sub = Subact { members: set };
        if !sub.is_closed_in(parent) {
            return Err(Error::NotASubact);
        }
        if sub.is_empty() && parent.category() == Category::Zeroed {
            return Err(Error::NotASubact);
        }
        Ok(sub)
    }

    pub(crate) fn from_bits(members: FixedBitSet) -> Self {
        Subact { members }
    }

    pub(crate) fn from_indices_unchecked(
        universe: usize,
        members: impl IntoIterator<Item = usize>,
    ) -> Self {
        let mut set = FixedBitSet::with_capacity(universe);
        set.extend(members);
        Subact { members: set }
    }

    /// The whole parent.
    pub fn full(parent: &Act) -> Self {
        let mut set = FixedBitSet::with_capacity(parent.size());
        set.insert_range(..);
        Subact { members: set }
    }

    pub fn is_closed_in(&self, parent: &Act) -> bool {
        self.members.len() == parent.size()
            && self.members.ones().all(|b| {
                parent
                    .monoid()
                    .elements()
                    .all(|s| self.members.contains(parent.act(s, b)))
            })
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.ones().collect()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_clear()
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn is_subset(&self, other: &Subact) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn union(&self, other: &Subact) -> Subact {
        let mut m = self.members.clone();
        m.union_with(&other.members);
        Subact { members: m }
    }

    pub fn intersection(&self, other: &Subact) -> Subact {
        let mut m = self.members.clone();
        m.intersect_with(&other.members);
        Subact { members: m }
    }

    pub fn is_proper_in(&self, parent: &Act) -> bool {
        self.len() < parent.size()
    }

    pub fn labels<'a>(&self, parent: &'a Act) -> Vec<&'a str> {
        self.members().map(|a| parent.label(a)).collect()
    }

    /// The subact as an act in its own right, members in ascending order and
    /// original labels kept.
    pub fn to_act(&self, parent: &Act) -> Act {
        let idx = self.to_vec();
        let mut pos = vec![usize::MAX; parent.size()];
        for (i, &a) in idx.iter().enumerate() {
            pos[a] = i;
        }
        let mut action = Vec::with_capacity(parent.monoid().size() * idx.len());
        for s in parent.monoid().elements() {
            for &a in &idx {
                action.push(pos[parent.act(s, a)]);
            }
        }
        let labels = idx.iter().map(|&a| parent.label(a).to_owned()).collect();
        Act::from_parts_unchecked(
            parent.monoid_arc().clone(),
            labels,
            action,
            parent.category(),
        )
    }

    /// The inclusion of the subact (as produced by [`Subact::to_act`]) into the parent.
    pub fn inclusion(&self, parent: &Act) -> ActHom {
        let sub = self.to_act(parent);
        ActHom::new_unchecked(
            Arc::new(sub),
            Arc::new(parent.clone()),
            self.to_vec(),
            parent.category(),
        )
    }
}

/// Closure of a set of elements under the action (no category rules applied).
pub(crate) fn closure(act: &Act, generators: impl IntoIterator<Item = usize>) -> FixedBitSet {
    let mut set = FixedBitSet::with_capacity(act.size());
    for x in generators {
        for s in act.monoid().elements() {
            set.insert(act.act(s, x));
        }
    }
    set
}

/// The smallest subact containing `generators`: `{s·x | s ∈ S, x ∈ X}`.
pub fn subact_generated(act: &Act, generators: &[usize]) -> Result<Subact> {
    if let Some(&bad) = generators.iter().find(|&&x| x >= act.size()) {
        return Err(Error::ElementOutOfRange(bad));
    }
    if generators.is_empty() && act.category() == Category::Zeroed {
        return Err(Error::EmptyGeneratorInAct0);
    }
    Ok(Subact::from_bits(closure(act, generators.iter().copied())))
}

/// Every subact, ordered by size and then by member list.
///
/// The empty subact is included only in the plain category. Subacts are
/// exactly the unions of cyclic subacts, which is how they are generated.
pub fn all_subacts(act: &Act) -> Vec<Subact> {
    let mut found: HashSet<FixedBitSet> = HashSet::new();
    found.insert(FixedBitSet::with_capacity(act.size()));
    for orbit in act.orbits() {
        let current: Vec<FixedBitSet> = found.iter().cloned().collect();
        for mut u in current {
            u.union_with(&orbit);
            found.insert(u);
        }
    }
    let mut out: Vec<Subact> = found
        .into_iter()
        .filter(|s| act.category() == Category::Plain || !s.is_clear())
        .map(Subact::from_bits)
        .collect();
    out.sort_by_cached_key(|s| (s.len(), s.to_vec()));
    out
}

/// A left congruence on an act, stored as a block id per element.
/// Block ids are normalised to first-occurrence order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ActCongruence {
    blocks: Vec<usize>,
}

impl ActCongruence {
    pub fn new(parent: &Act, blocks: Vec<usize>) -> Result<Self> {
        if blocks.len() != parent.size() {
            return Err(Error::TableShape(format!(
                "partition covers {} elements, act has {}",
                blocks.len(),
                parent.size()
            )));
        }
        let blocks = normalize(&blocks);
        let mut rep = vec![usize::MAX; parent.size()];
        for a in parent.elements() {
            let r = &mut rep[blocks[a]];
            if *r == usize::MAX {
                *r = a;
                continue;
            }
            for s in parent.monoid().elements() {
                if blocks[parent.act(s, a)] != blocks[parent.act(s, *r)] {
                    return Err(Error::NotACongruence {
                        s: parent.monoid().label(s).to_owned(),
                        a: parent.label(*r).to_owned(),
                        b: parent.label(a).to_owned(),
                    });
                }
            }
        }
        Ok(ActCongruence { blocks })
    }

    /// The Rees congruence of a nonempty subact: the subact is one class and
    /// every other element is alone.
    pub fn rees(parent: &Act, sub: &Subact) -> Result<Self> {
        if !sub.is_closed_in(parent) {
            return Err(Error::NotASubact);
        }
        let first = sub.members().next().ok_or(Error::EmptySubact)?;
        let blocks: Vec<usize> = parent
            .elements()
            .map(|a| if sub.contains(a) { first } else { a })
            .collect();
        Ok(ActCongruence {
            blocks: normalize(&blocks),
        })
    }

    pub fn block(&self, a: usize) -> usize {
        self.blocks[a]
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    pub fn class_count(&self) -> usize {
        self.blocks.iter().max().map_or(0, |m| m + 1)
    }

    /// The factor act and its projection. A class keeps its member's label
    /// when it is a singleton and is written `[x,y,...]` otherwise.
    pub fn quotient(&self, parent: &Act) -> (Act, ActHom) {
        let k = self.class_count();
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); k];
        for a in parent.elements() {
            members[self.blocks[a]].push(a);
        }
        let mut labels: Vec<String> = members
            .iter()
            .map(|m| match m.as_slice() {
                [one] => parent.label(*one).to_owned(),
                many => format!(
                    "[{}]",
                    many.iter()
                        .map(|&a| parent.label(a))
                        .collect::<Vec<_>>()
                        .join(",")
                ),
            })
            .collect();
        dedupe_labels(&mut labels);
        let mut action = Vec::with_capacity(parent.monoid().size() * k);
        for s in parent.monoid().elements() {
            for m in &members {
                action.push(self.blocks[parent.act(s, m[0])]);
            }
        }
        let q = Act::from_parts_unchecked(
            parent.monoid_arc().clone(),
            labels,
            action,
            parent.category(),
        );
        let pi = ActHom::new_unchecked(
            Arc::new(parent.clone()),
            Arc::new(q.clone()),
            self.blocks.clone(),
            parent.category(),
        );
        (q, pi)
    }
}

fn normalize(blocks: &[usize]) -> Vec<usize> {
    let mut ids = std::collections::HashMap::new();
    blocks
        .iter()
        .map(|b| {
            let next = ids.len();
            *ids.entry(*b).or_insert(next)
        })
        .collect()
}

pub(crate) fn dedupe_labels(labels: &mut [String]) {
    let mut seen = HashSet::new();
    for l in labels.iter_mut() {
        while !seen.insert(l.clone()) {
            l.push('\'');
        }
    }
}

/// `A/B`: collapses the subact `B` to a single element.
/// `|A/B| = |A| - |B| + 1`.
pub fn rees_quotient(act: &Act, sub: &Subact) -> Result<(Act, ActHom)> {
    let rho = ActCongruence::rees(act, sub)?;
    Ok(rho.quotient(act))
}
