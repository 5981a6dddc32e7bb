//! Act homomorphisms, hom-set enumeration and isomorphism search.

use std::ops::ControlFlow;
use std::sync::Arc;

use crate::act::{Act, Category};
use crate::error::{Error, Result};
use crate::subact::Subact;

/// An equivariant map between two acts of the same category. In the zeroed
/// category it also preserves the designated zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ActHom {
    source: Arc<Act>,
    target: Arc<Act>,
    map: Vec<usize>,
    category: Category,
}

impl ActHom {
    pub fn new(
        source: Arc<Act>,
        target: Arc<Act>,
        map: Vec<usize>,
        category: Category,
    ) -> Result<Self> {
        if !source.same_monoid(&target) {
            return Err(Error::MonoidMismatch);
        }
        if source.category() != category || target.category() != category {
            return Err(Error::CategoryMismatch);
        }
        if map.len() != source.size() {
            return Err(Error::TableShape(format!(
                "map has {} entries, source has {} elements",
                map.len(),
                source.size()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&b| b >= target.size()) {
            return Err(Error::ElementOutOfRange(bad));
        }
        for s in source.monoid().elements() {
            for a in source.elements() {
                if map[source.act(s, a)] != target.act(s, map[a]) {
                    return Err(Error::NotEquivariant {
                        s: source.monoid().label(s).to_owned(),
                        a: source.label(a).to_owned(),
                    });
                }
            }
        }
        if let (Some(zs), Some(zt)) = (source.zero(), target.zero()) {
            if map[zs] != zt {
                return Err(Error::ZeroNotPreserved);
            }
        }
        Ok(ActHom {
            source,
            target,
            map,
            category,
        })
    }

    pub(crate) fn new_unchecked(
        source: Arc<Act>,
        target: Arc<Act>,
        map: Vec<usize>,
        category: Category,
    ) -> Self {
        let hom = ActHom {
            source,
            target,
            map,
            category,
        };
        debug_assert!(
            ActHom::new(
                hom.source.clone(),
                hom.target.clone(),
                hom.map.clone(),
                category
            )
            .is_ok(),
            "unchecked hom is invalid: {hom:?}"
        );
        hom
    }

    pub fn identity(act: &Act) -> ActHom {
        let a = Arc::new(act.clone());
        ActHom {
            source: a.clone(),
            target: a,
            map: act.elements().collect(),
            category: act.category(),
        }
    }

    pub fn source(&self) -> &Act {
        &self.source
    }

    pub fn target(&self) -> &Act {
        &self.target
    }

    pub fn source_arc(&self) -> &Arc<Act> {
        &self.source
    }

    pub fn target_arc(&self) -> &Arc<Act> {
        &self.target
    }

    pub fn category(&self) -> Category {
        self.category
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &ActHom) -> Result<ActHom> {
        if self.target.size() != next.source.size() || *self.target != *next.source {
            return Err(Error::TableShape("composed maps do not meet".into()));
        }
        let map = self.map.iter().map(|&b| next.map[b]).collect();
        Ok(ActHom {
            source: self.source.clone(),
            target: next.target.clone(),
            map,
            category: self.category,
        })
    }

    pub fn image(&self) -> Subact {
        Subact::from_indices_unchecked(self.target.size(), self.map.iter().copied())
    }

    /// Image of a subset of the source.
    pub fn image_of(&self, sub: &Subact) -> Subact {
        Subact::from_indices_unchecked(self.target.size(), sub.members().map(|a| self.map[a]))
    }

    pub fn is_surjective(&self) -> bool {
        self.image().len() == self.target.size()
    }

    pub fn is_injective(&self) -> bool {
        self.image().len() == self.source.size()
    }

    pub fn is_bijective(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Same map, considered between views of the endpoints in another category.
    pub fn view(&self, category: Category) -> Result<ActHom> {
        ActHom::new(
            Arc::new(self.source.view(category)?),
            Arc::new(self.target.view(category)?),
            self.map.clone(),
            category,
        )
    }
}

const UNSET: usize = usize::MAX;

/// Backtracking search over equivariant maps.
///
/// Choosing `f(x) = y` forces `f(s·x) = s·y` for every `s`, so each decision
/// fixes a whole cyclic subact at once. Elements are decided in index order
/// and candidates are tried in ascending order, which makes the visit order
/// lexicographic in the map.
pub(crate) struct HomSearch<'a> {
    source: &'a Act,
    target: &'a Act,
    injective: bool,
    candidates: Option<Vec<Vec<usize>>>,
    map: Vec<usize>,
    used: Vec<bool>,
    trail: Vec<usize>,
}

impl<'a> HomSearch<'a> {
    pub(crate) fn new(source: &'a Act, target: &'a Act, injective: bool) -> Self {
        HomSearch {
            source,
            target,
            injective,
            candidates: None,
            map: vec![UNSET; source.size()],
            used: vec![false; target.size()],
            trail: Vec::new(),
        }
    }

    fn with_candidates(mut self, candidates: Vec<Vec<usize>>) -> Self {
        self.candidates = Some(candidates);
        self
    }

    fn assign(&mut self, x: usize, y: usize) -> bool {
        for s in self.source.monoid().elements() {
            let xs = self.source.act(s, x);
            let ys = self.target.act(s, y);
            match self.map[xs] {
                UNSET => {
                    if self.injective && self.used[ys] {
                        return false;
                    }
                    self.map[xs] = ys;
                    self.used[ys] = true;
                    self.trail.push(xs);
                }
                z if z == ys => {}
                _ => return false,
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().expect("trail is longer than mark");
            self.used[self.map[x]] = false;
            self.map[x] = UNSET;
        }
    }

    /// Pins `x ↦ y` before the search starts. Returns false if that is
    /// already inconsistent.
    pub(crate) fn pin(&mut self, x: usize, y: usize) -> bool {
        self.assign(x, y)
    }

    pub(crate) fn run<F>(&mut self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        self.step(0, visit)
    }

    fn step<F>(&mut self, from: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let Some(x) = (from..self.source.size()).find(|&x| self.map[x] == UNSET) else {
            return visit(&self.map);
        };
        let n = self.target.size();
        for i in 0..self.candidate_count(x, n) {
            let y = match &self.candidates {
                Some(c) => c[x][i],
                None => i,
            };
            if self.injective && self.used[y] {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(x, y) {
                self.step(x + 1, visit)?;
            }
            self.undo(mark);
        }
        ControlFlow::Continue(())
    }

    fn candidate_count(&self, x: usize, n: usize) -> usize {
        self.candidates.as_ref().map_or(n, |c| c[x].len())
    }
}

/// Calls `visit` on every hom `source → target` in `category`, in
/// lexicographic order of the maps, until it breaks.
pub(crate) fn for_each_hom_map<F>(source: &Act, target: &Act, category: Category, mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let mut search = HomSearch::new(source, target, false);
    if category == Category::Zeroed {
        let (Some(zs), Some(zt)) = (source.zero(), target.zero()) else {
            return;
        };
        if !search.pin(zs, zt) {
            return;
        }
    }
    let _ = search.run(&mut visit);
}

fn views(a: &Act, b: &Act, category: Category) -> Result<(Act, Act)> {
    if !a.same_monoid(b) {
        return Err(Error::MonoidMismatch);
    }
    if a.category() != b.category() {
        return Err(Error::CategoryMismatch);
    }
    Ok((a.view(category)?, b.view(category)?))
}

/// All homomorphisms `a → b` in `category`, lexicographically by map.
///
/// Both acts must carry the same category tag; they are viewed in
/// `category` first (which fails for a zeroed view of an act with several
/// zeros). From the empty act there is exactly one map.
pub fn enumerate_homs(a: &Act, b: &Act, category: Category) -> Result<Vec<ActHom>> {
    let (a, b) = views(a, b, category)?;
    let (a, b) = (Arc::new(a), Arc::new(b));
    let mut out = Vec::new();
    for_each_hom_map(&a, &b, category, |m| {
        out.push(ActHom {
            source: a.clone(),
            target: b.clone(),
            map: m.to_vec(),
            category,
        });
        ControlFlow::Continue(())
    });
    Ok(out)
}

/// `|Hom(a, b)|` without materialising the maps.
pub fn count_homs(a: &Act, b: &Act, category: Category) -> Result<usize> {
    let (a, b) = views(a, b, category)?;
    let mut n = 0;
    for_each_hom_map(&a, &b, category, |_| {
        n += 1;
        ControlFlow::Continue(())
    });
    Ok(n)
}

/// Per-element invariants preserved by isomorphisms: zero flag, size of the
/// cyclic subact, number of monoid elements fixing it, and in-degree in the
/// Cayley digraph.
pub(crate) fn element_signatures(act: &Act) -> Vec<(bool, usize, usize, usize)> {
    let m = act.monoid();
    let mut indeg = vec![0usize; act.size()];
    for s in m.elements() {
        if s == m.one() {
            continue;
        }
        for a in act.elements() {
            indeg[act.act(s, a)] += 1;
        }
    }
    act.elements()
        .map(|a| {
            let fixed = m.elements().filter(|&s| act.act(s, a) == a).count();
            (
                !act.is_zero_element(a),
                act.orbit(a).count_ones(..),
                fixed,
                indeg[a],
            )
        })
        .collect()
}

/// A witness isomorphism `a → b`, or `None` if the acts are not isomorphic
/// (or live over different monoids or categories).
pub fn is_isomorphic(a: &Act, b: &Act) -> Option<ActHom> {
    if a.size() != b.size() || a.category() != b.category() || !a.same_monoid(b) {
        return None;
    }
    let sa = element_signatures(a);
    let sb = element_signatures(b);
    let mut sorted_a = sa.clone();
    let mut sorted_b = sb.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return None;
    }
    let candidates = sa
        .iter()
        .map(|sig| b.elements().filter(|&y| sb[y] == *sig).collect())
        .collect();
    let mut search = HomSearch::new(a, b, true).with_candidates(candidates);
    if let (Some(za), Some(zb)) = (a.zero(), b.zero()) {
        if !search.pin(za, zb) {
            return None;
        }
    }
    let mut found = None;
    let _ = search.run(&mut |m: &[usize]| {
        found = Some(m.to_vec());
        ControlFlow::Break(())
    });
    found.map(|map| {
        ActHom::new_unchecked(Arc::new(a.clone()), Arc::new(b.clone()), map, a.category())
    })
}
