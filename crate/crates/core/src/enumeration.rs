//! Exhaustive enumeration up to isomorphism: monoids with zero, finite
//! acts over a fixed monoid, and left congruences.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;
use std::sync::Arc;

use itertools::Itertools;

use crate::act::{Act, Category};
use crate::error::{Error, Result};
use crate::hom::element_signatures;
use crate::monoid::Monoid;
use crate::subact::ActCongruence;

/// Largest monoid order accepted by [`enumerate_monoids_with_zero`] and
/// [`enumerate_left_congruences`].
pub const MAX_MONOID_SIZE: usize = 6;
/// Largest act size accepted by [`enumerate_acts`].
pub const MAX_ACT_SIZE: usize = 6;

const MONOID_LABELS: [&str; MAX_MONOID_SIZE] = ["1", "0", "a", "b", "c", "d"];
const ACT_LABELS: [&str; MAX_ACT_SIZE] = ["a", "b", "c", "d", "e", "f"];

/// A relabelling-invariant serialisation. Two monoids (or two acts over
/// the same monoid, in the same category) are isomorphic exactly when
/// their encodings are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub encoding: Vec<usize>,
}

/// Minimum table over relabellings fixing `1` at index 0 and `0` at index 1.
pub fn canonical_monoid(m: &Monoid) -> CanonicalForm {
    canonical_monoid_perm(m).0
}

fn canonical_monoid_perm(m: &Monoid) -> (CanonicalForm, Vec<usize>) {
    let rest: Vec<usize> = m
        .elements()
        .filter(|&x| x != m.one() && x != m.zero())
        .collect();
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    for perm in rest.iter().copied().permutations(rest.len()) {
        let mut order = vec![m.one(), m.zero()];
        order.extend(perm);
        let enc = monoid_encoding(m, &order);
        if best.as_ref().is_none_or(|(b, _)| enc < *b) {
            best = Some((enc, order));
        }
    }
    let (encoding, order) = best.expect("at least one relabelling");
    (CanonicalForm { encoding }, order)
}

fn monoid_encoding(m: &Monoid, order: &[usize]) -> Vec<usize> {
    let pos = inverse(order);
    let mut enc = Vec::with_capacity(1 + order.len() * order.len());
    enc.push(order.len());
    for &x in order {
        for &y in order {
            enc.push(pos[m.mul(x, y)]);
        }
    }
    enc
}

fn inverse(order: &[usize]) -> Vec<usize> {
    let mut pos = vec![0; order.len()];
    for (i, &x) in order.iter().enumerate() {
        pos[x] = i;
    }
    pos
}

/// Minimum action table over relabellings that respect isomorphism
/// invariants of elements (so zeros come first).
pub fn canonical_act(act: &Act) -> CanonicalForm {
    canonical_act_perm(act).0
}

fn canonical_act_perm(act: &Act) -> (CanonicalForm, Vec<usize>) {
    let n = act.size();
    let head = [act.category() as usize, n];
    if n == 0 {
        return (
            CanonicalForm {
                encoding: head.to_vec(),
            },
            Vec::new(),
        );
    }
    let sig = element_signatures(act);
    let mut sorted: Vec<usize> = act.elements().collect();
    sorted.sort_by_key(|&a| (sig[a], a));
    let cells: Vec<Vec<usize>> = sorted
        .iter()
        .copied()
        .chunk_by(|&a| sig[a])
        .into_iter()
        .map(|(_, c)| c.collect())
        .collect();
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    for choice in cells
        .iter()
        .map(|c| c.iter().copied().permutations(c.len()))
        .multi_cartesian_product()
    {
        let order: Vec<usize> = choice.concat();
        let pos = inverse(&order);
        let mut enc = head.to_vec();
        for s in act.monoid().elements() {
            enc.extend(order.iter().map(|&a| pos[act.act(s, a)]));
        }
        if best.as_ref().is_none_or(|(b, _)| enc < *b) {
            best = Some((enc, order));
        }
    }
    let (encoding, order) = best.expect("at least one relabelling");
    (CanonicalForm { encoding }, order)
}

/// All monoids with zero of order exactly `n` (so `0 ≠ 1`), one per
/// isomorphism class, ordered by canonical encoding. Elements are labelled
/// `1, 0, a, b, ...`.
pub fn enumerate_monoids_with_zero(n: usize) -> Result<Vec<Monoid>> {
    if n < 2 {
        return Err(Error::ZeroEqualsOne);
    }
    if n > MAX_MONOID_SIZE {
        return Err(Error::BoundTooLarge {
            bound: n,
            max: MAX_MONOID_SIZE,
        });
    }
    let labels: Vec<String> = MONOID_LABELS[..n].iter().map(|s| (*s).to_owned()).collect();
    let mut table = vec![None; n * n];
    for x in 0..n {
        table[x] = Some(x);
        table[x * n] = Some(x);
        table[n + x] = Some(1);
        table[x * n + 1] = Some(1);
    }
    let free: Vec<usize> = (2..n)
        .flat_map(|x| (2..n).map(move |y| x * n + y))
        .collect();
    let mut found = BTreeSet::new();
    fill_monoid(&mut table, n, &free, &mut |t| {
        let rows = t.chunks(n).map(|r| r.to_vec()).collect();
        let m = Monoid::new(labels.clone(), rows, 0, 1).expect("search only emits monoids");
        found.insert(canonical_monoid(&m));
    });
    Ok(found
        .into_iter()
        .map(|c| {
            let rows = c.encoding[1..].chunks(n).map(|r| r.to_vec()).collect();
            Monoid::new(labels.clone(), rows, 0, 1).expect("canonical tables are monoids")
        })
        .collect())
}

/// Monoids with zero of every order from 2 to `n`.
pub fn enumerate_monoids_up_to(n: usize) -> Result<Vec<Monoid>> {
    let mut out = Vec::new();
    for k in 2..=n {
        out.extend(enumerate_monoids_with_zero(k)?);
    }
    Ok(out)
}

fn fill_monoid(
    table: &mut [Option<usize>],
    n: usize,
    free: &[usize],
    emit: &mut impl FnMut(Vec<usize>),
) {
    let Some((&cell, rest)) = free.split_first() else {
        emit(table.iter().map(|v| v.expect("complete table")).collect());
        return;
    };
    for v in 0..n {
        table[cell] = Some(v);
        if associative_so_far(table, n) {
            fill_monoid(table, n, rest, emit);
        }
    }
    table[cell] = None;
}

fn associative_so_far(t: &[Option<usize>], n: usize) -> bool {
    for x in 0..n {
        for y in 0..n {
            let Some(xy) = t[x * n + y] else { continue };
            for z in 0..n {
                let (Some(l), Some(yz)) = (t[xy * n + z], t[y * n + z]) else {
                    continue;
                };
                if t[x * n + yz].is_some_and(|r| r != l) {
                    return false;
                }
            }
        }
    }
    true
}

/// All acts over `monoid` of size at most `m`, one per isomorphism class,
/// ordered by size and then canonical encoding. The plain category includes
/// the empty act; the zeroed category starts at `θ`.
///
/// Zeros are labelled `θ` (or `θ1, θ2, ...` when there are several) and
/// come first; the other elements are `a, b, ...`.
pub fn enumerate_acts(monoid: &Arc<Monoid>, m: usize, category: Category) -> Result<Vec<Act>> {
    let mut out = Vec::new();
    for_each_act(monoid, m, category, |a| {
        out.push(a);
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Streaming form of [`enumerate_acts`]: each size is searched and then
/// handed to `visit` in order before the next size starts.
pub fn for_each_act<F>(
    monoid: &Arc<Monoid>,
    m: usize,
    category: Category,
    mut visit: F,
) -> Result<()>
where
    F: FnMut(Act) -> ControlFlow<()>,
{
    if m > MAX_ACT_SIZE {
        return Err(Error::BoundTooLarge {
            bound: m,
            max: MAX_ACT_SIZE,
        });
    }
    for n in 0..=m {
        for act in acts_of_size(monoid, n, category) {
            if visit(act).is_break() {
                return Ok(());
            }
        }
    }
    Ok(())
}

/// Acts of size exactly `n` (at most [`MAX_ACT_SIZE`]).
pub fn acts_of_size(monoid: &Arc<Monoid>, n: usize, category: Category) -> Vec<Act> {
    assert!(n <= MAX_ACT_SIZE, "act size {n} exceeds {MAX_ACT_SIZE}");
    if n == 0 {
        return match category {
            Category::Plain => vec![Act::empty(monoid.clone())],
            Category::Zeroed => Vec::new(),
        };
    }
    let zero_counts = match category {
        Category::Plain => 1..=n,
        Category::Zeroed => 1..=1,
    };
    let mut found: BTreeMap<CanonicalForm, Act> = BTreeMap::new();
    for k in zero_counts {
        let labels = act_labels(n, k);
        let mut search = ActSearch::new(monoid, n, k);
        search.run(0, &mut |rows| {
            let act = Act::new(monoid.clone(), labels.clone(), rows, category)
                .expect("search only emits acts");
            let (form, order) = canonical_act_perm(&act);
            found
                .entry(form)
                .or_insert_with(|| permute_act(&act, &order, labels.clone()));
        });
    }
    found.into_values().collect()
}

fn act_labels(n: usize, zeros: usize) -> Vec<String> {
    let mut labels: Vec<String> = if zeros == 1 {
        vec!["θ".to_owned()]
    } else {
        (1..=zeros).map(|i| format!("θ{i}")).collect()
    };
    labels.extend(ACT_LABELS[..n - zeros].iter().map(|s| (*s).to_owned()));
    labels
}

fn permute_act(act: &Act, order: &[usize], labels: Vec<String>) -> Act {
    let pos = inverse(order);
    let rows = act
        .monoid()
        .elements()
        .map(|s| order.iter().map(|&a| pos[act.act(s, a)]).collect())
        .collect();
    Act::new(act.monoid_arc().clone(), labels, rows, act.category()).expect("relabelled act")
}

/// Backtracking over action tables whose zero set is exactly `{0..k}`.
///
/// Zeros are fixed by every monoid element. The row of `0` sends each
/// non-zero element into the zeros and is taken nondecreasing, which loses
/// no isomorphism class. The remaining cells are filled with forward checks
/// of `(st)·a = s·(t·a)`.
struct ActSearch<'a> {
    monoid: &'a Monoid,
    n: usize,
    k: usize,
    table: Vec<Option<usize>>,
    cells: Vec<(usize, usize)>,
}

impl<'a> ActSearch<'a> {
    fn new(monoid: &'a Monoid, n: usize, k: usize) -> Self {
        let mut table = vec![None; monoid.size() * n];
        for s in monoid.elements() {
            for z in 0..k {
                table[s * n + z] = Some(z);
            }
        }
        for a in 0..n {
            table[monoid.one() * n + a] = Some(a);
        }
        let mut cells: Vec<(usize, usize)> = (k..n).map(|a| (monoid.zero(), a)).collect();
        for a in k..n {
            for s in monoid.elements() {
                if s != monoid.one() && s != monoid.zero() {
                    cells.push((s, a));
                }
            }
        }
        ActSearch {
            monoid,
            n,
            k,
            table,
            cells,
        }
    }

    fn run(&mut self, i: usize, emit: &mut impl FnMut(Vec<Vec<usize>>)) {
        let Some(&(s, a)) = self.cells.get(i) else {
            let rows = self
                .table
                .chunks(self.n)
                .map(|r| r.iter().map(|v| v.expect("complete table")).collect())
                .collect();
            emit(rows);
            return;
        };
        let (lo, hi) = if s == self.monoid.zero() {
            let lo = if a > self.k {
                self.get(s, a - 1).expect("filled earlier")
            } else {
                0
            };
            (lo, self.k)
        } else {
            (0, self.n)
        };
        for v in lo..hi {
            self.table[s * self.n + a] = Some(v);
            if self.compatible_so_far() {
                self.run(i + 1, emit);
            }
        }
        self.table[s * self.n + a] = None;
    }

    fn get(&self, s: usize, a: usize) -> Option<usize> {
        self.table[s * self.n + a]
    }

    fn compatible_so_far(&self) -> bool {
        let m = self.monoid;
        for t in m.elements() {
            for a in 0..self.n {
                let Some(ta) = self.get(t, a) else { continue };
                for s in m.elements() {
                    let (Some(l), Some(r)) = (self.get(m.mul(s, t), a), self.get(s, ta)) else {
                        continue;
                    };
                    if l != r {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// All left congruences of `S` (as a left act over itself), most classes
/// first: the equality relation leads and the total relation comes last.
pub fn enumerate_left_congruences(monoid: &Arc<Monoid>) -> Result<Vec<ActCongruence>> {
    let n = monoid.size();
    if n > MAX_MONOID_SIZE {
        return Err(Error::BoundTooLarge {
            bound: n,
            max: MAX_MONOID_SIZE,
        });
    }
    let regular = Act::regular(monoid.clone(), Category::Plain);
    let mut out = Vec::new();
    let mut blocks = Vec::with_capacity(n);
    growth_strings(n, &mut blocks, 0, &mut |b| {
        if let Ok(c) = ActCongruence::new(&regular, b.to_vec()) {
            out.push(c);
        }
    });
    out.sort_by_key(|c| std::cmp::Reverse(c.class_count()));
    Ok(out)
}

fn growth_strings(n: usize, prefix: &mut Vec<usize>, used: usize, emit: &mut impl FnMut(&[usize])) {
    if prefix.len() == n {
        emit(prefix);
        return;
    }
    for b in 0..=used {
        prefix.push(b);
        growth_strings(n, prefix, used.max(b + 1), emit);
        prefix.pop();
    }
}
