//! Brute-force reference implementations used by the integration tests.
//! Nothing here calls the search or enumeration code under test; acts are
//! only read through their action tables.
#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::HashSet;
use std::sync::Arc;

use itertools::Itertools;
use sact_core::{Act, Category, Monoid};

/// Every map `a → b` (as image vectors) that is equivariant, and in the
/// zeroed category also sends zero to zero.
pub fn homs(a: &Act, b: &Act, category: Category) -> Vec<Vec<usize>> {
    let m = a.monoid();
    let n = a.size();
    if n == 0 {
        return vec![Vec::new()];
    }
    (0..n)
        .map(|_| 0..b.size())
        .multi_cartesian_product()
        .filter(|f| {
            m.elements()
                .all(|s| (0..n).all(|x| f[a.act(s, x)] == b.act(s, f[x])))
                && (category == Category::Plain || f[zero_of(a)] == zero_of(b))
        })
        .collect()
}

fn zero_of(a: &Act) -> usize {
    let zs = zeros(a);
    assert_eq!(zs.len(), 1, "zeroed act must have exactly one zero");
    zs[0]
}

/// Elements fixed by every monoid element.
pub fn zeros(a: &Act) -> Vec<usize> {
    (0..a.size())
        .filter(|&x| a.monoid().elements().all(|s| a.act(s, x) == x))
        .collect()
}

/// Isomorphism by trying all bijections.
pub fn isomorphic(a: &Act, b: &Act) -> bool {
    if a.size() != b.size() {
        return false;
    }
    let m = a.monoid();
    (0..a.size()).permutations(a.size()).any(|f| {
        m.elements()
            .all(|s| (0..a.size()).all(|x| f[a.act(s, x)] == b.act(s, f[x])))
    })
}

fn monoid_tables_isomorphic(t: &[Vec<usize>], u: &[Vec<usize>]) -> bool {
    let n = t.len();
    (2..n).permutations(n - 2).any(|rest| {
        let mut f = vec![0, 1];
        f.extend(rest);
        (0..n).all(|x| (0..n).all(|y| f[t[x][y]] == u[f[x]][f[y]]))
    })
}

/// Monoids with identity at 0 and zero at 1, of order `n`, one per class.
pub fn monoid_tables(n: usize) -> Vec<Vec<Vec<usize>>> {
    let free = (n - 2) * (n - 2);
    let mut reps: Vec<Vec<Vec<usize>>> = Vec::new();
    for values in (0..free).map(|_| 0..n).multi_cartesian_product() {
        let mut t = vec![vec![0; n]; n];
        for x in 0..n {
            t[0][x] = x;
            t[x][0] = x;
            t[1][x] = 1;
            t[x][1] = 1;
        }
        for (i, v) in values.into_iter().enumerate() {
            t[2 + i / (n - 2)][2 + i % (n - 2)] = v;
        }
        let assoc = (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| t[t[x][y]][z] == t[x][t[y][z]])));
        if assoc && !reps.iter().any(|r| monoid_tables_isomorphic(r, &t)) {
            reps.push(t);
        }
    }
    reps
}

/// Acts of size exactly `n`, one per class, found by scanning every table.
pub fn acts(monoid: &Arc<Monoid>, n: usize, category: Category) -> Vec<Act> {
    let m = monoid.as_ref();
    let others: Vec<usize> = m.elements().filter(|&s| s != m.one()).collect();
    let mut reps: Vec<Act> = Vec::new();
    let cells = others.len() * n;
    for values in (0..cells).map(|_| 0..n).multi_cartesian_product() {
        let mut rows = vec![Vec::new(); m.size()];
        rows[m.one()] = (0..n).collect();
        for (k, &s) in others.iter().enumerate() {
            rows[s] = values[k * n..(k + 1) * n].to_vec();
        }
        let lawful = m.elements().all(|s| {
            m.elements()
                .all(|t| (0..n).all(|x| rows[m.mul(s, t)][x] == rows[s][rows[t][x]]))
        });
        if !lawful {
            continue;
        }
        let labels = (0..n).map(|i| format!("x{i}")).collect();
        let act = Act::new(monoid.clone(), labels, rows, Category::Plain).expect("lawful table");
        if category == Category::Zeroed && zeros(&act).len() != 1 {
            continue;
        }
        if !reps.iter().any(|r| isomorphic(r, &act)) {
            reps.push(act);
        }
    }
    reps.into_iter()
        .map(|a| a.view(category).expect("checked"))
        .collect()
}

/// Bitmasks of all nonempty subsets closed under the action.
pub fn closed_subsets(a: &Act) -> Vec<u32> {
    let n = a.size();
    (1u32..(1 << n))
        .filter(|&mask| {
            (0..n)
                .filter(|x| mask >> x & 1 == 1)
                .all(|x| a.monoid().elements().all(|s| mask >> a.act(s, x) & 1 == 1))
        })
        .collect()
}

/// `B ∪ C ≠ A` for every proper nonempty subact `C`.
pub fn superfluous(a: &Act, b: u32) -> bool {
    let full = (1u32 << a.size()) - 1;
    closed_subsets(a)
        .into_iter()
        .filter(|&c| c != full)
        .all(|c| b | c != full)
}

/// Every proper nonempty subact is superfluous.
pub fn hollow(a: &Act) -> bool {
    let full = (1u32 << a.size()) - 1;
    closed_subsets(a)
        .into_iter()
        .filter(|&c| c != full)
        .all(|c| superfluous(a, c))
}

/// Projectivity as a lifting property against every surjection between
/// acts in `pool`: each `α: P → C` factors as `π ∘ β` for some `β: P → B`.
pub fn lifts_against(p: &Act, pool: &[Act], category: Category) -> bool {
    let to: Vec<Vec<Vec<usize>>> = pool.iter().map(|x| homs(p, x, category)).collect();
    for (ci, c) in pool.iter().enumerate() {
        for (bi, b) in pool.iter().enumerate() {
            if b.size() < c.size() {
                continue;
            }
            for pi in homs(b, c, category) {
                if pi.iter().collect::<HashSet<_>>().len() != c.size() {
                    continue;
                }
                let reachable: HashSet<Vec<usize>> = to[bi]
                    .iter()
                    .map(|beta| beta.iter().map(|&x| pi[x]).collect())
                    .collect();
                if to[ci].iter().any(|alpha| !reachable.contains(alpha)) {
                    return false;
                }
            }
        }
    }
    true
}
