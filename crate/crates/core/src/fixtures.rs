//! The small monoids and acts that serve as worked examples throughout the
//! crate, its tests and the CLI's `--seed-fixtures` workspace.

use std::sync::Arc;

use crate::act::{Act, Category};
use crate::constructions::{adjoin_zero, coproduct};
use crate::monoid::{Monoid, PlainMonoid};

fn strings(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| (*s).to_owned()).collect()
}

/// `({1, 0}, ·)`: the multiplicative monoid of `Z_2`.
pub fn s2() -> Arc<Monoid> {
    Arc::new(
        Monoid::from_label_table(&["1", "0"], &[vec!["1", "0"], vec!["0", "0"]], "1", "0")
            .expect("S2 is a monoid with zero"),
    )
}

/// `{1, 0, e}` with `e·e = e`.
pub fn idempotent_monoid() -> Arc<Monoid> {
    Arc::new(
        Monoid::from_label_table(
            &["1", "0", "e"],
            &[
                vec!["1", "0", "e"],
                vec!["0", "0", "0"],
                vec!["e", "0", "e"],
            ],
            "1",
            "0",
        )
        .expect("valid table"),
    )
}

/// The two-element group with a zero adjoined: `{1, g, 0}`.
pub fn z2_with_zero() -> Arc<Monoid> {
    let g = PlainMonoid::cyclic_group(2).expect("valid group");
    Arc::new(adjoin_zero(&g).expect("no label clash"))
}

/// `A = {θ, a}` over S2 with `0·a = θ`.
pub fn act_a(category: Category) -> Act {
    Act::from_label_table(
        s2(),
        &["θ", "a"],
        &[vec!["θ", "a"], vec!["θ", "θ"]],
        category,
    )
    .expect("A is an act")
}

/// `B = A ⊔ θ`: A with a second, isolated zero. Elements `θA, a, θS`.
pub fn act_b() -> Act {
    let (b, _) = coproduct(
        Category::Plain,
        &[act_a(Category::Plain), Act::theta(s2(), Category::Plain)],
    )
    .expect("same monoid");
    b.relabel(strings(&["θA", "a", "θS"]))
        .expect("three distinct labels")
}

/// `W = {θ, a, b}` over S2 with `0·a = 0·b = θ`.
pub fn act_w(category: Category) -> Act {
    Act::from_label_table(
        s2(),
        &["θ", "a", "b"],
        &[vec!["θ", "a", "b"], vec!["θ", "θ", "θ"]],
        category,
    )
    .expect("W is an act")
}

/// `A1 = {θ}` in the plain category.
pub fn a1() -> Act {
    Act::theta(s2(), Category::Plain)
}

/// `A2 = A1 ⊔ A1 = {θ1, θ2}`.
pub fn a2() -> Act {
    let (c, _) = coproduct(Category::Plain, &[a1(), a1()]).expect("same monoid");
    c.relabel(strings(&["θ1", "θ2"]))
        .expect("two distinct labels")
}
