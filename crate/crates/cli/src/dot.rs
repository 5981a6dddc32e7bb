//! Cayley graphs in DOT.
//!
//! One node per element and an edge `a -> s·a` labelled `s` for every
//! `s ≠ 1`. Loops at zero elements are left out: every element of the
//! monoid fixes them, so they would only repeat the zero set.

use std::fmt::Write as _;

use sact_core::Act;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn cayley_dot(name: &str, act: &Act) -> String {
    let m = act.monoid();
    let mut out = format!("digraph {} {{\n", quote(name));
    for a in act.elements() {
        let _ = writeln!(out, "  {};", quote(act.label(a)));
    }
    for a in act.elements() {
        if act.is_zero_element(a) {
            continue;
        }
        for s in m.elements().filter(|&s| s != m.one()) {
            let b = act.act(s, a);
            let _ = writeln!(
                out,
                "  {} -> {} [label={}];",
                quote(act.label(a)),
                quote(act.label(b)),
                quote(m.label(s))
            );
        }
    }
    out.push_str("}\n");
    out
}
