//! Hasse diagrams in Graphviz DOT.
//!
//! Nodes are `n0, n1, …` in element order. Solid edges are exactly the cover
//! relation, drawn bottom to top; the involution, when present, adds one
//! dashed undirected arc per orbit (a loop for a fixed point).

use std::fmt::Write;

use lattica_core::Structure;

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '"' | '\\' => {
                out.push('\\');
                out.push(c);
            }
            '\n' => out.push_str("\\n"),
            _ => out.push(c),
        }
    }
    out
}

pub fn to_dot(s: &Structure) -> String {
    let l = s.lattice();
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n");
    for x in 0..l.n() {
        writeln!(out, "  n{x} [label=\"{}\"];", escape(&l.label(x))).expect("write to String");
    }
    for (x, y) in l.covers() {
        writeln!(out, "  n{x} -> n{y};").expect("write to String");
    }
    if let Some(inv) = s.inv() {
        for (x, &y) in inv.iter().enumerate().filter(|&(x, &y)| x <= y) {
            writeln!(out, "  n{x} -> n{y} [style=dashed, dir=none, constraint=false];").expect("write to String");
        }
    }
    out.push_str("}\n");
    out
}
