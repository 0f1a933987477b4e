//! Graphviz output of Hasse diagrams, drawn bottom-up with one rank per height.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::poset::FinitePoset;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn to_dot(p: &FinitePoset) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(p.name())).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    writeln!(out, "  edge [arrowhead=none];").unwrap();
    let mut levels: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (x, h) in p.heights().into_iter().enumerate() {
        levels.entry(h).or_default().push(x);
    }
    for xs in levels.values() {
        let nodes: Vec<String> = xs.iter().map(|&x| quote(p.name_of(x))).collect();
        writeln!(out, "  {{ rank=same; {}; }}", nodes.join("; ")).unwrap();
    }
    for (a, b) in p.covers() {
        writeln!(out, "  {} -> {};", quote(p.name_of(a)), quote(p.name_of(b))).unwrap();
    }
    out.push_str("}\n");
    out
}
