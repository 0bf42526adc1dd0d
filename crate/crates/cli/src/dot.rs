//! Hasse diagrams in Graphviz DOT, drawn bottom to top.

use std::fmt::Write;

use fintop::{CSpace, FinitePoset};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// One node per element, one edge per cover `x -> y` for `x < y`, and a
/// `rank=same` group per level.
pub fn poset_dot(name: &str, p: &FinitePoset) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(name)).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    for x in 0..p.len() {
        writeln!(out, "  n{x} [label={}];", quote(p.label(x))).unwrap();
    }
    let levels = p.levels();
    for level in 0..=p.height() {
        let nodes: Vec<String> = (0..p.len()).filter(|&x| levels[x] == level).map(|x| format!("n{x};")).collect();
        if nodes.len() > 1 {
            writeln!(out, "  {{ rank=same; {} }}", nodes.join(" ")).unwrap();
        }
    }
    for &(a, b) in p.covers() {
        writeln!(out, "  n{a} -> n{b};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// The regions of a CSpace, labelled `U{..}` / `F{..}`.
pub fn cspace_dot(name: &str, c: &CSpace) -> String {
    poset_dot(name, c.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn edges(dot: &str) -> Vec<&str> {
        dot.lines().filter(|l| l.contains("->")).map(str::trim).collect()
    }

    #[test]
    fn singleton_and_chain() {
        let one = poset_dot("p", &FinitePoset::chain(1).unwrap());
        assert!(edges(&one).is_empty());
        assert_eq!(one.matches("[label=").count(), 1);
        let chain = poset_dot("p", &FinitePoset::chain(3).unwrap());
        assert_eq!(edges(&chain), vec!["n0 -> n1;", "n1 -> n2;"]);
    }

    #[test]
    fn c_space_of_ex_easy() {
        let c = CSpace::c_space(&Arc::new(fintop::catalog::ex_easy()));
        let dot = cspace_dot("C", &c);
        assert_eq!(dot.matches("[label=").count(), 9);
        assert_eq!(edges(&dot).len(), 13);
        assert!(dot.contains("[label=\"U{0,1,3}\"]"));
        assert_eq!(dot, cspace_dot("C", &c));
    }

    #[test]
    fn quotes_are_escaped() {
        let p = FinitePoset::new(&["a\"b"], &[] as &[(&str, &str)]).unwrap();
        assert!(poset_dot("x\"y", &p).contains("\"a\\\"b\""));
    }
}
