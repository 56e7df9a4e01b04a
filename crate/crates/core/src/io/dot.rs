//! Graphviz output for string diagrams and maps.

use std::fmt::Write;

use crate::lambda::{Coloring, Kind, LinearTerm, Rule, Term};
use crate::maps::RootedMap;

const BLUE: &str = "color=blue, label=\"B\"";
const RED: &str = "color=red, label=\"R\"";

struct Diagram {
    nodes: String,
    edges: String,
    next: usize,
}

impl Diagram {
    fn node(&mut self, prefix: &str, label: &str) -> String {
        let id = format!("{prefix}{}", self.next);
        self.next += 1;
        writeln!(self.nodes, "  {id} [label=\"{label}\"];").unwrap();
        id
    }

    fn wire(&mut self, from: &str, to: &str, attrs: &str) {
        writeln!(self.edges, "  {from} -> {to} [{attrs}];").unwrap();
    }

    /// Draws the derivation and returns the node producing its output
    /// wire. `scope` lists, innermost first, the nodes emitting each
    /// variable wire.
    fn build(&mut self, rule: &Rule, term: &Term, scope: &mut Vec<String>) -> String {
        match (rule, term) {
            (Rule::V, Term::Var(i)) => scope[*i].clone(),
            (Rule::A(f, x), Term::App(tf, tx)) => {
                let fun = self.build(f, tf, scope);
                let arg = self.build(x, tx, scope);
                let a = self.node("a", "a");
                self.wire(&fun, &a, BLUE);
                self.wire(&arg, &a, RED);
                a
            }
            (Rule::S(inner), _) => {
                let src = self.build(inner, term, scope);
                let s = self.node("s", "s");
                self.wire(&src, &s, BLUE);
                s
            }
            (Rule::L(body), Term::Lam(tb)) => {
                let l = self.node("l", "ℓ");
                scope.insert(0, l.clone());
                let out = self.build(body, tb, scope);
                scope.remove(0);
                self.wire(&out, &l, RED);
                l
            }
            _ => unreachable!("coloring does not match term"),
        }
    }
}

/// DOT for the string diagram of a colored term. Wires run from producer to
/// consumer. Each ℓ-node both consumes its body and emits the bound
/// variable; free variables enter from input nodes `x0, x1, …`.
pub fn emit_dot_diagram(t: &LinearTerm, c: &Coloring) -> String {
    assert!(c.colors(t), "coloring does not match term");
    let mut d = Diagram {
        nodes: String::new(),
        edges: String::new(),
        next: 0,
    };
    let mut scope: Vec<String> = (0..t.arity())
        .map(|i| {
            let id = format!("x{i}");
            writeln!(d.nodes, "  {id} [shape=plaintext, label=\"{}\"];", crate::io::display_name(i))
                .unwrap();
            id
        })
        .collect();
    let out = d.build(c.root(), t.term(), &mut scope);
    d.nodes.push_str("  out [shape=point];\n");
    let color = match c.kind() {
        Kind::Neutral => BLUE,
        Kind::Normal => RED,
    };
    d.wire(&out, "out", color);
    format!("digraph diagram {{\n  node [shape=circle];\n{}{}}}\n", d.nodes, d.edges)
}

/// DOT for a map as an undirected multigraph. Edge `i` joins the sources
/// of darts `+i` and `-i`; the root edge points away from the root dart's
/// source.
pub fn emit_dot_map(m: &RootedMap) -> String {
    let mut out = String::from("graph map {\n  node [shape=point];\n");
    let vertices = m.vertices();
    let mut owner = vec![0usize; 2 * m.edge_count()];
    for (v, cycle) in vertices.iter().enumerate() {
        writeln!(out, "  v{v};").unwrap();
        for &d in cycle {
            owner[dart_slot(d)] = v;
        }
    }
    for e in 1..=m.edge_count() as i32 {
        let (tail, head) = match m.root() {
            Some(r) if r == -e => (-e, e),
            _ => (e, -e),
        };
        let root_attrs = if m.root().map(i32::abs) == Some(e) {
            ", dir=forward, penwidth=2"
        } else {
            ""
        };
        writeln!(
            out,
            "  v{} -- v{} [label=\"{e}\"{root_attrs}];",
            owner[dart_slot(tail)],
            owner[dart_slot(head)]
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

fn dart_slot(d: i32) -> usize {
    2 * (d.unsigned_abs() as usize - 1) + usize::from(d < 0)
}
