//! Graphviz export.

use std::fmt::Write;

use voltage_tower_core::DirectedMultigraph;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// `digraph` for directed graphs, `graph` otherwise. Nodes are labelled
/// with the vertex labels when present, else the vertex index.
pub fn to_dot(g: &DirectedMultigraph) -> String {
    let (kind, arrow) = if g.is_directed() { ("digraph", "->") } else { ("graph", "--") };
    let mut out = String::new();
    writeln!(out, "{kind} {} {{", quote(g.name().unwrap_or("graph"))).unwrap();
    for v in 0..g.vertex_count() {
        let label = g.labels().map_or_else(|| v.to_string(), |l| l[v].clone());
        writeln!(out, "  {v} [label={}];", quote(&label)).unwrap();
    }
    for &(s, t) in g.edges() {
        writeln!(out, "  {s} {arrow} {t};").unwrap();
    }
    out.push_str("}\n");
    out
}
