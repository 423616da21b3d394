//! Graphviz export.

use std::fmt::Write;

use crate::embedding::EmbeddingMetrics;
use crate::graph::Graph;

/// Renders `g` as an undirected DOT graph, vertices in id order and edges in
/// canonical order. With `annotations`, each edge is labelled with its
/// congestion and the most congested edges are drawn bold.
pub fn export_dot(g: &Graph, annotations: Option<&EmbeddingMetrics>) -> String {
    let name = if g.name().is_empty() { "G" } else { g.name() };
    let mut out = String::new();
    writeln!(out, "graph {:?} {{", name).unwrap();
    for v in g.vertices() {
        writeln!(out, "  {v};").unwrap();
    }
    for e @ (u, v) in g.edges() {
        match annotations {
            Some(m) => {
                let c = m.congestion.get(&e).copied().unwrap_or(0);
                let bold = if c == m.max_congestion && c > 0 {
                    ", style=bold"
                } else {
                    ""
                };
                writeln!(out, "  {u} -- {v} [label=\"{c}\"{bold}];").unwrap();
            }
            None => writeln!(out, "  {u} -- {v};").unwrap(),
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{embed_windmill_into_circulant, evaluate};
    use crate::families;

    #[test]
    fn triangle() {
        let g = families::cycle(3).unwrap();
        let text = export_dot(&g, None);
        assert!(text.starts_with("graph "));
        assert_eq!(text.lines().filter(|l| l.trim_end().ends_with(';') && !l.contains("--")).count(), 3);
        assert!(text.contains("  1 -- 2;\n  1 -- 3;\n  2 -- 3;\n"));
    }

    #[test]
    fn hypertree_counts() {
        let text = export_dot(&families::hypertree(4).unwrap(), None);
        assert_eq!(text.matches(" -- ").count(), 21);
        assert_eq!(text.lines().count(), 15 + 21 + 2);
    }

    #[test]
    fn congestion_labels_sum_to_wirelength() {
        let emb = embed_windmill_into_circulant(4).unwrap();
        let m = evaluate(&emb);
        let text = export_dot(emb.host(), Some(&m));
        let total: usize = text
            .split("label=\"")
            .skip(1)
            .map(|s| s.split('"').next().unwrap().parse::<usize>().unwrap())
            .sum();
        assert_eq!(total, m.wirelength);
        assert_eq!(text, export_dot(emb.host(), Some(&m)));
    }
}
