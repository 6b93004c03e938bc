//! Crystal graphs as Graphviz DOT and as JSON.

use std::fmt::Write;

use serde::Serialize;
use tropcrystal_core::crystalcore::{CrystalGraph, ExtInt};

pub const GRAPH_SCHEMA: &str = "tropcrystal.graph/1";

const COLOURS: [&str; 8] = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"];

fn colour(i: usize) -> &'static str {
    COLOURS[(i - 1) % COLOURS.len()]
}

fn quote(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// One node per element, `f̃_i` edges coloured by `i`. Boundary nodes are dashed.
pub fn to_dot(g: &CrystalGraph, title: &str) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", quote(title)).unwrap();
    writeln!(out, "  node [shape=box, fontsize=10];").unwrap();
    for (v, n) in g.nodes.iter().enumerate() {
        let style = if g.boundary[v] { ", style=dashed" } else { "" };
        writeln!(out, "  n{v} [label=\"{}\\nwt {:?}\"{style}];", quote(&n.name), n.wt).unwrap();
    }
    for (v, row) in g.f_edges.iter().enumerate() {
        for (i, w) in row.iter().enumerate() {
            if let Some(w) = w {
                let c = colour(i + 1);
                writeln!(out, "  n{v} -> n{w} [label=\"{}\", color={c}, fontcolor={c}];", i + 1).unwrap();
            }
        }
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct JsonNode<'a> {
    id: usize,
    label: &'a str,
    wt: &'a [i64],
    /// `null` stands for −∞
    eps: Vec<Option<i64>>,
    phi: Vec<Option<i64>>,
}

#[derive(Serialize)]
struct JsonEdge {
    from: usize,
    to: usize,
    colour: usize,
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    schema: &'static str,
    title: &'a str,
    rank: usize,
    nodes: Vec<JsonNode<'a>>,
    edges: Vec<JsonEdge>,
    boundary: Vec<usize>,
}

fn ext(v: &[ExtInt]) -> Vec<Option<i64>> {
    v.iter().map(|e| e.fin()).collect()
}

pub fn to_json(g: &CrystalGraph, title: &str) -> String {
    let nodes = g
        .nodes
        .iter()
        .enumerate()
        .map(|(id, n)| JsonNode { id, label: &n.name, wt: &n.wt, eps: ext(&n.eps), phi: ext(&n.phi) })
        .collect();
    let edges = g
        .f_edges
        .iter()
        .enumerate()
        .flat_map(|(v, row)| row.iter().enumerate().filter_map(move |(i, w)| w.map(|w| JsonEdge { from: v, to: w, colour: i + 1 })))
        .collect();
    let boundary = (0..g.len()).filter(|&v| g.boundary[v]).collect();
    let doc = JsonGraph { schema: GRAPH_SCHEMA, title, rank: g.rank, nodes, edges, boundary };
    serde_json::to_string_pretty(&doc).expect("graph serializes") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;
    use tropcrystal_core::crystalcore::NodeLabel;

    fn two_nodes() -> CrystalGraph {
        let label = |name: &str, e: i64| NodeLabel {
            name: name.into(),
            wt: vec![-e],
            eps: vec![ExtInt::Fin(e)],
            phi: vec![ExtInt::NegInf],
        };
        CrystalGraph {
            rank: 1,
            nodes: vec![label("a", 0), label("b\"", 1)],
            f_edges: vec![vec![Some(1)], vec![None]],
            boundary: vec![false, true],
        }
    }

    #[test]
    fn dot_has_coloured_edges() {
        let d = to_dot(&two_nodes(), "t");
        assert!(d.contains("n0 -> n1 [label=\"1\", color=red"));
        assert!(d.contains("b\\\""));
        assert!(d.contains("style=dashed"));
    }

    #[test]
    fn json_round_trip() {
        let v: serde_json::Value = serde_json::from_str(&to_json(&two_nodes(), "t")).unwrap();
        assert_eq!(v["schema"], GRAPH_SCHEMA);
        assert_eq!(v["edges"][0]["to"], 1);
        assert!(v["nodes"][0]["phi"][0].is_null());
        assert_eq!(v["boundary"], serde_json::json!([1]));
    }
}
