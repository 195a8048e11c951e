//! JSON and DOT renderings of a crystal graph.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use super::CrystalGraph;
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    Dot,
}

impl FromStr for ExportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "json" => Ok(ExportFormat::Json),
            "dot" => Ok(ExportFormat::Dot),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

#[derive(Serialize)]
struct JsonVertex<'a> {
    id: usize,
    word: &'a [u8],
    wt: &'a [i32],
    phi: &'a [u32],
    eps: &'a [u32],
    #[serde(skip_serializing_if = "Option::is_none")]
    deg: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    btilde: Option<std::collections::BTreeMap<String, Option<usize>>>,
}

#[derive(Serialize)]
struct JsonEdge {
    i: usize,
    from: usize,
    to: usize,
}

#[derive(Serialize)]
struct JsonGraph<'a> {
    n: usize,
    lambda: &'a [u32],
    vertices: Vec<JsonVertex<'a>>,
    edges: Vec<JsonEdge>,
}

/// Renders the graph. With `with_iota` each JSON vertex also carries its
/// `deg_i` values and the targets of `B~_i`.
pub fn export_graph(g: &CrystalGraph, format: ExportFormat, with_iota: bool) -> String {
    match format {
        ExportFormat::Json => {
            let vertices = (0..g.len())
                .map(|v| JsonVertex {
                    id: v,
                    word: g.vertices[v].letters(),
                    wt: &g.wt[v],
                    phi: &g.phi[v],
                    eps: &g.eps[v],
                    deg: with_iota.then(|| (1..g.n()).map(|i| crate::iota::deg_at(g, i, v)).collect()),
                    btilde: with_iota
                        .then(|| (1..g.n()).map(|i| (i.to_string(), crate::iota::b_tilde_at(g, i, v))).collect()),
                })
                .collect();
            let edges = g.edges().into_iter().map(|(i, from, to)| JsonEdge { i, from, to }).collect();
            let doc = JsonGraph { n: g.n(), lambda: g.lambda.coords(), vertices, edges };
            serde_json::to_string_pretty(&doc).expect("graph serializes")
        }
        ExportFormat::Dot => {
            let mut s = String::from("digraph crystal {\n");
            for (v, b) in g.vertices.iter().enumerate() {
                if with_iota {
                    let degs: Vec<String> = (1..g.n()).map(|i| crate::iota::deg_at(g, i, v).to_string()).collect();
                    let _ = writeln!(s, "  {v} [label=\"{}\", deg=\"{}\"];", b.label(), degs.join(","));
                } else {
                    let _ = writeln!(s, "  {v} [label=\"{}\"];", b.label());
                }
            }
            for (i, from, to) in g.edges() {
                let _ = writeln!(s, "  {from} -> {to} [label=\"{i}\"];");
            }
            if with_iota {
                // B~_i is an involution on its domain, so each pair is drawn once
                for v in 0..g.len() {
                    for i in 1..g.n() {
                        if let Some(w) = crate::iota::b_tilde_at(g, i, v).filter(|&w| v <= w) {
                            let _ = writeln!(s, "  {v} -> {w} [label=\"B{i}\", style=dashed, dir=both];");
                        }
                    }
                }
            }
            s.push_str("}\n");
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{build_crystal, DominantWeight, DEFAULT_BUDGET};

    #[test]
    fn json_round_trips() {
        let g = build_crystal(&DominantWeight::new(3, vec![1, 0]).unwrap(), DEFAULT_BUDGET).unwrap();
        let v: serde_json::Value = serde_json::from_str(&export_graph(&g, ExportFormat::Json, false)).unwrap();
        assert_eq!(v["vertices"].as_array().unwrap().len(), 3);
        assert_eq!(v["edges"].as_array().unwrap().len(), 2);
        assert!(v["vertices"][0].get("deg").is_none());
        let v: serde_json::Value = serde_json::from_str(&export_graph(&g, ExportFormat::Json, true)).unwrap();
        assert!(v["vertices"][0]["btilde"].is_object());
    }

    #[test]
    fn dot_output() {
        let g = build_crystal(&DominantWeight::new(2, vec![1]).unwrap(), DEFAULT_BUDGET).unwrap();
        let d = export_graph(&g, ExportFormat::Dot, false);
        assert!(d.contains("0 -> 1 [label=\"1\"]"));
        assert!(d.contains("label=\"2\""));
        assert!("svg".parse::<ExportFormat>().is_err());
        let d = export_graph(&g, ExportFormat::Dot, true);
        assert!(d.contains("0 [label=\"1\", deg=\"1\"]"));
        assert!(d.contains("0 -> 1 [label=\"B1\", style=dashed, dir=both]"));
    }
}
