//! Text serializations of a [`DynkinGraph`].

use std::fmt::Write;

use super::graph::DynkinGraph;
use super::registry::{Registry, Strategy};

pub trait GraphFormat: Strategy {
    fn extension(&self) -> &'static str;
    fn render(&self, graph: &DynkinGraph) -> String;
}

pub struct Dot;
pub struct Json;

impl Strategy for Dot {
    fn name(&self) -> &'static str {
        "dot"
    }

    fn summary(&self) -> &'static str {
        "Graphviz undirected graph; negative edges dashed"
    }
}

impl GraphFormat for Dot {
    fn extension(&self) -> &'static str {
        "dot"
    }

    fn render(&self, graph: &DynkinGraph) -> String {
        emit_dot(graph)
    }
}

impl Strategy for Json {
    fn name(&self) -> &'static str {
        "json"
    }

    fn summary(&self) -> &'static str {
        "vertices and edges with exact rational weights"
    }
}

impl GraphFormat for Json {
    fn extension(&self) -> &'static str {
        "json"
    }

    fn render(&self, graph: &DynkinGraph) -> String {
        emit_json(graph)
    }
}

pub fn formats() -> Registry<dyn GraphFormat> {
    let mut r: Registry<dyn GraphFormat> = Registry::new();
    r.register(Box::new(Dot)).register(Box::new(Json));
    r
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        if ch == '"' || ch == '\\' {
            out.push('\\');
        }
        out.push(ch);
    }
    out.push('"');
    out
}

pub fn emit_dot(graph: &DynkinGraph) -> String {
    let mut out = String::from("graph dynkin {\n");
    for v in &graph.vertices {
        let label = format!("{} ({})", v.label, v.self_intersection);
        writeln!(out, "  {} [label={}];", v.id, quote(&label)).unwrap();
    }
    for e in &graph.edges {
        let style = if e.weight.is_negative() {
            ", style=dashed"
        } else {
            ""
        };
        writeln!(
            out,
            "  {} -- {} [label={}{style}];",
            e.source,
            e.target,
            quote(&e.weight.to_string())
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn emit_json(graph: &DynkinGraph) -> String {
    let mut s = serde_json::to_string_pretty(graph).expect("graph serialization cannot fail");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Rational;
    use crate::report::graph::{Edge, Vertex};

    fn graph() -> DynkinGraph {
        DynkinGraph {
            vertices: vec![
                Vertex {
                    id: "a".into(),
                    label: "a".into(),
                    self_intersection: Rational::from(-2),
                },
                Vertex {
                    id: "b".into(),
                    label: "b\"q".into(),
                    self_intersection: Rational::new(-2, 3),
                },
            ],
            edges: vec![Edge {
                source: "a".into(),
                target: "b".into(),
                weight: Rational::from(-2),
            }],
        }
    }

    #[test]
    fn single_vertex_dot() {
        let g = DynkinGraph {
            vertices: vec![Vertex {
                id: "d1".into(),
                label: "d1".into(),
                self_intersection: Rational::from(-2),
            }],
            edges: vec![],
        };
        assert_eq!(
            emit_dot(&g),
            "graph dynkin {\n  d1 [label=\"d1 (-2)\"];\n}\n"
        );
    }

    #[test]
    fn negative_edges_are_dashed_and_labels_escaped() {
        let dot = emit_dot(&graph());
        assert!(dot.contains("a -- b [label=\"-2\", style=dashed];"));
        assert!(dot.contains("label=\"b\\\"q (-2/3)\""));
    }

    #[test]
    fn json_round_trip() {
        let g = graph();
        let text = emit_json(&g);
        let back: DynkinGraph = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(emit_json(&back), text);
    }

    #[test]
    fn registry_lookup() {
        let r = formats();
        assert_eq!(r.names(), vec!["dot", "json"]);
        assert!(r.get("svg").is_none());
        assert_eq!(r.get("json").unwrap().render(&graph()), emit_json(&graph()));
    }
}
