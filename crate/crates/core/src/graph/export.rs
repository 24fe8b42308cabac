use std::fmt::Write as _;

use serde_json::{json, Value};

use super::CrystalGraph;
use crate::word::Label;

fn label_text<E>(g: &CrystalGraph<E>, label: Label) -> String {
    if g.mode.is_sqrt() {
        format!("{label}'")
    } else {
        label.to_string()
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

impl<E> CrystalGraph<E> {
    /// Graphviz text. Edges are `f`-edges: blue for 1, red for 2, green for
    /// 3, black beyond that, dashed for `1̄`.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n  node [shape=box, fontname=\"monospace\"];\n");
        for (k, v) in self.vertices.iter().enumerate() {
            writeln!(out, "  v{k} [label=\"{}\"];", escape(&v.key)).unwrap();
        }
        for e in &self.edges {
            let (color, style) = match e.label {
                Label::Bar => ("black", "dashed"),
                Label::Index(1) => ("blue", "solid"),
                Label::Index(2) => ("red", "solid"),
                Label::Index(3) => ("green", "solid"),
                Label::Index(_) => ("black", "solid"),
            };
            writeln!(
                out,
                "  v{} -> v{} [label=\"{}\", color={color}, style={style}];",
                e.source,
                e.target,
                label_text(self, e.label)
            )
            .unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// `{"n", "mode", "vertices": [{"key", "weight"}], "edges":
    /// [{"source", "label", "target"}], "truncated"}` with vertex indices.
    pub fn to_json_value(&self) -> Value {
        let vertices: Vec<Value> = self.vertices.iter().map(|v| json!({"key": v.key, "weight": v.weight})).collect();
        let edges: Vec<Value> = self
            .edges
            .iter()
            .map(|e| json!({"source": e.source, "label": label_text(self, e.label), "target": e.target}))
            .collect();
        json!({
            "n": self.n,
            "mode": self.mode.name(),
            "vertices": vertices,
            "edges": edges,
            "truncated": self.truncated,
        })
    }
}
