//! Coloured graphs on partitions or multipartitions, with JSON and DOT output.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Value};

/// Vertices in a fixed order, edges by vertex index.
pub struct Graph {
    pub name: &'static str,
    pub meta: Value,
    /// `(label, json, degree)`
    pub vertices: Vec<(String, Value, usize)>,
    pub edges: Vec<(usize, i64, usize)>,
}

impl Graph {
    pub fn new<V: Ord + Clone>(
        name: &'static str,
        meta: Value,
        vertices: impl IntoIterator<Item = V>,
        edges: impl IntoIterator<Item = (V, i64, V)>,
        describe: impl Fn(&V) -> (String, Value, usize),
    ) -> Self {
        let verts: Vec<V> = vertices.into_iter().collect();
        let index: BTreeMap<V, usize> = verts.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect();
        let edges = edges.into_iter().map(|(a, i, b)| (index[&a], i, index[&b])).collect();
        Graph { name, meta, vertices: verts.iter().map(describe).collect(), edges }
    }

    pub fn to_json(&self) -> Value {
        let vertices: Vec<Value> = self
            .vertices
            .iter()
            .map(|(_, v, n)| json!({"label": v, "degree": n}))
            .collect();
        let edges: Vec<Value> = self
            .edges
            .iter()
            .map(|&(a, i, b)| json!({"source": a, "target": b, "i": i}))
            .collect();
        json!({"graph": self.name, "meta": self.meta, "vertices": vertices, "edges": edges})
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph {} {{\n", self.name);
        for (k, (label, _, n)) in self.vertices.iter().enumerate() {
            writeln!(out, "  v{k} [label=\"{label}\\nn={n}\"];").unwrap();
        }
        for &(a, i, b) in &self.edges {
            writeln!(out, "  v{a} -> v{b} [label=\"{i}\"];").unwrap();
        }
        out.push_str("}\n");
        out
    }
}
