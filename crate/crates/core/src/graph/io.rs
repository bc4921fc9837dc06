//! EdgeList and JSON readers, plus EdgeList, JSON and DOT writers.
//!
//! EdgeList: one `u v` pair per line, whitespace separated. Blank lines and
//! lines starting with `#` are skipped. A line holding a single token declares
//! an isolated vertex, which is the only way to write the one-vertex graph.
//!
//! JSON: `{"vertices": [names], "edges": [[u, v], ...]}`. Endpoints may be
//! vertex names (strings) or indices into `vertices` (integers). When every
//! entry of `vertices` is an array or `null` the document is an auxiliary
//! graph dump and the endpoints are indices.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde_json::{json, Value};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Json,
}

impl Format {
    /// Format implied by a file extension (`.txt`, `.edges` or `.json`).
    pub fn from_extension(ext: &str) -> Option<Format> {
        match ext.to_ascii_lowercase().as_str() {
            "txt" | "edges" | "el" => Some(Format::EdgeList),
            "json" => Some(Format::Json),
            _ => None,
        }
    }
}

pub fn parse_graph(text: &[u8], format: Format) -> Result<Graph> {
    let text = std::str::from_utf8(text).map_err(|e| Error::parse(0, format!("invalid UTF-8: {e}")))?;
    let g = match format {
        Format::EdgeList => parse_edge_list(text)?,
        Format::Json => parse_json(text)?,
    };
    if g.vertex_count() == 0 {
        return Err(Error::parse(0, "empty graph"));
    }
    Ok(g)
}

fn intern(g: &mut Graph, ids: &mut HashMap<String, usize>, name: &str) -> usize {
    if let Some(&v) = ids.get(name) {
        return v;
    }
    let v = g.add_vertex(name);
    ids.insert(name.to_string(), v);
    v
}

fn with_line(line: usize) -> impl Fn(Error) -> Error {
    move |e| match e {
        Error::Parse { reason, .. } => Error::parse(line, reason),
        other => other,
    }
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut g = Graph::new(0);
    let mut ids = HashMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [v] => {
                intern(&mut g, &mut ids, v);
            }
            [u, v] => {
                let a = intern(&mut g, &mut ids, u);
                let b = intern(&mut g, &mut ids, v);
                g.add_edge(a, b).map_err(with_line(i + 1))?;
            }
            _ => {
                return Err(Error::parse(
                    i + 1,
                    format!("expected `u v`, found {} tokens", tokens.len()),
                ))
            }
        }
    }
    Ok(g)
}

fn parse_json(text: &str) -> Result<Graph> {
    let doc: Value = serde_json::from_str(text).map_err(|e| Error::parse(e.line(), e.to_string()))?;
    let obj = doc
        .as_object()
        .ok_or_else(|| Error::parse(1, "top level must be an object"))?;
    let mut g = Graph::new(0);
    let mut ids = HashMap::new();
    let vertices = obj.get("vertices").map(|v| {
        v.as_array()
            .ok_or_else(|| Error::parse(1, "`vertices` must be an array"))
    });
    let vertices = vertices.transpose()?;
    let aux_dump = vertices.is_some_and(|vs| {
        !vs.is_empty() && vs.iter().all(|v| v.is_array() || v.is_null())
    });
    if let Some(vs) = vertices {
        for (i, v) in vs.iter().enumerate() {
            let name = match v {
                Value::String(s) => s.clone(),
                Value::Number(n) => n.to_string(),
                _ if aux_dump => i.to_string(),
                _ => return Err(Error::parse(1, format!("vertex {i} must be a string or number"))),
            };
            if ids.contains_key(&name) {
                return Err(Error::parse(1, format!("duplicate vertex `{name}`")));
            }
            intern(&mut g, &mut ids, &name);
        }
    }
    let edges = match obj.get("edges") {
        None => &Vec::new(),
        Some(Value::Array(es)) => es,
        Some(_) => return Err(Error::parse(1, "`edges` must be an array")),
    };
    for (i, e) in edges.iter().enumerate() {
        let pair = e
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| Error::parse(1, format!("edge {i} must be a two-element array")))?;
        let mut ends = [0usize; 2];
        for (slot, end) in ends.iter_mut().zip(pair) {
            *slot = match end {
                Value::String(s) => intern(&mut g, &mut ids, s),
                Value::Number(n) => {
                    let k = n
                        .as_u64()
                        .ok_or_else(|| Error::parse(1, format!("edge {i} has a bad index")))?
                        as usize;
                    if k >= g.vertex_count() {
                        return Err(Error::parse(1, format!("edge {i} references missing vertex {k}")));
                    }
                    k
                }
                _ => return Err(Error::parse(1, format!("edge {i} has a bad endpoint"))),
            };
        }
        g.add_edge(ends[0], ends[1]).map_err(with_line(1))?;
    }
    Ok(g)
}

impl Graph {
    /// EdgeList text using vertex names. Isolated vertices are written as
    /// single-token lines so the output always parses back to the same graph.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for v in self.vertices() {
            if self.degree(v) == 0 {
                let _ = writeln!(out, "{}", self.name(v));
            }
        }
        for &(u, v) in self.edges() {
            let _ = writeln!(out, "{} {}", self.name(u), self.name(v));
        }
        out
    }

    pub fn to_json_value(&self) -> Value {
        json!({
            "vertices": self.names(),
            "edges": self
                .edges()
                .iter()
                .map(|&(u, v)| json!([self.name(u), self.name(v)]))
                .collect::<Vec<_>>(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("graph JSON is serializable") + "\n"
    }

    /// DOT text; vertices are named by their original token, edges are
    /// labelled with their id.
    pub fn to_dot(&self) -> String {
        self.to_dot_with(|_| None)
    }

    pub(crate) fn to_dot_with(&self, tooltip: impl Fn(usize) -> Option<String>) -> String {
        let mut out = String::from("graph G {\n");
        for v in self.vertices() {
            match tooltip(v) {
                Some(t) => {
                    let _ = writeln!(out, "  {:?} [tooltip={:?}];", self.name(v), t);
                }
                None => {
                    let _ = writeln!(out, "  {:?};", self.name(v));
                }
            }
        }
        for (id, &(u, v)) in self.edges().iter().enumerate() {
            let _ = writeln!(out, "  {:?} -- {:?} [label=\"{id}\"];", self.name(u), self.name(v));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> Result<Graph> {
        parse_graph(s.as_bytes(), Format::EdgeList)
    }

    #[test]
    fn triangle_and_path() {
        let c3 = el("a b\nb c\na c").unwrap();
        assert_eq!((c3.vertex_count(), c3.edge_count()), (3, 3));
        let p3 = el("a b\nb c").unwrap();
        assert_eq!((p3.vertex_count(), p3.edge_count()), (3, 2));
        assert_eq!(p3.name(2), "c");
    }

    #[test]
    fn rejects_self_loop_duplicate_and_empty() {
        assert!(matches!(el("a a"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(el("a b\n\n# x\nb a"), Err(Error::Parse { line: 4, .. })));
        assert!(matches!(el("# nothing\n"), Err(Error::Parse { .. })));
        assert!(matches!(el("a b c"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn single_vertex() {
        let g = el("solo\n").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
        assert_eq!(el(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn json_names_and_indices() {
        let g = parse_graph(br#"{"vertices":["a","b","c"],"edges":[["a","b"],[1,2]]}"#, Format::Json).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        let back = parse_graph(g.to_json().as_bytes(), Format::Json).unwrap();
        assert_eq!(back, g);
        let aux = parse_graph(br#"{"vertices":[[0,1],[1,2],null],"edges":[[0,1],[1,2],[0,2]]}"#, Format::Json).unwrap();
        assert_eq!(aux.edge_count(), 3);
        assert!(parse_graph(br#"{"edges":[["a","a"]]}"#, Format::Json).is_err());
    }

    #[test]
    fn dot_labels_edges() {
        let g = el("a b\nb c").unwrap();
        let dot = g.to_dot();
        assert!(dot.contains("\"a\" -- \"b\" [label=\"0\"]"));
        assert!(dot.contains("\"b\" -- \"c\" [label=\"1\"]"));
    }
}
