//! Graph serialization: a JSON object and a plain edge-list text format.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// `{"vertices": ["x1", ...], "edges": [["x1", "x2"], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    #[serde(default)]
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<[String; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            vertices: g.labels().to_vec(),
            edges: g.edge_labels().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

impl TryFrom<&GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: &GraphJson) -> Result<Graph> {
        let edges: Vec<(String, String)> =
            j.edges.iter().map(|[a, b]| (a.clone(), b.clone())).collect();
        Graph::from_edges(&j.vertices, &edges)
    }
}

impl Graph {
    pub fn to_json(&self) -> GraphJson {
        GraphJson::from(self)
    }

    pub fn from_json_str(s: &str) -> Result<Graph> {
        let j: GraphJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Graph::try_from(&j)
    }

    /// One edge per line; isolated vertices on lines of their own.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for v in 0..self.n() {
            if self.adjacency(v).is_empty() {
                out.push_str(self.label(v));
                out.push('\n');
            }
        }
        for (a, b) in self.edge_labels() {
            out.push_str(&a);
            out.push(' ');
            out.push_str(&b);
            out.push('\n');
        }
        out
    }
}

/// Parse the edge-list format. Blank lines and `#` comments are skipped; a
/// line with one label declares a vertex, a line with two declares an edge.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut g = Graph::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [v] => {
                g.ensure_vertex(v);
            }
            [a, b] => {
                let u = g.ensure_vertex(a);
                let v = g.ensure_vertex(b);
                g.add_edge(u, v)?;
            }
            _ => {
                return Err(Error::Parse(format!(
                    "line {}: expected one or two labels, found {}",
                    lineno + 1,
                    tokens.len()
                )))
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::super::tests::triangle_with_pendants;
    use super::*;

    #[test]
    fn json_roundtrip() {
        let mut g = triangle_with_pendants();
        g.add_vertex("lonely").unwrap();
        let text = serde_json::to_string(&g.to_json()).unwrap();
        let back = Graph::from_json_str(&text).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn edge_list_roundtrip() {
        let mut g = triangle_with_pendants();
        g.add_vertex("lonely").unwrap();
        let back = parse_edge_list(&g.to_edge_list()).unwrap();
        assert!(back.same_as(&g));
    }

    #[test]
    fn edge_list_syntax() {
        let g = parse_edge_list("# a path\na b\nb c  # trailing\n\nz\n").unwrap();
        assert_eq!(g.labels(), ["a", "b", "c", "z"]);
        assert_eq!(g.edge_count(), 2);
        assert!(matches!(parse_edge_list("a b c"), Err(Error::Parse(_))));
        assert!(matches!(parse_edge_list("a a"), Err(Error::SelfLoop(_))));
    }

    #[test]
    fn json_rejects_unknown_fields() {
        assert!(Graph::from_json_str(r#"{"vertices":[],"edges":[],"x":1}"#).is_err());
    }
}
