//! JSON descriptions of constructed graphs, as read by the CLI.
//!
//! A graph source is either a literal graph object or a family object
//! tagged by `"family"`; families nest through their `base`/`host` fields:
//!
//! ```json
//! {"family": "g_k", "k": 2,
//!  "base": {"family": "star_complete", "center": "a", "sizes": [3, 3]}}
//! ```

use serde::{Deserialize, Serialize};

use super::{
    add_whiskers, attach, cameron_walker, clique_whisker, complete_graph, cycle_graph, g_k,
    path_graph, star_complete, Attachment, AttachmentSpec, CameronWalkerSpec, CliquePartition,
    StarCompleteSpec,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphJson, LabelPolicy};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphSource {
    Family(Box<FamilySpec>),
    Graph(GraphJson),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilySpec {
    Complete { n: usize },
    Path { n: usize },
    Cycle { n: usize },
    #[serde(rename = "g_k")]
    GK { base: GraphSource, k: usize },
    StarComplete {
        #[serde(default = "default_center")]
        center: String,
        sizes: Vec<usize>,
    },
    /// Whiskers on the listed vertices, or on every vertex when omitted.
    Whiskers {
        base: GraphSource,
        #[serde(default)]
        vertices: Option<Vec<String>>,
    },
    /// Clique whiskering; the trivial partition when omitted.
    CliqueWhisker {
        base: GraphSource,
        #[serde(default)]
        partition: Option<Vec<Vec<String>>>,
    },
    Attach { host: GraphSource, attachments: Vec<Attachment> },
    CameronWalker(CameronWalkerSpec),
    /// Parts keep their labels unless `prefix` is set.
    DisjointUnion {
        parts: Vec<GraphSource>,
        #[serde(default)]
        prefix: bool,
    },
}

fn default_center() -> String {
    "x".to_string()
}

impl GraphSource {
    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphSource::Graph(j) => Graph::try_from(j),
            GraphSource::Family(f) => f.build(),
        }
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Complete { n } => Ok(complete_graph(*n)),
            FamilySpec::Path { n } => Ok(path_graph(*n)),
            FamilySpec::Cycle { n } => cycle_graph(*n),
            FamilySpec::GK { base, k } => g_k(&base.build()?, *k),
            FamilySpec::StarComplete { center, sizes } => {
                star_complete(&StarCompleteSpec::new(center.clone(), sizes.clone()))
            }
            FamilySpec::Whiskers { base, vertices } => {
                let g = base.build()?;
                let s = match vertices {
                    Some(v) => g.vertex_set(v)?,
                    None => g.vertices(),
                };
                add_whiskers(&g, &s)
            }
            FamilySpec::CliqueWhisker { base, partition } => {
                let g = base.build()?;
                let pi = match partition {
                    Some(p) => CliquePartition::from_labels(&g, p)?,
                    None => CliquePartition::trivial(&g),
                };
                clique_whisker(&g, &pi)
            }
            FamilySpec::Attach { host, attachments } => attach(&AttachmentSpec {
                host: host.build()?,
                attachments: attachments.clone(),
            }),
            FamilySpec::CameronWalker(spec) => cameron_walker(spec),
            FamilySpec::DisjointUnion { parts, prefix } => {
                let graphs = parts.iter().map(GraphSource::build).collect::<Result<Vec<_>>>()?;
                let policy = if *prefix { LabelPolicy::Prefix } else { LabelPolicy::Keep };
                Graph::disjoint_union(&graphs, policy)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::isomorphism;

    fn build(s: &str) -> Result<Graph> {
        GraphSource::from_json_str(s)?.build()
    }

    #[test]
    fn g_k_of_c4_with_k_1() {
        let c4 = r#"{"vertices":["x1","x2","x3","x4"],
                     "edges":[["x1","x2"],["x2","x3"],["x3","x4"],["x4","x1"]]}"#;
        let g = build(&format!(r#"{{"family":"g_k","base":{c4},"k":1}}"#)).unwrap();
        let c4 = build(c4).unwrap();
        assert!(isomorphism(&g, &c4).unwrap().is_some());
    }

    #[test]
    fn star_triangle_default_center() {
        let g = build(r#"{"family":"star_complete","sizes":[3,3]}"#).unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 6));
        assert_eq!(g.label(0), "x");
    }

    #[test]
    fn nested_families() {
        let g = build(
            r#"{"family":"clique_whisker",
                "base":{"family":"complete","n":3},
                "partition":[["x1","x2"],["x3"]]}"#,
        )
        .unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 6));
        let u = build(
            r#"{"family":"disjoint_union","prefix":true,
                "parts":[{"family":"path","n":2},{"family":"path","n":2}]}"#,
        )
        .unwrap();
        assert_eq!(u.connected_components().len(), 2);
    }

    #[test]
    fn schema_violations() {
        assert!(build(r#"{"family":"g_k","k":2}"#).is_err());
        assert!(build(r#"{"family":"nonsense"}"#).is_err());
        assert!(build(r#"{"family":"star_complete","sizes":[1]}"#).is_err());
    }
}
