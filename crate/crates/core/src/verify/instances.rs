//! Instance files shipped with the repository, embedded so that runs are
//! hermetic.

use crate::constructions::GraphSource;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const INSTANCES: &[(&str, &str)] = &[
    ("c4_triangles", include_str!("../../../../instances/c4_triangles.json")),
    ("c4_triangles_attach", include_str!("../../../../instances/c4_triangles_attach.json")),
    ("triangle_pendants", include_str!("../../../../instances/triangle_pendants.json")),
    ("triangle_pendants_attach", include_str!("../../../../instances/triangle_pendants_attach.json")),
];

pub fn instance(name: &str) -> Result<&'static str> {
    INSTANCES
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown instance `{name}`")))
}

pub fn instance_graph(name: &str) -> Result<Graph> {
    GraphSource::from_json_str(instance(name)?)?.build()
}
