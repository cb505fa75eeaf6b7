//! Homological invariants and certificate searches.

mod betti;
mod complex;
mod fp;
mod lq;
mod vd;

pub use betti::*;
pub use complex::{independence_complex, reduced_homology_ranks, stanley_reisner, SimplicialComplex, FACE_CAP, HOMOLOGY_VERTEX_CAP};
pub use fp::Field;
pub use lq::*;
pub use vd::*;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{Graph, GraphJson};
use crate::ideal::{IdealJson, MonomialIdeal};

/// A certificate together with the object it is about, as written to disk.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CertificateFile {
    LinearQuotients { ideal: IdealJson, certificate: LqCertificate },
    VertexDecomposable { graph: GraphJson, certificate: VdCertificate },
}

impl CertificateFile {
    pub fn linear_quotients(ideal: &MonomialIdeal, certificate: LqCertificate) -> Self {
        CertificateFile::LinearQuotients { ideal: ideal.to_json(), certificate }
    }

    pub fn vertex_decomposable(g: &Graph, certificate: VdCertificate) -> Self {
        CertificateFile::VertexDecomposable { graph: g.into(), certificate }
    }

    /// Whether this is a refutation rather than a positive certificate.
    pub fn is_refutation(&self) -> bool {
        match self {
            CertificateFile::LinearQuotients { certificate, .. } => !certificate.is_order(),
            CertificateFile::VertexDecomposable { certificate, .. } => !certificate.is_decomposition(),
        }
    }

    /// Re-check against the embedded target; refutations are re-derived.
    pub fn validate(&self, budget: &Budget) -> Result<()> {
        match self {
            CertificateFile::LinearQuotients { ideal, certificate } => {
                validate_lq(&MonomialIdeal::try_from(ideal)?, certificate, budget)
            }
            CertificateFile::VertexDecomposable { graph, certificate } => {
                validate_vd(&Graph::try_from(graph)?, certificate, budget)
            }
        }
    }
}
