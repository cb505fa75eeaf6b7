//! Cover ideals of graphs and their symbolic powers.
//!
//! The crate covers four layers:
//!
//! * [`graph`]: simple graphs with bitset adjacency, independence and cover
//!   enumeration, shedding vertices, matchings and isomorphism.
//! * [`constructions`]: whiskers, clique whiskering, star complete graphs,
//!   attachments, the layered graph `G_k` and Cameron–Walker graphs.
//! * [`ideal`]: exact monomial-ideal arithmetic, cover and edge ideals,
//!   symbolic powers, Alexander duality and polarization.
//! * [`homological`]: Betti tables over the lcm lattice, regularity,
//!   linear resolutions, componentwise linearity, linear-quotient orders and
//!   vertex decomposability, each with a certificate that can be re-checked.
//!
//! [`verify`] bundles end-to-end checks of the structural results on
//! concrete instances.

pub mod bitset;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod homological;
pub mod ideal;
pub mod verify;

pub use bitset::{BitSet, VertexSet};
pub use error::{Error, Result};
pub use graph::{Graph, LabelPolicy};
pub use ideal::{cover_ideal, edge_ideal, symbolic_power_cover, Monomial, MonomialIdeal, Ring};
