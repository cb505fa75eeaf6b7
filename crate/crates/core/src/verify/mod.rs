//! End-to-end checks of the structural results on concrete instances.
//!
//! Each suite has a stable id (see [`SUITES`]) and yields a list of named
//! [`Check`]s. Random instances come from a seeded ChaCha stream, so a run
//! is reproducible from [`VerifyConfig::seed`].

mod instances;
mod suites;

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use instances::{instance, instance_graph, INSTANCES};

use crate::error::{Error, Result};
use crate::homological::Budget;

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub budget: Budget,
    /// Characteristics used wherever Betti numbers are computed.
    pub fields: Vec<u32>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { seed: 0x5eed_1dea, budget: Budget::default(), fields: vec![2, 3] }
    }
}

impl VerifyConfig {
    pub(crate) fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }
}

/// One named assertion. `group` sorts checks of a suite into kinds such as
/// `"lq"` or `"betti-cross"`.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub group: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub id: &'static str,
    pub checks: Vec<Check>,
    pub elapsed_ms: u128,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn group(&self, group: &str) -> impl Iterator<Item = &Check> {
        let group = group.to_string();
        self.checks.iter().filter(move |c| c.group == group)
    }
}

/// Collects checks; errors inside a check count as failures.
#[derive(Default)]
pub(crate) struct Checks(Vec<Check>);

impl Checks {
    pub(crate) fn push(&mut self, group: &'static str, name: impl Into<String>, outcome: Result<(bool, String)>) {
        let (passed, detail) = match outcome {
            Ok(x) => x,
            Err(e) => (false, format!("error: {e}")),
        };
        self.0.push(Check { group, name: name.into(), passed, detail });
    }

    pub(crate) fn expect(&mut self, group: &'static str, name: impl Into<String>, outcome: Result<bool>) {
        self.push(group, name, outcome.map(|b| (b, String::new())));
    }

    pub(crate) fn into_inner(self) -> Vec<Check> {
        self.0
    }
}

type SuiteFn = fn(&VerifyConfig) -> Vec<Check>;

/// Suite ids with a one-line description, in run order.
pub const SUITES: &[(&str, &str, SuiteFn)] = &[
    ("example-triangle-pendants", "triangle with two pendants per vertex: cover ideal, second symbolic power, regularities 4 and 9", suites::example_triangle_pendants),
    ("example-c4-triangles", "4-cycle with two attached triangles: decomposable, but the second layered graph is not sequentially CM", suites::example_c4_triangles),
    ("polarization-cover-ideal", "polarized symbolic powers of J(G) equal J(G_k) on random graphs", suites::polarization_cover_ideal),
    ("simplicial-layers", "simplicial vertices stay simplicial in the top layer of G_k", suites::simplicial_layers),
    ("layer-deletion", "deleting layers or closed neighborhoods of G_k gives smaller layered graphs", suites::layer_deletion),
    ("complete-layers-vd", "(K_n)_k is vertex decomposable", suites::complete_layers_vd),
    ("star-complete-layers-vd", "layered star complete graphs are vertex decomposable", suites::star_complete_layers_vd),
    ("pure-attachment-lq", "pure star completes attached at all but at most one host vertex give linear quotients", suites::pure_attachment_lq),
    ("mixed-attachment-lq", "non-pure attachments covering a vertex cover of the host give linear quotients", suites::mixed_attachment_lq),
    ("whisker-cover-lq", "whiskering a vertex cover gives symbolic powers with linear quotients", suites::whisker_cover_lq),
    ("cameron-walker-lq", "Cameron-Walker graphs give symbolic powers with linear quotients", suites::cameron_walker_lq),
    ("clique-whisker-lq", "clique whiskering gives symbolic powers with linear quotients and the expected degree", suites::clique_whisker_lq),
    ("cover-degree-bounds", "degree of J(G_k) against k deg J(G)", suites::cover_degree_bounds),
    ("regularity-formula", "reg J(G)^(k) = k deg J(G) on the covered families; ordinary and symbolic powers agree on bipartite graphs", suites::regularity_formula),
];

pub fn suite_ids() -> impl Iterator<Item = &'static str> {
    SUITES.iter().map(|s| s.0)
}

pub fn run_suite(id: &str, cfg: &VerifyConfig) -> Result<SuiteReport> {
    let &(id, _, f) = SUITES
        .iter()
        .find(|s| s.0 == id)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown suite `{id}`")))?;
    let start = Instant::now();
    let checks = f(cfg);
    Ok(SuiteReport { id, checks, elapsed_ms: start.elapsed().as_millis() })
}

/// Run `all` or a single suite id.
pub fn run(selection: &str, cfg: &VerifyConfig) -> Result<Vec<SuiteReport>> {
    if selection == "all" {
        suite_ids().map(|id| run_suite(id, cfg)).collect()
    } else {
        Ok(vec![run_suite(selection, cfg)?])
    }
}
