//! Vertex decomposability: memoized search and certificate trees.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::lq::{Budget, Meter};
use crate::bitset::{bits, VertexSet};
use crate::error::{Error, Result};
use crate::graph::{kernel, Graph};

/// Vertex cap for the search; states are kept as single-word masks.
pub const VD_VERTEX_CAP: usize = 64;

/// A decomposition: edgeless leaves, and nodes that shed a vertex and
/// continue on the deletion `G \ v` and the link `G \ N[v]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VdTree {
    Leaf,
    Node { vertex: String, deletion: Box<VdTree>, link: Box<VdTree> },
}

impl VdTree {
    pub fn node_count(&self) -> usize {
        match self {
            VdTree::Leaf => 1,
            VdTree::Node { deletion, link, .. } => 1 + deletion.node_count() + link.node_count(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VdCertificate {
    Decomposition(VdTree),
    /// Every shedding choice fails somewhere; exhaustive.
    Refuted,
}

impl VdCertificate {
    pub fn is_decomposition(&self) -> bool {
        matches!(self, VdCertificate::Decomposition(_))
    }
}

#[derive(Clone, Copy)]
enum State {
    Leaf,
    Shed(usize),
    Dead,
}

struct Search<'a> {
    closed: &'a [u64],
    memo: HashMap<u64, State>,
    meter: Meter,
}

impl Search<'_> {
    fn open(&self, v: usize, s: u64) -> u64 {
        self.closed[v] & s & !(1 << v)
    }

    fn solve(&mut self, s: u64) -> Result<bool> {
        if let Some(st) = self.memo.get(&s) {
            return Ok(!matches!(st, State::Dead));
        }
        self.meter.tick()?;
        if bits(s).all(|v| self.open(v, s) == 0) {
            self.memo.insert(s, State::Leaf);
            return Ok(true);
        }
        // Neighbors of simplicial vertices are always shedding; try them first.
        let simplicial = |v: usize| {
            let nb = self.open(v, s);
            bits(nb).all(|u| nb & !(1 << u) & !self.closed[u] == 0)
        };
        let mut favored = 0u64;
        for v in bits(s).filter(|&v| self.open(v, s) != 0 && simplicial(v)) {
            favored |= self.open(v, s);
        }
        let mut order: Vec<usize> = bits(s).collect();
        order.sort_by_key(|&v| (favored & (1 << v) == 0, std::cmp::Reverse(self.open(v, s).count_ones()), v));
        for v in order {
            if !kernel::is_shedding(self.closed, &s, v) {
                continue;
            }
            if self.solve(s & !(1 << v))? && self.solve(s & !self.closed[v])? {
                self.memo.insert(s, State::Shed(v));
                return Ok(true);
            }
        }
        self.memo.insert(s, State::Dead);
        Ok(false)
    }

    fn tree(&self, g: &Graph, s: u64) -> VdTree {
        match self.memo[&s] {
            State::Leaf => VdTree::Leaf,
            State::Shed(v) => VdTree::Node {
                vertex: g.label(v).to_string(),
                deletion: Box::new(self.tree(g, s & !(1 << v))),
                link: Box::new(self.tree(g, s & !self.closed[v])),
            },
            State::Dead => unreachable!("only decomposable states are expanded"),
        }
    }
}

/// Decide vertex decomposability of `g`, memoizing on induced subgraphs.
pub fn is_vertex_decomposable(g: &Graph, budget: &Budget) -> Result<VdCertificate> {
    let closed = g
        .closed_words()
        .ok_or(Error::TooLarge { what: "vertices", size: g.n(), cap: VD_VERTEX_CAP })?;
    let all = g.vertices().low_word();
    let mut search = Search { closed: &closed, memo: HashMap::new(), meter: Meter::new(*budget) };
    let ok = search.solve(all)?;
    log::debug!("vertex decomposability: {} states, decomposable = {ok}", search.memo.len());
    Ok(if ok { VdCertificate::Decomposition(search.tree(g, all)) } else { VdCertificate::Refuted })
}

/// Shedding by the restated condition: every maximal independent set of
/// `G \ v` meets `N(v)`. Shares no code with the search kernel's test.
fn sheds(g: &Graph, v: usize) -> Result<bool> {
    let nbrs: Vec<&str> = g.adjacency(v).iter().map(|u| g.label(u)).collect();
    if nbrs.is_empty() {
        return Ok(true);
    }
    let h = g.induced_delete(&VertexSet::singleton(v));
    for s in h.maximal_independent_sets()? {
        if !s.iter().any(|u| nbrs.contains(&h.label(u))) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Re-check a decomposition tree against `g` node by node.
pub fn validate_vd_tree(g: &Graph, tree: &VdTree) -> Result<()> {
    match tree {
        VdTree::Leaf => {
            if g.is_edgeless() {
                Ok(())
            } else {
                Err(Error::InvalidCertificate(format!("leaf graph on {:?} has edges", g.labels())))
            }
        }
        VdTree::Node { vertex, deletion, link } => {
            let v = g
                .index_of(vertex)
                .ok_or_else(|| Error::InvalidCertificate(format!("vertex {vertex} is not present")))?;
            if !sheds(g, v)? {
                return Err(Error::InvalidCertificate(format!("{vertex} is not a shedding vertex")));
            }
            validate_vd_tree(&g.induced_delete(&VertexSet::singleton(v)), deletion)?;
            validate_vd_tree(&g.induced_delete(&g.closed_neighbors(&VertexSet::singleton(v))?), link)
        }
    }
}

/// Check a certificate; refutations are re-derived by a fresh search.
pub fn validate_vd(g: &Graph, cert: &VdCertificate, budget: &Budget) -> Result<()> {
    match cert {
        VdCertificate::Decomposition(t) => validate_vd_tree(g, t),
        VdCertificate::Refuted => match is_vertex_decomposable(g, budget)? {
            VdCertificate::Refuted => Ok(()),
            VdCertificate::Decomposition(_) => Err(Error::InvalidCertificate("graph is vertex decomposable".into())),
        },
    }
}
