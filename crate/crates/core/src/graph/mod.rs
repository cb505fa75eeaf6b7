//! Simple undirected graphs on labeled vertices.
//!
//! Adjacency is stored as one [`VertexSet`] per vertex. Every routine that
//! enumerates subsets takes the single-word path when the graph has at most
//! 64 vertices and the multi-word path otherwise.

mod io;
mod iso;
pub(crate) mod kernel;
mod matching;

use std::collections::HashMap;
use std::ops::ControlFlow;

pub use io::{parse_edge_list, GraphJson};
pub use iso::{isomorphism, ISOMORPHISM_CAP};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Default cap on the number of sets an enumeration may return.
pub const DEFAULT_ENUMERATION_CAP: usize = 1 << 20;

#[derive(Clone, Debug, Default)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<VertexSet>,
}

/// Two graphs are equal when they have the same labels in the same order and
/// the same edges. See [`Graph::same_as`] for order-insensitive comparison.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.adj == other.adj
    }
}

impl Eq for Graph {}

/// How [`Graph::disjoint_union`] names the vertices of its parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LabelPolicy {
    /// Prefix every label with `<part index>:`.
    Prefix,
    /// Keep labels; a label shared by two parts is an error.
    Keep,
}

impl Graph {
    /// An edgeless graph on the given labels.
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut g = Graph::default();
        for l in labels {
            g.add_vertex(l)?;
        }
        Ok(g)
    }

    /// Build a graph from labels and label pairs. Endpoints missing from
    /// `labels` are added in order of first appearance.
    pub fn from_edges<S: AsRef<str>>(labels: &[S], edges: &[(S, S)]) -> Result<Self> {
        let mut g = Graph::new(labels.iter().map(|s| s.as_ref().to_string()))?;
        for (a, b) in edges {
            let u = g.ensure_vertex(a.as_ref());
            let v = g.ensure_vertex(b.as_ref());
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<usize> {
        let label = label.into();
        if self.index.contains_key(&label) {
            return Err(Error::DuplicateLabel(label));
        }
        let i = self.labels.len();
        self.index.insert(label.clone(), i);
        self.labels.push(label);
        self.adj.push(VertexSet::new());
        Ok(i)
    }

    fn ensure_vertex(&mut self, label: &str) -> usize {
        match self.index.get(label) {
            Some(&i) => i,
            None => self.add_vertex(label).expect("label is fresh"),
        }
    }

    /// Add the edge `{u, v}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(self.labels[u].clone()));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn add_edge_by_label(&mut self, a: &str, b: &str) -> Result<()> {
        let u = self.vertex(a)?;
        let v = self.vertex(b)?;
        self.add_edge(u, v)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.index_of(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// The vertex set of the given labels.
    pub fn vertex_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet> {
        labels.iter().map(|l| self.vertex(l.as_ref())).collect()
    }

    pub fn set_labels(&self, s: &VertexSet) -> Vec<String> {
        s.iter().map(|v| self.labels[v].clone()).collect()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Edges as index pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nb) in self.adj.iter().enumerate() {
            out.extend(nb.iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|nb| nb.contains(v))
    }

    pub fn adjacency(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(VertexSet::is_empty)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex { index: v, n: self.n() })
        }
    }

    fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.max_element() {
            Some(m) if m >= self.n() => Err(Error::InvalidVertex { index: m, n: self.n() }),
            _ => Ok(()),
        }
    }

    /// Open neighborhood `N(s)`: every vertex adjacent to some member of `s`.
    pub fn neighbors(&self, s: &VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        Ok(s.iter().fold(VertexSet::new(), |acc, v| acc.union(&self.adj[v])))
    }

    /// Closed neighborhood `N[s] = N(s) ∪ s`.
    pub fn closed_neighbors(&self, s: &VertexSet) -> Result<VertexSet> {
        Ok(self.neighbors(s)?.union(s))
    }

    /// Induced subgraph on the vertices in `keep`, in their original order.
    /// Bits beyond the vertex count are ignored.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Graph {
        let keep = keep.intersection(&self.vertices());
        let old: Vec<usize> = keep.iter().collect();
        let mut new_index = vec![usize::MAX; self.n()];
        for (i, &v) in old.iter().enumerate() {
            new_index[v] = i;
        }
        let mut g = Graph::default();
        for &v in &old {
            g.add_vertex(self.labels[v].clone()).expect("labels are distinct");
        }
        for (i, &v) in old.iter().enumerate() {
            g.adj[i] = self.adj[v].intersection(&keep).iter().map(|u| new_index[u]).collect();
        }
        g
    }

    /// `G \ U`: the induced subgraph on the complement of `u`. Indices in `u`
    /// that are not vertices of the graph are ignored.
    pub fn induced_delete(&self, u: &VertexSet) -> Graph {
        self.induced_subgraph(&self.vertices().difference(u))
    }

    /// Delete vertices by label; labels that are not vertices are ignored.
    pub fn induced_delete_labels<S: AsRef<str>>(&self, labels: &[S]) -> Graph {
        let u: VertexSet = labels.iter().filter_map(|l| self.index_of(l.as_ref())).collect();
        self.induced_delete(&u)
    }

    pub fn is_independent(&self, x: &VertexSet) -> bool {
        x.iter().all(|v| self.adj.get(v).is_none_or(|nb| nb.is_disjoint(x)))
    }

    pub fn is_clique(&self, u: &VertexSet) -> bool {
        u.iter().all(|v| {
            self.adj
                .get(v)
                .is_some_and(|nb| u.difference(nb).iter().all(|w| w == v))
        })
    }

    /// A vertex is simplicial when its neighbors form a clique.
    pub fn is_simplicial(&self, v: usize) -> Result<bool> {
        self.check_vertex(v)?;
        Ok(self.is_clique(&self.adj[v]))
    }

    pub(crate) fn closed_words(&self) -> Option<Vec<u64>> {
        (self.n() <= 64).then(|| {
            self.adj
                .iter()
                .enumerate()
                .map(|(v, nb)| nb.low_word() | (1u64 << v))
                .collect()
        })
    }

    fn closed_sets(&self) -> Vec<VertexSet> {
        self.adj
            .iter()
            .enumerate()
            .map(|(v, nb)| {
                let mut c = nb.clone();
                c.insert(v);
                c
            })
            .collect()
    }

    /// Every inclusion-maximal independent set, sorted by bitmask value.
    pub fn maximal_independent_sets(&self) -> Result<Vec<VertexSet>> {
        self.maximal_independent_sets_capped(DEFAULT_ENUMERATION_CAP)
    }

    pub fn maximal_independent_sets_capped(&self, cap: usize) -> Result<Vec<VertexSet>> {
        let mut out = Vec::new();
        let mut overflow = false;
        let mut push = |s: VertexSet| {
            if out.len() == cap {
                overflow = true;
                ControlFlow::Break(())
            } else {
                out.push(s);
                ControlFlow::Continue(())
            }
        };
        match self.closed_words() {
            Some(closed) => {
                let within = if self.n() == 64 { u64::MAX } else { (1u64 << self.n()) - 1 };
                let _ = kernel::maximal_independent_sets(&closed, &within, &mut |s: &u64| {
                    push(VertexSet::from_word(*s))
                });
            }
            None => {
                let closed = self.closed_sets();
                let _ = kernel::maximal_independent_sets(&closed, &self.vertices(), &mut |s: &VertexSet| {
                    push(s.clone())
                });
            }
        }
        if overflow {
            return Err(Error::TooManySets(cap));
        }
        out.sort();
        Ok(out)
    }

    /// Every inclusion-minimal vertex cover: complements of the maximal
    /// independent sets, sorted by bitmask value.
    pub fn minimal_vertex_covers(&self) -> Result<Vec<VertexSet>> {
        let all = self.vertices();
        let mut covers: Vec<VertexSet> = self
            .maximal_independent_sets()?
            .iter()
            .map(|s| all.difference(s))
            .collect();
        covers.sort();
        Ok(covers)
    }

    pub fn is_vertex_cover(&self, c: &VertexSet) -> bool {
        self.edges().iter().all(|&(u, v)| c.contains(u) || c.contains(v))
    }

    /// Whether `v` is a shedding vertex: isolated, or no independent set of
    /// `G \ N[v]` is a maximal independent set of `G \ v`.
    pub fn is_shedding(&self, v: usize) -> Result<bool> {
        self.check_vertex(v)?;
        Ok(match self.closed_words() {
            Some(closed) => {
                let within = if self.n() == 64 { u64::MAX } else { (1u64 << self.n()) - 1 };
                kernel::is_shedding(&closed, &within, v)
            }
            None => kernel::is_shedding(&self.closed_sets(), &self.vertices(), v),
        })
    }

    /// Connected components as induced subgraphs, ordered by least vertex.
    pub fn connected_components(&self) -> Vec<Graph> {
        self.component_sets().iter().map(|c| self.induced_subgraph(c)).collect()
    }

    pub fn component_sets(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for start in 0..self.n() {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let next = frontier
                    .iter()
                    .fold(VertexSet::new(), |acc, v| acc.union(&self.adj[v]))
                    .difference(&comp);
                comp = comp.union(&next);
                frontier = next;
            }
            seen = seen.union(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_sets().len() <= 1
    }

    /// A 2-coloring `(side A, side B)` when the graph is bipartite.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let mut color: Vec<Option<bool>> = vec![None; self.n()];
        for start in 0..self.n() {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let c = color[v].expect("colored when pushed");
                for u in self.adj[v].iter() {
                    match color[u] {
                        None => {
                            color[u] = Some(!c);
                            stack.push(u);
                        }
                        Some(cu) if cu == c => return None,
                        _ => {}
                    }
                }
            }
        }
        let a = (0..self.n()).filter(|&v| color[v] == Some(false)).collect();
        let b = (0..self.n()).filter(|&v| color[v] == Some(true)).collect();
        Some((a, b))
    }

    /// Disjoint union of `parts`, vertices ordered part by part.
    pub fn disjoint_union(parts: &[Graph], policy: LabelPolicy) -> Result<Graph> {
        let mut g = Graph::default();
        for (pi, part) in parts.iter().enumerate() {
            let offset = g.n();
            for l in &part.labels {
                let label = match policy {
                    LabelPolicy::Prefix => format!("{pi}:{l}"),
                    LabelPolicy::Keep => l.clone(),
                };
                g.add_vertex(label)?;
            }
            for (u, v) in part.edges() {
                g.add_edge(u + offset, v + offset)?;
            }
        }
        Ok(g)
    }

    /// Label-based equality that ignores vertex order.
    pub fn same_as(&self, other: &Graph) -> bool {
        if self.n() != other.n() || self.edge_count() != other.edge_count() {
            return false;
        }
        let Some(map) = self
            .labels
            .iter()
            .map(|l| other.index_of(l))
            .collect::<Option<Vec<usize>>>()
        else {
            return false;
        };
        self.edges().iter().all(|&(u, v)| other.has_edge(map[u], map[v]))
    }

    /// Edges as label pairs, in index order.
    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges()
            .into_iter()
            .map(|(u, v)| (self.labels[u].clone(), self.labels[v].clone()))
            .collect()
    }
}
