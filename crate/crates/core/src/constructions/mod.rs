//! Graph constructions: whiskers, clique whiskering, star complete graphs,
//! attachments, the layered graph `G_k`, and Cameron–Walker graphs.
//!
//! Naming of constructed vertices is fixed so that results of different
//! constructions can be compared label for label:
//!
//! | construction        | new vertex labels                               |
//! |---------------------|-------------------------------------------------|
//! | `add_whiskers`      | `z_<x>` for each whiskered `x`                  |
//! | `clique_whisker`    | `w_<i>`, one per part, 1-based                  |
//! | `star_complete`     | `<center>_c<i>_<j>`: j-th non-center vertex of clique i |
//! | `g_k`               | `<x>_<p>` for layer `p = 1..k`, vertex-major    |
//! | `cameron_walker`    | leaves `<a>_l<j>`, triangles `<b>_t<j>_1`, `<b>_t<j>_2` |

mod family;

use rand::Rng;
use serde::{Deserialize, Serialize};

pub use family::{FamilySpec, GraphSource};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Label of vertex `x` in layer `p` of `G_k`; polarization uses the same names.
pub fn layer_label(x: &str, p: usize) -> String {
    format!("{x}_{p}")
}

/// `G ∪ W(S)`: a pendant vertex `z_<x>` attached to every `x` in `s`.
pub fn add_whiskers(g: &Graph, s: &VertexSet) -> Result<Graph> {
    if let Some(m) = s.max_element().filter(|&m| m >= g.n()) {
        return Err(Error::InvalidVertex { index: m, n: g.n() });
    }
    let mut out = g.clone();
    for x in s.iter() {
        let z = out.add_vertex(format!("z_{}", g.label(x)))?;
        out.add_edge(x, z)?;
    }
    Ok(out)
}

/// Disjoint cliques, possibly empty, covering the vertex set of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliquePartition {
    parts: Vec<VertexSet>,
}

impl CliquePartition {
    pub fn new(g: &Graph, parts: Vec<VertexSet>) -> Result<Self> {
        let mut seen = VertexSet::new();
        for (i, p) in parts.iter().enumerate() {
            if let Some(m) = p.max_element().filter(|&m| m >= g.n()) {
                return Err(Error::InvalidPartition(format!("part {} names vertex index {m}", i + 1)));
            }
            if !seen.is_disjoint(p) {
                return Err(Error::InvalidPartition(format!("part {} overlaps an earlier part", i + 1)));
            }
            if !g.is_clique(p) {
                return Err(Error::InvalidPartition(format!("part {} is not a clique", i + 1)));
            }
            seen = seen.union(p);
        }
        if seen != g.vertices() {
            let missing = g.set_labels(&g.vertices().difference(&seen));
            return Err(Error::InvalidPartition(format!("vertices {missing:?} are in no part")));
        }
        Ok(Self { parts })
    }

    pub fn from_labels<S: AsRef<str>>(g: &Graph, parts: &[Vec<S>]) -> Result<Self> {
        let sets = parts
            .iter()
            .map(|p| g.vertex_set(p))
            .collect::<Result<Vec<_>>>()?;
        Self::new(g, sets)
    }

    /// One singleton part per vertex.
    pub fn trivial(g: &Graph) -> Self {
        Self { parts: (0..g.n()).map(VertexSet::singleton).collect() }
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }
}

/// `G^π`: a new vertex `w_i` joined to every vertex of the i-th part.
pub fn clique_whisker(g: &Graph, pi: &CliquePartition) -> Result<Graph> {
    // revalidate: the partition may have been built against another graph
    let pi = CliquePartition::new(g, pi.parts.clone())?;
    let mut out = g.clone();
    for (i, part) in pi.parts.iter().enumerate() {
        let w = out.add_vertex(format!("w_{}", i + 1))?;
        for v in part.iter() {
            out.add_edge(v, w)?;
        }
    }
    Ok(out)
}

/// Complete graphs of the given sizes glued at one common center vertex.
/// Each size counts the clique's vertices including the center.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarCompleteSpec {
    pub center: String,
    pub sizes: Vec<usize>,
}

impl StarCompleteSpec {
    pub fn new(center: impl Into<String>, sizes: Vec<usize>) -> Self {
        Self { center: center.into(), sizes }
    }

    fn validate(&self) -> Result<()> {
        if self.sizes.is_empty() {
            return Err(Error::InvalidConstruction("star complete needs at least one clique".into()));
        }
        if let Some(&m) = self.sizes.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidConstruction(format!(
                "clique size {m} in a star complete graph (must be at least 2)"
            )));
        }
        Ok(())
    }

    /// Pure when every glued clique is at least a triangle.
    pub fn is_pure(&self) -> bool {
        self.sizes.iter().all(|&m| m >= 3)
    }
}

pub fn star_complete(spec: &StarCompleteSpec) -> Result<Graph> {
    spec.validate()?;
    let mut g = Graph::new([spec.center.clone()])?;
    glue_cliques(&mut g, 0, &spec.center, &spec.sizes)?;
    Ok(g)
}

fn glue_cliques(g: &mut Graph, center: usize, name: &str, sizes: &[usize]) -> Result<()> {
    for (i, &m) in sizes.iter().enumerate() {
        let mut clique = vec![center];
        for j in 1..m {
            clique.push(g.add_vertex(format!("{name}_c{}_{j}", i + 1))?);
        }
        for (a, &u) in clique.iter().enumerate() {
            for &v in &clique[a + 1..] {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(())
}

/// A star complete graph glued onto host vertex `at`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attachment {
    pub at: String,
    pub sizes: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttachmentSpec {
    pub host: Graph,
    pub attachments: Vec<Attachment>,
}

/// Glue each star complete graph to its host vertex, which becomes the center.
pub fn attach(spec: &AttachmentSpec) -> Result<Graph> {
    let mut g = spec.host.clone();
    let mut used = VertexSet::new();
    for a in &spec.attachments {
        let center = spec.host.vertex(&a.at)?;
        if used.contains(center) {
            return Err(Error::InvalidConstruction(format!("vertex `{}` has two attachments", a.at)));
        }
        used.insert(center);
        StarCompleteSpec::new(a.at.clone(), a.sizes.clone()).validate()?;
        glue_cliques(&mut g, center, &a.at, &a.sizes)?;
    }
    Ok(g)
}

/// The layered graph `G_k` on vertices `<x>_<p>`, `1 <= p <= k`, with
/// `{x_p, y_q}` an edge iff `{x, y}` is an edge of `g` and `p + q <= k + 1`.
/// `k = 0` gives the graph with no vertices.
pub fn g_k(g: &Graph, k: usize) -> Result<Graph> {
    let mut out = Graph::default();
    for x in g.labels() {
        for p in 1..=k {
            out.add_vertex(layer_label(x, p))?;
        }
    }
    for (u, v) in g.edges() {
        for p in 1..=k {
            for q in 1..=k + 1 - p {
                out.add_edge(u * k + p - 1, v * k + q - 1)?;
            }
        }
    }
    Ok(out)
}

/// Index of `x_p` in `g_k(g, k)` for vertex index `x` of `g`.
pub fn layer_index(k: usize, x: usize, p: usize) -> usize {
    x * k + p - 1
}

/// A connected bipartite base with parts `a` and `b`, leaves hung on every
/// `a` vertex and pendant triangles hung on `b` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CameronWalkerSpec {
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub edges: Vec<[String; 2]>,
    /// Leaves per `a` vertex, aligned with `a`; each at least 1.
    pub leaves: Vec<usize>,
    /// Pendant triangles per `b` vertex, aligned with `b`.
    pub triangles: Vec<usize>,
}

pub fn cameron_walker(spec: &CameronWalkerSpec) -> Result<Graph> {
    if spec.leaves.len() != spec.a.len() || spec.triangles.len() != spec.b.len() {
        return Err(Error::InvalidConstruction("leaf/triangle counts must align with the parts".into()));
    }
    let labels: Vec<String> = spec.a.iter().chain(&spec.b).cloned().collect();
    let mut g = Graph::new(labels)?;
    if g.n() == 0 {
        return Err(Error::InvalidConstruction("empty bipartite base".into()));
    }
    for [x, y] in &spec.edges {
        let (u, v) = (g.vertex(x)?, g.vertex(y)?);
        let (ua, va) = (u < spec.a.len(), v < spec.a.len());
        if ua == va {
            return Err(Error::InvalidConstruction(format!("edge {x}-{y} lies inside one part")));
        }
        g.add_edge(u, v)?;
    }
    if !g.is_connected() {
        return Err(Error::InvalidConstruction("bipartite base is disconnected".into()));
    }
    for (x, &l) in spec.a.iter().zip(&spec.leaves) {
        if l == 0 {
            return Err(Error::InvalidConstruction(format!("vertex `{x}` needs at least one leaf")));
        }
        let u = g.vertex(x)?;
        for j in 1..=l {
            let leaf = g.add_vertex(format!("{x}_l{j}"))?;
            g.add_edge(u, leaf)?;
        }
    }
    for (y, &t) in spec.b.iter().zip(&spec.triangles) {
        let u = g.vertex(y)?;
        for j in 1..=t {
            let p = g.add_vertex(format!("{y}_t{j}_1"))?;
            let q = g.add_vertex(format!("{y}_t{j}_2"))?;
            g.add_edge(u, p)?;
            g.add_edge(u, q)?;
            g.add_edge(p, q)?;
        }
    }
    if !g.is_cameron_walker()? {
        return Err(Error::InvalidConstruction("generated graph is not Cameron–Walker".into()));
    }
    Ok(g)
}

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

/// `K_n` on `x1..xn`.
pub fn complete_graph(n: usize) -> Graph {
    let mut g = Graph::new(numbered(n)).expect("distinct labels");
    for i in 0..n {
        for j in i + 1..n {
            g.add_edge(i, j).expect("valid edge");
        }
    }
    g
}

/// The path `x1 - x2 - ... - xn`.
pub fn path_graph(n: usize) -> Graph {
    let mut g = Graph::new(numbered(n)).expect("distinct labels");
    for i in 1..n {
        g.add_edge(i - 1, i).expect("valid edge");
    }
    g
}

/// The cycle on `x1..xn`, `n >= 3`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidConstruction(format!("cycle on {n} vertices")));
    }
    let mut g = path_graph(n);
    g.add_edge(n - 1, 0)?;
    Ok(g)
}

/// Erdős–Rényi graph on `x1..xn` with edge probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(numbered(n)).expect("distinct labels");
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(i, j).expect("valid edge");
            }
        }
    }
    g
}

/// A random clique partition with nonempty parts, built greedily from a
/// shuffled vertex order.
pub fn random_clique_partition<R: Rng>(rng: &mut R, g: &Graph) -> CliquePartition {
    use rand::seq::SliceRandom;
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    let mut parts: Vec<VertexSet> = Vec::new();
    for v in order {
        let fits: Vec<usize> = parts
            .iter()
            .enumerate()
            .filter(|(_, p)| p.is_subset(g.adjacency(v)))
            .map(|(i, _)| i)
            .collect();
        // join a compatible part with probability 1/2, else open a new one
        match fits.choose(rng) {
            Some(&i) if rng.gen_bool(0.5) => parts[i].insert(v),
            _ => parts.push(VertexSet::singleton(v)),
        }
    }
    CliquePartition::new(g, parts).expect("greedy parts are cliques")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::isomorphism;

    #[test]
    fn whiskers() {
        let g = cycle_graph(4).unwrap();
        assert_eq!(add_whiskers(&g, &VertexSet::new()).unwrap(), g);
        let w = add_whiskers(&g, &g.vertices()).unwrap();
        assert_eq!((w.n(), w.edge_count()), (8, 8));
        assert_eq!(w.label(4), "z_x1");
        let single = Graph::new(["x"]).unwrap();
        let k2 = add_whiskers(&single, &VertexSet::singleton(0)).unwrap();
        assert_eq!((k2.n(), k2.edge_count()), (2, 1));
        let mut clash = Graph::new(["x", "z_x"]).unwrap();
        clash.add_edge(0, 1).unwrap();
        assert!(matches!(
            add_whiskers(&clash, &VertexSet::singleton(0)),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn clique_whiskering() {
        let k3 = complete_graph(3);
        let one = CliquePartition::new(&k3, vec![k3.vertices()]).unwrap();
        let k4 = clique_whisker(&k3, &one).unwrap();
        assert_eq!((k4.n(), k4.edge_count()), (4, 6));
        let empty = Graph::default();
        let pi = CliquePartition::new(&empty, vec![VertexSet::new()]).unwrap();
        let lone = clique_whisker(&empty, &pi).unwrap();
        assert_eq!((lone.n(), lone.edge_count()), (1, 0));
        let p3 = path_graph(3);
        let trivial = clique_whisker(&p3, &CliquePartition::trivial(&p3)).unwrap();
        let whiskered = add_whiskers(&p3, &p3.vertices()).unwrap();
        assert!(isomorphism(&trivial, &whiskered).unwrap().is_some());
        // the two ends of P_3 are not adjacent
        assert!(matches!(
            CliquePartition::from_labels(&p3, &[vec!["x1", "x3"], vec!["x2"]]),
            Err(Error::InvalidPartition(_))
        ));
        assert!(CliquePartition::from_labels(&p3, &[vec!["x1", "x2"]]).is_err());
        assert!(CliquePartition::from_labels(&p3, &[vec!["x1", "x2"], vec!["x2", "x3"]]).is_err());
    }

    #[test]
    fn star_complete_graphs() {
        let tri = StarCompleteSpec::new("a", vec![3, 3]);
        let g = star_complete(&tri).unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 6));
        assert!(tri.is_pure());
        assert_eq!(g.labels(), ["a", "a_c1_1", "a_c1_2", "a_c2_1", "a_c2_2"]);
        let star = StarCompleteSpec::new("a", vec![2, 2, 2, 2]);
        let g = star_complete(&star).unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 4));
        assert!(!star.is_pure());
        let right = StarCompleteSpec::new("b", vec![3, 4]);
        let g = star_complete(&right).unwrap();
        assert_eq!((g.n(), g.edge_count()), (6, 9));
        assert!(right.is_pure());
        assert!(star_complete(&StarCompleteSpec::new("a", vec![3, 1])).is_err());
        assert!(star_complete(&StarCompleteSpec::new("a", vec![])).is_err());
    }

    #[test]
    fn attachments() {
        let k2 = complete_graph(2);
        let p3 = attach(&AttachmentSpec {
            host: k2.clone(),
            attachments: vec![Attachment { at: "x1".into(), sizes: vec![2] }],
        })
        .unwrap();
        assert!(isomorphism(&p3, &path_graph(3)).unwrap().is_some());
        let g = attach(&AttachmentSpec {
            host: cycle_graph(4).unwrap(),
            attachments: vec![
                Attachment { at: "x1".into(), sizes: vec![3] },
                Attachment { at: "x3".into(), sizes: vec![3] },
            ],
        })
        .unwrap();
        assert_eq!((g.n(), g.edge_count()), (8, 10));
        assert!(attach(&AttachmentSpec {
            host: k2,
            attachments: vec![Attachment { at: "nope".into(), sizes: vec![2] }],
        })
        .is_err());
    }

    #[test]
    fn layered_graph() {
        let k2 = complete_graph(2);
        let g2 = g_k(&k2, 2).unwrap();
        assert_eq!(g2.labels(), ["x1_1", "x1_2", "x2_1", "x2_2"]);
        let mut edges = g2.edge_labels();
        edges.sort();
        assert_eq!(
            edges,
            vec![
                ("x1_1".to_string(), "x2_1".to_string()),
                ("x1_1".to_string(), "x2_2".to_string()),
                ("x1_2".to_string(), "x2_1".to_string()),
            ]
        );
        let c5 = cycle_graph(5).unwrap();
        assert!(isomorphism(&g_k(&c5, 1).unwrap(), &c5).unwrap().is_some());
        assert_eq!(g_k(&c5, 0).unwrap().n(), 0);
    }

    #[test]
    fn cameron_walker_family() {
        let spec = |tri: usize| CameronWalkerSpec {
            a: vec!["a".into()],
            b: vec!["b".into()],
            edges: vec![["a".into(), "b".into()]],
            leaves: vec![1],
            triangles: vec![tri],
        };
        let p = cameron_walker(&spec(0)).unwrap();
        assert_eq!((p.n(), p.edge_count()), (3, 2));
        assert_eq!(p.matching_number().unwrap(), 1);
        let t = cameron_walker(&spec(1)).unwrap();
        assert_eq!(t.matching_number().unwrap(), 2);
        assert_eq!(t.induced_matching_number().unwrap(), 2);
        let mut bad = spec(0);
        bad.leaves = vec![0];
        assert!(cameron_walker(&bad).is_err());
    }
}
