use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{instance_graph, Checks, VerifyConfig};
use crate::bitset::VertexSet;
use crate::constructions::{
    add_whiskers, attach, cameron_walker, clique_whisker, complete_graph, g_k, layer_index, path_graph,
    random_clique_partition, random_graph, star_complete, Attachment, AttachmentSpec, CameronWalkerSpec,
    StarCompleteSpec,
};
use crate::error::Result;
use crate::graph::{isomorphism, Graph, ISOMORPHISM_CAP};
use crate::homological::{
    betti_from_linear_quotients, betti_table, betti_table_hochster, is_componentwise_linear, is_vertex_decomposable,
    linear_quotients_order, regularity, seq_cm_proxy, validate_lq, validate_vd, LqCertificate, VdCertificate,
};
use crate::ideal::{cover_ideal, symbolic_power_cover, Monomial, MonomialIdeal};

/// Polarizations with at most this many variables are also run through the
/// restriction form of Hochster's formula.
const RESTRICTION_ORACLE_VARS: usize = 14;

fn random_graphs(rng: &mut ChaCha8Rng, count: usize, max_n: usize) -> Vec<Graph> {
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            random_graph(rng, n, 0.5)
        })
        .collect()
}

fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g.edge_labels().iter().map(|(a, b)| format!("{a}{b}")).collect();
    format!("n={} [{}]", g.n(), edges.join(" "))
}

/// The squarefree ideal whose generators are the products over `sets`.
fn ideal_of_label_sets(ring_of: &MonomialIdeal, sets: &[&[&str]]) -> Result<MonomialIdeal> {
    let ring = ring_of.ring().clone();
    let mut ms = Vec::new();
    for s in sets {
        let mut e = vec![0u16; ring.nvars()];
        for x in *s {
            let i = ring.index_of(x).ok_or_else(|| crate::Error::UnknownLabel(x.to_string()))?;
            e[i] = 1;
        }
        ms.push(Monomial::new(e));
    }
    MonomialIdeal::new(ring, ms)
}

fn certify_vd(g: &Graph, cfg: &VerifyConfig) -> Result<(bool, String)> {
    let c = is_vertex_decomposable(g, &cfg.budget)?;
    if let VdCertificate::Decomposition(t) = &c {
        validate_vd(g, &c, &cfg.budget)?;
        return Ok((true, format!("certificate with {} nodes", t.node_count())));
    }
    Ok((false, "refuted".into()))
}

/// Search for an order and re-validate it independently.
fn certify_lq(ideal: &MonomialIdeal, cfg: &VerifyConfig) -> Result<LqCertificate> {
    let c = linear_quotients_order(ideal, &cfg.budget)?;
    if c.is_order() {
        validate_lq(ideal, &c, &cfg.budget)?;
    }
    Ok(c)
}

/// Betti tables from the order against the Hochster-type computations.
fn cross_oracle(ideal: &MonomialIdeal, cert: &LqCertificate, cfg: &VerifyConfig) -> Result<(bool, String)> {
    let ht = betti_from_linear_quotients(ideal, cert)?;
    let mut routes = 0;
    for &p in &cfg.fields {
        let t = betti_table(ideal, p)?;
        if !t.same_numbers(&ht) {
            return Ok((false, format!("lcm-lattice table over F_{p} differs:\n{}vs\n{}", t.render(), ht.render())));
        }
        routes += 1;
    }
    let (pol, _) = ideal.polarize()?;
    if pol.ring().nvars() <= RESTRICTION_ORACLE_VARS {
        for &p in &cfg.fields {
            let t = betti_table_hochster(&pol, p)?;
            if !t.same_numbers(&ht) {
                return Ok((false, format!("restriction table over F_{p} differs:\n{}vs\n{}", t.render(), ht.render())));
            }
            routes += 1;
        }
    }
    Ok((true, format!("{routes} tables agree, reg {}", ht.regularity().unwrap_or(0))))
}

/// Linear quotients of `ideal`, plus the Betti cross-check when certified.
fn lq_with_cross(checks: &mut Checks, name: &str, ideal: &MonomialIdeal, cfg: &VerifyConfig) {
    match certify_lq(ideal, cfg) {
        Ok(cert) => {
            let ok = cert.is_order();
            checks.push("lq", name, Ok((ok, format!("{} generators, {}", ideal.len(), if ok { "order" } else { "refuted" }))));
            if ok {
                checks.push("betti-cross", name, cross_oracle(ideal, &cert, cfg));
            }
        }
        Err(e) => checks.push("lq", name, Err(e)),
    }
}

pub(super) fn example_triangle_pendants(cfg: &VerifyConfig) -> Vec<super::Check> {
    let mut c = Checks::default();
    let g = match instance_graph("triangle_pendants") {
        Ok(g) => g,
        Err(e) => {
            c.push("instance", "load", Err(e));
            return c.into_inner();
        }
    };
    c.expect("graph", "attachment spec builds the same graph", (|| {
        let h = instance_graph("triangle_pendants_attach")?;
        Ok(isomorphism(&g, &h)?.is_some())
    })());
    c.expect("graph", "N(x1) = {x2,x3,x4,x5}", (|| {
        let s = g.neighbors(&g.vertex_set(&["x1"])?)?;
        Ok(g.set_labels(&s) == ["x2", "x3", "x4", "x5"])
    })());
    c.expect("graph", "{x4,...,x9} independent", (|| {
        Ok(g.is_independent(&g.vertex_set(&["x4", "x5", "x6", "x7", "x8", "x9"])?))
    })());
    let listed: &[&[&str]] = &[&["x1", "x2", "x3"], &["x2", "x3", "x4", "x5"], &["x1", "x3", "x6", "x7"], &["x1", "x2", "x8", "x9"]];
    c.expect("ideal", "minimal vertex covers are the four listed sets", (|| {
        let mut covers: Vec<Vec<String>> = g.minimal_vertex_covers()?.iter().map(|s| g.set_labels(s)).collect();
        let mut expected: Vec<Vec<String>> = listed.iter().map(|s| s.iter().map(|x| x.to_string()).collect()).collect();
        covers.sort();
        expected.sort();
        Ok(covers == expected)
    })());
    let jobs = (|| -> Result<(MonomialIdeal, MonomialIdeal)> {
        Ok((cover_ideal(&g)?, symbolic_power_cover(&g, 2)?))
    })();
    let (j, j2) = match jobs {
        Ok(x) => x,
        Err(e) => {
            c.push("ideal", "cover ideal and symbolic square", Err(e));
            return c.into_inner();
        }
    };
    c.push("ideal", "J(G) equals the listed generators", (|| {
        let expected = ideal_of_label_sets(&j, listed)?;
        Ok((j == expected, j.render()))
    })());
    c.push("ideal", "J(G)^(2) = J(G)^2 + (x1*...*x9)", (|| {
        let top = ideal_of_label_sets(&j, &[&["x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9"]])?;
        let expected = j.power(2)?.sum(&top)?;
        Ok((j2 == expected, format!("{} generators", j2.len())))
    })());
    c.push("ideal", "J(G)^(2) has 11 minimal generators", Ok((j2.len() == 11, j2.len().to_string())));
    c.push("ideal", "deg J(G) = 4", j.deg_max().map(|d| (d == 4, d.to_string())));
    for &p in &cfg.fields {
        c.push("regularity", format!("reg J(G) = 4 over F_{p}"), regularity(&j, p).map(|r| (r == 4, r.to_string())));
        c.push("regularity", format!("reg J(G)^(2) = 9 over F_{p}"), regularity(&j2, p).map(|r| (r == 9, r.to_string())));
    }
    for (k, i) in [(1, &j), (2, &j2)] {
        lq_with_cross(&mut c, &format!("J(G)^({k})"), i, cfg);
    }
    c.into_inner()
}

pub(super) fn example_c4_triangles(cfg: &VerifyConfig) -> Vec<super::Check> {
    let mut c = Checks::default();
    let g = match instance_graph("c4_triangles") {
        Ok(g) => g,
        Err(e) => {
            c.push("instance", "load", Err(e));
            return c.into_inner();
        }
    };
    c.expect("graph", "attachment spec builds the same graph", (|| {
        let h = instance_graph("c4_triangles_attach")?;
        Ok(g.n() == 8 && g.edge_count() == 10 && isomorphism(&g, &h)?.is_some())
    })());
    c.push("vd", "G is vertex decomposable", certify_vd(&g, cfg));
    c.push("lq", "J(G) has linear quotients", (|| {
        let j = cover_ideal(&g)?;
        Ok((certify_lq(&j, cfg)?.is_order(), j.render()))
    })());
    let j2 = symbolic_power_cover(&g, 2);
    c.push("lq", "polarized J(G)^(2) is refuted", (|| {
        let (pol, _) = j2.clone()?.polarize()?;
        let cert = linear_quotients_order(&pol, &cfg.budget)?;
        if cert.is_order() {
            return Ok((false, "an order was found".into()));
        }
        validate_lq(&pol, &cert, &cfg.budget)?;
        Ok((true, format!("refuted over {} generators, confirmed independently", pol.len())))
    })());
    c.push("lq", "J(G)^(2) itself is refuted", (|| {
        let j2 = j2.clone()?;
        Ok((!linear_quotients_order(&j2, &cfg.budget)?.is_order(), String::new()))
    })());
    for &p in &cfg.fields {
        c.push("cwl", format!("J(G)^(2) is not componentwise linear over F_{p}"), (|| {
            Ok((!is_componentwise_linear(&j2.clone()?, p)?, String::new()))
        })());
        c.push("seqcm", format!("G_2 is not sequentially CM over F_{p}"), (|| {
            Ok((!seq_cm_proxy(&g_k(&g, 2)?, p)?, String::new()))
        })());
    }
    c.into_inner()
}

pub(super) fn polarization_cover_ideal(cfg: &VerifyConfig) -> Vec<super::Check> {
    let mut c = Checks::default();
    let mut rng = cfg.rng(3);
    for (t, g) in random_graphs(&mut rng, 50, 5).iter().enumerate() {
        c.push("polarization", format!("graph {t}: J^(1) = J"), (|| {
            Ok((symbolic_power_cover(g, 1)? == cover_ideal(g)?, describe(g)))
        })());
        for k in 1..=3 {
            c.push("polarization", format!("graph {t}, k={k}"), (|| {
                let (pol, _) = symbolic_power_cover(g, k as u32)?.polarize()?;
                let direct = cover_ideal(&g_k(g, k)?)?;
                Ok((pol.named_generators() == direct.named_generators(), describe(g)))
            })());
        }
    }
    c.into_inner()
}

pub(super) fn simplicial_layers(cfg: &VerifyConfig) -> Vec<super::Check> {
    let mut c = Checks::default();
    let mut rng = cfg.rng(4);
    for (t, g) in random_graphs(&mut rng, 30, 6).iter().enumerate() {
        for k in 1..=4 {
            c.expect("simplicial", format!("graph {t}, k={k}"), (|| {
                let gk = g_k(g, k)?;
                for i in 0..g.n() {
                    if !g.is_simplicial(i)? {
                        continue;
                    }
                    if !gk.is_simplicial(layer_index(k, i, k))? {
                        return Ok(false);
                    }
                    for l in g.adjacency(i).iter() {
                        if !gk.is_shedding(layer_index(k, l, 1))? {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            })());
        }
    }
    c.into_inner()
}

fn with_isolated(g: &Graph, count: usize) -> Result<Graph> {
    let mut h = g.clone();
    for i in 0..count {
        h.add_vertex(format!("isolated_{i}"))?;
    }
    Ok(h)
}

pub(super) fn layer_deletion(cfg: &VerifyConfig) -> Vec<super::Check> {
    let mut c = Checks::default();
    let mut rng = cfg.rng(5);
    for (t, g) in random_graphs(&mut rng, 25, 5).iter().enumerate() {
        let n = g.n();
        for k in 2..=4usize {
            let u: VertexSet = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
            c.expect("layers", format!("graph {t}, k={k}: removing all layers of a set"), (|| {
                let gk = g_k(g, k)?;
                let layers: VertexSet = u.iter().flat_map(|x| (1..=k).map(move |p| layer_index(k, x, p))).collect();
                Ok(gk.induced_delete(&layers).same_as(&g_k(&g.induced_delete(&u), k)?))
            })());
            if n * k > ISOMORPHISM_CAP {
                continue;
            }
            c.expect("layers", format!("graph {t}, k={k}: removing the first layer"), (|| {
                let gk = g_k(g, k)?;
                let first: VertexSet = (0..n).map(|x| layer_index(k, x, 1)).collect();
                let expected = with_isolated(&g_k(g, k - 2)?, n)?;
                Ok(isomorphism(&gk.induced_delete(&first), &expected)?.is_some())
            })());
            c.expect("layers", format!("graph {t}, k={k}: removing a closed neighborhood"), (|| {
                let gk = g_k(g, k)?;
                for j in 0..n {
                    let nb = gk.closed_neighbors(&VertexSet::singleton(layer_index(k, j, 1)))?;
                    let base = g.induced_delete(&g.closed_neighbors(&VertexSet::singleton(j))?);
                    let expected = with_isolated(&g_k(&base, k)?, k - 1)?;
                    if isomorphism(&gk.induced_delete(&nb), &expected)?.is_none() {
                        return Ok(false);
                    }
                }
                Ok(true)
            })());
        }
    }
    c.into_inner()
}

pub(super) fn complete_layers_vd(cfg: &VerifyConfig) -> Vec<super::Check> {
    let mut c = Checks::default();
    for n in 1..=4 {
        for k in 1..=3 {
            c.push("vd", format!("(K_{n})_{k}"), (|| certify_vd(&g_k(&complete_graph(n), k)?, cfg))());
        }
    }
    c.into_inner()
}

pub(super) const STAR_SIZES: &[&[usize]] = &[&[2, 2], &[3, 3], &[2, 3], &[3, 4]];

pub(super) fn star_complete_layers_vd(cfg: &VerifyConfig) -> Vec<super::Check> {
    let mut c = Checks::default();
    for sizes in STAR_SIZES {
        for k in 1..=3 {
            c.push("vd", format!("star complete {sizes:?}, k={k}"), (|| {
                let g = star_complete(&StarCompleteSpec::new("x", sizes.to_vec()))?;
                certify_vd(&g_k(&g, k)?, cfg)
            })());
        }
    }
    c.into_inner()
}

fn attached(host: Graph, attachments: &[(&str, &[usize])]) -> Result<Graph> {
    attach(&AttachmentSpec {
        host,
        attachments: attachments.iter().map(|(at, s)| Attachment { at: at.to_string(), sizes: s.to_vec() }).collect(),
    })
}

/// Layered graphs are decomposable and symbolic powers have linear quotients.
fn attachment_checks(c: &mut Checks, name: &str, g: &Graph, cfg: &VerifyConfig) {
    for k in 1..=2usize {
        c.push("vd", format!("{name}: G_{k}"), (|| certify_vd(&g_k(g, k)?, cfg))());
        match symbolic_power_cover(g, k as u32) {
            Ok(j) => lq_with_cross(c, &format!("{name}: J^({k})"), &j, cfg),
            Err(e) => c.push("lq", format!("{name}: J^({k})"), Err(e)),
        }
    }
}

pub(super) fn pure_attachment_lq(cfg: &VerifyConfig) -> Vec<super::Check> {
    let mut c = Checks::default();
    let cases: Vec<(&str, Result<Graph>)> = vec![
        ("K_3 with triangles at x1, x2", attached(complete_graph(3), &[("x1", &[3]), ("x2", &[3])])),
        ("P_3 with pure stars at x1, x3", attached(path_graph(3), &[("x1", &[3, 3]), ("x3", &[3])])),
        ("C_4 with triangles at x1, x2, x3", crate::constructions::cycle_graph(4).and_then(|h| {
            attached(h, &[("x1", &[3]), ("x2", &[3]), ("x3", &[3])])
        })),
        ("K_2 with a K_4 at x1", attached(complete_graph(2), &[("x1", &[4])])),
    ];
    for (name, g) in cases {
        match g {
            Ok(g) => attachment_checks(&mut c, name, &g, cfg),
            Err(e) => c.push("instance", name, Err(e)),
        }
    }
    c.into_inner()
}

/// Attachments where the vertices without a non-pure star form an
/// independent set of the host.
pub(super) fn mixed_attachment_graphs() -> Vec<(&'static str, Result<Graph>)> {
    vec![
        ("triangle with pendant pairs", instance_graph("triangle_pendants")),
        ("P_4 with stars at x2, x3 and a triangle at x1", attached(path_graph(4), &[("x2", &[2, 2]), ("x3", &[2]), ("x1", &[3])])),
        ("C_4 with stars at x1, x3 and a triangle at x2", crate::constructions::cycle_graph(4).and_then(|h| {
            attached(h, &[("x1", &[2, 2]), ("x3", &[2, 3]), ("x2", &[3])])
        })),
        ("K_3 with stars at x1, x2", attached(complete_graph(3), &[("x1", &[2]), ("x2", &[2, 2])])),
    ]
}

/// Bipartite instances of the mixed attachment family: stars of edges on a
/// bipartite host, covering all but an independent set.
pub(super) fn bipartite_attachment_graphs() -> Vec<(&'static str, Result<Graph>)> {
    vec![
        ("P_3 with stars at x2", attached(path_graph(3), &[("x2", &[2, 2])])),
        ("P_4 with stars at x1, x3", attached(path_graph(4), &[("x1", &[2]), ("x3", &[2, 2])])),
        ("C_4 with stars at x2, x4", crate::constructions::cycle_graph(4).and_then(|h| attached(h, &[("x2", &[2]), ("x4", &[2])]))),
        ("P_5 with stars at x2, x4", attached(path_graph(5), &[("x2", &[2, 2]), ("x4", &[2])])),
    ]
}

pub(super) fn mixed_attachment_lq(cfg: &VerifyConfig) -> Vec<super::Check> {
    let mut c = Checks::default();
    for (name, g) in mixed_attachment_graphs().into_iter().chain(bipartite_attachment_graphs()) {
        match g {
            Ok(g) => attachment_checks(&mut c, name, &g, cfg),
            Err(e) => c.push("instance", name, Err(e)),
        }
    }
    c.into_inner()
}

pub(super) fn whisker_cover_lq(cfg: &VerifyConfig) -> Vec<super::Check> {
    let mut c = Checks::default();
    let mut rng = cfg.rng(10);
    for (t, g) in random_graphs(&mut rng, 20, 5).iter().enumerate() {
        let covers = match g.minimal_vertex_covers() {
            Ok(v) => v,
            Err(e) => {
                c.push("instance", format!("graph {t}"), Err(e));
                continue;
            }
        };
        let s = covers[rng.gen_range(0..covers.len())].clone();
        let w = match add_whiskers(g, &s) {
            Ok(w) => w,
            Err(e) => {
                c.push("instance", format!("graph {t}"), Err(e));
                continue;
            }
        };
        for k in 1..=2 {
            let name = format!("graph {t} ({}), S={:?}, k={k}", describe(g), g.set_labels(&s));
            match symbolic_power_cover(&w, k).and_then(|j| j.polarize()) {
                Ok((pol, _)) => lq_with_cross(&mut c, &name, &pol, cfg),
                Err(e) => c.push("lq", name, Err(e)),
            }
        }
    }
    c.into_inner()
}

pub(super) fn cameron_walker_graphs() -> Vec<(&'static str, Result<Graph>)> {
    let s = |v: &[&str]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    let e = |v: &[(&str, &str)]| v.iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect::<Vec<_>>();
    let k2 = |leaves: usize, triangles: usize| CameronWalkerSpec {
        a: s(&["a"]),
        b: s(&["b"]),
        edges: e(&[("a", "b")]),
        leaves: vec![leaves],
        triangles: vec![triangles],
    };
    // P_4 = a1 - b1 - a2 - b2
    let p4 = |triangles: Vec<usize>| CameronWalkerSpec {
        a: s(&["a1", "a2"]),
        b: s(&["b1", "b2"]),
        edges: e(&[("a1", "b1"), ("b1", "a2"), ("a2", "b2")]),
        leaves: vec![1, 2],
        triangles,
    };
    vec![
        ("star K_1,3", star_complete(&StarCompleteSpec::new("c", vec![2, 2, 2]))),
        ("star triangle", star_complete(&StarCompleteSpec::new("c", vec![3, 3]))),
        ("K_2 base, one leaf", cameron_walker(&k2(1, 0))),
        ("K_2 base, two leaves", cameron_walker(&k2(2, 0))),
        ("K_2 base, leaf and triangle", cameron_walker(&k2(1, 1))),
        ("P_4 base, leaves only", cameron_walker(&p4(vec![0, 0]))),
        ("P_4 base, with triangles", cameron_walker(&p4(vec![1, 1]))),
    ]
}

pub(super) fn cameron_walker_lq(cfg: &VerifyConfig) -> Vec<super::Check> {
    let mut c = Checks::default();
    for (name, g) in cameron_walker_graphs() {
        let g = match g {
            Ok(g) => g,
            Err(e) => {
                c.push("instance", name, Err(e));
                continue;
            }
        };
        c.expect("graph", format!("{name} is Cameron-Walker"), g.is_cameron_walker());
        for k in 1..=2 {
            match symbolic_power_cover(&g, k) {
                Ok(j) => lq_with_cross(&mut c, &format!("{name}: J^({k})"), &j, cfg),
                Err(e) => c.push("lq", format!("{name}: J^({k})"), Err(e)),
            }
        }
    }
    c.into_inner()
}

/// Random graphs with random clique partitions, and their clique whiskerings.
pub(super) fn clique_whisker_instances(cfg: &VerifyConfig) -> Vec<(Graph, Result<Graph>)> {
    let mut rng = cfg.rng(12);
    random_graphs(&mut rng, 20, 5)
        .into_iter()
        .map(|g| {
            let pi = random_clique_partition(&mut rng, &g);
            let w = clique_whisker(&g, &pi);
            (g, w)
        })
        .collect()
}

pub(super) fn clique_whisker_lq(cfg: &VerifyConfig) -> Vec<super::Check> {
    let mut c = Checks::default();
    for (t, (g, w)) in clique_whisker_instances(cfg).into_iter().enumerate() {
        let w = match w {
            Ok(w) => w,
            Err(e) => {
                c.push("instance", format!("graph {t}"), Err(e));
                continue;
            }
        };
        for k in 1..=2 {
            match symbolic_power_cover(&w, k) {
                Ok(j) => lq_with_cross(&mut c, &format!("graph {t} ({}), k={k}", describe(&g)), &j, cfg),
                Err(e) => c.push("lq", format!("graph {t}, k={k}"), Err(e)),
            }
        }
        for k in 1..=3usize {
            c.push("degree", format!("graph {t}, k={k}: deg J((G^pi)_k) = k|V(G)|"), (|| {
                let d = cover_ideal(&g_k(&w, k)?)?.deg_max()?;
                Ok((d as usize == k * g.n(), format!("{d} vs {}", k * g.n())))
            })());
        }
    }
    c.into_inner()
}

pub(super) fn cover_degree_bounds(cfg: &VerifyConfig) -> Vec<super::Check> {
    let mut c = Checks::default();
    let mut rng = cfg.rng(13);
    for (t, g) in random_graphs(&mut rng, 30, 6).iter().enumerate() {
        for k in 1..=3usize {
            c.push("degree", format!("graph {t}, k={k}: k deg J(G) <= deg J(G_k)"), (|| {
                let (Ok(d), Ok(dk)) = (cover_ideal(g)?.deg_max(), cover_ideal(&g_k(g, k)?)?.deg_max()) else {
                    return Ok((false, "zero ideal".into()));
                };
                Ok((k as u32 * d <= dk, format!("{} <= {dk}", k as u32 * d)))
            })());
        }
    }
    for sizes in STAR_SIZES.iter().copied().chain([&[2usize, 2, 2] as &[usize], &[4, 2]]) {
        for k in 1..=3usize {
            c.push("degree", format!("star complete {sizes:?}, k={k}: deg J(G_k) = k(|V|-1)"), (|| {
                let g = star_complete(&StarCompleteSpec::new("x", sizes.to_vec()))?;
                let d = cover_ideal(&g_k(&g, k)?)?.deg_max()? as usize;
                Ok((d == k * (g.n() - 1), format!("{d}")))
            })());
        }
    }
    c.into_inner()
}

fn regularity_checks(c: &mut Checks, name: &str, g: &Graph, cfg: &VerifyConfig) {
    for k in 1..=2u32 {
        c.push("regularity", format!("{name}, k={k}"), (|| {
            let d = cover_ideal(g)?.deg_max()? as i64;
            let jk = symbolic_power_cover(g, k)?;
            for &p in &cfg.fields {
                let r = regularity(&jk, p)?;
                if r != k as i64 * d {
                    return Ok((false, format!("reg {r} over F_{p}, expected {}", k as i64 * d)));
                }
            }
            Ok((true, format!("reg {}", k as i64 * d)))
        })());
    }
}

fn random_bipartite(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
    let n = rng.gen_range(2..=max_n);
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut g = random_graph(rng, n, 0.0);
    for i in 0..n {
        for j in i + 1..n {
            if side[i] != side[j] && rng.gen_bool(0.6) {
                g.add_edge(i, j).expect("valid edge");
            }
        }
    }
    g
}

pub(super) fn regularity_formula(cfg: &VerifyConfig) -> Vec<super::Check> {
    let mut c = Checks::default();
    for sizes in [&[3usize, 3] as &[usize], &[2, 2, 2]] {
        match star_complete(&StarCompleteSpec::new("x", sizes.to_vec())) {
            Ok(g) => regularity_checks(&mut c, &format!("star complete {sizes:?}"), &g, cfg),
            Err(e) => c.push("instance", format!("star complete {sizes:?}"), Err(e)),
        }
    }
    for (t, (_, w)) in clique_whisker_instances(cfg).into_iter().enumerate() {
        match w {
            Ok(w) => regularity_checks(&mut c, &format!("clique whiskered graph {t}"), &w, cfg),
            Err(e) => c.push("instance", format!("clique whiskered graph {t}"), Err(e)),
        }
    }
    for (name, g) in bipartite_attachment_graphs() {
        match g {
            Ok(g) => {
                c.expect("instance", format!("{name} is bipartite"), Ok(g.bipartition().is_some()));
                regularity_checks(&mut c, name, &g, cfg);
            }
            Err(e) => c.push("instance", name, Err(e)),
        }
    }
    let mut rng = cfg.rng(14);
    for t in 0..15 {
        let g = random_bipartite(&mut rng, 6);
        for k in 1..=3 {
            c.push("powers", format!("bipartite graph {t}, k={k}: J^k = J^(k)"), (|| {
                let j = cover_ideal(&g)?;
                Ok((j.power(k)? == symbolic_power_cover(&g, k)?, describe(&g)))
            })());
        }
    }
    c.into_inner()
}
