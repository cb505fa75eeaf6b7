//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::process::ExitCode;
use std::time::Instant;

use coverideal::constructions::random_graph;
use coverideal::homological::{
    is_vertex_decomposable, linear_quotients_order, validate_lq, validate_vd, Budget, LqCertificate,
};
use coverideal::ideal::{Monomial, MonomialIdeal, Ring};
use coverideal::verify::{run_suite, SuiteReport, VerifyConfig};
use coverideal::{cover_ideal, Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Line {
    criterion: usize,
    title: &'static str,
    passed: bool,
    detail: String,
    ms: u128,
}

fn summarize(reports: &[&SuiteReport], group: Option<&str>) -> (bool, String) {
    let checks: Vec<_> = reports
        .iter()
        .flat_map(|r| r.checks.iter())
        .filter(|c| group.is_none_or(|g| c.group == g))
        .collect();
    let failed: Vec<String> = checks.iter().filter(|c| !c.passed).map(|c| format!("{} ({})", c.name, c.detail)).collect();
    let passed = !checks.is_empty() && failed.is_empty();
    let detail = if failed.is_empty() {
        format!("{} checks", checks.len())
    } else {
        format!("{} of {} checks failed: {}", failed.len(), checks.len(), failed.join("; "))
    };
    (passed, detail)
}

fn ms(reports: &[&SuiteReport]) -> u128 {
    reports.iter().map(|r| r.elapsed_ms).sum()
}

// ---- criterion 10: randomized kernel properties -------------------------

/// Literal shedding test: no independent set of `G \ N[v]` is a maximal
/// independent set of `G \ v`.
fn literal_shedding(g: &Graph, v: usize) -> bool {
    let n = g.n();
    if g.adjacency(v).is_empty() {
        return true;
    }
    let closed = g.closed_neighbors(&VertexSet::singleton(v)).unwrap();
    let outside: Vec<usize> = (0..n).filter(|u| !closed.contains(*u)).collect();
    for mask in 0u32..1 << outside.len() {
        let s: VertexSet = outside.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &u)| u).collect();
        if !g.is_independent(&s) {
            continue;
        }
        let maximal_without_v = (0..n)
            .filter(|&u| u != v && !s.contains(u))
            .all(|u| !g.adjacency(u).is_disjoint(&s));
        if maximal_without_v {
            return false;
        }
    }
    true
}

fn graph_case(g: &Graph) -> Result<(), String> {
    let n = g.n();
    for v in 0..n {
        if g.is_shedding(v).unwrap() != literal_shedding(g, v) {
            return Err(format!("shedding mismatch at {}", g.label(v)));
        }
        if g.is_simplicial(v).unwrap() {
            for u in g.adjacency(v).iter() {
                if !g.is_shedding(u).unwrap() {
                    return Err(format!("neighbor {} of a simplicial vertex is not shedding", g.label(u)));
                }
            }
        }
    }
    let all = g.vertices();
    let mis = g.maximal_independent_sets().unwrap();
    let covers = g.minimal_vertex_covers().unwrap();
    let mut complements: Vec<VertexSet> = mis.iter().map(|s| all.difference(s)).collect();
    complements.sort();
    if complements != covers {
        return Err("covers are not the complements of the maximal independent sets".into());
    }
    // exhaustive check that the covers are exactly the inclusion-minimal ones
    let mut minimal = Vec::new();
    for mask in 0u64..1 << n {
        let c = VertexSet::from_word(mask);
        if g.is_vertex_cover(&c) && c.iter().all(|v| !g.is_vertex_cover(&c.difference(&VertexSet::singleton(v)))) {
            minimal.push(c);
        }
    }
    if minimal != covers {
        return Err("minimal covers differ from brute force".into());
    }
    if g.matching_number().unwrap() < g.induced_matching_number().unwrap() {
        return Err("matching number below induced matching number".into());
    }
    let (ok, sym) = (
        coverideal::graph::isomorphism(g, g).unwrap().is_some(),
        coverideal::graph::isomorphism(g, &g.induced_delete(&VertexSet::new())).unwrap().is_some(),
    );
    if !ok || !sym {
        return Err("isomorphism is not reflexive".into());
    }
    if cover_ideal(g).unwrap() != coverideal::ideal::cover_ideal_by_intersection(g).unwrap() {
        return Err("cover ideal routes disagree".into());
    }
    Ok(())
}

fn random_ideal(rng: &mut ChaCha8Rng, ring: &std::sync::Arc<Ring>) -> MonomialIdeal {
    let n = ring.nvars();
    let m = rng.gen_range(1..=4);
    let gens = (0..m).map(|_| Monomial::new((0..n).map(|_| rng.gen_range(0..3)).collect())).collect();
    MonomialIdeal::new(ring.clone(), gens).unwrap()
}

fn ideal_case(rng: &mut ChaCha8Rng, ring: &std::sync::Arc<Ring>) -> Result<(), String> {
    let (a, b) = (random_ideal(rng, ring), random_ideal(rng, ring));
    let m = Monomial::new((0..ring.nvars()).map(|_| rng.gen_range(0..3)).collect());
    let inter = a.intersect(&b).unwrap();
    let prod = a.multiply(&b).unwrap();
    let sum = a.sum(&b).unwrap();
    let colon = a.colon_by_monomial(&m).unwrap();
    // every monomial of degree <= 6 in three variables
    for e0 in 0..=4u16 {
        for e1 in 0..=4u16 {
            for e2 in 0..=4u16 {
                let x = Monomial::new(vec![e0, e1, e2]);
                let in_prod = a.generators().iter().any(|u| {
                    b.generators().iter().any(|v| u.mul(v).map(|uv| uv.divides(&x)).unwrap_or(false))
                });
                let xm = x.mul(&m).unwrap();
                let checks = [
                    (inter.contains(&x), a.contains(&x) && b.contains(&x), "intersection"),
                    (sum.contains(&x), a.contains(&x) || b.contains(&x), "sum"),
                    (prod.contains(&x), in_prod, "product"),
                    (colon.contains(&x), a.contains(&xm), "colon"),
                ];
                if let Some((_, _, what)) = checks.iter().find(|(got, want, _)| got != want) {
                    return Err(format!("{what} membership disagrees at {}", x.render(ring)));
                }
            }
        }
    }
    Ok(())
}

fn certificate_case(g: &Graph) -> Result<(), String> {
    let budget = Budget::default();
    let vd = is_vertex_decomposable(g, &budget).map_err(|e| e.to_string())?;
    validate_vd(g, &vd, &budget).map_err(|e| format!("vd certificate: {e}"))?;
    let j = cover_ideal(g).unwrap();
    let lq = linear_quotients_order(&j, &budget).map_err(|e| e.to_string())?;
    validate_lq(&j, &lq, &budget).map_err(|e| format!("lq certificate: {e}"))?;
    if vd.is_decomposition() && lq == LqCertificate::Refuted {
        return Err("decomposable graph whose cover ideal lacks linear quotients".into());
    }
    Ok(())
}

fn kernel_properties(seed: u64) -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ring = Ring::new(["x", "y", "z"]).unwrap();
    let (mut cases, mut failures) = (0, Vec::new());
    for t in 0..250 {
        let n = rng.gen_range(1..=8);
        let density = rng.gen_range(0.2..0.8);
        let g = random_graph(&mut rng, n, density);
        cases += 1;
        if let Err(e) = graph_case(&g) {
            failures.push(format!("graph {t}: {e}"));
        }
    }
    for t in 0..200 {
        cases += 1;
        if let Err(e) = ideal_case(&mut rng, &ring) {
            failures.push(format!("ideal {t}: {e}"));
        }
    }
    for t in 0..100 {
        let n = rng.gen_range(1..=8);
        let g = random_graph(&mut rng, n, 0.4);
        cases += 1;
        if let Err(e) = certificate_case(&g) {
            failures.push(format!("certificate {t}: {e}"));
        }
    }
    if failures.is_empty() {
        (true, format!("{cases} randomized cases"))
    } else {
        (false, format!("{} of {cases} cases failed: {}", failures.len(), failures.join("; ")))
    }
}

fn main() -> ExitCode {
    let cfg = VerifyConfig::default();
    let run = |id: &str| run_suite(id, &cfg).expect("known suite");
    let mut lines = Vec::new();

    let ex412 = run("example-triangle-pendants");
    let (p, d) = summarize(&[&ex412], None);
    lines.push(Line { criterion: 1, title: "triangle-with-pendants golden values", passed: p, detail: d, ms: ms(&[&ex412]) });

    let ex44 = run("example-c4-triangles");
    let (p, d) = summarize(&[&ex44], None);
    lines.push(Line { criterion: 2, title: "C4-with-triangles negative example", passed: p, detail: d, ms: ms(&[&ex44]) });

    let pol = run("polarization-cover-ideal");
    let (p, d) = summarize(&[&pol], None);
    lines.push(Line { criterion: 3, title: "polarized symbolic powers are cover ideals of G_k", passed: p, detail: d, ms: ms(&[&pol]) });

    let (kn, star) = (run("complete-layers-vd"), run("star-complete-layers-vd"));
    let (p, d) = summarize(&[&kn, &star], None);
    lines.push(Line { criterion: 4, title: "layered complete and star complete graphs are decomposable", passed: p, detail: d, ms: ms(&[&kn, &star]) });

    let whisk = run("whisker-cover-lq");
    let (p, d) = summarize(&[&whisk], Some("lq"));
    lines.push(Line { criterion: 5, title: "whiskered vertex covers: linear quotients", passed: p, detail: d, ms: ms(&[&whisk]) });

    let cw = run("cameron-walker-lq");
    let (p, d) = {
        let (a, da) = summarize(&[&cw], Some("lq"));
        let (b, db) = summarize(&[&cw], Some("graph"));
        (a && b, format!("{da}; family membership {db}"))
    };
    lines.push(Line { criterion: 6, title: "Cameron-Walker graphs: linear quotients", passed: p, detail: d, ms: ms(&[&cw]) });

    let clique = run("clique-whisker-lq");
    let (p, d) = {
        let (a, da) = summarize(&[&clique], Some("lq"));
        let (b, db) = summarize(&[&clique], Some("degree"));
        (a && b, format!("{da}; degree identity {db}"))
    };
    lines.push(Line { criterion: 7, title: "clique whiskering: linear quotients and degree identity", passed: p, detail: d, ms: ms(&[&clique]) });

    let reg = run("regularity-formula");
    let (p, d) = summarize(&[&reg], None);
    lines.push(Line { criterion: 8, title: "regularity equals k times the cover degree", passed: p, detail: d, ms: ms(&[&reg]) });

    let (p, d) = summarize(&[&whisk, &cw, &clique], Some("betti-cross"));
    lines.push(Line { criterion: 9, title: "Betti tables: Hochster routes vs linear quotients", passed: p, detail: d, ms: 0 });

    let start = Instant::now();
    let (p, d) = kernel_properties(cfg.seed);
    lines.push(Line { criterion: 10, title: "randomized kernel properties", passed: p, detail: d, ms: start.elapsed().as_millis() });

    let mut all = true;
    for l in &lines {
        all &= l.passed;
        println!(
            "{} criterion {:>2}: {} — {} [{} ms]",
            if l.passed { "PASS" } else { "FAIL" },
            l.criterion,
            l.title,
            l.detail,
            l.ms
        );
    }
    println!("acceptance: {} of {} criteria passed", lines.iter().filter(|l| l.passed).count(), lines.len());
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
