use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn instance(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "instances", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coverideal")).args(args).output().expect("binary runs")
}

/// Runs and parses the JSON report; returns it with the exit code.
fn report(args: &[&str]) -> (Value, i32) {
    let out = run(args);
    let text = String::from_utf8(out.stdout).unwrap();
    let v: Value = serde_json::from_str(text.trim())
        .unwrap_or_else(|e| panic!("not JSON ({e}): {text}"));
    (v, out.status.code().unwrap())
}

fn text(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{:?}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

const EDGE: &str = r#"{"vertices":["x1","x2"],"edges":[["x1","x2"]]}"#;

#[test]
fn cover_of_single_edge() {
    let (r, code) = report(&["ideal", "cover", EDGE]);
    assert_eq!(code, 0);
    assert_eq!(r["command"], "ideal cover");
    assert_eq!(r["outcome"]["kind"], "value");
    assert_eq!(r["outcome"]["value"]["rendered"], "(x1, x2)");
}

#[test]
fn second_symbolic_power_of_triangle_with_pendants() {
    let (r, _) = report(&["ideal", "symbolic-power", "--k", "2", &instance("triangle_pendants.json")]);
    let v = &r["outcome"]["value"];
    assert_eq!(v["generators"], 11);
    let degrees: Vec<u64> = v["degrees"].as_array().unwrap().iter().map(|d| d.as_u64().unwrap()).collect();
    assert_eq!(degrees.iter().filter(|&&d| d == 9).count(), 1);
    assert_eq!(degrees.iter().max(), Some(&9));
}

#[test]
fn polarize_square() {
    let out = text(&["--format", "text", "ideal", "polarize", r#"{"ring":["x"],"generators":[[2]]}"#]);
    assert_eq!(out.trim(), "(x_1*x_2)");
}

#[test]
fn graph_gen_families() {
    let (r, _) = report(&["graph", "gen", r#"{"family":"g_k","base":{"family":"cycle","n":4},"k":1}"#]);
    let g = &r["outcome"]["value"];
    assert_eq!(g["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(g["edges"].as_array().unwrap().len(), 4);

    let (r, _) = report(&["graph", "gen", r#"{"family":"star_complete","sizes":[3,3]}"#]);
    assert_eq!(r["outcome"]["value"]["vertices"].as_array().unwrap().len(), 5);
    assert_eq!(r["outcome"]["value"]["edges"].as_array().unwrap().len(), 6);
}

#[test]
fn attachment_spec_rebuilds_figure_graph() {
    let (a, _) = report(&["graph", "info", &instance("c4_triangles_attach.json")]);
    let (b, _) = report(&["graph", "info", &instance("c4_triangles.json")]);
    // labels differ; every label-free invariant agrees
    for key in ["vertices", "edges", "matching_number", "induced_matching_number", "minimal_vertex_covers", "cover_ideal_degree"] {
        assert_eq!(a["outcome"]["value"][key], b["outcome"]["value"][key], "{key}");
    }
    assert_eq!(a["outcome"]["value"]["vertices"], 8);
    assert_eq!(a["outcome"]["value"]["edges"], 10);
}

#[test]
fn vd_on_edgeless_graph_is_a_leaf() {
    let (r, code) = report(&["check", "vd", r#"{"vertices":["a","b"],"edges":[]}"#]);
    assert_eq!(code, 0);
    assert_eq!(r["outcome"]["kind"], "certificate");
    assert_eq!(r["outcome"]["certificate"]["certificate"]["decomposition"], "leaf");
}

#[test]
fn lq_refutation_round_trips_through_validate() {
    let dir = std::env::temp_dir().join(format!("coverideal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cert = dir.join("refutation.json");
    let cert = cert.to_str().unwrap();
    let (r, code) = report(&["check", "lq", "--k", "2", "--polarize", &instance("c4_triangles.json"), "--out", cert]);
    assert_eq!(code, 0);
    assert_eq!(r["outcome"]["kind"], "refutation");
    let (v, code) = report(&["validate", cert]);
    assert_eq!(code, 0, "{v}");
    assert_eq!(v["outcome"]["value"]["kind"], "refutation");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn tampered_certificate_is_rejected() {
    let (r, _) = report(&["check", "lq", &instance("triangle_pendants.json")]);
    let mut cert = r["outcome"]["certificate"].clone();
    assert_eq!(r["outcome"]["kind"], "certificate");
    let order = cert["certificate"]["order"]["order"].as_array_mut().unwrap();
    order.reverse();
    let (v, code) = report(&["validate", &cert.to_string()]);
    assert_eq!(code, 1);
    assert_eq!(v["outcome"]["kind"], "error");
    assert_eq!(v["outcome"]["class"], "domain");
}

#[test]
fn cwl_on_chordal_graph() {
    let (r, _) = report(&["check", "cwl", r#"{"family":"path","n":5}"#]);
    assert_eq!(r["outcome"]["value"], true);
}

#[test]
fn regularity_values() {
    assert_eq!(text(&["--format", "text", "reg", &instance("triangle_pendants.json")]).trim(), "4");
    assert_eq!(text(&["--format", "text", "reg", "--k", "2", &instance("triangle_pendants.json")]).trim(), "9");
    let linear = r#"{"ring":["x1","x2"],"generators":[[1,0],[0,1]]}"#;
    assert_eq!(text(&["--format", "text", "reg", linear]).trim(), "1");
}

#[test]
fn betti_table_of_path_ideal() {
    let out = text(&["--format", "text", "betti", r#"{"ring":["x1","x2","x3"],"generators":[[1,1,0],[0,1,1]]}"#]);
    assert_eq!(out, "       0 1\ntotal: 2 1\n    2: 2 1\n");
}

#[test]
fn exit_code_contract() {
    let (r, code) = report(&["check", "lq", "--k", "2", "--polarize", "--budget-nodes", "3", &instance("c4_triangles.json")]);
    assert_eq!((code, r["outcome"]["kind"].as_str()), (2, Some("budget_exceeded")));

    let (r, code) = report(&["reg", "/nonexistent/graph.json"]);
    assert_eq!((code, r["outcome"]["class"].as_str()), (3, Some("io")));

    let (r, code) = report(&["no-such-command"]);
    assert_eq!((code, r["outcome"]["class"].as_str()), (1, Some("usage")));

    let (r, code) = report(&["check", "vd", r#"{"ring":["x"],"generators":[[1]]}"#]);
    assert_eq!((code, r["outcome"]["class"].as_str()), (1, Some("usage")));

    let (r, code) = report(&["ideal", "symbolic-power", "--k", "0", EDGE]);
    assert_eq!((code, r["outcome"]["class"].as_str()), (1, Some("domain")));

    let help = run(&["--help"]);
    assert!(help.status.success());
    assert!(String::from_utf8_lossy(&help.stdout).contains("Usage"));
}

#[test]
fn reports_are_deterministic() {
    let args = ["check", "vd", &instance("c4_triangles.json")];
    let strip = |mut v: Value| {
        v.as_object_mut().unwrap().remove("wall_time_ms");
        v.to_string()
    };
    assert_eq!(strip(report(&args).0), strip(report(&args).0));
}

#[test]
fn verify_single_suite() {
    let (r, code) = report(&["verify", "simplicial-layers"]);
    assert_eq!(code, 0, "{r}");
    assert_eq!(r["outcome"]["value"]["passed"], true);
    let (_, code) = report(&["verify", "no-such-suite"]);
    assert_eq!(code, 1);
}
