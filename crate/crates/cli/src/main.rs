//! `coverideal`: build graphs and monomial ideals, run the homological checks
//! and emit machine-readable reports.
//!
//! Every invocation prints one JSON report (or plain text with
//! `--format text`). Exit codes: 0 success (refutations included), 1 usage
//! or domain error, 2 search budget exceeded, 3 I/O failure.

mod input;
mod report;

use std::fs;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use coverideal::homological::{
    betti_table, has_linear_resolution, is_componentwise_linear, is_vertex_decomposable,
    linear_quotients_order, regularity, seq_cm_proxy, Budget, CertificateFile,
};
use coverideal::verify::{self, VerifyConfig, SUITES};
use coverideal::{cover_ideal, edge_ideal, symbolic_power_cover, Graph, MonomialIdeal};
use serde_json::{json, Value};

use input::{Source, Target};
use report::{input_hash, ErrorClass, Failure, Outcome, Params, Report, EXIT_DOMAIN};

#[derive(Parser, Debug)]
#[command(name = "coverideal", version, about = "Cover ideals of graphs and their symbolic powers")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Opts {
    /// Power / layer count used by symbolic-power, power and graph targets.
    #[arg(long, global = true, default_value_t = 1)]
    k: u32,
    /// Prime characteristic for Betti numbers.
    #[arg(long, global = true)]
    field: Option<u32>,
    /// Node budget for the exhaustive searches.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    budget_nodes: u64,
    /// Wall-clock budget in seconds for the exhaustive searches.
    #[arg(long, global = true, default_value_t = 600)]
    budget_secs: u64,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Also write the produced artifact (graph, ideal, certificate, table) here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build or describe graphs.
    #[command(subcommand)]
    Graph(GraphCmd),
    /// Monomial-ideal constructions.
    #[command(subcommand)]
    Ideal(IdealCmd),
    /// Decide a property; searches attach a certificate or refutation.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Graded Betti table of an ideal (graphs mean J(G)^(k)).
    Betti { target: String },
    /// Castelnuovo-Mumford regularity of an ideal, reg(I).
    Reg { target: String },
    /// Re-check a certificate file written by `check lq|vd --out`.
    Validate { certificate: String },
    /// Run the verification suites (`all` or one suite id).
    Verify {
        #[arg(default_value = "all")]
        suite: String,
        #[arg(long)]
        seed: Option<u64>,
        /// List suite ids and exit.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand, Debug)]
enum GraphCmd {
    /// Build a graph from a family spec or literal graph JSON.
    Gen { spec: String },
    /// Basic invariants of a graph.
    Info { graph: String },
}

#[derive(Subcommand, Debug)]
enum IdealCmd {
    /// Cover ideal J(G).
    Cover { graph: String },
    /// Edge ideal I(G).
    Edge { graph: String },
    /// Symbolic power J(G)^(k).
    SymbolicPower { graph: String },
    /// Ordinary power I^k (graphs mean J(G)).
    Power { ideal: String },
    /// Intersection of two ideals over the same ring.
    Intersect { a: String, b: String },
    /// Polarization to a squarefree ideal.
    Polarize { ideal: String },
    /// Alexander dual of a squarefree ideal.
    Dual { ideal: String },
}

#[derive(Subcommand, Debug)]
enum CheckCmd {
    /// Linear quotients (graphs mean J(G)^(k)).
    Lq {
        target: String,
        /// Polarize the ideal first.
        #[arg(long)]
        polarize: bool,
    },
    /// Vertex decomposability of the independence complex.
    Vd { graph: String },
    /// Componentwise linearity.
    Cwl { target: String },
    /// Linear resolution.
    Linres { target: String },
    /// Sequential Cohen-Macaulayness of a graph via its cover ideal.
    Seqcm { graph: String },
}

/// Result of a successful command.
struct Done {
    outcome: Outcome,
    text: String,
    artifact: Option<String>,
    failed: bool,
}

impl Done {
    fn value(value: Value, text: String) -> Self {
        Done { outcome: Outcome::Value { value }, text, artifact: None, failed: false }
    }

    fn with_artifact(mut self, artifact: String) -> Self {
        self.artifact = Some(artifact);
        self
    }
}

struct Ctx {
    k: u32,
    field: u32,
    budget: Budget,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => match e.kind() {
            ErrorKind::DisplayHelp
            | ErrorKind::DisplayVersion
            | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => e.exit(),
            _ => {
                let outcome = Outcome::Error { class: ErrorClass::Usage, message: e.to_string() };
                let report = Report {
                    command: String::new(),
                    version: env!("CARGO_PKG_VERSION"),
                    params: Params { k: 1, field: 2, budget_nodes: 0, budget_secs: 0 },
                    input_hash: input_hash([]),
                    outcome,
                    wall_time_ms: 0,
                };
                println!("{}", serde_json::to_string(&report).expect("report serializes"));
                std::process::exit(EXIT_DOMAIN);
            }
        },
    };
    env_logger::Builder::from_env(env_logger::Env::new().filter("COVERIDEAL_LOG")).init();
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    let start = Instant::now();
    let opts = &cli.opts;
    let ctx = Ctx {
        k: opts.k,
        field: opts.field.unwrap_or(2),
        budget: Budget { nodes: opts.budget_nodes, time: Duration::from_secs(opts.budget_secs) },
    };
    let mut inputs = Vec::new();
    let result = setup(opts).and_then(|()| dispatch(&cli.command, &ctx, opts, &mut inputs));
    let (outcome, text, failed) = match result {
        Ok(done) => match write_artifact(opts, done.artifact.as_deref()) {
            Ok(()) => (done.outcome, done.text, done.failed),
            Err(f) => (f.into_outcome(), String::new(), false),
        },
        Err(f) => (f.into_outcome(), String::new(), false),
    };
    let code = if failed { EXIT_DOMAIN } else { outcome.exit_code() };
    let report = Report {
        command: command_name(&cli.command),
        version: env!("CARGO_PKG_VERSION"),
        params: Params {
            k: ctx.k,
            field: ctx.field,
            budget_nodes: opts.budget_nodes,
            budget_secs: opts.budget_secs,
        },
        input_hash: input_hash(inputs.iter().map(|s: &Source| s.text.as_str())),
        outcome,
        wall_time_ms: start.elapsed().as_millis(),
    };
    match opts.format {
        Format::Json => println!("{}", serde_json::to_string(&report).expect("report serializes")),
        Format::Text => match &report.outcome {
            Outcome::Error { message, .. } => eprintln!("error: {message}"),
            Outcome::BudgetExceeded { nodes } => eprintln!("budget exceeded after {nodes} nodes"),
            _ => print!("{text}"),
        },
    }
    code
}

fn setup(opts: &Opts) -> Result<(), Failure> {
    if opts.budget_nodes == 0 || opts.budget_secs == 0 {
        return Err(Failure::usage("budgets must be positive".into()));
    }
    if let Some(n) = opts.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::usage(format!("thread pool: {e}")))?;
    }
    Ok(())
}

fn write_artifact(opts: &Opts, artifact: Option<&str>) -> Result<(), Failure> {
    match (&opts.out, artifact) {
        (Some(path), Some(text)) => fs::write(path, format!("{text}\n"))
            .map_err(|e| Failure::io(format!("{}: {e}", path.display()))),
        (Some(_), None) => Err(Failure::usage("this command produces nothing to write with --out".into())),
        (None, _) => Ok(()),
    }
}

fn command_name(c: &Command) -> String {
    let s = match c {
        Command::Graph(GraphCmd::Gen { .. }) => "graph gen",
        Command::Graph(GraphCmd::Info { .. }) => "graph info",
        Command::Ideal(IdealCmd::Cover { .. }) => "ideal cover",
        Command::Ideal(IdealCmd::Edge { .. }) => "ideal edge",
        Command::Ideal(IdealCmd::SymbolicPower { .. }) => "ideal symbolic-power",
        Command::Ideal(IdealCmd::Power { .. }) => "ideal power",
        Command::Ideal(IdealCmd::Intersect { .. }) => "ideal intersect",
        Command::Ideal(IdealCmd::Polarize { .. }) => "ideal polarize",
        Command::Ideal(IdealCmd::Dual { .. }) => "ideal dual",
        Command::Check(CheckCmd::Lq { .. }) => "check lq",
        Command::Check(CheckCmd::Vd { .. }) => "check vd",
        Command::Check(CheckCmd::Cwl { .. }) => "check cwl",
        Command::Check(CheckCmd::Linres { .. }) => "check linres",
        Command::Check(CheckCmd::Seqcm { .. }) => "check seqcm",
        Command::Betti { .. } => "betti",
        Command::Reg { .. } => "reg",
        Command::Validate { .. } => "validate",
        Command::Verify { .. } => "verify",
    };
    s.to_string()
}

fn load<'a>(inputs: &'a mut Vec<Source>, arg: &str) -> Result<&'a Source, Failure> {
    inputs.push(Source::load(arg)?);
    Ok(inputs.last().expect("just pushed"))
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn pretty<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn dispatch(cmd: &Command, ctx: &Ctx, opts: &Opts, inputs: &mut Vec<Source>) -> Result<Done, Failure> {
    match cmd {
        Command::Graph(GraphCmd::Gen { spec }) => {
            let g = input::graph(load(inputs, spec)?)?;
            Ok(graph_done(&g))
        }
        Command::Graph(GraphCmd::Info { graph }) => {
            let g = input::graph(load(inputs, graph)?)?;
            graph_info(&g)
        }
        Command::Ideal(op) => ideal_cmd(op, ctx, inputs),
        Command::Check(op) => check_cmd(op, ctx, inputs),
        Command::Betti { target } => {
            let i = Target::parse(load(inputs, target)?)?.into_ideal(ctx.k)?;
            let t = betti_table(&i, ctx.field)?;
            Ok(Done::value(to_json(&t), t.render()).with_artifact(pretty(&t)))
        }
        Command::Reg { target } => {
            let i = Target::parse(load(inputs, target)?)?.into_ideal(ctx.k)?;
            let r = regularity(&i, ctx.field)?;
            Ok(Done::value(json!(r), format!("{r}\n")))
        }
        Command::Validate { certificate } => {
            let cert = input::certificate(load(inputs, certificate)?)?;
            cert.validate(&ctx.budget)?;
            let kind = if cert.is_refutation() { "refutation" } else { "certificate" };
            Ok(Done::value(json!({"valid": true, "kind": kind}), format!("valid {kind}\n")))
        }
        Command::Verify { suite, seed, list } => {
            if *list {
                let ids: Vec<_> = SUITES.iter().map(|s| json!({"id": s.0, "title": s.1})).collect();
                let text = SUITES.iter().map(|s| format!("{:<28} {}\n", s.0, s.1)).collect();
                return Ok(Done::value(Value::Array(ids), text));
            }
            let mut cfg = VerifyConfig { budget: ctx.budget, ..VerifyConfig::default() };
            if let Some(seed) = seed {
                cfg.seed = *seed;
            }
            if let Some(p) = opts.field {
                cfg.fields = vec![p];
            }
            verify_cmd(suite, &cfg)
        }
    }
}

fn graph_done(g: &Graph) -> Done {
    let j = to_json(&g.to_json());
    Done::value(j.clone(), g.to_edge_list()).with_artifact(j.to_string())
}

fn graph_info(g: &Graph) -> Result<Done, Failure> {
    let labels = |vs: Vec<usize>| -> Vec<String> { vs.into_iter().map(|v| g.label(v).to_string()).collect() };
    let simplicial = labels((0..g.n()).filter(|&v| g.is_simplicial(v).unwrap_or(false)).collect());
    let shedding = labels((0..g.n()).filter(|&v| g.is_shedding(v).unwrap_or(false)).collect());
    let covers = g.minimal_vertex_covers().ok();
    let value = json!({
        "vertices": g.n(),
        "edges": g.edge_count(),
        "connected": g.is_connected(),
        "components": g.component_sets().len(),
        "bipartite": g.bipartition().is_some(),
        "simplicial": simplicial,
        "shedding": shedding,
        "matching_number": g.matching_number().ok(),
        "induced_matching_number": g.induced_matching_number().ok(),
        "cameron_walker": g.is_cameron_walker().ok(),
        "minimal_vertex_covers": covers.as_ref().map(|c| c.len()),
        "cover_ideal_degree": covers.as_ref().and_then(|c| c.iter().map(|s| s.len()).max()),
    });
    let text = value
        .as_object()
        .expect("object")
        .iter()
        .map(|(k, v)| format!("{k}: {v}\n"))
        .collect();
    Ok(Done::value(value, text))
}

fn ideal_done(i: &MonomialIdeal) -> Done {
    let j = i.to_json();
    let value = json!({
        "ideal": to_json(&j),
        "rendered": i.render(),
        "generators": i.len(),
        "degrees": i.generator_degrees(),
    });
    Done::value(value, format!("{}\n", i.render())).with_artifact(to_json(&j).to_string())
}

fn ideal_cmd(op: &IdealCmd, ctx: &Ctx, inputs: &mut Vec<Source>) -> Result<Done, Failure> {
    let k = ctx.k;
    let i = match op {
        IdealCmd::Cover { graph } => cover_ideal(&input::graph(load(inputs, graph)?)?)?,
        IdealCmd::Edge { graph } => edge_ideal(&input::graph(load(inputs, graph)?)?),
        IdealCmd::SymbolicPower { graph } => symbolic_power_cover(&input::graph(load(inputs, graph)?)?, k)?,
        IdealCmd::Power { ideal } => {
            Target::parse(load(inputs, ideal)?)?.into_ideal(1)?.power(k)?
        }
        IdealCmd::Intersect { a, b } => {
            let a = Target::parse(load(inputs, a)?)?.into_ideal(k)?;
            let b = Target::parse(load(inputs, b)?)?.into_ideal(k)?;
            a.intersect(&b)?
        }
        IdealCmd::Polarize { ideal } => Target::parse(load(inputs, ideal)?)?.into_ideal(k)?.polarize()?.0,
        IdealCmd::Dual { ideal } => Target::parse(load(inputs, ideal)?)?.into_ideal(k)?.alexander_dual()?,
    };
    Ok(ideal_done(&i))
}

fn check_cmd(op: &CheckCmd, ctx: &Ctx, inputs: &mut Vec<Source>) -> Result<Done, Failure> {
    match op {
        CheckCmd::Lq { target, polarize } => {
            let mut i = Target::parse(load(inputs, target)?)?.into_ideal(ctx.k)?;
            if *polarize {
                i = i.polarize()?.0;
            }
            let cert = linear_quotients_order(&i, &ctx.budget)?;
            Ok(certificate_done(CertificateFile::linear_quotients(&i, cert)))
        }
        CheckCmd::Vd { graph } => {
            let g = input::graph(load(inputs, graph)?)?;
            let cert = is_vertex_decomposable(&g, &ctx.budget)?;
            Ok(certificate_done(CertificateFile::vertex_decomposable(&g, cert)))
        }
        CheckCmd::Cwl { target } => {
            let i = Target::parse(load(inputs, target)?)?.into_ideal(ctx.k)?;
            bool_done(is_componentwise_linear(&i, ctx.field)?)
        }
        CheckCmd::Linres { target } => {
            let i = Target::parse(load(inputs, target)?)?.into_ideal(ctx.k)?;
            bool_done(has_linear_resolution(&i, ctx.field)?)
        }
        CheckCmd::Seqcm { graph } => {
            let g = input::graph(load(inputs, graph)?)?;
            bool_done(seq_cm_proxy(&g, ctx.field)?)
        }
    }
}

fn bool_done(b: bool) -> Result<Done, Failure> {
    Ok(Done::value(json!(b), format!("{b}\n")))
}

fn certificate_done(file: CertificateFile) -> Done {
    let value = to_json(&file);
    let (outcome, text) = if file.is_refutation() {
        (Outcome::Refutation { certificate: value }, "refuted\n".to_string())
    } else {
        (Outcome::Certificate { certificate: value }, format!("certified\n{}\n", pretty(&file)))
    };
    Done { outcome, text, artifact: Some(pretty(&file)), failed: false }
}

fn verify_cmd(selection: &str, cfg: &VerifyConfig) -> Result<Done, Failure> {
    let reports = verify::run(selection, cfg)?;
    let mut text = String::new();
    let mut suites = Vec::new();
    let mut all = true;
    for r in &reports {
        let title = SUITES.iter().find(|s| s.0 == r.id).map_or("", |s| s.1);
        let failures: Vec<_> = r.failures().map(to_json).collect();
        all &= r.passed();
        text.push_str(&format!(
            "{} {:<28} {:>4} checks  {}\n",
            if r.passed() { "PASS" } else { "FAIL" },
            r.id,
            r.checks.len(),
            title
        ));
        for f in r.failures() {
            text.push_str(&format!("     - [{}] {}: {}\n", f.group, f.name, f.detail));
        }
        suites.push(json!({
            "id": r.id,
            "title": title,
            "passed": r.passed(),
            "checks": r.checks.len(),
            "failures": failures,
        }));
    }
    text.push_str(&format!(
        "{} of {} suites passed\n",
        reports.iter().filter(|r| r.passed()).count(),
        reports.len()
    ));
    let value = json!({"seed": cfg.seed, "passed": all, "suites": suites});
    let mut done = Done::value(value.clone(), text).with_artifact(value.to_string());
    done.failed = !all;
    Ok(done)
}
