//! Thin command-line shell over the `rainbow_free` library. Every subcommand
//! emits a deterministic machine-readable artifact (JSON or CSV) on stdout or
//! into `--out`, plus a run manifest on stderr (and as a `.manifest.json`
//! sidecar next to `--out`).

use std::fmt::Write as _;
use std::fs;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rainbow_free::analysis::{
    check_claim1, proof_diagnostics, sweep_inequalities, sweep_inequalities_exploratory,
    three_color_isolation, Claim1Report, DiagnosticsReport, InequalityViolation,
    IsolationViolation,
};
use rainbow_free::coloring::Coloring;
use rainbow_free::constructions::{
    default_theorem1_a, frankl_bipartite, theorem1_construction, two_clique_family, TwoCliqueParams,
};
use rainbow_free::manifest::{sig12, RunManifest};
use rainbow_free::objective::{discrete_best, gamma_x0, maximize_objective, QUOTED_X0};
use rainbow_free::search::{search_exact, SearchConfig, SymmetryLevel};

#[derive(Parser)]
#[command(
    name = "rainbow",
    version,
    about = "Exact tooling for rainbow-triangle-free triples of graphs",
    long_about = "Computes the product constant gamma, builds the extremal constructions, \
                  sweeps exact integer products against floor(n^2/4)^3, runs certified \
                  small-n searches, and checks the structural properties of colorings.\n\
                  All JSON artifacts carry \"schema\": 1; floats are fixed at 12 significant \
                  digits; products are decimal strings. A run manifest (command, args, \
                  version, wall time, artifact sha256) goes to stderr."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Maximize the density objective: report gamma and its maximizer x0
    Gamma(GammaArgs),
    /// Build a named construction and report its exact counts
    Construct(ConstructArgs),
    /// Certified exact search over all rainbow-free colorings of n vertices
    Search(SearchArgs),
    /// Structural checks on a coloring file
    Check(CheckArgs),
    /// CSV sweep of the optimal integer product against floor(n^2/4)^3.
    /// Columns: n,best_a,e1,e2,e3,product,frankl_bound,beats_frankl
    Sweep(SweepArgs),
    /// Exact sweep of the two binomial inequalities over their domains
    Inequalities(InequalitiesArgs),
}

#[derive(Args)]
struct GammaArgs {
    /// Bracket tolerance for the maximizer (>= 1e-12)
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Frankl,
    Theorem1,
    Family,
}

#[derive(Args)]
struct ConstructArgs {
    /// Which construction to build
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    n: usize,
    /// Size of the first clique block (theorem1/family); defaults to
    /// round(x0 * n) for theorem1
    #[arg(long)]
    a: Option<usize>,
    /// Second clique block (family only)
    #[arg(long, default_value_t = 0)]
    b: usize,
    /// Third clique block (family only)
    #[arg(long, default_value_t = 0)]
    c: usize,
    /// Number of three-colored matching edges (family only)
    #[arg(long, default_value_t = 0)]
    d: usize,
    /// Write the coloring file here (counts JSON still goes to stdout)
    #[arg(long)]
    out: Option<String>,
    /// Coloring file format for --out
    #[arg(long, value_enum, default_value_t = FileFormat::Json)]
    format: FileFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum FileFormat {
    Json,
    Compact,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    /// Restrict the space to colorings with every pair colored
    #[arg(long, default_value_t = false)]
    fully_colored: bool,
    #[arg(long, value_enum, default_value_t = SymmetryArg::ColorAndVertex)]
    symmetry: SymmetryArg,
    /// Seed the incumbent from the known constructions
    #[arg(long, default_value_t = true, action = clap::ArgAction::Set)]
    seed_construction: bool,
    /// Worker threads (RAINBOW_THREADS overrides)
    #[arg(long, default_value_t = 1, env = "RAINBOW_THREADS")]
    threads: usize,
    /// Abort after this many expanded nodes (result marked incomplete)
    #[arg(long)]
    limit_nodes: Option<u64>,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SymmetryArg {
    None,
    Color,
    ColorAndVertex,
}

impl From<SymmetryArg> for SymmetryLevel {
    fn from(s: SymmetryArg) -> SymmetryLevel {
        match s {
            SymmetryArg::None => SymmetryLevel::None,
            SymmetryArg::Color => SymmetryLevel::ColorOnly,
            SymmetryArg::ColorAndVertex => SymmetryLevel::ColorAndVertex,
        }
    }
}

#[derive(Args)]
struct CheckArgs {
    /// Which checker to run
    #[arg(value_enum)]
    what: CheckKind,
    /// Coloring file, either format (auto-detected)
    #[arg(long = "in")]
    input: String,
    /// Premise slack for the diagnostics checker
    #[arg(long, default_value_t = 0.01)]
    epsilon: f64,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    Claim1,
    Isolation,
    Diagnostics,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long)]
    n_max: usize,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct InequalitiesArgs {
    #[arg(long)]
    n_max: usize,
    /// Drop the clique-size constraint and degenerate-case exclusions;
    /// violations found here are reported, not judged
    #[arg(long, default_value_t = false)]
    exploratory: bool,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Serialize)]
struct GammaOut {
    schema: u32,
    x0: f64,
    gamma: f64,
    tol: f64,
    bracket_width: f64,
    evaluations: u64,
    /// Whether 1/52 < gamma < 1/51.
    bounds_check: bool,
    /// The commonly quoted maximizer approximation and its objective value;
    /// it fails the stated bounds, unlike the computed x0.
    quoted_x0: f64,
    quoted_x0_objective: f64,
    quoted_x0_within_bounds: bool,
    note: String,
}

#[derive(Serialize)]
struct ConstructOut {
    schema: u32,
    kind: String,
    n: usize,
    a: usize,
    b: usize,
    c: usize,
    d: usize,
    e1: u64,
    e2: u64,
    e3: u64,
    product: String,
    frankl_bound: String,
    rainbow_free: bool,
    fully_colored: bool,
    coloring_compact: String,
    out_file: Option<String>,
}

#[derive(Serialize)]
struct SearchOut {
    schema: u32,
    n: usize,
    fully_colored: bool,
    symmetry: String,
    threads: usize,
    seeded: bool,
    best_product: String,
    witnesses: Vec<String>,
    nodes_expanded: u64,
    pruned_by_bound: u64,
    pruned_by_rainbow: u64,
    complete: bool,
}

#[derive(Serialize)]
struct CheckOut<T: Serialize> {
    schema: u32,
    check: String,
    input: String,
    n: usize,
    report: T,
}

#[derive(Serialize)]
struct IsolationOut {
    violations: Vec<IsolationViolation>,
    three_colored_count: usize,
    matching_bound: usize,
    within_matching_bound: bool,
}

#[derive(Serialize)]
struct InequalitiesOut {
    schema: u32,
    n_max: usize,
    domain: String,
    violation_count: usize,
    violations: Vec<InequalityViolation>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let run = match &cli.command {
        Command::Gamma(args) => cmd_gamma(args),
        Command::Construct(args) => cmd_construct(args),
        Command::Search(args) => cmd_search(args),
        Command::Check(args) => cmd_check(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Inequalities(args) => cmd_inequalities(args),
    };
    match run {
        Ok((name, args, artifact, out)) => {
            if let Err(e) = emit(&name, args, artifact, out, started) {
                eprintln!("error: {e}");
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

type CmdOutput = (String, Vec<String>, String, Option<String>);

fn emit(
    command: &str,
    args: Vec<String>,
    artifact: String,
    out: Option<String>,
    started: Instant,
) -> Result<(), String> {
    match &out {
        Some(path) => {
            fs::write(path, &artifact).map_err(|e| format!("writing {path}: {e}"))?;
        }
        None => print!("{artifact}"),
    }
    let manifest = RunManifest::new(
        command,
        args,
        started.elapsed().as_millis() as u64,
        artifact.as_bytes(),
    );
    eprintln!("{}", manifest.to_json_line());
    if let Some(path) = &out {
        let sidecar = format!("{path}.manifest.json");
        fs::write(&sidecar, manifest.to_json_line() + "\n")
            .map_err(|e| format!("writing {sidecar}: {e}"))?;
    }
    Ok(())
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("artifact serialization");
    s.push('\n');
    s
}

fn cmd_gamma(args: &GammaArgs) -> Result<CmdOutput, String> {
    let r = maximize_objective(args.tol).map_err(|e| e.to_string())?;
    let quoted_val =
        rainbow_free::objective::eval_objective(QUOTED_X0).expect("0.729 is inside [0,1]");
    let lo = 1.0 / 52.0;
    let hi = 1.0 / 51.0;
    let out = GammaOut {
        schema: 1,
        x0: sig12(r.x0),
        gamma: sig12(r.gamma),
        tol: args.tol,
        bracket_width: sig12(r.bracket_width),
        evaluations: r.evaluations,
        bounds_check: r.gamma > lo && r.gamma < hi,
        quoted_x0: QUOTED_X0,
        quoted_x0_objective: sig12(quoted_val),
        quoted_x0_within_bounds: quoted_val > lo && quoted_val < hi,
        note: "the often-quoted x0 ~ 0.729 evaluates below 1/52 and cannot be the \
               maximizer; the computed maximizer is near 0.7927"
            .to_string(),
    };
    Ok((
        "gamma".into(),
        vec![format!("--tol={}", args.tol)],
        json_line(&out),
        args.out.clone(),
    ))
}

fn cmd_construct(args: &ConstructArgs) -> Result<CmdOutput, String> {
    let started = Instant::now();
    let (kind, coloring, a, b, c, d) = match args.kind {
        Kind::Frankl => {
            let col = frankl_bipartite(args.n).map_err(|e| e.to_string())?;
            ("frankl", col, 0, 0, 0, 0)
        }
        Kind::Theorem1 => {
            let a = args.a.unwrap_or_else(|| {
                let (_, x0) = gamma_x0();
                default_theorem1_a(args.n, x0)
            });
            let col = theorem1_construction(args.n, a).map_err(|e| e.to_string())?;
            ("theorem1", col, a, 0, 0, 0)
        }
        Kind::Family => {
            let p = TwoCliqueParams::new(args.n, args.a.unwrap_or(0), args.b, args.c, args.d)
                .map_err(|e| e.to_string())?;
            let col = two_clique_family(&p).map_err(|e| e.to_string())?;
            ("family", col, p.a, p.b, p.c, p.d)
        }
    };

    let counts = coloring.edge_counts();
    let product = counts.product().map_err(|e| e.to_string())?;
    let bound = rainbow_free::constructions::frankl_bound(args.n).map_err(|e| e.to_string())?;

    let flags = vec![
        format!("--kind={kind}"),
        format!("--n={}", args.n),
        format!("--a={a}"),
        format!("--b={b}"),
        format!("--c={c}"),
        format!("--d={d}"),
    ];
    // the coloring file is an artifact of its own: write it with a manifest
    // sidecar; the counts JSON goes to stdout through the usual path
    if let Some(path) = &args.out {
        let body = match args.format {
            FileFormat::Json => coloring.to_json_string() + "\n",
            FileFormat::Compact => coloring.to_compact_string() + "\n",
        };
        fs::write(path, &body).map_err(|e| format!("writing {path}: {e}"))?;
        let manifest = RunManifest::new(
            "construct",
            flags.clone(),
            started.elapsed().as_millis() as u64,
            body.as_bytes(),
        );
        let sidecar = format!("{path}.manifest.json");
        fs::write(&sidecar, manifest.to_json_line() + "\n")
            .map_err(|e| format!("writing {sidecar}: {e}"))?;
    }

    let out = ConstructOut {
        schema: 1,
        kind: kind.into(),
        n: args.n,
        a,
        b,
        c,
        d,
        e1: counts.e1,
        e2: counts.e2,
        e3: counts.e3,
        product: product.to_string(),
        frankl_bound: bound.to_string(),
        rainbow_free: coloring.has_rainbow_triangle().is_none(),
        fully_colored: coloring.is_fully_colored(),
        coloring_compact: coloring.to_compact_string(),
        out_file: args.out.clone(),
    };
    Ok(("construct".into(), flags, json_line(&out), None))
}

fn cmd_search(args: &SearchArgs) -> Result<CmdOutput, String> {
    let symmetry: SymmetryLevel = args.symmetry.into();
    // RAINBOW_THREADS takes precedence even over an explicit --threads
    let threads = match std::env::var("RAINBOW_THREADS") {
        Ok(v) => v
            .parse::<usize>()
            .map_err(|_| format!("RAINBOW_THREADS must be a thread count, got {v:?}"))?,
        Err(_) => args.threads,
    };
    let cfg = SearchConfig {
        n: args.n,
        fully_colored: args.fully_colored,
        symmetry,
        initial_lower_bound: None,
        thread_hint: threads,
        node_limit: args.limit_nodes,
        seed_constructions: args.seed_construction,
    };
    let r = search_exact(&cfg).map_err(|e| e.to_string())?;
    let out = SearchOut {
        schema: 1,
        n: args.n,
        fully_colored: args.fully_colored,
        symmetry: match args.symmetry {
            SymmetryArg::None => "none",
            SymmetryArg::Color => "color",
            SymmetryArg::ColorAndVertex => "color-and-vertex",
        }
        .into(),
        threads,
        seeded: args.seed_construction,
        best_product: r.best_product.to_string(),
        witnesses: r.witnesses.iter().cloned().collect(),
        nodes_expanded: r.nodes_expanded,
        pruned_by_bound: r.pruned_by_bound,
        pruned_by_rainbow: r.pruned_by_rainbow,
        complete: r.complete,
    };
    let flags = vec![
        format!("--n={}", args.n),
        format!("--fully-colored={}", args.fully_colored),
        format!("--symmetry={}", out.symmetry),
        format!("--seed-construction={}", args.seed_construction),
        format!("--threads={threads}"),
        format!("--limit-nodes={:?}", args.limit_nodes),
    ];
    Ok(("search".into(), flags, json_line(&out), args.out.clone()))
}

fn cmd_check(args: &CheckArgs) -> Result<CmdOutput, String> {
    let text =
        fs::read_to_string(&args.input).map_err(|e| format!("reading {}: {e}", args.input))?;
    let coloring = Coloring::parse(&text).map_err(|e| e.to_string())?;
    let n = coloring.n();
    let (name, artifact) = match args.what {
        CheckKind::Claim1 => {
            let report: Claim1Report = check_claim1(&coloring);
            (
                "claim1",
                json_line(&CheckOut {
                    schema: 1,
                    check: "claim1".into(),
                    input: args.input.clone(),
                    n,
                    report,
                }),
            )
        }
        CheckKind::Isolation => {
            let violations = three_color_isolation(&coloring);
            let c3 = coloring.t_colored_counts()[3];
            let report = IsolationOut {
                within_matching_bound: c3 <= n / 2,
                three_colored_count: c3,
                matching_bound: n / 2,
                violations,
            };
            (
                "isolation",
                json_line(&CheckOut {
                    schema: 1,
                    check: "isolation".into(),
                    input: args.input.clone(),
                    n,
                    report,
                }),
            )
        }
        CheckKind::Diagnostics => {
            let report: DiagnosticsReport = proof_diagnostics(&coloring, args.epsilon);
            (
                "diagnostics",
                json_line(&CheckOut {
                    schema: 1,
                    check: "diagnostics".into(),
                    input: args.input.clone(),
                    n,
                    report,
                }),
            )
        }
    };
    let flags = vec![
        name.to_string(),
        format!("--in={}", args.input),
        format!("--epsilon={}", args.epsilon),
    ];
    Ok(("check".into(), flags, artifact, args.out.clone()))
}

fn cmd_sweep(args: &SweepArgs) -> Result<CmdOutput, String> {
    let mut csv = String::from("n,best_a,e1,e2,e3,product,frankl_bound,beats_frankl\n");
    for n in 2..=args.n_max.max(1) {
        let row = discrete_best(n).map_err(|e| e.to_string())?;
        writeln!(
            csv,
            "{},{},{},{},{},{},{},{}",
            row.n,
            row.best_a,
            row.counts.e1,
            row.counts.e2,
            row.counts.e3,
            row.product,
            row.frankl_bound,
            row.beats_frankl
        )
        .expect("writing to string");
    }
    Ok((
        "sweep".into(),
        vec![format!("--n-max={}", args.n_max)],
        csv,
        args.out.clone(),
    ))
}

fn cmd_inequalities(args: &InequalitiesArgs) -> Result<CmdOutput, String> {
    let violations = if args.exploratory {
        sweep_inequalities_exploratory(args.n_max)
    } else {
        sweep_inequalities(args.n_max)
    }
    .map_err(|e| e.to_string())?;
    let out = InequalitiesOut {
        schema: 1,
        n_max: args.n_max,
        domain: if args.exploratory {
            "exploratory"
        } else {
            "proof"
        }
        .into(),
        violation_count: violations.len(),
        violations,
    };
    let flags = vec![
        format!("--n-max={}", args.n_max),
        format!("--exploratory={}", args.exploratory),
    ];
    Ok((
        "inequalities".into(),
        flags,
        json_line(&out),
        args.out.clone(),
    ))
}
