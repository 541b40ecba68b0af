use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ga_core::bounds::{BoundChecker, BoundError, Side, TheoremId, Tolerance};
use ga_core::graph::{parse_edge_list, parse_graph6_lines, Graph, GraphError};
use ga_core::sweep::{
    exhaustive_sweep_with_rows, extremal_search, random_sweep_with_rows, SweepError,
};
use ga_core::IndexPanel;

mod output;

use output::Emitter;

const THREADS_VAR: &str = "GA_TOOLKIT_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "ga-toolkit",
    version,
    about = "Degree-based graph indices and GA index bound checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Comma-separated nonzero alpha values.
    #[arg(long, global = true, default_value = "-2,-1,-0.5,0.5,1,2", allow_hyphen_values = true, value_parser = parse_alphas)]
    alphas: Alphas,

    /// Relative tolerance for slack and tightness tests.
    #[arg(long, global = true, default_value_t = 1e-9, value_parser = parse_tolerance)]
    tolerance: f64,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Index panel for every input graph.
    Compute(InputArgs),
    /// Every bound check for every input graph.
    Check(InputArgs),
    /// Exhaustive or random soundness sweep.
    Sweep(SweepArgs),
    /// Hill-climbing search for graphs with small slack.
    Search(SearchArgs),
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Input file, or `-` for stdin.
    #[arg(long, default_value = "-")]
    input: PathBuf,

    #[arg(long, value_enum, default_value_t = InputFormat::Graph6)]
    format: InputFormat,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// Largest order in an exhaustive sweep.
    #[arg(long, conflicts_with = "random")]
    n_max: Option<usize>,

    /// Sample random connected graphs instead of enumerating.
    #[arg(long, requires_all = ["n", "p", "count"])]
    random: bool,

    #[arg(long, requires = "random")]
    n: Option<usize>,

    #[arg(long, requires = "random")]
    p: Option<f64>,

    #[arg(long, requires = "random")]
    count: Option<usize>,
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    theorem: String,

    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,

    #[arg(long, value_parser = clap::builder::ValueParser::new(|s: &str| s.parse::<Side>()))]
    side: Side,

    #[arg(long)]
    n: usize,

    #[arg(long, default_value_t = 1000)]
    iterations: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Clone, Debug)]
struct Alphas(Vec<f64>);

fn parse_alphas(s: &str) -> Result<Alphas, String> {
    let values = s
        .split(',')
        .map(|t| {
            let v: f64 = t
                .trim()
                .parse()
                .map_err(|_| format!("not a number: {t:?}"))?;
            if v == 0.0 || !v.is_finite() {
                return Err(format!("alpha must be nonzero and finite, got {t:?}"));
            }
            Ok(v)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Alphas(values))
}

fn parse_tolerance(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|_| format!("not a number: {s:?}"))?;
    Tolerance::new(v)
        .map(|t| t.value())
        .map_err(|e| e.to_string())
}

/// Failure carrying the process exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn input(message: impl Into<String>) -> Failure {
        Failure {
            code: 3,
            message: message.into(),
        }
    }

    fn violations(message: impl Into<String>) -> Failure {
        Failure {
            code: 4,
            message: message.into(),
        }
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Failure {
        Failure::usage(e.to_string())
    }
}

impl From<BoundError> for Failure {
    fn from(e: BoundError) -> Failure {
        match e {
            BoundError::Edgeless | BoundError::Disconnected { .. } => Failure::input(e.to_string()),
            other => Failure::usage(other.to_string()),
        }
    }
}

impl From<SweepError> for Failure {
    fn from(e: SweepError) -> Failure {
        match e {
            SweepError::Bound(b) => b.into(),
            other => Failure::usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Failure {
        if e.kind() == io::ErrorKind::BrokenPipe {
            // the reader went away; nothing left to report
            return Failure {
                code: 0,
                message: String::new(),
            };
        }
        Failure::usage(format!("i/o error: {e}"))
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Failure {
        match e.into_kind() {
            csv::ErrorKind::Io(io) => io.into(),
            other => Failure::usage(format!("csv error: {other:?}")),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Failure {
        if e.is_io() {
            return io::Error::from(e).into();
        }
        Failure::usage(format!("json error: {e}"))
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let threads: usize = raw.trim().parse().ok().filter(|&t| t > 0).ok_or_else(|| {
        Failure::usage(format!(
            "{THREADS_VAR} must be a positive integer, got {raw:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::usage(format!("cannot start thread pool: {e}")))
}

fn read_graphs(args: &InputArgs) -> Result<Vec<Graph>, Failure> {
    let mut text = String::new();
    if args.input.as_os_str() == "-" {
        io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(&args.input)
            .map_err(|e| Failure::usage(format!("cannot read {}: {e}", args.input.display())))?;
    }
    let graphs = match args.format {
        InputFormat::Graph6 => parse_graph6_lines(&text)?,
        InputFormat::Edgelist => vec![parse_edge_list(&text)?],
    };
    if graphs.is_empty() {
        return Err(Failure::usage("input holds no graphs"));
    }
    Ok(graphs)
}

fn compute(cli: &Cli, args: &InputArgs, out: &mut Emitter) -> Result<(), Failure> {
    let graphs = read_graphs(args)?;
    let mut records = Vec::with_capacity(graphs.len());
    for (i, g) in graphs.iter().enumerate() {
        let panel = IndexPanel::compute(g, &cli.alphas.0).map_err(|e| match e {
            ga_core::IndexError::EmptyEdgeSet => {
                Failure::input(format!("graph {}: empty edge set", i + 1))
            }
            other => Failure::usage(format!("graph {}: {other}", i + 1)),
        })?;
        records.push(output::ComputeRecord::new(i + 1, g, panel));
    }
    out.compute(&records)
}

fn check(cli: &Cli, args: &InputArgs, out: &mut Emitter) -> Result<(), Failure> {
    let graphs = read_graphs(args)?;
    let tol = Tolerance::new(cli.tolerance)?;
    let mut records = Vec::with_capacity(graphs.len());
    for (i, g) in graphs.iter().enumerate() {
        let checker = BoundChecker::new(g, tol).map_err(|e| {
            let f = Failure::from(e);
            Failure {
                message: format!("graph {}: {}", i + 1, f.message),
                ..f
            }
        })?;
        records.push(output::CheckRecord::new(
            i + 1,
            g,
            checker.all(&cli.alphas.0)?,
        ));
    }
    out.check(&records)?;

    let mut failures = Vec::new();
    for r in &records {
        for c in r.set.checks.iter().filter(|c| !c.holds) {
            failures.push(format!("graph {}: {} violated", r.index, c.theorem));
        }
        for d in r.set.dominance.iter().filter(|d| !d.holds) {
            failures.push(format!(
                "graph {}: dominance {:?} fails by {}",
                r.index, d.claim, -d.margin
            ));
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::violations(failures.join("\n")))
    }
}

fn sweep(cli: &Cli, args: &SweepArgs, out: &mut Emitter) -> Result<(), Failure> {
    let tol = Tolerance::new(cli.tolerance)?;
    let rows_wanted = cli.output == OutputFormat::Csv;
    let (report, rows) = if args.random {
        let (n, p, count) = (
            args.n.unwrap_or(0),
            args.p.unwrap_or(0.0),
            args.count.unwrap_or(0),
        );
        random_sweep_with_rows(n, p, count, cli.seed, &cli.alphas.0, tol, rows_wanted)?
    } else {
        let n_max = args
            .n_max
            .ok_or_else(|| Failure::usage("sweep needs --n-max or --random"))?;
        exhaustive_sweep_with_rows(n_max, &cli.alphas.0, tol, rows_wanted)?
    };
    out.sweep(&report, &rows)?;

    let mut problems = Vec::new();
    for v in &report.violations {
        problems.push(format!(
            "violation: {} {} on {} (slack {})",
            v.theorem, v.side, v.graph6, v.slack
        ));
    }
    for d in &report.dominance_exceptions {
        problems.push(format!(
            "dominance {:?} fails on {}",
            d.dominance.claim, d.graph6
        ));
    }
    if !args.random {
        for m in report.hard_mismatches() {
            problems.push(format!(
                "equality mismatch: {} {} on {} ({:?})",
                m.theorem, m.side, m.graph6, m.kind
            ));
        }
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(Failure::violations(problems.join("\n")))
    }
}

fn search(cli: &Cli, args: &SearchArgs, out: &mut Emitter) -> Result<(), Failure> {
    let theorem = TheoremId::parse(&args.theorem, args.alpha)?;
    let outcome = extremal_search(theorem, args.side, args.n, args.iterations, cli.seed)?;
    out.search(&outcome)?;
    let tol = Tolerance::new(cli.tolerance)?;
    let recheck = BoundChecker::new(&outcome.best.graph, tol)?.check(theorem)?;
    if recheck.holds {
        Ok(())
    } else {
        Err(Failure::violations(format!(
            "{theorem} violated by the search witness"
        )))
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    configure_threads()?;
    let stdout = io::BufWriter::new(io::stdout().lock());
    let mut out = Emitter::new(Box::new(stdout), cli.output);
    let result = match &cli.command {
        Command::Compute(args) => compute(cli, args, &mut out),
        Command::Check(args) => check(cli, args, &mut out),
        Command::Sweep(args) => sweep(cli, args, &mut out),
        Command::Search(args) => search(cli, args, &mut out),
    };
    out.flush()?;
    result
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if f.code == 0 {
                return ExitCode::SUCCESS;
            }
            let _ = writeln!(io::stderr(), "error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
