//! `l3color`: list-3-coloring for (P_t, SDK_s)-free graphs.
//!
//! Exit codes: 0 colored, 1 uncolorable, 2 not in class, 64 usage,
//! 65 malformed input, 66 unreadable input, 70 oracle disagreement,
//! 73 unwritable output.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use l3color::bench::{self, Family};
use l3color::generators::{self, families, gen_lists, gen_promise_instance, ListMode};
use l3color::io::{parse_graph, parse_lists, write_graph, write_lists};
use l3color::oracle::{brute_force_color, contains_induced, verify_certificate, Pattern};
use l3color::solver::{solve_report, OutcomeJson, SolveOutcome, SolverConfig, Status};
use l3color::{check_coloring, Certificate, Graph, ListAssignment};

/// Largest graph `check` and `oracle` accept.
const MAX_ORACLE_VERTICES: usize = 24;

const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;
const EXIT_NO_INPUT: u8 = 66;
const EXIT_DISAGREE: u8 = 70;
const EXIT_CANT_CREATE: u8 = 73;

#[derive(Debug)]
struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Parser)]
#[command(name = "l3color", version, about = "List-3-coloring for (P_t, SDK_s)-free graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Copy)]
struct ClassArgs {
    /// Forbidden induced path length.
    #[arg(long)]
    t: usize,
    /// Forbidden subdivided star size.
    #[arg(long)]
    s: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance and print the outcome JSON.
    Solve {
        graph: PathBuf,
        lists: PathBuf,
        #[command(flatten)]
        class: ClassArgs,
        /// Assume class membership: skip certificate checks.
        #[arg(long)]
        promise: bool,
        /// Write the dominating-set traces (one per component) as JSON.
        #[arg(long, value_name = "FILE")]
        trace: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Report induced P_t, SDK_s and K4 copies (small graphs only).
    Check {
        graph: PathBuf,
        #[command(flatten)]
        class: ClassArgs,
    },
    /// Generate a graph file and a lists file.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        #[arg(long)]
        n: usize,
        /// Edge probability for `random`.
        #[arg(long)]
        p: Option<f64>,
        /// Class parameters for `promise`.
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long, default_value_t = 200)]
        attempts: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value_t = ListKind::Full)]
        lists: ListKind,
        /// Seed for random lists; defaults to `--seed`.
        #[arg(long)]
        lists_seed: Option<u64>,
        #[arg(long, value_name = "FILE")]
        graph_out: PathBuf,
        #[arg(long, value_name = "FILE")]
        lists_out: PathBuf,
    },
    /// Time the pipeline phases on a graph family and write CSV.
    Bench {
        #[arg(long, value_enum)]
        family: BenchFamily,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        promise: bool,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Compare the solver against brute force.
    Oracle {
        graph: PathBuf,
        lists: PathBuf,
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long)]
        promise: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Random,
    Promise,
    Path,
    Cycle,
    Grid,
    Complete,
}

#[derive(Clone, Copy, ValueEnum)]
enum ListKind {
    Full,
    Random,
    Adversarial,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchFamily {
    Path,
    Grid,
    Promise,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("l3color: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(command: Command) -> CliResult<u8> {
    match command {
        Command::Solve {
            graph,
            lists,
            class,
            promise,
            trace,
            out,
            jobs,
        } => cmd_solve(&graph, &lists, class, promise, trace.as_deref(), out.as_deref(), jobs),
        Command::Check { graph, class } => cmd_check(&graph, class),
        Command::Gen {
            kind,
            n,
            p,
            t,
            s,
            attempts,
            seed,
            lists,
            lists_seed,
            graph_out,
            lists_out,
        } => {
            let graph = gen_graph(kind, n, p, t, s, attempts, seed)?;
            let mode = match lists {
                ListKind::Full => ListMode::Full,
                ListKind::Random => ListMode::Random(require_seed(lists_seed.or(seed), "random lists")?),
                ListKind::Adversarial => {
                    ListMode::Adversarial(require_seed(lists_seed.or(seed), "adversarial lists")?)
                }
            };
            let l = gen_lists(&graph, mode);
            write_file(&graph_out, &write_graph(&graph))?;
            write_file(&lists_out, &(write_lists(&l) + "\n"))?;
            Ok(0)
        }
        Command::Bench {
            family,
            sizes,
            class,
            reps,
            seed,
            promise,
            out,
        } => {
            let family = match family {
                BenchFamily::Path => Family::Path,
                BenchFamily::Grid => Family::Grid,
                BenchFamily::Promise => Family::Promise,
            };
            if matches!(family, Family::Promise) {
                require_seed(seed, "the promise family")?;
            }
            let cfg = config(class, promise, 1)?;
            let rows = bench::run(family, &sizes, &cfg, reps, seed)
                .map_err(|e| CliError::new(EXIT_DATA, e.to_string()))?;
            emit(out.as_deref(), &bench::to_csv(&rows))?;
            Ok(0)
        }
        Command::Oracle {
            graph,
            lists,
            class,
            promise,
        } => cmd_oracle(&graph, &lists, class, promise),
    }
}

fn require_seed(seed: Option<u64>, what: &str) -> CliResult<u64> {
    seed.ok_or_else(|| CliError::new(EXIT_USAGE, format!("{what}: an explicit --seed is required")))
}

fn config(class: ClassArgs, promise: bool, jobs: usize) -> CliResult<SolverConfig> {
    if class.t == 0 || class.s == 0 {
        return Err(CliError::new(EXIT_USAGE, "--t and --s must be at least 1"));
    }
    if jobs == 0 {
        return Err(CliError::new(EXIT_USAGE, "--jobs must be at least 1"));
    }
    let mut cfg = SolverConfig::new(class.t, class.s);
    cfg.robust = !promise;
    cfg.jobs = jobs;
    Ok(cfg)
}

fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path)
        .map_err(|e| CliError::new(EXIT_NO_INPUT, format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text)
        .map_err(|e| CliError::new(EXIT_CANT_CREATE, format!("cannot write {}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(path) => write_file(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_graph(path: &Path) -> CliResult<Graph> {
    parse_graph(&read_file(path)?)
        .map_err(|e| CliError::new(EXIT_DATA, format!("{}: {e}", path.display())))
}

fn load_lists(path: &Path, n: usize) -> CliResult<ListAssignment> {
    parse_lists(&read_file(path)?, n)
        .map_err(|e| CliError::new(EXIT_DATA, format!("{}: {e}", path.display())))
}

fn guard_size(g: &Graph) -> CliResult<()> {
    if g.n() > MAX_ORACLE_VERTICES {
        return Err(CliError::new(
            EXIT_USAGE,
            format!(
                "graph has {} vertices; brute-force checks are limited to {MAX_ORACLE_VERTICES}",
                g.n()
            ),
        ));
    }
    Ok(())
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable") + "\n"
}

fn exit_code(outcome: &SolveOutcome) -> u8 {
    match outcome {
        SolveOutcome::Colored(_) => 0,
        SolveOutcome::Uncolorable { .. } => 1,
        SolveOutcome::NotInClass(_) => 2,
    }
}

fn cmd_solve(
    graph: &Path,
    lists: &Path,
    class: ClassArgs,
    promise: bool,
    trace: Option<&Path>,
    out: Option<&Path>,
    jobs: usize,
) -> CliResult<u8> {
    let g = load_graph(graph)?;
    let l = load_lists(lists, g.n())?;
    let mut cfg = config(class, promise, jobs)?;
    cfg.trace = trace.is_some();
    let report = solve_report(&g, &l, &cfg).map_err(|e| CliError::new(EXIT_DATA, e.to_string()))?;
    if let Some(path) = trace {
        write_file(path, &to_json(&report.traces))?;
    }
    emit(out, &to_json(&OutcomeJson::from(&report.outcome)))?;
    Ok(exit_code(&report.outcome))
}

#[derive(Serialize)]
struct CheckReport {
    n: usize,
    t: usize,
    s: usize,
    induced_path: Option<Vec<usize>>,
    sdk: Option<Certificate>,
    k4: Option<Vec<usize>>,
}

fn cmd_check(graph: &Path, class: ClassArgs) -> CliResult<u8> {
    let g = load_graph(graph)?;
    guard_size(&g)?;
    let report = CheckReport {
        n: g.n(),
        t: class.t,
        s: class.s,
        induced_path: contains_induced(&g, Pattern::Path(class.t)).map(|c| c.vertices()),
        sdk: contains_induced(&g, Pattern::Sdk(class.s)),
        k4: contains_induced(&g, Pattern::K4).map(|c| c.vertices()),
    };
    print!("{}", to_json(&report));
    Ok(0)
}

#[derive(Serialize)]
struct OracleVerdict {
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    coloring: Option<std::collections::BTreeMap<usize, u8>>,
}

#[derive(Serialize)]
struct OracleReport {
    solver: OutcomeJson,
    oracle: OracleVerdict,
    verdict: &'static str,
}

fn cmd_oracle(graph: &Path, lists: &Path, class: ClassArgs, promise: bool) -> CliResult<u8> {
    let g = load_graph(graph)?;
    guard_size(&g)?;
    let l = load_lists(lists, g.n())?;
    let cfg = config(class, promise, 1)?;
    let outcome = solve_report(&g, &l, &cfg)
        .map_err(|e| CliError::new(EXIT_DATA, e.to_string()))?
        .outcome;
    let truth = brute_force_color(&g, &l);
    let agree = agrees(&g, &l, &outcome, truth.is_some(), class);
    let report = OracleReport {
        solver: OutcomeJson::from(&outcome),
        oracle: OracleVerdict {
            status: if truth.is_some() {
                Status::Colored
            } else {
                Status::Uncolorable
            },
            coloring: truth.map(|f| f.as_slice().iter().copied().enumerate().collect()),
        },
        verdict: if agree { "AGREE" } else { "DISAGREE" },
    };
    let text = to_json(&report);
    print!("{text}");
    if agree {
        Ok(0)
    } else {
        eprint!("{text}");
        Ok(EXIT_DISAGREE)
    }
}

/// A certificate agrees with any brute-force verdict as long as it verifies:
/// it makes no claim about colorability.
fn agrees(g: &Graph, l: &ListAssignment, outcome: &SolveOutcome, colorable: bool, class: ClassArgs) -> bool {
    match outcome {
        SolveOutcome::Colored(f) => colorable && check_coloring(g, l, f),
        SolveOutcome::Uncolorable { .. } => !colorable,
        SolveOutcome::NotInClass(cert) => verify_certificate(g, cert, class.t, class.s),
    }
}

fn gen_graph(
    kind: GenKind,
    n: usize,
    p: Option<f64>,
    t: Option<usize>,
    s: Option<usize>,
    attempts: usize,
    seed: Option<u64>,
) -> CliResult<Graph> {
    Ok(match kind {
        GenKind::Random => {
            let p = p.ok_or_else(|| CliError::new(EXIT_USAGE, "random graphs need --p"))?;
            if !(0.0..=1.0).contains(&p) {
                return Err(CliError::new(EXIT_USAGE, "--p must lie in [0, 1]"));
            }
            generators::gen_random_graph(n, p, require_seed(seed, "random graphs")?)
        }
        GenKind::Promise => {
            let (t, s) = t
                .zip(s)
                .ok_or_else(|| CliError::new(EXIT_USAGE, "promise instances need --t and --s"))?;
            let seed = require_seed(seed, "promise instances")?;
            gen_promise_instance(n, t, s, seed, attempts)
                .map_err(|e| CliError::new(EXIT_DATA, e.to_string()))?
                .graph()
                .clone()
        }
        GenKind::Path => families::path(n),
        GenKind::Cycle => {
            if n < 3 {
                return Err(CliError::new(EXIT_USAGE, "cycles need --n >= 3"));
            }
            families::cycle(n)
        }
        GenKind::Grid => families::grid_near(n),
        GenKind::Complete => families::complete(n),
    })
}
