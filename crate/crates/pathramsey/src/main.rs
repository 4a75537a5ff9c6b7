use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use pathramsey::config::parse_config;
use pathramsey::experiment::{run_experiment, write_outputs};
use pathramsey::io::{self, Format};
use pathramsey::report::{certificate_json, constants_json, constants_text, ColouringJson};
use pathramsey_core::certificates::{
    arrow_exact, check_bipartite_multi, check_letzter, check_two_holes, Certificate, Mode, Verdict,
    DEFAULT_EXACT_LIMIT,
};
use pathramsey_core::constants::{constants_table, DEFAULT_TOLERANCE};
use pathramsey_core::generators::{gen_gnnp, gen_regular_simple, generate, RandomSpec};
use pathramsey_core::lower_bounds::{
    case2_colouring, classical_path_ramsey, lower_bound_formula, max_mono_path, tree_dichotomy,
};
use pathramsey_core::path::longest_mono_path;
use pathramsey_core::{Error as CoreError, Graph};
use serde_json::json;

/// Environment variable overriding the experiment output directory.
const OUT_ENV: &str = "PATHRAMSEY_OUT";

#[derive(Parser)]
#[command(
    name = "pathramsey",
    version,
    about = "Size-Ramsey experiments for paths"
)]
struct Cli {
    /// Worker threads for experiments (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Expect {
    Holds,
    Fails,
}

#[derive(Clone, Copy, ValueEnum)]
enum CertKind {
    Letzter,
    TwoHoles,
    BipartiteMulti,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    MonteCarlo,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Gnp,
    Gnnp,
    Pairing,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Edgelist,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute the numerical constants and compare with the reference values.
    Constants {
        #[arg(long)]
        json: bool,
        /// Absolute tolerance for rows compared by closeness.
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance: f64,
    },
    /// Decide G -> (P_n)_r by exhaustive search.
    Arrow {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        r: usize,
        /// Maximum number of edge-colour assignments to try.
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
        /// Write the certificate JSON here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Run a hole-based sufficient condition for arrowing.
    Certify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        kind: CertKind,
        #[arg(long)]
        n: usize,
        /// Colours (bipartite-multi only).
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
        /// Required for monte-carlo mode.
        #[arg(long)]
        seed: Option<u64>,
        /// Exact: work limit. Monte Carlo: number of samples.
        #[arg(long, default_value_t = DEFAULT_EXACT_LIMIT)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Sample a random graph.
    Gen {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        seed: u64,
        /// Pairing model: resample until the multigraph is simple.
        #[arg(long)]
        simple: bool,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run an experiment described by a JSON config file.
    Experiment {
        config: PathBuf,
        /// Output directory (default: $PATHRAMSEY_OUT or the current directory).
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Split a tree by edge deletions or into large disjoint subtrees.
    TreeClaim {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Lower-bound formula, classical values and the small-host adversary colouring.
    ColourLowerBound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Host graph; defaults to the complete graph on floor((r+2)(n-3)/2) vertices.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
}

/// Outcome of a command: `Ok(true)` when every requested check passed.
type Checked = Result<bool>;

fn emit(value: &serde_json::Value, out: Option<&Path>) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn matches_expectation(cert: &Certificate, expect: Option<Expect>) -> bool {
    match expect {
        None => true,
        Some(Expect::Holds) => cert.verdict == Verdict::Holds,
        Some(Expect::Fails) => cert.verdict == Verdict::Fails,
    }
}

fn budget_context(e: CoreError) -> anyhow::Error {
    match e {
        CoreError::Budget { what, spent } => {
            anyhow::anyhow!("budget exhausted after {spent} steps: {what}")
        }
        other => other.into(),
    }
}

fn cmd_constants(json: bool, tolerance: f64) -> Checked {
    let rows = constants_table(tolerance);
    if json {
        emit(&constants_json(&rows), None)?;
    } else {
        print!("{}", constants_text(&rows));
    }
    Ok(rows.iter().all(|r| r.pass))
}

fn cmd_arrow(
    graph: &Path,
    n: usize,
    r: usize,
    budget: u64,
    out: Option<&Path>,
    expect: Option<Expect>,
) -> Checked {
    let g = io::read_graph(graph)?;
    let cert = arrow_exact(&g, n, r, budget).map_err(budget_context)?;
    emit(&certificate_json(&cert, Some(&g)), out)?;
    Ok(matches_expectation(&cert, expect))
}

#[allow(clippy::too_many_arguments)]
fn cmd_certify(
    graph: &Path,
    kind: CertKind,
    n: usize,
    r: usize,
    mode: ModeArg,
    seed: Option<u64>,
    budget: u64,
    out: Option<&Path>,
    expect: Option<Expect>,
) -> Checked {
    let mode = match (mode, seed) {
        (ModeArg::Exact, _) => Mode::Exact,
        (ModeArg::MonteCarlo, Some(seed)) => Mode::MonteCarlo { seed },
        (ModeArg::MonteCarlo, None) => bail!("monte-carlo mode needs --seed"),
    };
    let cert = match kind {
        CertKind::Letzter => check_letzter(&io::read_graph(graph)?, n, mode, budget),
        CertKind::TwoHoles => check_two_holes(&io::read_graph(graph)?, n, mode, budget),
        CertKind::BipartiteMulti => {
            check_bipartite_multi(&io::read_bipartite(graph)?, n, r, mode, budget)
        }
    }
    .map_err(budget_context)?;
    emit(&certificate_json(&cert, None), out)?;
    Ok(matches_expectation(&cert, expect))
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    model: ModelArg,
    n: usize,
    p: Option<f64>,
    d: Option<usize>,
    seed: u64,
    simple: bool,
    format: FormatArg,
    out: Option<&Path>,
) -> Checked {
    let format = match format {
        FormatArg::Edgelist => Format::EdgeList,
        FormatArg::Json => Format::Json,
    };
    let text = match model {
        ModelArg::Gnp => {
            let p = p.context("gnp needs --p")?;
            io::graph_to_string(&generate(&RandomSpec::gnp(n, p, seed))?, format)
        }
        ModelArg::Gnnp => {
            let p = p.context("gnnp needs --p")?;
            io::bipartite_to_string(&gen_gnnp(&RandomSpec::gnnp(n, p, seed))?, format)
        }
        ModelArg::Pairing => {
            let d = d.context("pairing needs --d")?;
            let spec = RandomSpec::pairing(n, d, seed);
            let g = if simple {
                gen_regular_simple(&spec, 1_000_000).map_err(budget_context)?
            } else {
                generate(&spec)?
            };
            io::graph_to_string(&g, format)
        }
    };
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(true)
}

fn cmd_experiment(config: &Path, out_dir: Option<PathBuf>, jobs: usize) -> Checked {
    let text =
        fs::read_to_string(config).with_context(|| format!("reading {}", config.display()))?;
    let cfg = parse_config(&text).with_context(|| format!("in {}", config.display()))?;
    let dir = out_dir
        .or_else(|| std::env::var_os(OUT_ENV).map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."));
    let out = run_experiment(&cfg, jobs)?;
    let (csv, summary) = write_outputs(&cfg, &out, &dir)?;
    println!("{}\n{}", csv.display(), summary.display());
    Ok(true)
}

fn cmd_tree_claim(graph: &Path, k: usize, n: usize) -> Checked {
    let t = io::read_graph(graph)?;
    let out = tree_dichotomy(&t, k, n)?;
    let verified = out.verify(&t, k, n);
    emit(
        &json!({ "k": k, "n": n, "result": out, "verified": verified }),
        None,
    )?;
    Ok(verified)
}

fn cmd_colour_lower_bound(n: usize, r: usize, graph: Option<&Path>) -> Checked {
    if n < 3 || r == 0 {
        bail!("need n >= 3 and r >= 1");
    }
    let formula = lower_bound_formula(n as u64, r as u64);
    let classical = classical_path_ramsey(n as u64, r as u64)?;
    let g = match graph {
        Some(path) => io::read_graph(path)?,
        None => Graph::complete((r + 2) * (n - 3) / 2),
    };
    let adv = case2_colouring(&g, n, r)?;
    let (longest, exact) = match max_mono_path(&g, &adv.colouring) {
        Ok(len) => (len, true),
        Err(CoreError::Budget { .. }) => {
            let mut best = 0;
            for c in 0..adv.colouring.colours() {
                best = best.max(longest_mono_path(&g, &adv.colouring, c, false)?.order());
            }
            (best, false)
        }
        Err(e) => return Err(e.into()),
    };
    let ok = longest < n;
    emit(
        &json!({
            "n": n,
            "r": r,
            "lower_bound": { "value": formula.to_string(), "approx": formula.to_f64() },
            "classical_ramsey": classical,
            "adversary": {
                "colours": r + 1,
                "u": adv.u,
                "w": adv.w,
                "colouring": ColouringJson::new(&g, &adv.colouring),
                "longest_mono_path": longest,
                "exact": exact,
                "no_mono_path": ok,
            },
        }),
        None,
    )?;
    Ok(ok)
}

fn run(cli: Cli) -> Checked {
    match cli.command {
        Command::Constants { json, tolerance } => cmd_constants(json, tolerance),
        Command::Arrow {
            graph,
            n,
            r,
            budget,
            out,
            expect,
        } => cmd_arrow(&graph, n, r, budget, out.as_deref(), expect),
        Command::Certify {
            graph,
            kind,
            n,
            r,
            mode,
            seed,
            budget,
            out,
            expect,
        } => cmd_certify(
            &graph,
            kind,
            n,
            r,
            mode,
            seed,
            budget,
            out.as_deref(),
            expect,
        ),
        Command::Gen {
            model,
            n,
            p,
            d,
            seed,
            simple,
            format,
            out,
        } => cmd_gen(model, n, p, d, seed, simple, format, out.as_deref()),
        Command::Experiment { config, out_dir } => cmd_experiment(&config, out_dir, cli.jobs),
        Command::TreeClaim { graph, k, n } => cmd_tree_claim(&graph, k, n),
        Command::ColourLowerBound { n, r, graph } => cmd_colour_lower_bound(n, r, graph.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
