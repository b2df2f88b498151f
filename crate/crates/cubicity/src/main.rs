use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use cubicity::formats::{
    model_records, parse_representation, variant_name, ConstructDoc, ExactDoc, Input, LabellingDoc, OrderingDoc,
    ParamsDoc, RepresentationDoc, TraceDoc, VerificationDoc,
};
use cubicity::gen::{random_interval_model, Dist, GenConfig};
use cubicity::search::{tightness_search, SearchConfig, SearchError};
use cubicity_core::construct::{build_alpha_from_ordering, build_best_from_ordering, build_from_ordering, Variant};
use cubicity_core::oracle::{exact_cubicity, ExactOutcome, OracleError, DEFAULT_MAX_B};
use cubicity_core::params::param_report;
use cubicity_core::{
    label_vertices, model_to_clique_ordering, normalize_unit, recognize_and_order, verify_representation,
    CliqueOrdering, ConstructError, Graph,
};

const EXIT_NOT_INTERVAL: u8 = 1;
const EXIT_VERIFY_FAILED: u8 = 2;
const EXIT_TOO_LARGE: u8 = 3;
const EXIT_BAD_INPUT: u8 = 4;

/// Unit-cube representations of interval graphs.
///
/// Graph inputs are either an edge list (`n m` then one `u v` per line) or a
/// JSON interval model (`[{"id":..,"lo":..,"hi":..}, ...]`). `-` reads stdin.
#[derive(Parser)]
#[command(name = "cubicity", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report whether the graph is an interval graph.
    Recognize { input: PathBuf },
    /// Print a consecutive ordering of the maximal cliques.
    Order {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the vertex labelling and the primary independent set.
    Label {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print claw number, independence number and the dimension bounds.
    Params {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build and verify a cube representation.
    Construct {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = VariantArg::Claw)]
        variant: VariantArg,
        /// Rescale to unit side.
        #[arg(long)]
        normalize: bool,
        /// Include the padded graph, labels and per-dimension branches.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a representation against a graph.
    Verify {
        graph: PathBuf,
        representation: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact cubicity by brute force (at most 8 vertices).
    Exact {
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_MAX_B)]
        max_b: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a random interval model.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Dist::Uniform)]
        dist: Dist,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare exact cubicity with ⌈log₂ψ⌉ on random small interval graphs.
    Search {
        #[arg(long, default_value_t = 10_000)]
        count: usize,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Also examine the stars S(2)..S(6).
        #[arg(long)]
        stars: bool,
        /// Write the (ψ, α, cub, dim) histogram as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Claw,
    Alpha,
    Best,
}

/// An error with the exit code it maps to.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure {
            code: EXIT_BAD_INPUT,
            error: e.into(),
        }
    }
}

fn fail(code: u8, error: impl Into<anyhow::Error>) -> Failure {
    Failure {
        code,
        error: error.into(),
    }
}

fn read_text(path: &Path) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_input(path: &Path) -> anyhow::Result<Input> {
    Input::parse(&read_text(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn emit(text: &str, out: Option<&Path>) -> anyhow::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            Ok(stdout.flush()?)
        }
    }
}

fn emit_json<T: serde::Serialize>(value: &T, out: Option<&Path>) -> anyhow::Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    emit(&text, out)
}

/// Models use their sweep ordering; edge lists go through recognition.
fn ordering(input: &Input, g: &Graph) -> Result<CliqueOrdering, Failure> {
    match input {
        Input::Model(m) => Ok(model_to_clique_ordering(&m.model)),
        Input::Graph(_) => recognize_and_order(g).map_err(|e| fail(EXIT_NOT_INTERVAL, e)),
    }
}

fn construct_error(e: ConstructError) -> Failure {
    match e {
        ConstructError::NotInterval(_) => fail(EXIT_NOT_INTERVAL, e),
        _ => fail(EXIT_VERIFY_FAILED, e),
    }
}

fn oracle_error(e: OracleError) -> Failure {
    fail(EXIT_TOO_LARGE, e)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Recognize { input } => {
            let input = read_input(&input)?;
            let g = input.graph();
            match recognize_and_order(&g) {
                Ok(ord) => emit_json(&serde_json::json!({ "interval": true, "n": g.n(), "k": ord.k() }), None)?,
                Err(e) => {
                    emit_json(
                        &serde_json::json!({ "interval": false, "reason": e.reason.tag() }),
                        None,
                    )?;
                    return Err(fail(EXIT_NOT_INTERVAL, e));
                }
            }
        }
        Command::Order { input, out } => {
            let input = read_input(&input)?;
            let g = input.graph();
            emit_json(&OrderingDoc::from(&ordering(&input, &g)?), out.as_deref())?;
        }
        Command::Label { input, out } => {
            let input = read_input(&input)?;
            let g = input.graph();
            let lab = label_vertices(&ordering(&input, &g)?)?;
            emit_json(&LabellingDoc::from(&lab), out.as_deref())?;
        }
        Command::Params { input, out } => {
            let input = read_input(&input)?;
            let g = input.graph();
            let ord = ordering(&input, &g)?;
            let lab = label_vertices(&ord)?;
            emit_json(&ParamsDoc::from(&param_report(&g, &ord, &lab)), out.as_deref())?;
        }
        Command::Construct {
            input,
            variant,
            normalize,
            trace,
            out,
        } => {
            let input = read_input(&input)?;
            let g = input.graph();
            let ord = ordering(&input, &g)?;
            let (rep, used, tr) = match variant {
                VariantArg::Claw => {
                    let built = build_from_ordering(&g, &ord).map_err(construct_error)?;
                    let used = if built.trace.is_some() {
                        Variant::Claw
                    } else {
                        Variant::Degenerate
                    };
                    (built.representation, used, built.trace)
                }
                VariantArg::Alpha => (
                    build_alpha_from_ordering(&g, &ord).map_err(construct_error)?,
                    Variant::Alpha,
                    None,
                ),
                VariantArg::Best => {
                    let (rep, used) = build_best_from_ordering(&g, &ord).map_err(construct_error)?;
                    (rep, used, None)
                }
            };
            let rep = if normalize { normalize_unit(&rep) } else { rep };
            let report = verify_representation(&g, &rep).map_err(|e| fail(EXIT_VERIFY_FAILED, e))?;
            let doc = ConstructDoc {
                variant: variant_name(used).to_owned(),
                normalized: normalize,
                representation: RepresentationDoc::from(&rep),
                verification: VerificationDoc::from(&report),
                trace: if trace { tr.as_ref().map(TraceDoc::from) } else { None },
            };
            emit_json(&doc, out.as_deref())?;
            if !report.ok {
                return Err(fail(
                    EXIT_VERIFY_FAILED,
                    anyhow::anyhow!("constructed representation fails verification"),
                ));
            }
        }
        Command::Verify {
            graph,
            representation,
            out,
        } => {
            let g = read_input(&graph)?.graph();
            let rep = parse_representation(&read_text(&representation)?)
                .with_context(|| format!("parsing {}", representation.display()))?;
            let report = verify_representation(&g, &rep).map_err(|e| fail(EXIT_VERIFY_FAILED, e))?;
            emit_json(&VerificationDoc::from(&report), out.as_deref())?;
            if !report.ok {
                return Err(fail(
                    EXIT_VERIFY_FAILED,
                    anyhow::anyhow!("representation does not realize the graph"),
                ));
            }
        }
        Command::Exact { input, max_b, out } => {
            let g = read_input(&input)?.graph();
            let outcome = exact_cubicity(&g, max_b).map_err(oracle_error)?;
            emit_json(&ExactDoc::new(&outcome, max_b), out.as_deref())?;
            if let ExactOutcome::Exceeded { b_max, .. } = outcome {
                return Err(fail(
                    EXIT_TOO_LARGE,
                    anyhow::anyhow!("cubicity exceeds --max-b {b_max}"),
                ));
            }
        }
        Command::Gen { n, seed, dist, out } => {
            let model = random_interval_model(GenConfig { n, seed, dist })?;
            emit_json(&model_records(&model), out.as_deref())?;
        }
        Command::Search {
            count,
            n_max,
            seed,
            stars,
            csv,
            out,
        } => {
            let cfg = SearchConfig {
                count,
                n_max,
                seed,
                inject_stars: stars,
            };
            log::info!("searching {count} graphs with n <= {n_max}, seed {seed}");
            let report = tightness_search(cfg).map_err(|e| match e {
                SearchError::Oracle(e) => oracle_error(e),
                e => fail(EXIT_TOO_LARGE, e),
            })?;
            if !report.counterexamples.is_empty() {
                log::warn!("{} graph(s) with cubicity above ⌈log₂ψ⌉", report.counterexamples.len());
            }
            if let Some(path) = csv {
                emit(&report.histogram_csv(), Some(&path))?;
            }
            emit_json(&report, out.as_deref())?;
            if !report.violations.is_empty() {
                return Err(fail(
                    EXIT_VERIFY_FAILED,
                    anyhow::anyhow!("{} bound or verification violations", report.violations.len()),
                ));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_BAD_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure { code, error }) => {
            eprintln!("error: {error:#}");
            ExitCode::from(code)
        }
    }
}
