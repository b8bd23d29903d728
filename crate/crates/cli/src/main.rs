use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cocrit::bounds;
use cocrit::cocritical::{audit_all_optima, audit_structure, is_kt_saturated, verify_cocritical};
use cocrit::constructions::{build, build_j, JParams};
use cocrit::engine::{enumerate_critical, find_critical, max_red_critical};
use cocrit::report::{
    coloring_lines, render_text, ArrowJson, AuditJson, Envelope, GraphSummary, Meta, Outcome,
    VerifyJson,
};
use cocrit::search::{
    enumerate_small_cocritical, local_search_cocritical, random_maximal_ktfree, LocalSearchBudget,
    RngSeed,
};
use cocrit::{
    arrows, emit_graph6, is_critical, parse_graph6, props, Graph, PairParams, ParamError,
    SearchBudget, SearchStatus,
};

const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(
    name = "cocrit",
    version,
    about = "Arrowing and co-critical graphs for (K_t, K_{1,k})"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Output format; text is rendered from the JSON report.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Omit run metadata (timestamps, runtime) for reproducible output.
    #[arg(long, global = true)]
    no_meta: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Node budget for each individual search.
    #[arg(long, env = "COCRIT_BUDGET_NODES", global = true)]
    nodes: Option<u64>,
    /// Wall-clock budget in seconds for each individual search.
    #[arg(long, global = true)]
    seconds: Option<u64>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Mode {
    Exists,
    Count,
    Enumerate,
    MaxRed,
}

#[derive(Args, Debug)]
struct Pair {
    #[arg(long)]
    t: usize,
    #[arg(long)]
    k: usize,
}

#[derive(Args, Debug)]
struct Input {
    /// graph6 file; standard input when absent.
    #[arg(long = "in")]
    input: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the sparse co-critical graph and its critical coloring.
    Construct {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        n: usize,
        /// Also write graph.g6, sigma.txt and plan.json into this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Decide whether the input graph arrows (K_t, K_{1,k}).
    Arrows {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        input: Input,
    },
    /// Search critical colorings of the input graph.
    Colorings {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Stop after this many colorings (count and enumerate modes).
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Decide whether the input graph is co-critical.
    Verify {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        input: Input,
        /// Attach a structural audit of a max-red coloring.
        #[arg(long)]
        audit: bool,
    },
    /// Audit the structure of a max-red critical coloring of the input graph.
    Audit {
        #[command(flatten)]
        pair: Pair,
        #[command(flatten)]
        input: Input,
        /// Audit every max-red coloring instead of the first one found.
        #[arg(long)]
        all_optima: bool,
        /// Cap on the number of optima audited with --all-optima.
        #[arg(long, default_value_t = 1000)]
        limit: usize,
    },
    /// Check K_t-saturation of the input, or generate a random saturated graph.
    Saturated {
        #[arg(long)]
        t: usize,
        #[command(flatten)]
        input: Input,
        /// Generate a random K_t-saturated graph on this many vertices.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Build the two-hub graph J with independent sets of the given sizes.
    BuildJ {
        #[arg(long)]
        a: usize,
        #[arg(long)]
        b: usize,
        #[arg(long)]
        c: usize,
    },
    /// Local search for sparse co-critical graphs.
    Search {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of moves.
        #[arg(long, default_value_t = 100)]
        budget: usize,
    },
    /// Enumerate all co-critical graphs on n <= 8 vertices up to isomorphism.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        pair: Pair,
    },
}

#[derive(Debug)]
enum CliError {
    Param(ParamError),
    Input(String),
}

impl From<ParamError> for CliError {
    fn from(e: ParamError) -> Self {
        CliError::Param(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Param(e @ ParamError::OutOfRange { name, .. }) => write!(f, "--{name}: {e}"),
            CliError::Param(e) => write!(f, "{e}"),
            CliError::Input(msg) => write!(f, "{msg}"),
        }
    }
}

type Res = Result<(Outcome, &'static str, Value), CliError>;

fn budget(g: &Global) -> Result<SearchBudget, CliError> {
    let nodes = g.nodes.unwrap_or(u64::MAX);
    let wall = g
        .seconds
        .map_or(SearchBudget::unlimited().wall_limit(), Duration::from_secs);
    if nodes == 0 {
        return Err(ParamError::range("nodes", 0, ">= 1").into());
    }
    if wall.is_zero() {
        return Err(ParamError::range("seconds", 0, ">= 1").into());
    }
    Ok(SearchBudget::new(nodes, wall)?)
}

fn read_graph(input: &Input) -> Result<Graph, CliError> {
    let text = match &input.input {
        Some(path) => fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("--in {}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
            s
        }
    };
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| CliError::Input("no graph6 line in input".into()))?;
    parse_graph6(line).map_err(|e| CliError::Input(format!("graph6: {e}")))
}

fn pair(p: &Pair) -> Result<PairParams, CliError> {
    Ok(PairParams::new(p.t, p.k)?)
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<(), CliError> {
    fs::write(dir.join(name), contents)
        .map_err(|e| CliError::Input(format!("--out-dir {}: {e}", dir.display())))
}

fn construct(t: usize, k: usize, n: usize, out_dir: Option<&Path>) -> Res {
    let c = build(t, k, n)?;
    let p = PairParams::new(t, k)?;
    let closed_form = bounds::upper_edge_count(t, k, n)?;
    let sigma_critical = is_critical(&c.graph, &c.sigma, p).expect("sigma lives on its graph");
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir)
            .map_err(|e| CliError::Input(format!("--out-dir {}: {e}", dir.display())))?;
        write_file(dir, "graph.g6", &format!("{}\n", emit_graph6(&c.graph)))?;
        write_file(dir, "sigma.txt", &c.sigma.to_text())?;
        let plan = serde_json::to_string_pretty(&c.plan).expect("serializable");
        write_file(dir, "plan.json", &format!("{plan}\n"))?;
    }
    let body = json!({
        "t": t, "k": k,
        "graph": to_value(&GraphSummary::of(&c.graph)),
        "closed_form_edges": closed_form,
        "sigma_critical": sigma_critical,
        "sigma": coloring_lines(&c.sigma),
        "plan": to_value(&c.plan),
    });
    let ok = sigma_critical && closed_form == c.graph.edge_count();
    Ok((
        if ok {
            Outcome::Success
        } else {
            Outcome::Refuted
        },
        "construct",
        body,
    ))
}

fn run(cli: &Cli) -> Res {
    let g = &cli.global;
    match &cli.command {
        Command::Construct { pair, n, out_dir } => {
            construct(pair.t, pair.k, *n, out_dir.as_deref())
        }
        Command::Arrows { pair: pp, input } => {
            let p = pair(pp)?;
            let b = budget(g)?;
            let graph = read_graph(input)?;
            let v = arrows(&graph, p, b);
            let body = json!({
                "t": p.t(), "k": p.k(),
                "graph": to_value(&GraphSummary::of(&graph)),
                "arrows": to_value(&ArrowJson::of(&v)),
            });
            Ok((ArrowJson::outcome(&v), "arrows", body))
        }
        Command::Colorings {
            pair: pp,
            input,
            mode,
            limit,
        } => {
            let p = pair(pp)?;
            let b = budget(g)?;
            if *limit == Some(0) {
                return Err(ParamError::range("limit", 0, ">= 1").into());
            }
            let graph = read_graph(input)?;
            let mut body = json!({
                "t": p.t(), "k": p.k(),
                "graph": to_value(&GraphSummary::of(&graph)),
                "mode": format!("{mode:?}").to_lowercase(),
            });
            let outcome = match mode {
                Mode::Exists | Mode::MaxRed => {
                    let out = if *mode == Mode::Exists {
                        find_critical(&graph, p, b)
                    } else {
                        max_red_critical(&graph, p, b)
                    };
                    let (status, outcome) = match &out.status {
                        SearchStatus::Found(_) => ("found", Outcome::Success),
                        SearchStatus::NoneExists => ("none_exists", Outcome::Success),
                        SearchStatus::Exhausted => ("exhausted", Outcome::Unknown),
                    };
                    body["status"] = json!(status);
                    body["nodes"] = json!(out.nodes_explored);
                    if let Some(c) = out.witness() {
                        body["red_edges"] = json!(c.red_count());
                        body["coloring"] = json!(coloring_lines(c));
                    }
                    outcome
                }
                Mode::Count | Mode::Enumerate => {
                    let e = enumerate_critical(&graph, p, limit.unwrap_or(usize::MAX), b);
                    body["count"] = json!(e.colorings.len());
                    body["complete"] = json!(e.complete);
                    body["hit_limit"] = json!(e.hit_limit);
                    body["nodes"] = json!(e.nodes_explored);
                    if *mode == Mode::Enumerate {
                        body["colorings"] =
                            json!(e.colorings.iter().map(coloring_lines).collect::<Vec<_>>());
                    }
                    if e.complete || e.hit_limit {
                        Outcome::Success
                    } else {
                        Outcome::Unknown
                    }
                }
            };
            Ok((outcome, "colorings", body))
        }
        Command::Verify {
            pair: pp,
            input,
            audit,
        } => {
            let p = pair(pp)?;
            let b = budget(g)?;
            let graph = read_graph(input)?;
            let report = verify_cocritical(&graph, p, b);
            let a = audit.then(|| audit_structure(&graph, p, b));
            let body = to_value(&VerifyJson::of(&graph, &report, a.as_ref()));
            Ok((Outcome::of_verdict(&report.verdict), "verify", body))
        }
        Command::Audit {
            pair: pp,
            input,
            all_optima,
            limit,
        } => {
            let p = pair(pp)?;
            let b = budget(g)?;
            let graph = read_graph(input)?;
            let mut body = json!({
                "t": p.t(), "k": p.k(),
                "graph": to_value(&GraphSummary::of(&graph)),
            });
            if *all_optima {
                if *limit == 0 {
                    return Err(ParamError::range("limit", 0, ">= 1").into());
                }
                let Some(all) = audit_all_optima(&graph, p, *limit, b) else {
                    body["status"] = json!("unknown_or_no_critical_coloring");
                    return Ok((Outcome::Unknown, "audit", body));
                };
                let pass = all.iter().all(|(_, a)| a.all_pass());
                body["status"] = json!("audited");
                body["optima"] = json!(all.len());
                body["all_pass"] = json!(pass);
                body["audits"] = json!(all
                    .iter()
                    .map(|(c, a)| json!({
                        "coloring": coloring_lines(c),
                        "fields": to_value(a),
                        "all_pass": a.all_pass(),
                    }))
                    .collect::<Vec<_>>());
                let outcome = if pass {
                    Outcome::Success
                } else {
                    Outcome::Refuted
                };
                Ok((outcome, "audit", body))
            } else {
                let a = audit_structure(&graph, p, b);
                body["audit"] = to_value(&AuditJson::of(&a));
                Ok((AuditJson::outcome(&a), "audit", body))
            }
        }
        Command::Saturated {
            t,
            input,
            random,
            seed,
        } => {
            if *t < 3 {
                return Err(ParamError::range("t", *t, ">= 3").into());
            }
            let graph = match random {
                Some(n) => random_maximal_ktfree(*n, *t, RngSeed(*seed))?,
                None => read_graph(input)?,
            };
            let saturated = is_kt_saturated(&graph, *t);
            let body = json!({
                "t": t,
                "graph": to_value(&GraphSummary::of(&graph)),
                "saturated": saturated,
                "min_degree": graph.min_degree(),
                "max_degree": graph.max_degree(),
                "hajnal_ok": props::hajnal_dichotomy(&graph, *t),
            });
            let outcome = if saturated {
                Outcome::Success
            } else {
                Outcome::Refuted
            };
            Ok((outcome, "saturated", body))
        }
        Command::BuildJ { a, b, c } => {
            let jp = JParams::new(*a, *b, *c)?;
            let graph = build_j(jp);
            let formula = bounds::j_edge_count(*a, *b, *c);
            let body = json!({
                "a": a, "b": b, "c": c,
                "graph": to_value(&GraphSummary::of(&graph)),
                "formula_edges": formula,
                "saturated": is_kt_saturated(&graph, 3),
            });
            let outcome = if formula == graph.edge_count() {
                Outcome::Success
            } else {
                Outcome::Refuted
            };
            Ok((outcome, "build-j", body))
        }
        Command::Search {
            pair: pp,
            n,
            seed,
            budget: moves,
        } => {
            let p = pair(pp)?;
            let per_check = budget(g)?;
            let lb = LocalSearchBudget {
                moves: *moves,
                per_check,
                wall_limit: per_check.wall_limit(),
            };
            let r = local_search_cocritical(p, *n, RngSeed(*seed), lb)?;
            let body = json!({
                "t": p.t(), "k": p.k(), "n": n, "seed": seed,
                "start": to_value(&GraphSummary::of(&r.start)),
                "best": to_value(&GraphSummary::of(&r.best)),
                "verdict": r.verdict.label(),
                "moves_tried": r.moves_tried,
                "moves_accepted": r.moves_accepted,
            });
            Ok((Outcome::of_verdict(&r.verdict), "search", body))
        }
        Command::Enumerate { n, pair: pp } => {
            let p = pair(pp)?;
            let r = enumerate_small_cocritical(*n, p)?;
            let body = json!({
                "t": p.t(), "k": p.k(), "n": n,
                "count": r.graphs.len(),
                "min_edges": r.min_edges(),
                "candidates": r.candidates,
                "classes": r.classes,
                "graphs": r.graphs.iter().map(emit_graph6).collect::<Vec<_>>(),
            });
            Ok((Outcome::Success, "enumerate", body))
        }
    }
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
    if let Some(jobs) = cli.global.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs: jobs = 0 is out of range; expected >= 1");
            return ExitCode::from(EXIT_USAGE);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("thread pool is configured once");
    }
    let started = Instant::now();
    let (outcome, command, body) = match run(&cli) {
        Ok(x) => x,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let mut env = Envelope::new(command, outcome, body);
    if !cli.global.no_meta {
        env.meta = Some(Meta::now(started.elapsed()));
    }
    let value = env.to_value();
    let text = match cli.global.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&value).expect("json")),
        Format::Text => render_text(&value),
    };
    let _ = io::stdout().lock().write_all(text.as_bytes());
    ExitCode::from(outcome.exit_code() as u8)
}
