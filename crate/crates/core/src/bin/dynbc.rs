//! Command-line front end: replay experiments, vertex-diameter bounds, exact
//! scores and graph generation.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use dynbc::bench::{
    edges_as_events, load_edge_list, run_experiment, write_edge_list, ExperimentConfig, Format,
    LoadedGraph, OutputFormat, ReportWriter, ScenarioKind, ScenarioSpec,
};
use dynbc::graph::{assign_weights, generate, Model, WeightDist};
use dynbc::vd::{vd_lower_bound_sampled, vd_ub_component_size};
use dynbc::{brandes_exact, vd_upper_bound, Error, Mode, ReplacePolicy, Result, SamplingParams};

#[derive(Parser)]
#[command(name = "dynbc", version, about = "Approximate betweenness centrality on dynamic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Replay a dynamic scenario and report timings and errors per run.
    Run(RunArgs),
    /// Vertex-diameter lower bound, linear-time upper bound and component bound.
    VdBounds(VdArgs),
    /// Exact betweenness of every node.
    Exact(ExactArgs),
    /// Write a generated graph as an edge list.
    Generate(GenerateArgs),
}

#[derive(Args)]
struct GraphArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, default_value = "plain")]
    format: Format,
    #[arg(long)]
    directed: bool,
    #[arg(long)]
    weighted: bool,
}

impl GraphArgs {
    fn load(&self) -> Result<LoadedGraph> {
        load_edge_list(&self.graph, self.format, self.directed, self.weighted)
    }

    fn name(&self) -> String {
        self.graph.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
    }
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Defaults to the fully dynamic mode matching the graph type.
    #[arg(long)]
    mode: Option<Mode>,
    #[arg(long, default_value_t = 0.1)]
    epsilon: f64,
    #[arg(long, default_value_t = 0.1)]
    delta: f64,
    #[arg(long, default_value = "random")]
    scenario: ScenarioKind,
    /// Number of prepared events; defaults to the largest batch size.
    #[arg(long)]
    x: Option<usize>,
    #[arg(long, value_delimiter = ',', default_value = "1,16,1024")]
    batch_sizes: Vec<usize>,
    #[arg(long, default_value_t = 10)]
    runs: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Compare with exact scores (skipped above --exact-node-limit nodes).
    #[arg(long)]
    with_exact: bool,
    #[arg(long, default_value_t = dynbc::bench::experiment::DEFAULT_EXACT_NODE_LIMIT)]
    exact_node_limit: usize,
    /// Replace every sampled path on every batch in fully dynamic modes.
    #[arg(long)]
    always_resample: bool,
    #[arg(long, default_value = "csv")]
    output_format: OutputFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VdArgs {
    #[command(flatten)]
    graph: GraphArgs,
    /// Sources used for the lower bound.
    #[arg(long, default_value_t = 16)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct ExactArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GenerateArgs {
    /// path, cycle, star, dm (Dorogovtsev-Mendes) or er (Erdős–Rényi).
    #[arg(long)]
    model: String,
    #[arg(long)]
    n: usize,
    /// Edge probability for er.
    #[arg(long, default_value_t = 0.01)]
    p: f64,
    #[arg(long)]
    directed: bool,
    /// `uniform:LOW:HIGH` or `int:LOW:HIGH`; unweighted when absent.
    #[arg(long)]
    weights: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn output(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(args: RunArgs) -> Result<()> {
    let loaded = args.graph.load()?;
    let g = &loaded.graph;
    let mode = args.mode.unwrap_or_else(|| Mode::for_graph(g, false));
    let x = args.x.unwrap_or_else(|| args.batch_sizes.iter().copied().max().unwrap_or(1));
    let mut spec = ScenarioSpec::new(args.scenario, x, args.batch_sizes, args.seed);
    spec.runs = args.runs;
    let mut cfg = ExperimentConfig::new(spec, SamplingParams::new(args.epsilon, args.delta, args.seed)?, mode);
    cfg.with_exact = args.with_exact;
    cfg.exact_node_limit = args.exact_node_limit;
    if args.always_resample {
        cfg.policy = ReplacePolicy::Always;
    }
    if cfg.with_exact && g.n() > cfg.exact_node_limit {
        eprintln!("graph has {} nodes; exact comparison disabled", g.n());
    }
    let events = if args.graph.format == Format::Temporal { loaded.events.clone() } else { edges_as_events(g) };
    let mut writer = ReportWriter::new(output(&args.out)?, args.output_format);
    run_experiment(&args.graph.name(), g, &events, &cfg, |row| writer.write(&row))
}

fn vd_bounds(args: VdArgs) -> Result<()> {
    let g = args.graph.load()?.graph;
    let lower = vd_lower_bound_sampled(&g, args.samples, args.seed)?;
    let upper = vd_upper_bound(&g);
    println!("nodes\t{}", g.n());
    println!("edges\t{}", g.m());
    println!("lower\t{lower}");
    println!("upper\t{} ({})", upper.value, upper.class);
    println!("component\t{}", vd_ub_component_size(&g));
    Ok(())
}

fn exact(args: ExactArgs) -> Result<()> {
    let loaded = args.graph.load()?;
    let scores = brandes_exact(&loaded.graph)?;
    let mut out = output(&args.out)?;
    for (v, label) in loaded.labels.iter().enumerate() {
        writeln!(out, "{label}\t{}", scores[v])?;
    }
    out.flush()?;
    Ok(())
}

fn parse_weights(spec: &str) -> Result<WeightDist> {
    let bad = || Error::InvalidParams(format!("bad weight spec {spec:?}"));
    let parts: Vec<&str> = spec.split(':').collect();
    let [kind, low, high] = parts[..] else { return Err(bad()) };
    match kind {
        "uniform" => Ok(WeightDist::Uniform {
            low: low.parse().map_err(|_| bad())?,
            high: high.parse().map_err(|_| bad())?,
        }),
        "int" => Ok(WeightDist::Integer {
            low: low.parse().map_err(|_| bad())?,
            high: high.parse().map_err(|_| bad())?,
        }),
        _ => Err(bad()),
    }
}

fn generate_cmd(args: GenerateArgs) -> Result<()> {
    let n = args.n;
    let model = match args.model.to_ascii_lowercase().as_str() {
        "path" => Model::Path { n },
        "cycle" => Model::Cycle { n },
        "star" => Model::Star { n },
        "dm" => Model::DorogovtsevMendes { n },
        "er" => Model::ErdosRenyi { n, p: args.p },
        other => return Err(Error::InvalidParams(format!("unknown model {other:?}"))),
    };
    let mut g = generate(&model, args.directed, args.seed)?;
    if let Some(w) = &args.weights {
        g = assign_weights(&g, parse_weights(w)?, args.seed)?;
    }
    let mut out = output(&args.out)?;
    write_edge_list(&g, &mut out)?;
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.command {
        Command::Run(a) => run(a),
        Command::VdBounds(a) => vd_bounds(a),
        Command::Exact(a) => exact(a),
        Command::Generate(a) => generate_cmd(a),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
