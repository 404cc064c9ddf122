//! Command-line front end. Every subcommand delegates to one library
//! operation and prints JSON, CSV, or an edge list to stdout or `--out`.
//!
//! Exit codes: 0 on success, 2 on usage errors, 3 on data errors.

use std::fs::File;
use std::io::{BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use spectral_games::bounds;
use spectral_games::census::census;
use spectral_games::experiment::{self, ExperimentConfig};
use spectral_games::game::{
    self, ActionProfile, DynamicsOptions, GameConfig, DEFAULT_MAX_ENUM_NODES,
};
use spectral_games::graph::{Graph, LoadOptions, load_edge_list};
use spectral_games::report::{BoundsReport, CensusReport, EquilibriaReport, MomentReport};
use spectral_games::spectral::{self, MomentSequence};

#[derive(Parser)]
#[command(name = "spectral-games", version, about = "Structural census, spectral moments, eigenvalue bounds, and network-game equilibria for edge-list graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count substructures: degrees, triangles, quadrangles, pentagons.
    Census {
        /// Edge-list file: two whitespace- or comma-separated node ids per
        /// line, '#' comments ignored.
        path: PathBuf,
        /// Include per-node count arrays in the report.
        #[arg(long)]
        per_node: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Spectral moments m1..m5 with exact extreme eigenvalues.
    Moments {
        path: PathBuf,
        /// Cross-check the census-derived moments against exact closed-walk
        /// counts and include the counts in the report.
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Inner bounds on the extreme eigenvalues from the first five moments.
    Bounds {
        path: PathBuf,
        /// Bound order: 1 uses three moments, 2 all five.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u8).range(1..=2))]
        order: u8,
        #[arg(long, value_enum, default_value_t = MethodArg::Analytic)]
        method: MethodArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate all Nash equilibria of the linear best-response game.
    Equilibria {
        path: PathBuf,
        /// Interaction strength (nonnegative).
        #[arg(long)]
        delta: f64,
        /// Refuse graphs larger than this (enumeration is exponential).
        #[arg(long, default_value_t = DEFAULT_MAX_ENUM_NODES)]
        max_n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Integrate best-response dynamics and emit the trajectory as CSV.
    Dynamics {
        path: PathBuf,
        #[arg(long)]
        delta: f64,
        /// Initial actions: a single value for all nodes, or one
        /// comma-separated value per node. Defaults to all zeros.
        #[arg(long)]
        x0: Option<String>,
        #[arg(long, default_value_t = 0.5)]
        dt: f64,
        #[arg(long, default_value_t = 100_000)]
        steps: usize,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Extract an ego subgraph and print it as an edge list.
    Sample {
        path: PathBuf,
        /// Seed node, named by its id in the input file.
        #[arg(long)]
        seed_node: String,
        #[arg(long, default_value_t = 2)]
        radius: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample ego subgraphs and run the full per-subgraph pipeline,
    /// emitting one CSV row each plus rank-correlation summaries.
    Experiment {
        path: PathBuf,
        #[arg(long)]
        num_subgraphs: usize,
        #[arg(long, default_value_t = 2)]
        radius: usize,
        #[arg(long, default_value_t = 0)]
        rng_seed: u64,
        /// Append wall-clock columns (makes output run-dependent).
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Analytic,
    Bisect,
}

enum CliError {
    Usage(String),
    Data(String),
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Data(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Data(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn load_graph(path: &PathBuf) -> Result<Graph, CliError> {
    let file = File::open(path)
        .map_err(|e| CliError::Data(format!("cannot open {}: {e}", path.display())))?;
    let loaded = load_edge_list(BufReader::new(file), &LoadOptions::default())?;
    if loaded.self_loops_dropped > 0 {
        eprintln!("warning: dropped {} self-loop line(s)", loaded.self_loops_dropped);
    }
    if loaded.duplicate_edges > 0 {
        eprintln!("warning: merged {} duplicate edge(s)", loaded.duplicate_edges);
    }
    Ok(loaded.graph)
}

fn emit(out: Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => {
            let mut file = File::create(&path)
                .map_err(|e| CliError::Data(format!("cannot create {}: {e}", path.display())))?;
            file.write_all(content.as_bytes())?;
        }
        None => print!("{content}"),
    }
    Ok(())
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    let mut rendered = serde_json::to_string_pretty(value)?;
    rendered.push('\n');
    Ok(rendered)
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Census { path, per_node, out } => {
            let g = load_graph(&path)?;
            let report = CensusReport::new(&census(&g), per_node);
            emit(out, &to_json(&report)?)
        }
        Command::Moments { path, exact, out } => {
            let g = load_graph(&path)?;
            let moments = MomentSequence::from_census(&census(&g))?;
            let walk_counts = if exact {
                let walks = spectral::closed_walk_counts(&g, 5)?;
                let numerators = moments.walk_numerators().expect("census-derived moments");
                for (k, &count) in walks.iter().enumerate() {
                    if numerators[k + 1] != count {
                        return Err(CliError::Data(format!(
                            "moment/walk mismatch at order {}: {} vs {}",
                            k + 1,
                            numerators[k + 1],
                            count
                        )));
                    }
                }
                Some(walks)
            } else {
                None
            };
            let extremes = spectral::extreme_eigenvalues(&g)?;
            emit(out, &to_json(&MomentReport::new(&moments, &extremes, walk_counts))?)
        }
        Command::Bounds { path, order, method, out } => {
            let g = load_graph(&path)?;
            let moments = MomentSequence::from_census(&census(&g))?;
            let result = match (method, order) {
                (MethodArg::Bisect, order) => bounds::support_bounds_bisect(&moments, order as usize)?,
                (MethodArg::Analytic, 1) => bounds::support_bounds_analytic_order1(&moments)?,
                (MethodArg::Analytic, _) => bounds::support_bounds_analytic(&moments)?,
            };
            emit(out, &to_json(&BoundsReport::from(&result))?)
        }
        Command::Equilibria { path, delta, max_n, out } => {
            let g = load_graph(&path)?;
            let cfg = GameConfig::new(&g, delta)?;
            let outcome = game::enumerate_equilibria(&cfg, max_n)?;
            let certificate = game::uniqueness_certificate(&cfg)?;
            emit(out, &to_json(&EquilibriaReport::new(delta, &certificate, &outcome))?)
        }
        Command::Dynamics { path, delta, x0, dt, steps, tol, out } => {
            if !(dt > 0.0 && dt <= 1.0) {
                return Err(CliError::Usage(format!("--dt must lie in (0, 1], got {dt}")));
            }
            if tol.is_nan() || tol <= 0.0 {
                return Err(CliError::Usage(format!("--tol must be positive, got {tol}")));
            }
            if steps == 0 {
                return Err(CliError::Usage("--steps must be at least 1".into()));
            }
            let g = load_graph(&path)?;
            let start = parse_x0(x0.as_deref(), g.node_count())?;
            let cfg = GameConfig::new(&g, delta)?;
            let result = game::best_response_dynamics(
                &cfg,
                &start,
                &DynamicsOptions { dt, max_steps: steps, tol },
            )?;
            let mut csv = String::from("step,residual");
            for i in 0..g.node_count() {
                csv.push_str(&format!(",x{i}"));
            }
            csv.push('\n');
            for sample in &result.trajectory {
                csv.push_str(&format!("{},{:?}", sample.step, sample.residual));
                for v in &sample.actions {
                    csv.push_str(&format!(",{v:?}"));
                }
                csv.push('\n');
            }
            csv.push_str(&format!("# converged={} steps={}\n", result.converged, result.steps));
            emit(out, &csv)
        }
        Command::Sample { path, seed_node, radius, out } => {
            let g = load_graph(&path)?;
            let seed = g
                .resolve_label(&seed_node)
                .or_else(|| {
                    seed_node.parse::<u32>().ok().filter(|&i| (i as usize) < g.node_count())
                })
                .ok_or_else(|| CliError::Data(format!("unknown seed node {seed_node:?}")))?;
            let ego = g.ego_subgraph(seed, radius)?;
            let mut text = format!(
                "# ego subgraph: seed={} radius={} nodes={} edges={}\n",
                seed_node,
                radius,
                ego.node_count(),
                ego.edge_count()
            );
            for i in 0..ego.node_count() as u32 {
                if ego.degree(i) == 0 {
                    text.push_str(&format!("# isolated: {}\n", ego.label(i).unwrap_or("?")));
                }
            }
            for (u, v) in ego.edges() {
                text.push_str(&format!(
                    "{} {}\n",
                    ego.label(u).unwrap_or("?"),
                    ego.label(v).unwrap_or("?")
                ));
            }
            emit(out, &text)
        }
        Command::Experiment { path, num_subgraphs, radius, rng_seed, timings, out } => {
            let g = load_graph(&path)?;
            let cfg = ExperimentConfig { num_subgraphs, radius, rng_seed };
            let result = experiment::run_experiment(&g, &cfg)?;
            let mut buffer = Vec::new();
            experiment::write_csv(&result, timings, &mut buffer)?;
            emit(out, &String::from_utf8(buffer).expect("csv is utf-8"))
        }
    }
}

fn parse_x0(raw: Option<&str>, n: usize) -> Result<ActionProfile, CliError> {
    let Some(raw) = raw else {
        return Ok(ActionProfile::zeros(n));
    };
    let values: Result<Vec<f64>, _> = raw.split(',').map(|t| t.trim().parse::<f64>()).collect();
    let values = values.map_err(|e| CliError::Usage(format!("cannot parse --x0: {e}")))?;
    let values = match values.len() {
        1 => vec![values[0]; n],
        len if len == n => values,
        len => {
            return Err(CliError::Usage(format!(
                "--x0 needs 1 or {n} comma-separated values, got {len}"
            )));
        }
    };
    ActionProfile::new(values).map_err(|e| CliError::Usage(e.to_string()))
}
