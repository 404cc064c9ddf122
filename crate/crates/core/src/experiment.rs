//! Batch pipeline over sampled ego subgraphs: census, moments, support
//! bounds at both orders, and exact extreme eigenvalues per subgraph, plus
//! rank correlations summarizing how tightly the bounds track the exact
//! eigenvalues across the sample.

use std::io::Write;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::bounds::{self, BoundsError};
use crate::census::census;
use crate::graph::{Graph, GraphError};
use crate::spectral::{self, MomentSequence, SpectralError};

#[derive(Debug, Error)]
pub enum ExperimentError {
    #[error("need at least one subgraph")]
    NoSubgraphs,
    #[error("requested {requested} seed nodes but the graph has only {available}")]
    TooManySeeds { requested: usize, available: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
}

/// Parameters of a sampling run.
#[derive(Debug, Clone, Copy)]
pub struct ExperimentConfig {
    /// Number of distinct seed nodes to sample.
    pub num_subgraphs: usize,
    /// BFS radius of each ego subgraph.
    pub radius: usize,
    /// Seed for the sampling generator; identical seeds give identical runs.
    pub rng_seed: u64,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig { num_subgraphs: 100, radius: 2, rng_seed: 0 }
    }
}

/// Everything measured on one ego subgraph.
#[derive(Debug, Clone)]
pub struct ExperimentRow {
    pub subgraph_id: usize,
    /// Seed node in the parent graph (its original label when present).
    pub seed_node: String,
    pub node_count: usize,
    pub edge_count: u64,
    pub triangles: u64,
    pub quadrangles: u64,
    pub pentagons: u64,
    pub degree_square_sum: u64,
    pub degree_triangle_sum: u64,
    /// Moments `m_1..m_5`.
    pub moments: [f64; 5],
    pub alpha1: f64,
    pub beta1: f64,
    pub alpha2: f64,
    pub beta2: f64,
    pub lambda_min: f64,
    pub lambda_max: f64,
    /// True when the order-2 bounds fell back to order 1.
    pub degenerate: bool,
    pub census_seconds: f64,
    pub bounds_seconds: f64,
}

/// Rank correlations between the order-2 bounds and the exact extremes.
#[derive(Debug, Clone, Copy)]
pub struct ExperimentSummary {
    pub spearman_alpha2_lambda_min: f64,
    pub spearman_beta2_lambda_max: f64,
}

#[derive(Debug, Clone)]
pub struct Experiment {
    pub rows: Vec<ExperimentRow>,
    pub summary: ExperimentSummary,
}

/// Samples `num_subgraphs` distinct seed nodes uniformly without
/// replacement, extracts the radius-`radius` ego subgraph around each, and
/// runs the census → moments → bounds → eigenvalue pipeline per subgraph.
/// Subgraph pipelines run in parallel; rows come back in subgraph-id order.
pub fn run_experiment(g: &Graph, cfg: &ExperimentConfig) -> Result<Experiment, ExperimentError> {
    if cfg.num_subgraphs == 0 {
        return Err(ExperimentError::NoSubgraphs);
    }
    let n = g.node_count();
    if cfg.num_subgraphs > n {
        return Err(ExperimentError::TooManySeeds { requested: cfg.num_subgraphs, available: n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    let seeds: Vec<usize> = rand::seq::index::sample(&mut rng, n, cfg.num_subgraphs).into_vec();

    let rows: Result<Vec<ExperimentRow>, ExperimentError> = seeds
        .par_iter()
        .enumerate()
        .map(|(id, &seed)| analyze_subgraph(g, id, seed as u32, cfg.radius))
        .collect();
    let rows = rows?;

    let alpha2: Vec<f64> = rows.iter().map(|r| r.alpha2).collect();
    let lambda_min: Vec<f64> = rows.iter().map(|r| r.lambda_min).collect();
    let beta2: Vec<f64> = rows.iter().map(|r| r.beta2).collect();
    let lambda_max: Vec<f64> = rows.iter().map(|r| r.lambda_max).collect();
    let summary = ExperimentSummary {
        spearman_alpha2_lambda_min: spearman(&alpha2, &lambda_min),
        spearman_beta2_lambda_max: spearman(&beta2, &lambda_max),
    };
    Ok(Experiment { rows, summary })
}

fn analyze_subgraph(
    g: &Graph,
    id: usize,
    seed: u32,
    radius: usize,
) -> Result<ExperimentRow, ExperimentError> {
    let ego = g.ego_subgraph(seed, radius)?;

    let census_start = Instant::now();
    let counts = census(&ego);
    let census_seconds = census_start.elapsed().as_secs_f64();

    let moments = MomentSequence::from_census(&counts)?;
    let bounds_start = Instant::now();
    let order1 = bounds::support_bounds_analytic_order1(&moments)?;
    let order2 = bounds::support_bounds_analytic(&moments)?;
    let bounds_seconds = bounds_start.elapsed().as_secs_f64();

    let extremes = spectral::extreme_eigenvalues(&ego)?;
    Ok(ExperimentRow {
        subgraph_id: id,
        seed_node: match g.label(seed) {
            Some(l) => l.to_string(),
            None => seed.to_string(),
        },
        node_count: counts.node_count,
        edge_count: counts.edge_count,
        triangles: counts.triangles,
        quadrangles: counts.quadrangles,
        pentagons: counts.pentagons,
        degree_square_sum: counts.degree_square_sum,
        degree_triangle_sum: counts.degree_triangle_sum,
        moments: [
            moments.moment(1),
            moments.moment(2),
            moments.moment(3),
            moments.moment(4),
            moments.moment(5),
        ],
        alpha1: order1.alpha,
        beta1: order1.beta,
        alpha2: order2.alpha,
        beta2: order2.beta,
        lambda_min: extremes.lambda_min,
        lambda_max: extremes.lambda_max,
        degenerate: order2.degenerate,
        census_seconds,
        bounds_seconds,
    })
}

/// Spearman rank correlation with average ranks for ties. Returns NaN for
/// fewer than two points or zero variance.
pub fn spearman(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    if xs.len() < 2 {
        return f64::NAN;
    }
    let rx = ranks(xs);
    let ry = ranks(ys);
    pearson(&rx, &ry)
}

fn ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].partial_cmp(&values[b]).unwrap());
    let mut out = vec![0.0; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        let avg = (i + j) as f64 / 2.0 + 1.0;
        for &idx in &order[i..=j] {
            out[idx] = avg;
        }
        i = j + 1;
    }
    out
}

fn pearson(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut vx = 0.0;
    let mut vy = 0.0;
    for (x, y) in xs.iter().zip(ys) {
        cov += (x - mx) * (y - my);
        vx += (x - mx) * (x - mx);
        vy += (y - my) * (y - my);
    }
    if vx == 0.0 || vy == 0.0 {
        return f64::NAN;
    }
    cov / (vx * vy).sqrt()
}

const CSV_COLUMNS: &str = "subgraph_id,seed_node,n,e,triangles,quadrangles,pentagons,\
degree_square_sum,degree_triangle_sum,m1,m2,m3,m4,m5,alpha1,beta1,alpha2,beta2,\
lambda_min,lambda_max,degenerate";

/// Writes rows as CSV with a fixed column order, then the summary as a
/// trailing comment line. Wall-clock columns are opt-in so that default
/// output is byte-identical across runs with the same seed.
pub fn write_csv<W: Write>(
    experiment: &Experiment,
    include_timings: bool,
    mut out: W,
) -> std::io::Result<()> {
    if include_timings {
        writeln!(out, "{CSV_COLUMNS},census_seconds,bounds_seconds")?;
    } else {
        writeln!(out, "{CSV_COLUMNS}")?;
    }
    for r in &experiment.rows {
        write!(
            out,
            "{},{},{},{},{},{},{},{},{},{:?},{:?},{:?},{:?},{:?},{:?},{:?},{:?},{:?},{:?},{:?},{}",
            r.subgraph_id,
            r.seed_node,
            r.node_count,
            r.edge_count,
            r.triangles,
            r.quadrangles,
            r.pentagons,
            r.degree_square_sum,
            r.degree_triangle_sum,
            r.moments[0],
            r.moments[1],
            r.moments[2],
            r.moments[3],
            r.moments[4],
            r.alpha1,
            r.beta1,
            r.alpha2,
            r.beta2,
            r.lambda_min,
            r.lambda_max,
            r.degenerate,
        )?;
        if include_timings {
            writeln!(out, ",{:?},{:?}", r.census_seconds, r.bounds_seconds)?;
        } else {
            writeln!(out)?;
        }
    }
    writeln!(
        out,
        "# spearman_alpha2_lambda_min={:?} spearman_beta2_lambda_max={:?}",
        experiment.summary.spearman_alpha2_lambda_min, experiment.summary.spearman_beta2_lambda_max,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn single_isolated_subgraph() {
        let g = generate::cycle(6);
        let cfg = ExperimentConfig { num_subgraphs: 1, radius: 0, rng_seed: 9 };
        let exp = run_experiment(&g, &cfg).unwrap();
        let row = &exp.rows[0];
        assert_eq!(row.node_count, 1);
        assert_eq!(row.edge_count, 0);
        assert_eq!(row.moments, [0.0; 5]);
        assert_eq!(row.alpha2, 0.0);
        assert_eq!(row.beta2, 0.0);
        assert_eq!(row.lambda_min, 0.0);
    }

    #[test]
    fn identical_seeds_identical_csv() {
        let g = generate::erdos_renyi(300, 0.02, 5);
        let cfg = ExperimentConfig { num_subgraphs: 10, radius: 2, rng_seed: 42 };
        let mut a = Vec::new();
        write_csv(&run_experiment(&g, &cfg).unwrap(), false, &mut a).unwrap();
        let mut b = Vec::new();
        write_csv(&run_experiment(&g, &cfg).unwrap(), false, &mut b).unwrap();
        assert_eq!(a, b);
        assert!(!a.is_empty());
    }

    #[test]
    fn sandwich_holds_per_row() {
        let g = generate::small_world_random_mix(400, 4, 0.1, 0.004, 11);
        let cfg = ExperimentConfig { num_subgraphs: 25, radius: 2, rng_seed: 3 };
        let exp = run_experiment(&g, &cfg).unwrap();
        assert_eq!(exp.rows.len(), 25);
        for row in &exp.rows {
            assert!(row.lambda_min <= row.alpha2 + 1e-6, "row {}", row.subgraph_id);
            assert!(row.alpha2 <= row.alpha1 + 1e-9, "row {}", row.subgraph_id);
            assert!(row.beta1 <= row.beta2 + 1e-9, "row {}", row.subgraph_id);
            assert!(row.beta2 <= row.lambda_max + 1e-6, "row {}", row.subgraph_id);
        }
    }

    #[test]
    fn refuses_oversampling() {
        let g = generate::cycle(5);
        let cfg = ExperimentConfig { num_subgraphs: 6, radius: 1, rng_seed: 0 };
        assert!(matches!(run_experiment(&g, &cfg), Err(ExperimentError::TooManySeeds { .. })));
        let cfg = ExperimentConfig { num_subgraphs: 0, radius: 1, rng_seed: 0 };
        assert!(matches!(run_experiment(&g, &cfg), Err(ExperimentError::NoSubgraphs)));
    }

    #[test]
    fn spearman_basics() {
        let x = [1.0, 2.0, 3.0, 4.0];
        let up = [10.0, 20.0, 30.0, 40.0];
        let down = [4.0, 3.0, 2.0, 1.0];
        assert!((spearman(&x, &up) - 1.0).abs() < 1e-12);
        assert!((spearman(&x, &down) + 1.0).abs() < 1e-12);
        // monotone but nonlinear is still rank-1
        let exp = [1.0, 8.0, 27.0, 1000.0];
        assert!((spearman(&x, &exp) - 1.0).abs() < 1e-12);
        assert!(spearman(&[1.0], &[2.0]).is_nan());
    }
}
