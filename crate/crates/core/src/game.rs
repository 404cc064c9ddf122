//! Network games with linear best responses.
//!
//! Each agent sits on a node and plays an action in `[0, 1]`; its best
//! response is `max(0, 1 - delta * sum of neighbor actions)`, the linear
//! rule obtained from a differentiated Cournot payoff after normalizing the
//! isolated-optimum action to one. The module enumerates all pure Nash
//! equilibria exactly (one linear solve per candidate active set), certifies
//! uniqueness from the extreme adjacency eigenvalues, verifies equilibria
//! against the concave potential's first-order conditions, classifies local
//! stability, and integrates the continuous best-response dynamics.

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;
use thiserror::Error;

use crate::bounds::{self, BoundsError};
use crate::census;
use crate::graph::{Graph, NodeId};
use crate::spectral::{self, MomentSequence, SpectralError};

/// Actions at or below this are treated as inactive (zero).
pub const ACTIVITY_TOL: f64 = 1e-10;
/// Max fixed-point residual for a profile to count as an equilibrium.
pub const FIXED_POINT_TOL: f64 = 1e-9;
/// Slack on the inactive-agent inequality `delta * (A x)_i >= 1`.
pub const INEQ_TOL: f64 = 1e-9;
/// Margin for the strict inequalities in the stability test.
pub const STABILITY_MARGIN: f64 = 1e-9;
/// Active-set systems with a larger condition estimate are skipped.
pub const CONDITION_LIMIT: f64 = 1e12;
/// Profiles closer than this in max norm are the same equilibrium.
pub const DEDUP_TOL: f64 = 1e-8;
/// Default node cap for exhaustive enumeration (2^n candidate sets).
pub const DEFAULT_MAX_ENUM_NODES: usize = 25;

#[derive(Debug, Error)]
pub enum GameError {
    #[error("interaction strength must be finite and nonnegative, got {0}")]
    BadDelta(f64),
    #[error("payoff parameters need slope > 0 and intercept > marginal cost")]
    BadCournot,
    #[error("payoff evaluation needs market parameters")]
    MissingCournot,
    #[error("action {value} at node {node} outside [0, 1]")]
    ActionOutOfRange { node: usize, value: f64 },
    #[error("profile has {got} actions for a graph with {expected} nodes")]
    ProfileSizeMismatch { got: usize, expected: usize },
    #[error("enumeration over {n} nodes exceeds the cap of {max}; 2^n candidate sets")]
    TooManyNodes { n: usize, max: usize },
    #[error("delta = {delta} is not below the uniqueness threshold {threshold}")]
    AboveUniquenessThreshold { delta: f64, threshold: f64 },
    #[error("interior solve produced a nonpositive action; delta too close to the threshold")]
    InteriorNotPositive,
    #[error("profile is not an equilibrium: fixed-point residual {0}")]
    NotAnEquilibrium(f64),
    #[error("step size must lie in (0, 1], got {0}")]
    BadStepSize(f64),
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("max_steps must be at least 1")]
    BadStepCount,
    #[error(transparent)]
    Spectral(#[from] SpectralError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
}

/// Market primitives for payoff evaluation: inverse demand intercept and
/// slope, and the constant marginal cost.
#[derive(Debug, Clone, Copy)]
pub struct CournotParams {
    pub intercept: f64,
    pub slope: f64,
    pub marginal_cost: f64,
}

impl CournotParams {
    /// The quantity an isolated agent would produce; actions are expressed
    /// as fractions of it.
    pub fn isolated_action(&self) -> f64 {
        (self.intercept - self.marginal_cost) / (2.0 * self.slope)
    }
}

/// A game instance: the interaction graph and the interaction strength.
#[derive(Debug, Clone)]
pub struct GameConfig<'a> {
    pub graph: &'a Graph,
    pub delta: f64,
    pub cournot: Option<CournotParams>,
}

impl<'a> GameConfig<'a> {
    pub fn new(graph: &'a Graph, delta: f64) -> Result<Self, GameError> {
        if !delta.is_finite() || delta < 0.0 {
            return Err(GameError::BadDelta(delta));
        }
        Ok(GameConfig { graph, delta, cournot: None })
    }

    pub fn with_cournot(mut self, params: CournotParams) -> Result<Self, GameError> {
        let valid = params.slope > 0.0 && params.intercept > params.marginal_cost;
        if !valid {
            return Err(GameError::BadCournot);
        }
        self.cournot = Some(params);
        Ok(self)
    }
}

/// A joint action vector, componentwise in `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct ActionProfile {
    actions: Vec<f64>,
}

impl ActionProfile {
    pub fn new(actions: Vec<f64>) -> Result<Self, GameError> {
        for (node, &value) in actions.iter().enumerate() {
            if !value.is_finite() || !(0.0..=1.0).contains(&value) {
                return Err(GameError::ActionOutOfRange { node, value });
            }
        }
        Ok(ActionProfile { actions })
    }

    pub fn zeros(n: usize) -> Self {
        ActionProfile { actions: vec![0.0; n] }
    }

    pub fn ones(n: usize) -> Self {
        ActionProfile { actions: vec![1.0; n] }
    }

    pub fn constant(n: usize, value: f64) -> Result<Self, GameError> {
        Self::new(vec![value; n])
    }

    pub fn len(&self) -> usize {
        self.actions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.actions.is_empty()
    }

    pub fn actions(&self) -> &[f64] {
        &self.actions
    }

    pub fn action(&self, i: usize) -> f64 {
        self.actions[i]
    }

    /// Nodes playing strictly positive actions (above [`ACTIVITY_TOL`]).
    pub fn active_set(&self) -> Vec<usize> {
        self.actions
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > ACTIVITY_TOL)
            .map(|(i, _)| i)
            .collect()
    }
}

fn check_profile(x: &ActionProfile, cfg: &GameConfig) -> Result<(), GameError> {
    if x.len() != cfg.graph.node_count() {
        return Err(GameError::ProfileSizeMismatch { got: x.len(), expected: cfg.graph.node_count() });
    }
    Ok(())
}

fn neighbor_sum(g: &Graph, x: &[f64], i: usize) -> f64 {
    g.neighbors(i as NodeId).iter().map(|&j| x[j as usize]).sum()
}

/// Payoff of agent `i` under the Cournot parametrization. Actions are
/// rescaled by the isolated-optimum quantity before evaluating
/// `U_i = q_i (a - b (q_i + 2 delta * sum_j A_ij q_j)) - d q_i`.
pub fn payoff(i: usize, x: &ActionProfile, cfg: &GameConfig) -> Result<f64, GameError> {
    check_profile(x, cfg)?;
    let params = cfg.cournot.ok_or(GameError::MissingCournot)?;
    let scale = params.isolated_action();
    let q_i = x.action(i) * scale;
    let neighbor_q = neighbor_sum(cfg.graph, x.actions(), i) * scale;
    let price = params.intercept - params.slope * (q_i + 2.0 * cfg.delta * neighbor_q);
    Ok(q_i * price - params.marginal_cost * q_i)
}

/// Best response of agent `i`: `max(0, 1 - delta * sum of neighbor actions)`.
pub fn best_response(i: usize, x: &ActionProfile, cfg: &GameConfig) -> f64 {
    (1.0 - cfg.delta * neighbor_sum(cfg.graph, x.actions(), i)).max(0.0)
}

/// Best responses of all agents at once.
pub fn best_response_profile(x: &ActionProfile, cfg: &GameConfig) -> Vec<f64> {
    (0..x.len()).map(|i| best_response(i, x, cfg)).collect()
}

/// Largest one-agent deviation `|x_i - f_i(x)|`.
pub fn fixed_point_residual(x: &ActionProfile, cfg: &GameConfig) -> f64 {
    (0..x.len())
        .map(|i| (x.action(i) - best_response(i, x, cfg)).abs())
        .fold(0.0, f64::max)
}

/// One verified Nash equilibrium.
#[derive(Debug, Clone)]
pub struct EquilibriumRecord {
    pub profile: ActionProfile,
    pub active_set: Vec<usize>,
    pub stable: bool,
    /// Set when a stability inequality sat within [`STABILITY_MARGIN`] of
    /// its threshold; such profiles are reported unstable rather than
    /// guessed.
    pub boundary: bool,
    pub kkt_residual: Vec<f64>,
    pub kkt_max: f64,
}

/// Everything the exhaustive enumeration found.
#[derive(Debug, Clone)]
pub struct EnumerationOutcome {
    /// Equilibria ordered by active-set size, then lexicographically.
    pub equilibria: Vec<EquilibriumRecord>,
    /// Candidate active sets skipped because `I + delta * A_S` was too close
    /// to singular to trust a solve.
    pub singular_subsets: Vec<Vec<usize>>,
    /// Candidate sets rejected because a solved action fell in
    /// `(0, ACTIVITY_TOL]`, too ambiguous to call active.
    pub ambiguous_rejections: usize,
}

enum SubsetOutcome {
    Equilibrium { subset: Vec<usize>, actions: Vec<f64> },
    Singular(Vec<usize>),
    Ambiguous,
    Rejected,
}

/// Enumerates all Nash equilibria by checking every candidate active set
/// `S`: solve `(I + delta * A_S) x_S = 1`, require all solved actions
/// strictly positive, and require `delta * (A x)_i >= 1` for every agent
/// outside `S`. Runs over `2^n` subsets, so `n` is capped by `max_n`.
pub fn enumerate_equilibria(cfg: &GameConfig, max_n: usize) -> Result<EnumerationOutcome, GameError> {
    let n = cfg.graph.node_count();
    if n > max_n || n >= 64 {
        return Err(GameError::TooManyNodes { n, max: max_n.min(63) });
    }
    let outcomes: Vec<SubsetOutcome> = (0u64..(1u64 << n))
        .into_par_iter()
        .map(|mask| evaluate_subset(cfg, mask, n))
        .collect();

    let mut equilibria: Vec<(Vec<usize>, Vec<f64>)> = Vec::new();
    let mut singular_subsets = Vec::new();
    let mut ambiguous_rejections = 0usize;
    for outcome in outcomes {
        match outcome {
            SubsetOutcome::Equilibrium { subset, actions } => equilibria.push((subset, actions)),
            SubsetOutcome::Singular(subset) => singular_subsets.push(subset),
            SubsetOutcome::Ambiguous => ambiguous_rejections += 1,
            SubsetOutcome::Rejected => {}
        }
    }
    let by_size_then_lex =
        |a: &Vec<usize>, b: &Vec<usize>| a.len().cmp(&b.len()).then_with(|| a.cmp(b));
    equilibria.sort_by(|a, b| by_size_then_lex(&a.0, &b.0));
    singular_subsets.sort_by(by_size_then_lex);

    let mut records: Vec<EquilibriumRecord> = Vec::new();
    'candidates: for (subset, actions) in equilibria {
        for existing in &records {
            let gap = existing
                .profile
                .actions()
                .iter()
                .zip(&actions)
                .map(|(a, b)| (a - b).abs())
                .fold(0.0, f64::max);
            if gap < DEDUP_TOL {
                continue 'candidates;
            }
        }
        let profile = ActionProfile::new(actions)?;
        let kkt_residual = kkt_residual(&profile, cfg);
        let kkt_max = kkt_residual.iter().fold(0.0f64, |m, r| m.max(r.abs()));
        let stability = classify_stability(&profile, cfg)?;
        records.push(EquilibriumRecord {
            active_set: subset,
            stable: stability.stable,
            boundary: stability.boundary,
            kkt_residual,
            kkt_max,
            profile,
        });
    }
    Ok(EnumerationOutcome { equilibria: records, singular_subsets, ambiguous_rejections })
}

fn evaluate_subset(cfg: &GameConfig, mask: u64, n: usize) -> SubsetOutcome {
    let subset: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
    let k = subset.len();
    let mut actions = vec![0.0f64; n];

    if k > 0 {
        let mut system = DMatrix::<f64>::identity(k, k);
        for (row, &i) in subset.iter().enumerate() {
            for (col, &j) in subset.iter().enumerate() {
                if cfg.graph.has_edge(i as NodeId, j as NodeId) {
                    system[(row, col)] += cfg.delta;
                }
            }
        }
        let svd = system.svd(true, true);
        let sigma_max = svd.singular_values.max();
        let sigma_min = svd.singular_values.min();
        let well_conditioned = sigma_min > sigma_max / CONDITION_LIMIT;
        if !well_conditioned {
            return SubsetOutcome::Singular(subset);
        }
        let solution = match svd.solve(&DVector::from_element(k, 1.0), 0.0) {
            Ok(s) => s,
            Err(_) => return SubsetOutcome::Singular(subset),
        };
        for (row, &i) in subset.iter().enumerate() {
            // solver noise can push an exact boundary action a hair past 1
            let value = if solution[row] > 1.0 && solution[row] <= 1.0 + 1e-12 {
                1.0
            } else {
                solution[row]
            };
            if value <= 0.0 || value > 1.0 {
                return SubsetOutcome::Rejected;
            }
            if value <= ACTIVITY_TOL {
                return SubsetOutcome::Ambiguous;
            }
            actions[i] = value;
        }
    }

    // agents outside S must not want in: delta * (A x)_i >= 1
    for i in 0..n {
        if mask >> i & 1 == 0 {
            let pull = cfg.delta * neighbor_sum(cfg.graph, &actions, i);
            if pull < 1.0 - INEQ_TOL {
                return SubsetOutcome::Rejected;
            }
        }
    }

    // final verification as a fixed point of the best-response map
    let profile = match ActionProfile::new(actions.clone()) {
        Ok(p) => p,
        Err(_) => return SubsetOutcome::Rejected,
    };
    if fixed_point_residual(&profile, cfg) > FIXED_POINT_TOL {
        return SubsetOutcome::Rejected;
    }
    SubsetOutcome::Equilibrium { subset, actions }
}

/// Solves for the all-active equilibrium `(I + delta * A) x = 1`, valid
/// whenever `delta` is below the exact uniqueness threshold `-1/λ_min`.
pub fn interior_equilibrium(cfg: &GameConfig) -> Result<ActionProfile, GameError> {
    let n = cfg.graph.node_count();
    let extremes = spectral::extreme_eigenvalues(cfg.graph)?;
    let threshold =
        if extremes.lambda_min < 0.0 { -1.0 / extremes.lambda_min } else { f64::INFINITY };
    if cfg.delta >= threshold {
        return Err(GameError::AboveUniquenessThreshold { delta: cfg.delta, threshold });
    }
    let mut system = DMatrix::<f64>::identity(n, n);
    for (u, v) in cfg.graph.edges() {
        system[(u as usize, v as usize)] += cfg.delta;
        system[(v as usize, u as usize)] += cfg.delta;
    }
    let solution = system
        .lu()
        .solve(&DVector::from_element(n, 1.0))
        .ok_or(GameError::InteriorNotPositive)?;
    if solution.iter().any(|&x| x <= 0.0) {
        return Err(GameError::InteriorNotPositive);
    }
    ActionProfile::new(solution.iter().copied().collect())
}

/// Which sufficient condition certifies a unique equilibrium.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum UniquenessStatus {
    /// `delta < -1/λ_min`, the sharper condition.
    UniqueByLambdaMin,
    /// `delta < 1/ρ` only.
    UniqueBySpectralRadius,
    /// Neither condition holds; multiple equilibria are possible.
    Inconclusive,
}

/// A uniqueness certificate from exact eigenvalues, with the moment-bound
/// threshold attached for comparison.
#[derive(Debug, Clone, Copy)]
pub struct UniquenessCertificate {
    pub status: UniquenessStatus,
    /// `-1/λ_min` from the exact eigenvalue.
    pub threshold_exact: f64,
    /// `-1/α_2` from the order-2 moment bound. Since `α_2 >= λ_min`, this
    /// value is an estimate of the threshold from above and never upgrades
    /// the status.
    pub threshold_estimate: f64,
}

/// Certifies uniqueness of the Nash equilibrium. The `-1/λ_min` condition
/// subsumes the `1/ρ` condition, so it is checked first; an edgeless graph
/// is trivially unique with infinite thresholds.
pub fn uniqueness_certificate(cfg: &GameConfig) -> Result<UniquenessCertificate, GameError> {
    if cfg.graph.edge_count() == 0 {
        return Ok(UniquenessCertificate {
            status: UniquenessStatus::UniqueByLambdaMin,
            threshold_exact: f64::INFINITY,
            threshold_estimate: f64::INFINITY,
        });
    }
    let extremes = spectral::extreme_eigenvalues(cfg.graph)?;
    let threshold_exact = -1.0 / extremes.lambda_min;
    let moments = MomentSequence::from_census(&census::census(cfg.graph))?;
    let inner = bounds::support_bounds_analytic(&moments)?;
    let threshold_estimate = -1.0 / inner.alpha;
    let status = if cfg.delta < threshold_exact {
        UniquenessStatus::UniqueByLambdaMin
    } else if cfg.delta < 1.0 / extremes.lambda_max {
        UniquenessStatus::UniqueBySpectralRadius
    } else {
        UniquenessStatus::Inconclusive
    };
    Ok(UniquenessCertificate { status, threshold_exact, threshold_estimate })
}

/// The concave potential whose constrained critical points are exactly the
/// Nash equilibria: `sum_i (x_i - x_i^2/2) - (delta/2) sum_ij A_ij x_i x_j`.
pub fn potential(x: &ActionProfile, cfg: &GameConfig) -> f64 {
    let own: f64 = x.actions().iter().map(|&v| v - 0.5 * v * v).sum();
    let cross: f64 = cfg
        .graph
        .edges()
        .map(|(u, v)| x.action(u as usize) * x.action(v as usize))
        .sum();
    own - cfg.delta * cross
}

/// First-order conditions of the potential at `x`. The gradient component
/// is `g_i = 1 - x_i - delta * sum_j A_ij x_j`; active agents report `g_i`
/// itself (zero at an equilibrium), inactive agents report `max(0, g_i)`
/// (their gradient must not push inward).
pub fn kkt_residual(x: &ActionProfile, cfg: &GameConfig) -> Vec<f64> {
    (0..x.len())
        .map(|i| {
            let g = 1.0 - x.action(i) - cfg.delta * neighbor_sum(cfg.graph, x.actions(), i);
            if x.action(i) > ACTIVITY_TOL {
                g
            } else {
                g.max(0.0)
            }
        })
        .collect()
}

struct StabilityReport {
    stable: bool,
    boundary: bool,
}

fn classify_stability(x: &ActionProfile, cfg: &GameConfig) -> Result<StabilityReport, GameError> {
    let active: Vec<NodeId> = x.active_set().iter().map(|&i| i as NodeId).collect();
    let mut stable = true;
    let mut boundary = false;

    if active.len() >= 2 {
        let induced = cfg
            .graph
            .induced_subgraph(&active)
            .expect("active set indices are in range");
        let lambda_min = spectral::extreme_eigenvalues(&induced)?.lambda_min;
        if lambda_min < -1e-12 {
            // delta must stay strictly below -1/lambda_min(A_S)
            let threshold = -1.0 / lambda_min;
            if (cfg.delta - threshold).abs() <= STABILITY_MARGIN {
                boundary = true;
                stable = false;
            } else if cfg.delta > threshold {
                stable = false;
            }
        }
    }
    for i in 0..x.len() {
        if x.action(i) <= ACTIVITY_TOL {
            // inactive agents must be strictly repelled: delta (A x)_i > 1
            let pull = cfg.delta * neighbor_sum(cfg.graph, x.actions(), i);
            if (pull - 1.0).abs() <= STABILITY_MARGIN {
                boundary = true;
                stable = false;
            } else if pull < 1.0 {
                stable = false;
            }
        }
    }
    Ok(StabilityReport { stable, boundary })
}

/// Asymptotic stability of an equilibrium under the best-response flow
/// `dx/dt = f(x) - x`: requires `delta < -1/λ_min(A_S)` on the active
/// subgraph (vacuous for at most one active agent) and strict repulsion of
/// every inactive agent.
///
/// Errors if `x` is not an equilibrium to [`FIXED_POINT_TOL`].
pub fn stability_check(x: &ActionProfile, cfg: &GameConfig) -> Result<bool, GameError> {
    check_profile(x, cfg)?;
    let residual = fixed_point_residual(x, cfg);
    if residual > FIXED_POINT_TOL {
        return Err(GameError::NotAnEquilibrium(residual));
    }
    Ok(classify_stability(x, cfg)?.stable)
}

/// Options for [`best_response_dynamics`].
#[derive(Debug, Clone, Copy)]
pub struct DynamicsOptions {
    /// Euler step in `(0, 1]`; iterates stay in the box because each step is
    /// a convex combination of `x` and `f(x)`.
    pub dt: f64,
    pub max_steps: usize,
    /// Convergence threshold on the best-response residual.
    pub tol: f64,
}

impl Default for DynamicsOptions {
    fn default() -> Self {
        DynamicsOptions { dt: 0.5, max_steps: 100_000, tol: 1e-8 }
    }
}

/// One recorded point along a trajectory.
#[derive(Debug, Clone)]
pub struct TrajectorySample {
    pub step: usize,
    pub actions: Vec<f64>,
    pub residual: f64,
}

#[derive(Debug, Clone)]
pub struct DynamicsResult {
    /// Subsampled trajectory; always contains the start and the last state.
    pub trajectory: Vec<TrajectorySample>,
    pub converged: bool,
    pub limit: ActionProfile,
    pub steps: usize,
}

/// Explicit Euler integration of `dx/dt = f(x) - x` from `x0`, stopping
/// when the residual `max_i |f_i(x) - x_i|` drops below `tol`.
pub fn best_response_dynamics(
    cfg: &GameConfig,
    x0: &ActionProfile,
    opts: &DynamicsOptions,
) -> Result<DynamicsResult, GameError> {
    check_profile(x0, cfg)?;
    if !(opts.dt > 0.0 && opts.dt <= 1.0) {
        return Err(GameError::BadStepSize(opts.dt));
    }
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(GameError::BadTolerance(opts.tol));
    }
    if opts.max_steps == 0 {
        return Err(GameError::BadStepCount);
    }

    let stride = (opts.max_steps / 256).max(1);
    let mut x = x0.clone();
    let mut trajectory = Vec::new();
    let mut converged = false;
    let mut steps = 0;
    loop {
        let responses = best_response_profile(&x, cfg);
        let residual = responses
            .iter()
            .zip(x.actions())
            .map(|(f, v)| (f - v).abs())
            .fold(0.0, f64::max);
        if steps % stride == 0 {
            trajectory.push(TrajectorySample { step: steps, actions: x.actions().to_vec(), residual });
        }
        if residual < opts.tol {
            converged = true;
            break;
        }
        if steps >= opts.max_steps {
            break;
        }
        for (v, f) in x.actions.iter_mut().zip(&responses) {
            *v += opts.dt * (f - *v);
        }
        steps += 1;
    }
    if trajectory.last().map(|t| t.step) != Some(steps) {
        let responses = best_response_profile(&x, cfg);
        let residual = responses
            .iter()
            .zip(x.actions())
            .map(|(f, v)| (f - v).abs())
            .fold(0.0, f64::max);
        trajectory.push(TrajectorySample { step: steps, actions: x.actions().to_vec(), residual });
    }
    Ok(DynamicsResult { trajectory, converged, limit: x, steps })
}
