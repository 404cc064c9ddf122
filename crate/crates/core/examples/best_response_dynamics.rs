//! Continuous best-response dynamics under explicit Euler: convergence to
//! the unique equilibrium below the threshold, selection among equilibria
//! above it.
//!
//! ```bash
//! cargo run --example best_response_dynamics
//! ```

use spectral_games::game::{best_response_dynamics, ActionProfile, DynamicsOptions, GameConfig};
use spectral_games::graph::Graph;

fn run(g: &Graph, delta: f64, x0: Vec<f64>) {
    let cfg = GameConfig::new(g, delta).unwrap();
    let start = ActionProfile::new(x0.clone()).unwrap();
    let opts = DynamicsOptions { dt: 0.5, max_steps: 100_000, tol: 1e-10 };
    let result = best_response_dynamics(&cfg, &start, &opts).unwrap();
    println!(
        "delta = {delta}, x0 = {x0:?} -> {:?} after {} steps (converged: {})",
        result.limit.actions().iter().map(|v| (v * 1e6).round() / 1e6).collect::<Vec<_>>(),
        result.steps,
        result.converged
    );
    // a few early trajectory points
    for sample in result.trajectory.iter().take(4) {
        println!(
            "    step {:>5}: x = {:?}, residual {:.2e}",
            sample.step,
            sample.actions.iter().map(|v| (v * 1e4).round() / 1e4).collect::<Vec<_>>(),
            sample.residual
        );
    }
}

fn main() {
    let dyad = Graph::from_edges(2, &[(0, 1)]);

    println!("below the threshold: every start reaches (2/3, 2/3)");
    run(&dyad, 0.5, vec![0.0, 0.0]);
    run(&dyad, 0.5, vec![1.0, 0.0]);

    println!("\nabove the threshold: starts select different equilibria");
    run(&dyad, 1.5, vec![1.0, 0.0]); // already at a corner equilibrium
    run(&dyad, 1.5, vec![0.9, 0.1]); // drawn to the nearest corner
    run(&dyad, 1.5, vec![0.41, 0.39]); // the interior point repels
}
