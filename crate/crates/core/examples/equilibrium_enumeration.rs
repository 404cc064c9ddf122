//! Full Nash equilibrium sets of the linear best-response game as the
//! interaction strength crosses the uniqueness threshold.
//!
//! ```bash
//! cargo run --example equilibrium_enumeration
//! ```

use spectral_games::game::{enumerate_equilibria, GameConfig};
use spectral_games::generate;
use spectral_games::graph::Graph;

fn show(name: &str, g: &Graph, delta: f64) {
    let cfg = GameConfig::new(g, delta).unwrap();
    let outcome = enumerate_equilibria(&cfg, 25).unwrap();
    println!("{name}, delta = {delta}: {} equilibrium(s)", outcome.equilibria.len());
    for eq in &outcome.equilibria {
        let xs: Vec<String> = eq.profile.actions().iter().map(|x| format!("{x:.4}")).collect();
        println!(
            "  x = [{}]  active = {:?}  stable = {}{}  max KKT residual = {:.2e}",
            xs.join(", "),
            eq.active_set,
            eq.stable,
            if eq.boundary { " (boundary)" } else { "" },
            eq.kkt_max
        );
    }
    if !outcome.singular_subsets.is_empty() {
        println!("  skipped {} near-singular active-set system(s)", outcome.singular_subsets.len());
    }
    println!();
}

fn main() {
    let dyad = Graph::from_edges(2, &[(0, 1)]);
    // below the threshold -1/lambda_min = 1: unique interior equilibrium
    show("dyad", &dyad, 0.5);
    // at the threshold the full-set system is singular; corners remain
    show("dyad", &dyad, 1.0);
    // above: interior plus both corners
    show("dyad", &dyad, 1.5);

    show("triangle", &generate::complete(3), 0.5);
    show("triangle", &generate::complete(3), 1.2);

    // a 5-cycle holds out longer (lambda_min ~ -1.618) but fragments too
    show("C5", &generate::cycle(5), 0.8);
}
