//! Uniqueness certificates from exact eigenvalues, the moment-bound
//! estimate of the threshold, and what actually happens at the boundary on
//! an irregular graph.
//!
//! ```bash
//! cargo run --example uniqueness_and_stability
//! ```

use spectral_games::game::{
    enumerate_equilibria, interior_equilibrium, uniqueness_certificate, GameConfig,
};
use spectral_games::generate;
use spectral_games::spectral::extreme_eigenvalues;

fn main() {
    let g = generate::erdos_renyi(9, 0.4, 21);
    let lambda_min = extreme_eigenvalues(&g).unwrap().lambda_min;
    println!(
        "random graph: n={} e={} lambda_min={:.4} -> uniqueness threshold {:.4}\n",
        g.node_count(),
        g.edge_count(),
        lambda_min,
        -1.0 / lambda_min
    );

    for factor in [0.5, 0.9, 1.1] {
        let delta = factor * (-1.0 / lambda_min);
        let cfg = GameConfig::new(&g, delta).unwrap();
        let cert = uniqueness_certificate(&cfg).unwrap();
        let count = enumerate_equilibria(&cfg, 10).unwrap().equilibria.len();
        println!(
            "delta = {delta:.4} ({factor} x threshold): status {:?}, {} equilibrium(s)",
            cert.status, count
        );
        println!(
            "  threshold exact -1/lambda_min = {:.4}, moment estimate -1/alpha_2 = {:.4} (upper estimate, never a certificate)",
            cert.threshold_exact, cert.threshold_estimate
        );
    }

    // on irregular graphs the unique equilibrium near the threshold can be
    // a corner: the star's hub shuts down well before delta reaches 1/2
    let star = generate::star(4);
    let cfg = GameConfig::new(&star, 0.45).unwrap();
    let cert = uniqueness_certificate(&cfg).unwrap();
    let outcome = enumerate_equilibria(&cfg, 10).unwrap();
    println!(
        "\nstar K_1,4 at delta = 0.45 < 0.5 = threshold: status {:?}, {} equilibrium(s)",
        cert.status,
        outcome.equilibria.len()
    );
    let eq = &outcome.equilibria[0];
    println!(
        "  unique equilibrium x = {:?}, active set {:?}, stable = {}",
        eq.profile.actions(),
        eq.active_set,
        eq.stable
    );
    match interior_equilibrium(&cfg) {
        Ok(_) => println!("  full-set solve is positive"),
        Err(e) => println!("  full-set solve refused: {e}"),
    }
}
