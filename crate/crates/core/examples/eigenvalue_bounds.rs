//! Inner bounds on the extreme eigenvalues from five moments, by the
//! closed-form cubic and by PSD bisection, against the exact values.
//!
//! ```bash
//! cargo run --example eigenvalue_bounds
//! ```

use spectral_games::bounds::{
    support_bounds_analytic, support_bounds_analytic_order1, support_bounds_bisect,
};
use spectral_games::census::census;
use spectral_games::generate;
use spectral_games::graph::Graph;
use spectral_games::spectral::{extreme_eigenvalues, MomentSequence};

fn show(name: &str, g: &Graph) {
    let moments = MomentSequence::from_census(&census(g)).unwrap();
    let exact = extreme_eigenvalues(g).unwrap();
    let order1 = support_bounds_analytic_order1(&moments).unwrap();
    let order2 = support_bounds_analytic(&moments).unwrap();
    let bisect = support_bounds_bisect(&moments, 2).unwrap();

    println!("{name}  (n={}, e={})", g.node_count(), g.edge_count());
    println!("  exact:            lambda_min={:+.6}  lambda_max={:+.6}", exact.lambda_min, exact.lambda_max);
    println!("  order 1 analytic: alpha1    ={:+.6}  beta1     ={:+.6}", order1.alpha, order1.beta);
    println!(
        "  order 2 analytic: alpha2    ={:+.6}  beta2     ={:+.6}{}",
        order2.alpha,
        order2.beta,
        if order2.degenerate { "  (fell back to order 1: under three atoms)" } else { "" }
    );
    println!(
        "  order 2 bisection: alpha2   ={:+.6}  beta2     ={:+.6}  ({} iterations)",
        bisect.alpha,
        bisect.beta,
        bisect.iterations.unwrap()
    );
    println!();
}

fn main() {
    println!("inner bounds: lambda_min <= alpha2 <= alpha1 and beta1 <= beta2 <= lambda_max\n");
    // two-atom spectrum: order 1 already exact, order 2 degenerates
    show("K6 (complete)", &generate::complete(6));
    // three-atom spectrum: five moments determine it, order 2 is exact
    show("C5 (pentagon)", &generate::cycle(5));
    show("Petersen", &generate::petersen());
    // generic sparse graph: bounds are strict but ordered
    show("G(40, 0.15)", &generate::erdos_renyi(40, 0.15, 7));
}
