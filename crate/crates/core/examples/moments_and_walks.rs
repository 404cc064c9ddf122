//! Spectral moments from structural counts, cross-checked against exact
//! closed-walk counts and the eigenvalue definition.
//!
//! ```bash
//! cargo run --example moments_and_walks
//! ```

use spectral_games::census::census;
use spectral_games::generate;
use spectral_games::spectral::{closed_walk_counts, extreme_eigenvalues, MomentSequence};

fn main() {
    let g = generate::petersen();
    let counts = census(&g);
    let moments = MomentSequence::from_census(&counts).unwrap();

    println!("Petersen graph: n={} e={}", counts.node_count, counts.edge_count);
    println!(
        "census: triangles={} quadrangles={} pentagons={} W2={} C_dt={}",
        counts.triangles,
        counts.quadrangles,
        counts.pentagons,
        counts.degree_square_sum,
        counts.degree_triangle_sum
    );

    // the same numbers three ways: census identities, walk counting, and
    // the average of eigenvalue powers
    let walks = closed_walk_counts(&g, 5).unwrap();
    println!("\n k   m_k (census)   n*m_k    closed k-walks");
    for k in 1..=5 {
        println!(
            "{k:>2}   {:>12.4}   {:>6}   {:>14}",
            moments.moment(k),
            moments.walk_numerators().unwrap()[k],
            walks[k - 1]
        );
    }

    let extremes = extreme_eigenvalues(&g).unwrap();
    println!(
        "\nexact spectrum extremes: lambda_min={:.6} lambda_max={:.6}",
        extremes.lambda_min, extremes.lambda_max
    );
    println!("(Petersen: 3, 1 with multiplicity 5, -2 with multiplicity 4)");
}
