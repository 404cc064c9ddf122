//! BFS ego-network extraction: the local view of a node out to a fixed
//! radius, with the original identifiers preserved as labels.
//!
//! ```bash
//! cargo run --example ego_sampling
//! ```

use spectral_games::census::census;
use spectral_games::generate;

fn main() {
    let g = generate::small_world_random_mix(500, 6, 0.1, 0.005, 42);
    println!("parent graph: n={} e={}", g.node_count(), g.edge_count());

    let seed = 123;
    for radius in 0..=3 {
        let ego = g.ego_subgraph(seed, radius).unwrap();
        let counts = census(&ego);
        println!(
            "radius {radius}: n={:<4} e={:<5} triangles={:<5} pentagons={}",
            counts.node_count, counts.edge_count, counts.triangles, counts.pentagons
        );
    }

    let ego = g.ego_subgraph(seed, 1).unwrap();
    println!("\nradius-1 neighborhood of node {seed} as an edge list:");
    for (u, v) in ego.edges() {
        println!("{} {}", ego.label(u).unwrap(), ego.label(v).unwrap());
    }
}
