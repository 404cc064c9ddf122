//! Load a (dirty) edge list and count its substructures.
//!
//! ```bash
//! cargo run --example load_and_census
//! ```

use spectral_games::census::census;
use spectral_games::graph::{load_edge_list, LoadOptions};

fn main() {
    // crawled edge lists are rarely clean: comments, duplicates, self-loops
    let text = "\
# a small friendship snapshot
alice bob
bob carol
carol alice
bob carol
dave dave
carol dave
";
    let loaded = load_edge_list(text.as_bytes(), &LoadOptions::default()).unwrap();
    println!(
        "loaded {} nodes, {} edges ({} duplicate edges merged, {} self-loops dropped)",
        loaded.graph.node_count(),
        loaded.graph.edge_count(),
        loaded.duplicate_edges,
        loaded.self_loops_dropped
    );

    let counts = census(&loaded.graph);
    println!("\naggregate census:");
    println!("  triangles           {}", counts.triangles);
    println!("  quadrangles         {}", counts.quadrangles);
    println!("  pentagons           {}", counts.pentagons);
    println!("  sum of d_i^2        {}", counts.degree_square_sum);
    println!("  sum of d_i * t_i    {}", counts.degree_triangle_sum);

    println!("\nper node:");
    for i in 0..loaded.graph.node_count() as u32 {
        println!(
            "  {:<6} degree {}  triangles {}",
            loaded.graph.label(i).unwrap(),
            counts.degrees[i as usize],
            counts.triangles_per_node[i as usize]
        );
    }
}
