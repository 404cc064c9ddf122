//! Spectral-layer invariants over a mixed corpus: moment inequalities,
//! eigenvalue bounds from degrees, and the bipartite symmetry of the
//! spectrum.

mod common;

use spectral_games::census::census;
use spectral_games::generate;
use spectral_games::graph::Graph;
use spectral_games::spectral::{extreme_eigenvalues, MomentSequence};

fn corpus() -> Vec<Graph> {
    let mut graphs: Vec<Graph> =
        common::named_small_graphs().into_iter().map(|(_, g)| g).collect();
    for seed in 0..40 {
        graphs.push(generate::erdos_renyi(10, 0.3, 40_000 + seed));
    }
    graphs.push(generate::watts_strogatz(120, 6, 0.2, 8));
    graphs.push(generate::preferential_attachment(150, 3, 9));
    graphs
}

#[test]
fn moment_inequalities_on_census_sequences() {
    for g in corpus() {
        let m = MomentSequence::from_census(&census(&g)).unwrap();
        assert_eq!(m.moment(0), 1.0);
        assert_eq!(m.moment(1), 0.0, "simple graphs have a zero diagonal");
        assert!(m.moment(2) >= 0.0);
        // Cauchy-Schwarz on the spectral density
        assert!(m.moment(4) >= m.moment(2) * m.moment(2) - 1e-9);
        if m.moment(2) == 0.0 {
            assert_eq!(m.moment(3), 0.0);
            assert_eq!(m.moment(4), 0.0);
            assert_eq!(m.moment(5), 0.0);
        }
    }
}

#[test]
fn extremes_bounded_by_degrees() {
    for g in corpus() {
        if g.node_count() == 0 {
            continue;
        }
        let ext = extreme_eigenvalues(&g).unwrap();
        let max_degree = g.degree_sequence().into_iter().max().unwrap_or(0) as f64;
        let avg_degree = 2.0 * g.edge_count() as f64 / g.node_count() as f64;
        assert!(ext.lambda_min <= 0.0 + 1e-12);
        assert!(ext.lambda_max <= max_degree + 1e-9);
        assert!(ext.lambda_max >= avg_degree - 1e-9);
        if g.edge_count() > 0 {
            assert!(ext.lambda_min <= -1.0 + 1e-9, "a graph with an edge has lambda_min <= -1");
            assert!(ext.lambda_max >= -ext.lambda_min - 1e-9);
        }
    }
}

#[test]
fn walk_identity_holds_at_medium_scale() {
    // the full chain on a graph big enough to exercise indexing paths that
    // tiny corpora cannot
    let g = generate::erdos_renyi(40, 0.2, 123);
    let m = MomentSequence::from_census(&census(&g)).unwrap();
    let walks = spectral_games::spectral::closed_walk_counts(&g, 5).unwrap();
    let dense = common::brute_closed_walks(&g, 5);
    for k in 1..=5 {
        assert_eq!(m.walk_numerators().unwrap()[k], walks[k - 1]);
        assert_eq!(walks[k - 1], dense[k - 1]);
    }
}

#[test]
fn bipartite_spectra_are_symmetric() {
    for g in corpus() {
        if g.edge_count() == 0 || !g.is_bipartite().bipartite {
            continue;
        }
        let ext = extreme_eigenvalues(&g).unwrap();
        assert!(
            (ext.lambda_min + ext.lambda_max).abs() < 1e-9,
            "bipartite spectrum must be symmetric: {ext:?}"
        );
    }
}
