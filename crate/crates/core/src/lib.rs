//! From local network structure to game equilibria, via the adjacency
//! spectrum.
//!
//! The pipeline this crate implements:
//!
//! 1. **Census** — count edges, triangles, quadrangles, and pentagons
//!    around every node of a simple undirected graph, plus the squared-degree
//!    sum and the degree-triangle correlation ([`census`]).
//! 2. **Moments** — those counts determine the first five spectral moments
//!    of the adjacency matrix exactly, through closed-walk identities
//!    ([`spectral`]).
//! 3. **Bounds** — truncated moments squeeze the extreme eigenvalues from
//!    inside: Hankel localizing matrices give `α_s ≥ λ_min` and
//!    `β_s ≤ λ_max`, by one-variable semidefinite bisection or in closed
//!    form from a cubic at order two ([`bounds`]).
//! 4. **Games** — for network games with linear best responses, `-1/λ_min`
//!    is the uniqueness and stability threshold for Nash equilibria; the
//!    game layer enumerates equilibria exactly, certifies uniqueness,
//!    classifies stability, and integrates best-response dynamics
//!    ([`game`]).
//!
//! Ego-network sampling and a batch experiment pipeline ([`experiment`])
//! connect the machinery to graphs ingested from edge-list files. Each
//! major capability has a runnable demo under `examples/`.
//!
//! ```
//! use spectral_games::{census, enumerate_equilibria, extreme_eigenvalues};
//! use spectral_games::{Graph, GameConfig, MomentSequence, support_bounds_analytic};
//!
//! // pentagon: three distinct eigenvalues, so five moments pin down both extremes
//! let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
//! let moments = MomentSequence::from_census(&census(&g))?;
//! let bounds = support_bounds_analytic(&moments)?;
//! let exact = extreme_eigenvalues(&g)?;
//! assert!((bounds.alpha - exact.lambda_min).abs() < 1e-8);
//! assert!((bounds.beta - exact.lambda_max).abs() < 1e-8);
//!
//! // below the threshold -1/lambda_min the game has one equilibrium
//! let delta = 0.9 * (-1.0 / exact.lambda_min);
//! let outcome = enumerate_equilibria(&GameConfig::new(&g, delta)?, 25)?;
//! assert_eq!(outcome.equilibria.len(), 1);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

#![forbid(unsafe_code)]

pub mod bounds;
pub mod census;
pub mod cubic;
pub mod experiment;
pub mod game;
pub mod generate;
pub mod graph;
pub mod report;
pub mod spectral;

pub use bounds::{SupportBounds, support_bounds_analytic, support_bounds_bisect};
pub use census::{StructuralCensus, census};
pub use game::{ActionProfile, GameConfig, enumerate_equilibria};
pub use graph::{Graph, LoadOptions, load_edge_list};
pub use spectral::{MomentSequence, closed_walk_counts, extreme_eigenvalues};
