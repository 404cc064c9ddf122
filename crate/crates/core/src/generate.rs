//! Deterministic graph generators for experiments, examples, and tests.
//!
//! Random families take an explicit 64-bit seed and use a fixed ChaCha
//! stream, so the same call always yields the same graph.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, NodeId};

/// Complete graph on `n` nodes.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n as NodeId {
        for v in (u + 1)..n as NodeId {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Cycle on `n >= 3` nodes.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 nodes");
    let edges: Vec<_> = (0..n as NodeId).map(|u| (u, ((u + 1) % n as NodeId))).collect();
    Graph::from_edges(n, &edges)
}

/// Path on `n` nodes.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n as NodeId).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

/// Star with one hub (node 0) and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<_> = (1..=leaves as NodeId).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges)
}

/// The Petersen graph: outer 5-cycle, inner pentagram, five spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5u32 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges)
}

/// Erdős–Rényi graph: each of the `C(n,2)` possible edges is present
/// independently with probability `p`.
pub fn erdos_renyi(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as NodeId {
        for v in (u + 1)..n as NodeId {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Watts–Strogatz small world: ring lattice where each node links to its
/// `k/2` nearest neighbors per side, then each edge is rewired with
/// probability `beta` to a uniform non-duplicate endpoint.
pub fn watts_strogatz(n: usize, k: usize, beta: f64, seed: u64) -> Graph {
    assert!(k.is_multiple_of(2) && k < n, "k must be even and below n");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut adjacency: Vec<std::collections::BTreeSet<NodeId>> =
        vec![std::collections::BTreeSet::new(); n];
    for u in 0..n {
        for step in 1..=k / 2 {
            let v = (u + step) % n;
            adjacency[u].insert(v as NodeId);
            adjacency[v].insert(u as NodeId);
        }
    }
    for u in 0..n {
        let targets: Vec<NodeId> = adjacency[u].iter().copied().filter(|&v| v as usize > u).collect();
        for v in targets {
            if rng.random::<f64>() < beta {
                // pick a fresh endpoint for the edge (u, v)
                let mut w = rng.random_range(0..n) as NodeId;
                let mut attempts = 0;
                while (w as usize == u || adjacency[u].contains(&w)) && attempts < 32 {
                    w = rng.random_range(0..n) as NodeId;
                    attempts += 1;
                }
                if w as usize != u && !adjacency[u].contains(&w) {
                    adjacency[u].remove(&v);
                    adjacency[v as usize].remove(&(u as NodeId));
                    adjacency[u].insert(w);
                    adjacency[w as usize].insert(u as NodeId);
                }
            }
        }
    }
    let mut edges = Vec::new();
    for (u, nbrs) in adjacency.iter().enumerate() {
        for &v in nbrs {
            if (v as usize) > u {
                edges.push((u as NodeId, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Preferential attachment: each new node attaches `m` edges to existing
/// nodes picked proportionally to their current degree, giving the
/// heavy-tailed degree profile typical of social graphs.
pub fn preferential_attachment(n: usize, m: usize, seed: u64) -> Graph {
    assert!(n > m && m >= 1, "need n > m >= 1");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // endpoint multiset: node id appears once per incident edge
    let mut endpoints: Vec<NodeId> = Vec::with_capacity(2 * n * m);
    let mut edges: Vec<(NodeId, NodeId)> = Vec::with_capacity(n * m);
    // seed clique on the first m+1 nodes
    for u in 0..=(m as NodeId) {
        for v in (u + 1)..=(m as NodeId) {
            edges.push((u, v));
            endpoints.push(u);
            endpoints.push(v);
        }
    }
    for u in (m + 1)..n {
        let u = u as NodeId;
        let mut chosen: Vec<NodeId> = Vec::with_capacity(m);
        while chosen.len() < m {
            let v = endpoints[rng.random_range(0..endpoints.len())];
            if v != u && !chosen.contains(&v) {
                chosen.push(v);
            }
        }
        for v in chosen {
            edges.push((u, v));
            endpoints.push(u);
            endpoints.push(v);
        }
    }
    Graph::from_edges(n, &edges)
}

/// Overlay of a Watts–Strogatz ring and an Erdős–Rényi graph on the same
/// node set: locally clustered with random long-range shortcuts.
pub fn small_world_random_mix(n: usize, ring_k: usize, beta: f64, extra_p: f64, seed: u64) -> Graph {
    let ws = watts_strogatz(n, ring_k, beta, seed);
    let er = erdos_renyi(n, extra_p, seed.wrapping_add(1));
    let mut edges: Vec<(NodeId, NodeId)> = ws.edges().collect();
    edges.extend(er.edges());
    Graph::from_edges(n, &edges)
}
