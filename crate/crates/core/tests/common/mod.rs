//! Shared helpers for integration tests: brute-force oracles that recompute
//! the library's quantities by exhaustive enumeration or dense matrix
//! arithmetic, plus small corpus builders. Everything here is deliberately
//! naive and independent of the implementation paths it checks.

#![allow(dead_code)]

use spectral_games::graph::{Graph, NodeId};

/// Triangles per node by testing every 3-subset.
pub fn brute_triangles_per_node(g: &Graph) -> Vec<u64> {
    let n = g.node_count();
    let mut counts = vec![0u64; n];
    for a in 0..n as NodeId {
        for b in (a + 1)..n as NodeId {
            if !g.has_edge(a, b) {
                continue;
            }
            for c in (b + 1)..n as NodeId {
                if g.has_edge(b, c) && g.has_edge(a, c) {
                    counts[a as usize] += 1;
                    counts[b as usize] += 1;
                    counts[c as usize] += 1;
                }
            }
        }
    }
    counts
}

/// Quadrangles per node by testing the three distinct cyclic orders of
/// every 4-subset.
pub fn brute_quadrangles_per_node(g: &Graph) -> Vec<u64> {
    let n = g.node_count();
    let mut counts = vec![0u64; n];
    let nodes: Vec<NodeId> = (0..n as NodeId).collect();
    for i in 0..nodes.len() {
        for j in (i + 1)..nodes.len() {
            for k in (j + 1)..nodes.len() {
                for l in (k + 1)..nodes.len() {
                    let (a, b, c, d) = (nodes[i], nodes[j], nodes[k], nodes[l]);
                    let orders = [[a, b, c, d], [a, b, d, c], [a, c, b, d]];
                    for cycle in orders {
                        if is_cycle(g, &cycle) {
                            for v in cycle {
                                counts[v as usize] += 1;
                            }
                        }
                    }
                }
            }
        }
    }
    counts
}

/// Pentagons per node by testing the twelve distinct cyclic orders of every
/// 5-subset.
pub fn brute_pentagons_per_node(g: &Graph) -> Vec<u64> {
    let n = g.node_count();
    let mut counts = vec![0u64; n];
    let ids: Vec<NodeId> = (0..n as NodeId).collect();
    for i in 0..ids.len() {
        for j in (i + 1)..ids.len() {
            for k in (j + 1)..ids.len() {
                for l in (k + 1)..ids.len() {
                    for m in (l + 1)..ids.len() {
                        let rest = [ids[j], ids[k], ids[l], ids[m]];
                        for perm in permutations4(&rest) {
                            // fix the direction: first interior node below last
                            if perm[0] > perm[3] {
                                continue;
                            }
                            let cycle = [ids[i], perm[0], perm[1], perm[2], perm[3]];
                            if is_cycle(g, &cycle) {
                                for v in cycle {
                                    counts[v as usize] += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    counts
}

fn is_cycle(g: &Graph, nodes: &[NodeId]) -> bool {
    (0..nodes.len()).all(|i| g.has_edge(nodes[i], nodes[(i + 1) % nodes.len()]))
}

fn permutations4(items: &[NodeId; 4]) -> Vec<[NodeId; 4]> {
    let mut out = Vec::with_capacity(24);
    let mut pool = *items;
    permute(&mut pool, 0, &mut out);
    out
}

fn permute(pool: &mut [NodeId; 4], start: usize, out: &mut Vec<[NodeId; 4]>) {
    if start == 4 {
        out.push(*pool);
        return;
    }
    for i in start..4 {
        pool.swap(start, i);
        permute(pool, start + 1, out);
        pool.swap(start, i);
    }
}

/// Closed-walk counts for `k = 1..=k_max` by dense integer matrix powers.
pub fn brute_closed_walks(g: &Graph, k_max: usize) -> Vec<u64> {
    let n = g.node_count();
    let mut adjacency = vec![vec![0u64; n]; n];
    for (u, v) in g.edges() {
        adjacency[u as usize][v as usize] = 1;
        adjacency[v as usize][u as usize] = 1;
    }
    let mut power = adjacency.clone();
    let mut traces = Vec::with_capacity(k_max);
    traces.push((0..n).map(|i| power[i][i]).sum());
    for _ in 1..k_max {
        power = matmul(&power, &adjacency);
        traces.push((0..n).map(|i| power[i][i]).sum());
    }
    traces
}

fn matmul(a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut out = vec![vec![0u64; n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

/// Bipartiteness by trying every 2-coloring. Exponential; keep n small.
pub fn brute_is_bipartite(g: &Graph) -> bool {
    let n = g.node_count();
    assert!(n <= 20);
    let edges: Vec<_> = g.edges().collect();
    (0u32..(1 << n)).any(|mask| {
        edges.iter().all(|&(u, v)| (mask >> u & 1) != (mask >> v & 1))
    })
}

/// BFS distances from `seed`, `usize::MAX` when unreachable.
pub fn bfs_distances(g: &Graph, seed: NodeId) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.node_count()];
    dist[seed as usize] = 0;
    let mut queue = std::collections::VecDeque::from([seed]);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if dist[v as usize] == usize::MAX {
                dist[v as usize] = dist[u as usize] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

/// Every graph on exactly `n <= 5` labeled nodes, by edge-set bitmask.
pub fn all_graphs_on(n: usize) -> Vec<Graph> {
    let slots: Vec<(NodeId, NodeId)> = {
        let mut v = Vec::new();
        for a in 0..n as NodeId {
            for b in (a + 1)..n as NodeId {
                v.push((a, b));
            }
        }
        v
    };
    assert!(slots.len() <= 20);
    (0u32..(1 << slots.len()))
        .map(|mask| {
            let edges: Vec<_> = slots
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges)
        })
        .collect()
}

/// A deterministic mixed corpus of named small graphs.
pub fn named_small_graphs() -> Vec<(String, Graph)> {
    use spectral_games::generate;
    let mut graphs: Vec<(String, Graph)> = vec![
        ("empty1".into(), Graph::empty(1)),
        ("empty4".into(), Graph::empty(4)),
        ("edge".into(), Graph::from_edges(2, &[(0, 1)])),
        ("petersen".into(), generate::petersen()),
        (
            "triangle+edge".into(),
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (3, 4)]),
        ),
        (
            "bull".into(),
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (1, 3), (2, 4)]),
        ),
        (
            "complete_bipartite_2_3".into(),
            Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
        ),
        (
            "complete_bipartite_3_3".into(),
            Graph::from_edges(
                6,
                &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
            ),
        ),
    ];
    for k in 3..=8 {
        graphs.push((format!("complete{k}"), generate::complete(k)));
        graphs.push((format!("cycle{k}"), generate::cycle(k)));
        graphs.push((format!("path{k}"), generate::path(k)));
        graphs.push((format!("star{k}"), generate::star(k)));
    }
    graphs
}
