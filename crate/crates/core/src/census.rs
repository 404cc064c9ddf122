//! Per-node and aggregate counts of the substructures that determine the
//! first five spectral moments: degrees, triangles, quadrangles, pentagons,
//! the sum of squared degrees, and the degree-triangle correlation.
//!
//! Counts are plain `u64` sums over an immutable graph, so every function
//! here is deterministic and safe to call from parallel workers.

use serde::Serialize;

use crate::graph::Graph;

/// Structural counts of a graph.
///
/// Totals relate to the per-node vectors by `sum(t_i) = 3 * triangles`,
/// `sum(q_i) = 4 * quadrangles`, `sum(p_i) = 5 * pentagons`: a k-cycle
/// touches exactly k nodes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralCensus {
    pub node_count: usize,
    pub edge_count: u64,
    pub degrees: Vec<u64>,
    pub triangles_per_node: Vec<u64>,
    pub quadrangles_per_node: Vec<u64>,
    pub pentagons_per_node: Vec<u64>,
    /// Total number of 3-cycles.
    pub triangles: u64,
    /// Total number of 4-cycles.
    pub quadrangles: u64,
    /// Total number of 5-cycles.
    pub pentagons: u64,
    /// Sum of squared degrees.
    pub degree_square_sum: u64,
    /// Sum over nodes of degree times triangle count.
    pub degree_triangle_sum: u64,
}

/// Number of triangles containing each node, by sorted-adjacency
/// intersection over edges. Each triangle `u < v < w` is found once at its
/// lowest edge and credited to all three nodes.
pub fn triangle_counts(g: &Graph) -> Vec<u64> {
    let n = g.node_count();
    let mut counts = vec![0u64; n];
    for (u, v) in g.edges() {
        // common neighbors w > v close a triangle u < v < w exactly once
        let nu = g.neighbors(u);
        let nv = g.neighbors(v);
        let mut i = nu.partition_point(|&x| x <= v);
        let mut j = nv.partition_point(|&x| x <= v);
        while i < nu.len() && j < nv.len() {
            let (a, b) = (nu[i], nv[j]);
            if a == b {
                counts[u as usize] += 1;
                counts[v as usize] += 1;
                counts[a as usize] += 1;
                i += 1;
                j += 1;
            } else if a < b {
                i += 1;
            } else {
                j += 1;
            }
        }
    }
    counts
}

/// Number of quadrangles (4-cycles) containing each node.
///
/// A 4-cycle through `i` is determined by its opposite vertex `j` and an
/// unordered pair of common neighbors of `i` and `j`, so
/// `q_i = sum_j C(|N(i) ∩ N(j)|, 2)`. Common-neighbor counts for all `j`
/// come from one pass over the 2-walks leaving `i`.
pub fn quadrangle_counts(g: &Graph) -> Vec<u64> {
    let n = g.node_count();
    let mut counts = vec![0u64; n];
    let mut common = vec![0u64; n];
    let mut touched: Vec<u32> = Vec::new();
    for i in 0..n as u32 {
        for &a in g.neighbors(i) {
            for &j in g.neighbors(a) {
                if j != i {
                    if common[j as usize] == 0 {
                        touched.push(j);
                    }
                    common[j as usize] += 1;
                }
            }
        }
        let mut q = 0u64;
        for &j in &touched {
            let c = common[j as usize];
            q += c * (c - 1) / 2;
            common[j as usize] = 0;
        }
        touched.clear();
        counts[i as usize] = q;
    }
    counts
}

/// Number of pentagons (5-cycles) containing each node.
///
/// For each start node `i`, walks `i -> a -> b -> c` with distinct nodes are
/// enumerated; the closing vertices `d ∈ N(c) ∩ N(i) \ {a, b}` are counted
/// from a precomputed common-neighbor table rather than a fourth loop. The
/// directed count is halved because each pentagon is traversed both ways.
pub fn pentagon_counts(g: &Graph) -> Vec<u64> {
    let n = g.node_count();
    let mut counts = vec![0u64; n];
    // common[x] = |N(i) ∩ N(x)| for the current i
    let mut common = vec![0u64; n];
    let mut touched: Vec<u32> = Vec::new();
    let mut seed_adjacent = vec![false; n];
    let mut first_adjacent = vec![false; n];

    for i in 0..n as u32 {
        for &a in g.neighbors(i) {
            seed_adjacent[a as usize] = true;
            for &x in g.neighbors(a) {
                if x != i {
                    if common[x as usize] == 0 {
                        touched.push(x);
                    }
                    common[x as usize] += 1;
                }
            }
        }

        let mut closed_walks = 0u64;
        for &a in g.neighbors(i) {
            for &x in g.neighbors(a) {
                first_adjacent[x as usize] = true;
            }
            for &b in g.neighbors(a) {
                if b == i {
                    continue;
                }
                let b_closes = seed_adjacent[b as usize]; // b ∈ N(i), so b is a candidate d
                for &c in g.neighbors(b) {
                    if c == i || c == a {
                        continue;
                    }
                    // candidates d ∈ N(c) ∩ N(i); drop d = a and d = b
                    let mut ways = common[c as usize];
                    if first_adjacent[c as usize] {
                        ways -= 1;
                    }
                    if b_closes {
                        ways -= 1;
                    }
                    closed_walks += ways;
                }
            }
            for &x in g.neighbors(a) {
                first_adjacent[x as usize] = false;
            }
        }

        for &x in &touched {
            common[x as usize] = 0;
        }
        touched.clear();
        for &a in g.neighbors(i) {
            seed_adjacent[a as usize] = false;
        }
        counts[i as usize] = closed_walks / 2;
    }
    counts
}

/// Full structural census of a graph.
pub fn census(g: &Graph) -> StructuralCensus {
    let degrees: Vec<u64> = g.degree_sequence().iter().map(|&d| d as u64).collect();
    let triangles_per_node = triangle_counts(g);
    let quadrangles_per_node = quadrangle_counts(g);
    let pentagons_per_node = pentagon_counts(g);

    let t_sum: u64 = triangles_per_node.iter().sum();
    let q_sum: u64 = quadrangles_per_node.iter().sum();
    let p_sum: u64 = pentagons_per_node.iter().sum();
    debug_assert_eq!(t_sum % 3, 0);
    debug_assert_eq!(q_sum % 4, 0);
    debug_assert_eq!(p_sum % 5, 0);

    StructuralCensus {
        node_count: g.node_count(),
        edge_count: g.edge_count() as u64,
        degree_square_sum: degrees.iter().map(|&d| d * d).sum(),
        degree_triangle_sum: degrees.iter().zip(&triangles_per_node).map(|(&d, &t)| d * t).sum(),
        triangles: t_sum / 3,
        quadrangles: q_sum / 4,
        pentagons: p_sum / 5,
        degrees,
        triangles_per_node,
        quadrangles_per_node,
        pentagons_per_node,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn triangle_counts_on_small_graphs() {
        let k3 = generate::complete(3);
        assert_eq!(triangle_counts(&k3), vec![1, 1, 1]);
        assert_eq!(census(&k3).triangles, 1);

        let k4 = generate::complete(4);
        assert_eq!(triangle_counts(&k4), vec![3, 3, 3, 3]);
        assert_eq!(census(&k4).triangles, 4);

        let c5 = generate::cycle(5);
        assert_eq!(triangle_counts(&c5), vec![0; 5]);
    }

    #[test]
    fn quadrangle_counts_on_small_graphs() {
        let c4 = generate::cycle(4);
        assert_eq!(quadrangle_counts(&c4), vec![1, 1, 1, 1]);
        assert_eq!(census(&c4).quadrangles, 1);

        let k4 = generate::complete(4);
        assert_eq!(quadrangle_counts(&k4), vec![3, 3, 3, 3]);
        assert_eq!(census(&k4).quadrangles, 3);

        assert_eq!(census(&generate::petersen()).quadrangles, 0);
    }

    #[test]
    fn pentagon_counts_on_small_graphs() {
        let c5 = generate::cycle(5);
        assert_eq!(pentagon_counts(&c5), vec![1, 1, 1, 1, 1]);
        assert_eq!(census(&c5).pentagons, 1);

        let k4 = generate::complete(4);
        assert_eq!(census(&k4).pentagons, 0);

        let petersen = generate::petersen();
        assert_eq!(pentagon_counts(&petersen), vec![6; 10]);
        assert_eq!(census(&petersen).pentagons, 12);
    }

    #[test]
    fn census_aggregates_k4() {
        let c = census(&generate::complete(4));
        assert_eq!(c.node_count, 4);
        assert_eq!(c.edge_count, 6);
        assert_eq!(c.triangles, 4);
        assert_eq!(c.quadrangles, 3);
        assert_eq!(c.pentagons, 0);
        assert_eq!(c.degree_square_sum, 36);
        assert_eq!(c.degree_triangle_sum, 36);
    }

    #[test]
    fn census_of_empty_graph() {
        let c = census(&Graph::empty(5));
        assert_eq!(c.node_count, 5);
        assert_eq!(c.edge_count, 0);
        assert_eq!(c.triangles, 0);
        assert_eq!(c.quadrangles, 0);
        assert_eq!(c.pentagons, 0);
        assert_eq!(c.degree_square_sum, 0);
        assert_eq!(c.degree_triangle_sum, 0);
    }
}
