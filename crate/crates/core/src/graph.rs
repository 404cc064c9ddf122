//! Simple undirected graphs with sorted adjacency lists.
//!
//! Graphs are immutable after construction: every analysis in this crate
//! takes `&Graph` and can run on shared references across threads. Node ids
//! are dense `0..n`; when a graph is loaded from an edge list or cut out of
//! a larger graph, the original identifiers are kept in a label table.

use std::collections::HashMap;
use std::collections::VecDeque;
use std::io::BufRead;

use thiserror::Error;

/// Internal node identifier, always in `0..node_count`.
pub type NodeId = u32;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("node {0} out of range: graph has {1} nodes")]
    NodeOutOfRange(NodeId, usize),
}

/// Errors from [`load_edge_list`].
#[derive(Debug, Error)]
pub enum LoadError {
    #[error("line {line}: expected two node tokens, found {found}")]
    TokenCount { line: usize, found: usize },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// An immutable simple undirected graph.
///
/// Invariants, enforced by every constructor:
/// - symmetry: `j ∈ neighbors(i)` iff `i ∈ neighbors(j)`
/// - no self-loops, no duplicate neighbors
/// - each adjacency list strictly increasing
/// - `edge_count` is half the sum of adjacency-list lengths
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<NodeId>>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a graph on `n` nodes from an edge list. Duplicate edges are
    /// merged silently.
    ///
    /// Panics on self-loops or out-of-range endpoints; use
    /// [`load_edge_list`] for untrusted input.
    pub fn from_edges(n: usize, edges: &[(NodeId, NodeId)]) -> Graph {
        for &(u, v) in edges {
            assert!(u != v, "self-loop at node {u}");
            assert!((u as usize) < n && (v as usize) < n, "edge ({u},{v}) out of range for {n} nodes");
        }
        let (adjacency, edge_count) = build_adjacency(n, edges.iter().copied());
        Graph { adjacency, edge_count, labels: None }
    }

    /// Graph with `n` nodes and no edges.
    pub fn empty(n: usize) -> Graph {
        Graph { adjacency: vec![Vec::new(); n], edge_count: 0, labels: None }
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Neighbors of `i` in strictly increasing order.
    pub fn neighbors(&self, i: NodeId) -> &[NodeId] {
        &self.adjacency[i as usize]
    }

    pub fn degree(&self, i: NodeId) -> usize {
        self.adjacency[i as usize].len()
    }

    pub fn has_edge(&self, i: NodeId, j: NodeId) -> bool {
        self.adjacency[i as usize].binary_search(&j).is_ok()
    }

    /// Iterates every edge once as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, nbrs)| {
            let u = u as NodeId;
            nbrs.iter().copied().filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    /// Original identifier of node `i`, if this graph carries a label table.
    pub fn label(&self, i: NodeId) -> Option<&str> {
        self.labels.as_ref().map(|l| l[i as usize].as_str())
    }

    /// Looks up an internal id by original identifier.
    pub fn resolve_label(&self, label: &str) -> Option<NodeId> {
        let labels = self.labels.as_ref()?;
        labels.iter().position(|l| l == label).map(|i| i as NodeId)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    /// Tests whether every connected component admits a proper 2-coloring.
    /// On success the witness coloring (0/1 per node) is returned.
    pub fn is_bipartite(&self) -> BipartiteCheck {
        let (ok, coloring) = self.two_color();
        BipartiteCheck { bipartite: ok, coloring: if ok { Some(coloring) } else { None } }
    }

    /// True when at least one connected component is bipartite. Isolated
    /// nodes count as (trivially) bipartite components.
    pub fn has_bipartite_component(&self) -> bool {
        let n = self.node_count();
        let mut color = vec![u8::MAX; n];
        let mut queue = VecDeque::new();
        for start in 0..n as NodeId {
            if color[start as usize] != u8::MAX {
                continue;
            }
            color[start as usize] = 0;
            queue.push_back(start);
            let mut component_ok = true;
            while let Some(u) = queue.pop_front() {
                for &v in self.neighbors(u) {
                    if color[v as usize] == u8::MAX {
                        color[v as usize] = 1 - color[u as usize];
                        queue.push_back(v);
                    } else if color[v as usize] == color[u as usize] {
                        component_ok = false;
                    }
                }
            }
            if component_ok {
                return true;
            }
        }
        false
    }

    /// Subgraph induced on `nodes`, relabeled densely in the given order.
    /// The returned graph's label table records the original identifiers
    /// (labels of `self` when present, otherwise the node ids themselves).
    pub fn induced_subgraph(&self, nodes: &[NodeId]) -> Result<Graph, GraphError> {
        let n = self.node_count();
        let mut remap: HashMap<NodeId, NodeId> = HashMap::with_capacity(nodes.len());
        for (new_id, &old) in nodes.iter().enumerate() {
            if old as usize >= n {
                return Err(GraphError::NodeOutOfRange(old, n));
            }
            remap.insert(old, new_id as NodeId);
        }
        let mut edges = Vec::new();
        for &old_u in nodes {
            let new_u = remap[&old_u];
            for &old_v in self.neighbors(old_u) {
                if old_v > old_u {
                    if let Some(&new_v) = remap.get(&old_v) {
                        edges.push((new_u, new_v));
                    }
                }
            }
        }
        let (adjacency, edge_count) = build_adjacency(nodes.len(), edges.into_iter());
        let labels = nodes
            .iter()
            .map(|&old| match self.label(old) {
                Some(l) => l.to_string(),
                None => old.to_string(),
            })
            .collect();
        Ok(Graph { adjacency, edge_count, labels: Some(labels) })
    }

    /// Subgraph induced on all nodes at BFS distance at most `radius` from
    /// `seed`, including every edge of `self` between them. Nodes reached by
    /// the BFS but with no within-radius edges stay in the subgraph.
    pub fn ego_subgraph(&self, seed: NodeId, radius: usize) -> Result<Graph, GraphError> {
        let n = self.node_count();
        if seed as usize >= n {
            return Err(GraphError::NodeOutOfRange(seed, n));
        }
        let mut dist = vec![usize::MAX; n];
        let mut order = vec![seed];
        dist[seed as usize] = 0;
        let mut queue = VecDeque::from([seed]);
        while let Some(u) = queue.pop_front() {
            if dist[u as usize] == radius {
                continue;
            }
            for &v in self.neighbors(u) {
                if dist[v as usize] == usize::MAX {
                    dist[v as usize] = dist[u as usize] + 1;
                    order.push(v);
                    queue.push_back(v);
                }
            }
        }
        self.induced_subgraph(&order)
    }

    fn two_color(&self) -> (bool, Vec<u8>) {
        let n = self.node_count();
        let mut color = vec![u8::MAX; n];
        let mut ok = true;
        let mut queue = VecDeque::new();
        for start in 0..n as NodeId {
            if color[start as usize] != u8::MAX {
                continue;
            }
            color[start as usize] = 0;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &v in self.neighbors(u) {
                    if color[v as usize] == u8::MAX {
                        color[v as usize] = 1 - color[u as usize];
                        queue.push_back(v);
                    } else if color[v as usize] == color[u as usize] {
                        ok = false;
                    }
                }
            }
        }
        (ok, color)
    }
}

/// Result of [`Graph::is_bipartite`].
#[derive(Debug, Clone)]
pub struct BipartiteCheck {
    pub bipartite: bool,
    pub coloring: Option<Vec<u8>>,
}

/// Options for [`load_edge_list`].
#[derive(Debug, Clone)]
pub struct LoadOptions {
    /// Explicit field delimiter. `None` splits on runs of whitespace or
    /// commas, which covers both plain and CSV-style edge lists.
    pub delimiter: Option<char>,
    /// Lines whose first non-space character matches are skipped.
    pub comment_prefix: Option<char>,
}

impl Default for LoadOptions {
    fn default() -> Self {
        LoadOptions { delimiter: None, comment_prefix: Some('#') }
    }
}

/// A graph loaded from an edge list, plus counts of the input defects that
/// were normalized away. Crawled edge lists are routinely dirty; repeated
/// and self-loop lines are data to report, not reasons to fail.
#[derive(Debug)]
pub struct LoadedGraph {
    pub graph: Graph,
    /// Lines `u u` dropped because simple graphs carry no self-loops.
    pub self_loops_dropped: usize,
    /// Edge lines beyond the first naming the same unordered pair.
    pub duplicate_edges: usize,
}

/// Parses a whitespace- or comma-separated edge list: one edge per line,
/// two tokens per line. External identifiers are remapped to dense internal
/// ids `0..n` in first-seen order; the originals are kept as labels.
///
/// Empty input yields the empty graph.
pub fn load_edge_list<R: BufRead>(reader: R, options: &LoadOptions) -> Result<LoadedGraph, LoadError> {
    let mut ids: HashMap<String, NodeId> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut pairs: Vec<(NodeId, NodeId)> = Vec::new();
    let mut self_loops = 0usize;

    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(prefix) = options.comment_prefix {
            if trimmed.starts_with(prefix) {
                continue;
            }
        }
        let tokens: Vec<&str> = match options.delimiter {
            Some(d) => trimmed.split(d).map(str::trim).filter(|t| !t.is_empty()).collect(),
            None => trimmed
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .collect(),
        };
        if tokens.len() != 2 {
            return Err(LoadError::TokenCount { line: line_no, found: tokens.len() });
        }
        let u = intern(tokens[0], &mut ids, &mut labels);
        let v = intern(tokens[1], &mut ids, &mut labels);
        if u == v {
            self_loops += 1;
            continue;
        }
        pairs.push((u, v));
    }

    let raw = pairs.len();
    let (adjacency, edge_count) = build_adjacency(labels.len(), pairs.into_iter());
    let labels = if labels.is_empty() { None } else { Some(labels) };
    Ok(LoadedGraph {
        graph: Graph { adjacency, edge_count, labels },
        self_loops_dropped: self_loops,
        duplicate_edges: raw - edge_count,
    })
}

fn intern(token: &str, ids: &mut HashMap<String, NodeId>, labels: &mut Vec<String>) -> NodeId {
    if let Some(&id) = ids.get(token) {
        return id;
    }
    let id = labels.len() as NodeId;
    ids.insert(token.to_string(), id);
    labels.push(token.to_string());
    id
}

/// Sorted, deduplicated symmetric adjacency from an iterator of endpoint
/// pairs. Returns the lists and the number of distinct edges.
fn build_adjacency(n: usize, edges: impl Iterator<Item = (NodeId, NodeId)>) -> (Vec<Vec<NodeId>>, usize) {
    let mut adjacency = vec![Vec::new(); n];
    for (u, v) in edges {
        adjacency[u as usize].push(v);
        adjacency[v as usize].push(u);
    }
    let mut half_edges = 0usize;
    for list in &mut adjacency {
        list.sort_unstable();
        list.dedup();
        half_edges += list.len();
    }
    (adjacency, half_edges / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(text: &str) -> LoadedGraph {
        load_edge_list(text.as_bytes(), &LoadOptions::default()).unwrap()
    }

    #[test]
    fn loads_two_edge_path() {
        let loaded = load("0 1\n1 2");
        let g = &loaded.graph;
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(loaded.self_loops_dropped, 0);
        assert_eq!(loaded.duplicate_edges, 0);
    }

    #[test]
    fn deduplicates_and_symmetrizes() {
        let loaded = load("0 1\n1 0\n0 1");
        assert_eq!(loaded.graph.node_count(), 2);
        assert_eq!(loaded.graph.edge_count(), 1);
        assert_eq!(loaded.duplicate_edges, 2);
    }

    #[test]
    fn drops_self_loops_with_warning() {
        let loaded = load("3 3\n3 4");
        assert_eq!(loaded.graph.node_count(), 2);
        assert_eq!(loaded.graph.edge_count(), 1);
        assert_eq!(loaded.self_loops_dropped, 1);
        // First-seen remapping: "3" -> 0, "4" -> 1.
        assert_eq!(loaded.graph.label(0), Some("3"));
        assert_eq!(loaded.graph.label(1), Some("4"));
    }

    #[test]
    fn empty_input_is_empty_graph() {
        let loaded = load("");
        assert_eq!(loaded.graph.node_count(), 0);
        assert_eq!(loaded.graph.edge_count(), 0);
    }

    #[test]
    fn comma_separated_and_comments() {
        let loaded = load("# header\na,b\nb,c\n");
        assert_eq!(loaded.graph.node_count(), 3);
        assert_eq!(loaded.graph.edge_count(), 2);
        assert_eq!(loaded.graph.resolve_label("c"), Some(2));
    }

    #[test]
    fn malformed_line_reports_line_number() {
        let err = load_edge_list("0 1\n2\n".as_bytes(), &LoadOptions::default()).unwrap_err();
        match err {
            LoadError::TokenCount { line, found } => {
                assert_eq!(line, 2);
                assert_eq!(found, 1);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn ego_subgraph_on_path() {
        // path 0-1-2-3-4, seed 2, radius 1 -> {1,2,3} with edges {1,2},{2,3}
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        let ego = g.ego_subgraph(2, 1).unwrap();
        assert_eq!(ego.node_count(), 3);
        assert_eq!(ego.edge_count(), 2);
        // seed first, then BFS order
        assert_eq!(ego.label(0), Some("2"));
        assert!(ego.has_edge(0, 1) && ego.has_edge(0, 2));
        assert!(!ego.has_edge(1, 2));
    }

    #[test]
    fn ego_radius_zero_is_isolated_seed() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let ego = g.ego_subgraph(1, 0).unwrap();
        assert_eq!(ego.node_count(), 1);
        assert_eq!(ego.edge_count(), 0);
    }

    #[test]
    fn ego_radius_two_covers_five_cycle() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        let ego = g.ego_subgraph(0, 2).unwrap();
        assert_eq!(ego.node_count(), 5);
        assert_eq!(ego.edge_count(), 5);
    }

    #[test]
    fn ego_rejects_out_of_range_seed() {
        let g = Graph::from_edges(2, &[(0, 1)]);
        assert!(g.ego_subgraph(7, 1).is_err());
    }

    #[test]
    fn bipartite_checks() {
        let square = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(square.is_bipartite().bipartite);
        let coloring = square.is_bipartite().coloring.unwrap();
        for (u, v) in square.edges() {
            assert_ne!(coloring[u as usize], coloring[v as usize]);
        }

        let triangle = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(!triangle.is_bipartite().bipartite);

        // triangle plus a disjoint edge: whole graph not bipartite, but a
        // bipartite component exists
        let mixed = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (3, 4)]);
        assert!(!mixed.is_bipartite().bipartite);
        assert!(mixed.has_bipartite_component());

        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        assert!(!two_triangles.has_bipartite_component());
    }

    #[test]
    fn degree_sequences() {
        let triangle = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(triangle.degree_sequence(), vec![2, 2, 2]);
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        assert_eq!(star.degree_sequence(), vec![4, 1, 1, 1, 1]);
        assert_eq!(Graph::empty(3).degree_sequence(), vec![0, 0, 0]);
    }
}
