//! Undirected simple graphs on vertex set `0..n`, generators for the graph
//! families used by the constructors, and the structural algorithms they
//! need (girth, exact chromatic number, block-cutpoint tree, weak dual and
//! leaf-cycle extraction for outerplanar blocks).

mod blocks;
mod planar;

pub use blocks::{block_cutpoint_tree, Block, BlockCutTree};
pub use planar::{
    find_leaf_cycle, validate_embedding, weak_dual, Attachment, Face, LeafCycleResult,
    OuterplanarEmbedding, WeakDual,
};

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("cycle graph needs at least 3 vertices, got {0}")]
    CycleTooSmall(usize),
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("partite set sizes must be nonempty and positive")]
    BadPartiteSizes,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("chromatic search budget exhausted: {lower} <= chi <= {upper} after {nodes} nodes")]
    ChromaticBudget { lower: usize, upper: usize, nodes: u64 },
    #[error("chords {0:?} and {1:?} cross")]
    CrossingChords((usize, usize), (usize, usize)),
    #[error("invalid outerplanar embedding: {0}")]
    BadEmbedding(String),
    #[error("leaf-cycle extraction requires a connected graph with minimum degree 2 and at least two cycles")]
    LeafCyclePrecondition,
    #[error("no inner face satisfies the detachment property")]
    NoDetachableCycle,
}

/// An undirected simple graph with vertices `0..vertex_count` and a set of
/// unordered edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut edges = BTreeSet::new();
        for &(u, v) in edge_list {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v));
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            edges.insert((u.min(v), u.max(v)));
        }
        Ok(Graph { n, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Adjacency lists, rebuilt on demand. Graphs here are small; callers
    /// that iterate repeatedly cache the result.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(0).len() == self.n
    }

    fn component_of(&self, start: usize) -> BTreeSet<usize> {
        let adj = self.adjacency();
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(start);
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if seen.insert(v) {
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// Connected components as sorted vertex lists, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for v in 0..self.n {
            if !seen[v] {
                let comp = self.component_of(v);
                for &u in &comp {
                    seen[u] = true;
                }
                comps.push(comp.into_iter().collect());
            }
        }
        comps
    }

    /// The complete graph on `n >= 1` vertices.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges)
    }

    /// The cycle on `n >= 3` vertices, numbered in cyclic order.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        if n < 3 {
            return Err(GraphError::CycleTooSmall(n));
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges)
    }

    /// The path on `n >= 1` vertices.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges)
    }

    /// The complete multipartite graph with the given partite set sizes,
    /// vertices numbered part by part, together with its partition.
    pub fn complete_multipartite(sizes: &[usize]) -> Result<(Self, Partition), GraphError> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(GraphError::BadPartiteSizes);
        }
        let n: usize = sizes.iter().sum();
        let mut parts = Vec::with_capacity(sizes.len());
        let mut next = 0;
        for &s in sizes {
            parts.push((next..next + s).collect::<Vec<_>>());
            next += s;
        }
        let mut edges = Vec::new();
        for (i, p) in parts.iter().enumerate() {
            for q in parts.iter().skip(i + 1) {
                for &u in p {
                    for &v in q {
                        edges.push((u, v));
                    }
                }
            }
        }
        Ok((Graph::new(n, &edges)?, Partition::new(parts)))
    }

    /// The subgraph induced by `keep`, with vertices renumbered by their
    /// sorted order in `keep`. Returns the graph and the old-id list (new
    /// index -> old vertex).
    pub fn induced(&self, keep: &BTreeSet<usize>) -> (Graph, Vec<usize>) {
        let old_ids: Vec<usize> = keep.iter().copied().collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in old_ids.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .filter(|&&(u, v)| keep.contains(&u) && keep.contains(&v))
            .map(|&(u, v)| (index[u], index[v]))
            .collect();
        (
            Graph::new(old_ids.len(), &edges).expect("induced subgraph is valid"),
            old_ids,
        )
    }
}

/// A partition of the vertex set into disjoint parts, used as the coloring
/// input to the multipartite constructor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(parts: Vec<Vec<usize>>) -> Self {
        Partition { parts }
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn max_part_size(&self) -> usize {
        self.parts.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// True when the parts are disjoint, cover exactly `V(g)`, and no edge
    /// of `g` has both ends in the same part.
    pub fn is_proper_coloring(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.vertex_count()];
        for part in &self.parts {
            for &v in part {
                if v >= g.vertex_count() || seen[v] {
                    return false;
                }
                seen[v] = true;
            }
        }
        if !seen.iter().all(|&b| b) {
            return false;
        }
        for part in &self.parts {
            for (i, &u) in part.iter().enumerate() {
                for &v in &part[i + 1..] {
                    if g.has_edge(u, v) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Girth: the length of a shortest cycle, or `None` for forests.
///
/// BFS from every vertex; a non-tree edge closing at depths `d(u)`, `d(v)`
/// witnesses a cycle of length `d(u) + d(v) + 1`, and the minimum over all
/// roots is exact.
pub fn girth(g: &Graph) -> Option<usize> {
    let adj = g.adjacency();
    let mut best: Option<usize> = None;
    for root in 0..g.vertex_count() {
        let mut dist = vec![usize::MAX; g.vertex_count()];
        let mut parent = vec![usize::MAX; g.vertex_count()];
        let mut queue = VecDeque::new();
        dist[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if v != parent[u] {
                    let cycle = dist[u] + dist[v] + 1;
                    if best.is_none_or(|b| cycle < b) {
                        best = Some(cycle);
                    }
                }
            }
        }
    }
    best
}

/// Result of an exact chromatic-number computation: the number itself and a
/// proper coloring witnessing the upper bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticResult {
    pub chi: usize,
    pub coloring: Vec<usize>,
    pub nodes: u64,
}

impl ChromaticResult {
    /// The coloring as a partition (color class -> vertices).
    pub fn partition(&self) -> Partition {
        let mut parts = vec![Vec::new(); self.chi];
        for (v, &c) in self.coloring.iter().enumerate() {
            parts[c].push(v);
        }
        Partition::new(parts)
    }
}

/// Exact chromatic number by branch and bound: a greedy clique gives the
/// lower bound, greedy coloring the upper bound, and backtracking closes
/// the gap. `budget` caps the number of search nodes; exhaustion reports
/// the best bounds known so far.
pub fn chromatic_number(g: &Graph, budget: u64) -> Result<ChromaticResult, GraphError> {
    if g.vertex_count() == 0 {
        return Err(GraphError::Empty);
    }
    let adj = g.adjacency();
    let n = g.vertex_count();

    // Vertices in decreasing degree order; good both for the clique and for
    // early pruning in the coloring search.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (usize::MAX - adj[v].len(), v));

    let mut clique: Vec<usize> = Vec::new();
    for &v in &order {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    let lower = clique.len().max(1);

    let greedy = greedy_coloring(g, &order);
    let upper = greedy.iter().max().map_or(1, |&c| c + 1);

    let mut nodes = 0u64;
    if lower == upper {
        return Ok(ChromaticResult {
            chi: upper,
            coloring: greedy,
            nodes,
        });
    }

    let mut best_coloring = greedy;
    let mut best = upper;
    for target in lower..upper {
        let mut colors = vec![usize::MAX; n];
        match color_with(&adj, &order, target, 0, 0, &mut colors, &mut nodes, budget) {
            ColorOutcome::Colored => {
                best = target;
                best_coloring = colors;
                break;
            }
            ColorOutcome::Impossible => continue,
            ColorOutcome::BudgetOut => {
                return Err(GraphError::ChromaticBudget {
                    lower: target,
                    upper: best,
                    nodes,
                });
            }
        }
    }
    debug_assert!(is_proper(&adj, &best_coloring));
    Ok(ChromaticResult {
        chi: best,
        coloring: best_coloring,
        nodes,
    })
}

fn greedy_coloring(g: &Graph, order: &[usize]) -> Vec<usize> {
    let adj = g.adjacency();
    let n = g.vertex_count();
    let mut colors = vec![usize::MAX; n];
    for &v in order {
        let mut used = vec![false; n];
        for &u in &adj[v] {
            if colors[u] != usize::MAX {
                used[colors[u]] = true;
            }
        }
        colors[v] = (0..n).find(|&c| !used[c]).unwrap();
    }
    colors
}

fn is_proper(adj: &[Vec<usize>], colors: &[usize]) -> bool {
    adj.iter()
        .enumerate()
        .all(|(u, nbrs)| nbrs.iter().all(|&v| colors[u] != colors[v]))
}

enum ColorOutcome {
    Colored,
    Impossible,
    BudgetOut,
}

#[allow(clippy::too_many_arguments)]
fn color_with(
    adj: &[Vec<usize>],
    order: &[usize],
    target: usize,
    idx: usize,
    max_used: usize,
    colors: &mut Vec<usize>,
    nodes: &mut u64,
    budget: u64,
) -> ColorOutcome {
    if idx == order.len() {
        return ColorOutcome::Colored;
    }
    let v = order[idx];
    // Symmetry: never open more than one fresh color at a time.
    let limit = target.min(max_used + 1);
    for c in 0..limit {
        if adj[v].iter().any(|&u| colors[u] == c) {
            continue;
        }
        *nodes += 1;
        if *nodes > budget {
            return ColorOutcome::BudgetOut;
        }
        colors[v] = c;
        match color_with(
            adj,
            order,
            target,
            idx + 1,
            max_used.max(c + 1),
            colors,
            nodes,
            budget,
        ) {
            ColorOutcome::Impossible => {}
            other => return other,
        }
        colors[v] = usize::MAX;
    }
    ColorOutcome::Impossible
}
