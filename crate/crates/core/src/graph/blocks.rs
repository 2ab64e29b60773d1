//! Block-cutpoint decomposition: maximal 2-connected subgraphs, bridges,
//! and cut vertices, arranged as the standard block-cutpoint tree.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// One block: a maximal 2-connected subgraph or a bridge (or an isolated
/// vertex, for the single-vertex graph).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }

    /// A block that is exactly a chordless cycle.
    pub fn is_cycle(&self) -> bool {
        self.vertices.len() >= 3 && self.edges.len() == self.vertices.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockCutTree {
    pub blocks: Vec<Block>,
    pub cut_vertices: BTreeSet<usize>,
}

impl BlockCutTree {
    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.cut_vertices.contains(&v)
    }

    /// Cut vertices lying in block `i`; the tree adjacency of the
    /// block-cutpoint tree is exactly (block, cut vertex in block).
    pub fn cuts_in_block(&self, i: usize) -> Vec<usize> {
        self.blocks[i]
            .vertices
            .iter()
            .copied()
            .filter(|v| self.cut_vertices.contains(v))
            .collect()
    }

    /// Blocks containing at most one cut vertex: the leaves of the
    /// block-cutpoint tree (or the sole block of a 2-connected graph).
    pub fn leaf_block_indices(&self) -> Vec<usize> {
        (0..self.blocks.len())
            .filter(|&i| self.cuts_in_block(i).len() <= 1)
            .collect()
    }
}

/// Decomposes a connected graph into blocks and cut vertices.
///
/// Iterative lowpoint DFS with an edge stack; a block is popped whenever a
/// child subtree cannot reach above its attachment point.
pub fn block_cutpoint_tree(g: &Graph) -> Result<BlockCutTree, GraphError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(GraphError::Empty);
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    if n == 1 {
        return Ok(BlockCutTree {
            blocks: vec![Block {
                vertices: vec![0],
                edges: vec![],
            }],
            cut_vertices: BTreeSet::new(),
        });
    }

    let adj = g.adjacency();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0usize;
    let mut is_cut = vec![false; n];
    let mut blocks_edges: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();

    let root = 0usize;
    let mut root_children = 0usize;
    // (vertex, parent, next adjacency index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    disc[root] = timer;
    low[root] = timer;
    timer += 1;
    stack.push((root, usize::MAX, 0));

    while let Some(frame) = stack.last_mut() {
        let (v, parent, idx) = (frame.0, frame.1, frame.2);
        if idx < adj[v].len() {
            frame.2 += 1;
            let w = adj[v][idx];
            if w == parent {
                continue;
            }
            if disc[w] == usize::MAX {
                edge_stack.push((v, w));
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                stack.push((w, v, 0));
            } else if disc[w] < disc[v] {
                edge_stack.push((v, w));
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(pframe) = stack.last() {
                let p = pframe.0;
                low[p] = low[p].min(low[v]);
                if p == root {
                    root_children += 1;
                }
                if low[v] >= disc[p] {
                    let mut block = Vec::new();
                    while let Some(e) = edge_stack.pop() {
                        block.push(e);
                        if e == (p, v) {
                            break;
                        }
                    }
                    blocks_edges.push(block);
                    if p != root {
                        is_cut[p] = true;
                    }
                }
            }
        }
    }
    if root_children >= 2 {
        is_cut[root] = true;
    }

    let blocks = blocks_edges
        .into_iter()
        .map(|edges| {
            let verts: BTreeSet<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
            let mut norm: Vec<(usize, usize)> =
                edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
            norm.sort_unstable();
            Block {
                vertices: verts.into_iter().collect(),
                edges: norm,
            }
        })
        .collect();

    Ok(BlockCutTree {
        blocks,
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
    })
}
