//! Outerplanar block embeddings: inner faces, the weak dual, and extraction
//! of a detachable leaf cycle.
//!
//! Embeddings are supplied with the graph (outer Hamiltonian cycle of each
//! 2-connected block plus its chord set) rather than recognized; the
//! non-crossing chord condition is exactly outerplanarity of the block.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{block_cutpoint_tree, Graph, GraphError};

/// Embedding of one 2-connected outerplanar block: the outer cycle in
/// cyclic vertex order, plus chords as vertex pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OuterplanarEmbedding {
    pub outer: Vec<usize>,
    #[serde(default)]
    pub chords: Vec<(usize, usize)>,
}

impl OuterplanarEmbedding {
    pub fn cycle(outer: Vec<usize>) -> Self {
        OuterplanarEmbedding {
            outer,
            chords: Vec::new(),
        }
    }

    /// All edges of the block: outer-cycle edges followed by chords,
    /// normalized.
    pub fn edge_set(&self) -> BTreeSet<(usize, usize)> {
        let l = self.outer.len();
        let mut set: BTreeSet<(usize, usize)> = (0..l)
            .map(|i| norm(self.outer[i], self.outer[(i + 1) % l]))
            .collect();
        set.extend(self.chords.iter().map(|&(u, v)| norm(u, v)));
        set
    }
}

fn norm(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// An inner face of an outerplanar block, in cyclic vertex order, together
/// with the chords on its boundary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub vertices: Vec<usize>,
    pub boundary_chords: Vec<(usize, usize)>,
}

/// The weak dual of a block: one node per inner face, one edge per shared
/// chord. For outerplanar blocks this is always a tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakDual {
    pub faces: Vec<Face>,
    pub edges: Vec<(usize, usize)>,
}

impl WeakDual {
    pub fn leaf_faces(&self) -> Vec<usize> {
        (0..self.faces.len())
            .filter(|&i| self.faces[i].boundary_chords.len() <= 1)
            .collect()
    }
}

/// Computes the inner faces of a block from its outer cycle and chords,
/// adjacency given by shared chords. Rejects crossing chords.
pub fn weak_dual(emb: &OuterplanarEmbedding) -> Result<WeakDual, GraphError> {
    let l = emb.outer.len();
    if l < 3 {
        return Err(GraphError::BadEmbedding(
            "outer cycle needs at least 3 vertices".into(),
        ));
    }
    if emb.outer.iter().collect::<BTreeSet<_>>().len() != l {
        return Err(GraphError::BadEmbedding(
            "outer cycle repeats a vertex".into(),
        ));
    }
    let mut pos = std::collections::BTreeMap::new();
    for (i, &v) in emb.outer.iter().enumerate() {
        pos.insert(v, i);
    }

    // Chords as position intervals (i, j), i < j.
    let mut intervals: Vec<(usize, usize)> = Vec::with_capacity(emb.chords.len());
    for &(u, v) in &emb.chords {
        let (&pu, &pv) = match (pos.get(&u), pos.get(&v)) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(GraphError::BadEmbedding(format!(
                    "chord ({u}, {v}) endpoint not on the outer cycle"
                )))
            }
        };
        let (i, j) = (pu.min(pv), pu.max(pv));
        if j - i < 2 || (i == 0 && j == l - 1) {
            return Err(GraphError::BadEmbedding(format!(
                "chord ({u}, {v}) joins adjacent outer vertices"
            )));
        }
        if intervals.contains(&(i, j)) {
            return Err(GraphError::BadEmbedding(format!(
                "duplicate chord ({u}, {v})"
            )));
        }
        intervals.push((i, j));
    }
    for a in 0..intervals.len() {
        for b in a + 1..intervals.len() {
            let (i1, j1) = intervals[a];
            let (i2, j2) = intervals[b];
            let crossing = (i1 < i2 && i2 < j1 && j1 < j2) || (i2 < i1 && i1 < j2 && j2 < j1);
            if crossing {
                let vp = |(i, j): (usize, usize)| (emb.outer[i], emb.outer[j]);
                return Err(GraphError::CrossingChords(
                    vp(intervals[a]),
                    vp(intervals[b]),
                ));
            }
        }
    }

    // Nesting forest of the (non-crossing) intervals.
    let mut sorted = intervals.clone();
    sorted.sort_by_key(|&(i, j)| (i, std::cmp::Reverse(j)));
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); sorted.len()];
    let mut top_level: Vec<usize> = Vec::new();
    let mut open: Vec<usize> = Vec::new();
    for (c, &(i, j)) in sorted.iter().enumerate() {
        while let Some(&t) = open.last() {
            let (ti, tj) = sorted[t];
            if ti <= i && j <= tj {
                break;
            }
            open.pop();
        }
        match open.last() {
            Some(&t) => children[t].push(c),
            None => top_level.push(c),
        }
        open.push(c);
    }

    // One face per chord plus the face along the unchorded part of the
    // outer cycle.
    let walk = |start: usize, end: usize, kids: &[usize]| -> Vec<usize> {
        let mut verts = Vec::new();
        let mut t = start;
        while t < end {
            verts.push(t);
            t = match kids.iter().find(|&&c| sorted[c].0 == t) {
                Some(&c) => sorted[c].1,
                None => t + 1,
            };
        }
        verts.push(end);
        verts
    };

    let chord_vertices =
        |c: usize| -> (usize, usize) { norm(emb.outer[sorted[c].0], emb.outer[sorted[c].1]) };

    let mut faces = Vec::with_capacity(sorted.len() + 1);
    let mut dual_edges = Vec::new();

    // Root face: walk the whole outer cycle, jumping over top-level
    // chords; the face closes through the outer edge back to position 0.
    {
        let mut verts = Vec::new();
        let mut t = 0usize;
        while t < l {
            verts.push(t);
            t = match top_level.iter().find(|&&c| sorted[c].0 == t) {
                Some(&c) => sorted[c].1,
                None => t + 1,
            };
        }
        faces.push(Face {
            vertices: verts.iter().map(|&p| emb.outer[p]).collect(),
            boundary_chords: top_level.iter().map(|&c| chord_vertices(c)).collect(),
        });
    }

    // Chord faces, index offset by one for the root.
    let mut face_of_chord = vec![usize::MAX; sorted.len()];
    for c in 0..sorted.len() {
        let (i, j) = sorted[c];
        let verts = walk(i, j, &children[c]);
        face_of_chord[c] = faces.len();
        let mut boundary: Vec<(usize, usize)> = vec![chord_vertices(c)];
        boundary.extend(children[c].iter().map(|&k| chord_vertices(k)));
        faces.push(Face {
            vertices: verts.iter().map(|&p| emb.outer[p]).collect(),
            boundary_chords: boundary,
        });
    }
    for c in 0..sorted.len() {
        for &k in &children[c] {
            dual_edges.push((face_of_chord[c], face_of_chord[k]));
        }
    }
    for &c in &top_level {
        dual_edges.push((0, face_of_chord[c]));
    }

    Ok(WeakDual {
        faces,
        edges: dual_edges,
    })
}

/// The vertex or adjacent vertex pair whose removal detaches a cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Attachment {
    One(usize),
    Two(usize, usize),
}

impl Attachment {
    pub fn vertices(&self) -> Vec<usize> {
        match *self {
            Attachment::One(x) => vec![x],
            Attachment::Two(x, y) => vec![x, y],
        }
    }
}

/// A cycle `C` (in cyclic order, attachment vertices first) such that
/// deleting the attachment disconnects `C` minus the attachment from the
/// rest of the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeafCycleResult {
    pub cycle: Vec<usize>,
    pub attachment: Attachment,
}

/// Checks that every 2-connected block of `g` comes with a valid embedding
/// and returns, per block of the block-cutpoint tree, the index of its
/// embedding (`None` for bridges).
pub fn validate_embedding(
    g: &Graph,
    embs: &[OuterplanarEmbedding],
) -> Result<Vec<Option<usize>>, GraphError> {
    let bct = block_cutpoint_tree(g)?;
    for emb in embs {
        weak_dual(emb)?;
        for &(u, v) in emb.edge_set().iter() {
            if !g.has_edge(u, v) {
                return Err(GraphError::BadEmbedding(format!(
                    "embedding edge ({u}, {v}) is not an edge of the graph"
                )));
            }
        }
    }
    let mut used = vec![false; embs.len()];
    let mut mapping = Vec::with_capacity(bct.blocks.len());
    for block in &bct.blocks {
        if block.is_bridge() || block.edges.is_empty() {
            mapping.push(None);
            continue;
        }
        let block_edges: BTreeSet<(usize, usize)> = block.edges.iter().copied().collect();
        let found = embs
            .iter()
            .position(|emb| emb.edge_set() == block_edges)
            .ok_or_else(|| {
                GraphError::BadEmbedding(format!(
                    "no embedding supplied for the block on vertices {:?}",
                    block.vertices
                ))
            })?;
        if used[found] {
            return Err(GraphError::BadEmbedding(
                "embedding matched two different blocks".into(),
            ));
        }
        used[found] = true;
        mapping.push(Some(found));
    }
    if let Some(i) = used.iter().position(|&u| !u) {
        return Err(GraphError::BadEmbedding(format!(
            "embedding {i} does not correspond to any block"
        )));
    }
    Ok(mapping)
}

/// Finds a cycle with the detachment property in a connected graph with
/// minimum degree 2 and at least two cycles.
///
/// Preference order: leaf blocks of the block-cutpoint tree; within a
/// chorded block, leaf faces of the weak dual avoiding the block's cut
/// vertex. Every candidate is checked by actually deleting the attachment;
/// if no preferred candidate passes, all inner faces are scanned. Ties are
/// broken by lexicographic order on the sorted cycle vertices.
pub fn find_leaf_cycle(
    g: &Graph,
    embs: &[OuterplanarEmbedding],
) -> Result<LeafCycleResult, GraphError> {
    let n = g.vertex_count();
    if n == 0 || !g.is_connected() {
        return Err(GraphError::LeafCyclePrecondition);
    }
    if (0..n).any(|v| g.degree(v) < 2) || g.edge_count() < n + 1 {
        return Err(GraphError::LeafCyclePrecondition);
    }
    let bct = block_cutpoint_tree(g)?;
    let mapping = validate_embedding(g, embs)?;

    // Tier 1: whole leaf blocks that are cycles, and leaf faces avoiding
    // their block's cut vertex. Tier 2: leaf faces touching the cut
    // vertex. Tier 3: everything else, scanned only if the earlier tiers
    // fail the deletion check.
    let mut tiers: [Vec<(Vec<usize>, Attachment)>; 3] = Default::default();

    for (bi, block) in bct.blocks.iter().enumerate() {
        let Some(ei) = mapping[bi] else { continue };
        let emb = &embs[ei];
        let cuts = bct.cuts_in_block(bi);
        let is_leaf_block = cuts.len() <= 1;

        if block.is_cycle() {
            for &x in &cuts {
                let tier = if is_leaf_block { 0 } else { 2 };
                tiers[tier].push((rotate_to(&emb.outer, x, None), Attachment::One(x)));
            }
            continue;
        }

        let wd = weak_dual(emb)?;
        let leaves = wd.leaf_faces();
        for (fi, face) in wd.faces.iter().enumerate() {
            if face.boundary_chords.len() != 1 {
                continue;
            }
            let (x, y) = face.boundary_chords[0];
            let cand = (
                rotate_to(&face.vertices, x, Some(y)),
                Attachment::Two(x, y),
            );
            let avoids_cut = cuts.iter().all(|c| !face.vertices.contains(c));
            let tier = if is_leaf_block && leaves.contains(&fi) {
                if avoids_cut {
                    0
                } else {
                    1
                }
            } else {
                2
            };
            tiers[tier].push(cand);
        }
    }

    let sort_key = |cand: &(Vec<usize>, Attachment)| {
        let mut vs = cand.0.clone();
        vs.sort_unstable();
        vs
    };
    for tier in &mut tiers {
        tier.sort_by_key(&sort_key);
    }

    for (cycle, attachment) in tiers.into_iter().flatten() {
        if detaches(g, &cycle, &attachment) {
            return Ok(LeafCycleResult { cycle, attachment });
        }
    }
    Err(GraphError::NoDetachableCycle)
}

/// Rotates (and if needed reflects) a cyclic vertex list so it starts at
/// `x`, with `y` second when given.
fn rotate_to(cycle: &[usize], x: usize, y: Option<usize>) -> Vec<usize> {
    let l = cycle.len();
    let px = cycle.iter().position(|&v| v == x).expect("x on cycle");
    let mut out: Vec<usize> = (0..l).map(|i| cycle[(px + i) % l]).collect();
    if let Some(y) = y {
        if out[1] != y {
            debug_assert_eq!(out[l - 1], y, "attachment pair must be adjacent");
            out[1..].reverse();
        }
    }
    out
}

/// True when removing the attachment leaves the rest of the cycle as a
/// complete connected component, with at least one other component present.
fn detaches(g: &Graph, cycle: &[usize], attachment: &Attachment) -> bool {
    let att = attachment.vertices();
    let rest: BTreeSet<usize> = cycle
        .iter()
        .copied()
        .filter(|v| !att.contains(v))
        .collect();
    if rest.is_empty() {
        return false;
    }
    let keep: BTreeSet<usize> = (0..g.vertex_count())
        .filter(|v| !att.contains(v))
        .collect();
    if keep.len() == rest.len() {
        return false; // nothing outside the cycle: would leave < 2 components
    }
    let (sub, old_ids) = g.induced(&keep);
    let start_old = *rest.iter().next().unwrap();
    let start = old_ids.iter().position(|&v| v == start_old).unwrap();
    let comp: BTreeSet<usize> = sub
        .components()
        .into_iter()
        .find(|c| c.contains(&start))
        .unwrap()
        .into_iter()
        .map(|i| old_ids[i])
        .collect();
    comp == rest
}
