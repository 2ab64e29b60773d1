//! Strict kth-power labeling of outerplanar graphs with large girth.
//!
//! Recursive scheme: single cycles go to the cycle labeler; degree-1
//! vertices are attached afterwards with a dominating prime power;
//! components are labeled independently and shifted apart. Otherwise a
//! detachable cycle `C` is removed (except its one or two attachment
//! vertices), the remainder is labeled, and `C` is relabeled around the
//! seam from an auxiliary cycle on `|C| - 6` vertices plus two fresh primes
//! whose kth powers dominate every label already placed. The girth
//! requirement (at least the cycle-base length plus 6) guarantees the
//! auxiliary cycle is itself labelable.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{
    find_leaf_cycle, girth, validate_embedding, Attachment, Graph, OuterplanarEmbedding,
};
use crate::labeling::{verify_strict, Labeling};
use crate::ntheory::strict_kth_power_base;

use super::{
    label_cycle_strict, next_prime_power_above, normalize_for, pow_i64, ConstructError,
    CycleLabelerTable,
};

/// Working copy of the graph during the recursion, on original vertex ids.
#[derive(Debug, Clone)]
struct Piece {
    adj: BTreeMap<usize, BTreeSet<usize>>,
    blocks: Vec<OuterplanarEmbedding>,
}

impl Piece {
    fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.adj.keys().copied()
    }

    fn len(&self) -> usize {
        self.adj.len()
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[&v].len()
    }

    fn remove_vertex(&mut self, v: usize) {
        if let Some(nbrs) = self.adj.remove(&v) {
            for u in nbrs {
                self.adj.get_mut(&u).map(|s| s.remove(&v));
            }
        }
    }

    /// Renumbers into a dense graph; returns the graph, mapped embeddings,
    /// and the new-index -> original-id table.
    fn to_graph(&self) -> (Graph, Vec<OuterplanarEmbedding>, Vec<usize>) {
        let ids: Vec<usize> = self.vertices().collect();
        let index: BTreeMap<usize, usize> =
            ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edges = Vec::new();
        for (&u, nbrs) in &self.adj {
            for &v in nbrs {
                if u < v {
                    edges.push((index[&u], index[&v]));
                }
            }
        }
        let g = Graph::new(ids.len(), &edges).expect("piece is a valid graph");
        let embs = self
            .blocks
            .iter()
            .map(|b| OuterplanarEmbedding {
                outer: b.outer.iter().map(|v| index[v]).collect(),
                chords: b.chords.iter().map(|&(u, v)| (index[&u], index[&v])).collect(),
            })
            .collect();
        (g, embs, ids)
    }

    fn components(&self) -> Vec<BTreeSet<usize>> {
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut comps = Vec::new();
        for v in self.adj.keys().copied().collect::<Vec<_>>() {
            if seen.contains(&v) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = vec![v];
            comp.insert(v);
            while let Some(u) = stack.pop() {
                for &w in &self.adj[&u] {
                    if comp.insert(w) {
                        stack.push(w);
                    }
                }
            }
            seen.extend(comp.iter().copied());
            comps.push(comp);
        }
        comps
    }

    fn restricted_to(&self, keep: &BTreeSet<usize>) -> Piece {
        Piece {
            adj: self
                .adj
                .iter()
                .filter(|(v, _)| keep.contains(v))
                .map(|(&v, nbrs)| (v, nbrs.intersection(keep).copied().collect()))
                .collect(),
            blocks: self
                .blocks
                .iter()
                .filter(|b| b.outer.iter().all(|v| keep.contains(v)))
                .cloned()
                .collect(),
        }
    }

    fn is_single_cycle(&self) -> bool {
        !self.adj.is_empty()
            && self.adj.values().all(|nbrs| nbrs.len() == 2)
            && self.components().len() == 1
            && self.edge_count() == self.len()
    }

    fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Cycle order of a piece that is a single chordless cycle, starting at
    /// the smallest vertex toward its smaller neighbor.
    fn cycle_order(&self) -> Vec<usize> {
        let start = *self.adj.keys().next().unwrap();
        let mut order = vec![start];
        let mut prev = start;
        let mut here = *self.adj[&start].iter().next().unwrap();
        while here != start {
            order.push(here);
            let next = *self.adj[&here].iter().find(|&&w| w != prev).unwrap();
            prev = here;
            here = next;
        }
        order
    }
}

/// Labels an outerplanar graph (given with per-block embeddings) so every
/// edge gap is a prime kth power. The girth must be at least the table's
/// cycle-base length for `k` plus 6 (forests pass vacuously). Disconnected
/// graphs are labeled component by component and shifted apart.
pub fn label_outerplanar(
    g: &Graph,
    embs: &[OuterplanarEmbedding],
    k: u32,
    table: &CycleLabelerTable,
) -> Result<Labeling, ConstructError> {
    let base_len = table
        .ppc_upper(k)
        .ok_or(ConstructError::TableMissingExponent { k })?;
    let needed = base_len + 6;
    if g.vertex_count() == 0 {
        return Ok(Labeling::new());
    }
    check_girth(g, needed)?;

    if !g.is_connected() {
        // Validate and label each component independently, then shift the
        // labelings into disjoint ranges (gaps are translation invariant).
        let mut combined = Labeling::new();
        let mut ceiling: Option<i64> = None;
        for comp in g.components() {
            let keep: BTreeSet<usize> = comp.iter().copied().collect();
            let (sub, ids) = g.induced(&keep);
            let index: BTreeMap<usize, usize> =
                ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
            let sub_embs: Vec<OuterplanarEmbedding> = embs
                .iter()
                .filter(|b| b.outer.iter().all(|v| keep.contains(v)))
                .map(|b| OuterplanarEmbedding {
                    outer: b.outer.iter().map(|v| index[v]).collect(),
                    chords: b.chords.iter().map(|&(u, v)| (index[&u], index[&v])).collect(),
                })
                .collect();
            let l = label_outerplanar(&sub, &sub_embs, k, table)?;
            let lo = l.labels().min().unwrap_or(0);
            let shift = match ceiling {
                Some(c) => c.checked_sub(lo).and_then(|s| s.checked_add(1)),
                None => Some(0),
            }
            .ok_or(ConstructError::Overflow)?;
            for (v, val) in l.iter() {
                let shifted = val.checked_add(shift).ok_or(ConstructError::Overflow)?;
                combined.set(ids[v], shifted);
            }
            ceiling = Some(combined.labels().max().unwrap());
        }
        if !verify_strict(g, &combined, k)?.ok {
            return Err(ConstructError::InternalVerification {
                context: "outerplanar labeling (components)".into(),
            });
        }
        return Ok(combined);
    }

    validate_embedding(g, embs)?;

    let adjacency = g.adjacency();
    let adj: BTreeMap<usize, BTreeSet<usize>> = (0..g.vertex_count())
        .map(|v| (v, adjacency[v].iter().copied().collect::<BTreeSet<usize>>()))
        .collect();
    let piece = Piece {
        adj,
        blocks: embs.to_vec(),
    };
    let l = label_piece(&piece, k, table, needed)?;
    if !verify_strict(g, &l, k)?.ok {
        return Err(ConstructError::InternalVerification {
            context: "outerplanar labeling".into(),
        });
    }
    Ok(l)
}

fn check_girth(g: &Graph, needed: usize) -> Result<(), ConstructError> {
    match girth(g) {
        Some(found) if found < needed => Err(ConstructError::GirthTooSmall {
            needed,
            found: Some(found),
        }),
        _ => Ok(()),
    }
}

fn label_piece(
    piece: &Piece,
    k: u32,
    table: &CycleLabelerTable,
    needed_girth: usize,
) -> Result<Labeling, ConstructError> {
    match piece.len() {
        0 => return Ok(Labeling::new()),
        1 => {
            let v = piece.vertices().next().unwrap();
            return Ok(Labeling::from_pairs([(v, 0)]));
        }
        _ => {}
    }

    let comps = piece.components();
    if comps.len() > 1 {
        // Independent labelings shifted into disjoint ranges.
        let mut combined = Labeling::new();
        let mut ceiling: Option<i64> = None;
        for comp in comps {
            let sub = piece.restricted_to(&comp);
            let l = label_piece(&sub, k, table, needed_girth)?;
            let lo = l.labels().min().unwrap_or(0);
            let shift = match ceiling {
                Some(c) => c.checked_sub(lo).and_then(|s| s.checked_add(1)),
                None => Some(0),
            }
            .ok_or(ConstructError::Overflow)?;
            for (v, val) in l.iter() {
                let shifted = val.checked_add(shift).ok_or(ConstructError::Overflow)?;
                combined.set(v, shifted);
            }
            ceiling = Some(combined.labels().max().unwrap());
        }
        return Ok(combined);
    }

    if let Some(x) = piece
        .vertices()
        .find(|&v| piece.degree(v) == 1)
    {
        // Label the rest, then hang the pendant with a dominating power.
        let y = *piece.adj[&x].iter().next().unwrap();
        let mut inner = piece.clone();
        inner.remove_vertex(x);
        let mut l = label_piece(&inner, k, table, needed_girth)?;
        let p = next_prime_power_above(1, k, l.abs_sum())?;
        let label = l
            .get(y)
            .unwrap()
            .checked_add(pow_i64(p, k)?)
            .ok_or(ConstructError::Overflow)?;
        l.set(x, label);
        return Ok(l);
    }

    if piece.is_single_cycle() {
        let order = piece.cycle_order();
        let n = order.len();
        let cycle = label_cycle_strict(n, k, table, None)?
            .ok_or(ConstructError::CycleNotObtained { n, k })?;
        let mut l = Labeling::new();
        for (i, &v) in order.iter().enumerate() {
            l.set(v, cycle.get(i).unwrap());
        }
        return Ok(l);
    }

    // Main case: detach a leaf cycle.
    let (g, embs, ids) = piece.to_graph();
    check_girth(&g, needed_girth)?;
    let found = find_leaf_cycle(&g, &embs)?;
    let cycle: Vec<usize> = found.cycle.iter().map(|&v| ids[v]).collect();
    let attachment = match found.attachment {
        Attachment::One(x) => Attachment::One(ids[x]),
        Attachment::Two(x, y) => Attachment::Two(ids[x], ids[y]),
    };

    // Orient the cycle as x, y, ... with y the attachment partner or, for
    // a single attachment vertex, its smaller cycle neighbor.
    let (x, y, oriented) = match attachment {
        Attachment::Two(x, y) => (x, y, cycle.clone()),
        Attachment::One(x) => {
            let mut c = cycle.clone();
            debug_assert_eq!(c[0], x);
            let y = c[1].min(c[c.len() - 1]);
            if c[1] != y {
                c[1..].reverse();
            }
            (x, y, c)
        }
    };
    let m = oriented.len() - 6;
    debug_assert!(m >= 3);

    // Remainder: everything except the cycle interior, keeping x and y.
    let mut rest = piece.clone();
    for &v in &oriented {
        if v != x && v != y {
            rest.remove_vertex(v);
        }
    }
    prune_blocks(&mut rest, &oriented, x, y);

    let l1 = label_piece(&rest, k, table, needed_girth)?;
    let l1 = normalize_for(&l1, x, y)?;
    let p_pow = l1.get(y).unwrap();
    debug_assert!(
        strict_kth_power_base(p_pow as u64, k).ok().flatten().is_some(),
        "seam gap must be a strict power"
    );

    let aux = label_cycle_strict(m, k, table, None)?
        .ok_or(ConstructError::CycleNotObtained { n: m, k })?;
    debug_assert_eq!(aux.get(0), Some(0));
    debug_assert!(aux.labels().all(|v| v >= 0));
    let s_pow = aux.get(1).unwrap();

    let mass = l1
        .abs_sum()
        .checked_add(aux.abs_sum())
        .ok_or(ConstructError::Overflow)?;
    let r = next_prime_power_above(1, k, mass)?;
    let r_pow = pow_i64(r, k)?;
    let q = next_prime_power_above(r, k, mass.checked_add(r_pow).ok_or(ConstructError::Overflow)?)?;
    let q_pow = pow_i64(q, k)?;

    let lift = p_pow
        .checked_add(r_pow)
        .and_then(|v| v.checked_add(q_pow))
        .ok_or(ConstructError::Overflow)?;

    let mut l = l1;
    let sum2 = |a: i64, b: i64| a.checked_add(b).ok_or(ConstructError::Overflow);
    // Cycle order: x, y, z, x_1 .. x_m, a, b, c.
    l.set(oriented[2], sum2(p_pow, r_pow)?);
    l.set(oriented[3], sum2(sum2(p_pow, r_pow)?, s_pow)?);
    for i in 2..=m {
        l.set(oriented[2 + i], sum2(aux.get(i - 1).unwrap(), lift)?);
    }
    l.set(oriented[m + 3], lift);
    l.set(oriented[m + 4], sum2(r_pow, q_pow)?);
    l.set(oriented[m + 5], r_pow);

    // Every edge of the detached cycle and of the remainder must now carry
    // a strict power; catch construction bugs immediately.
    let (check_g, _, check_ids) = piece.to_graph();
    let back: BTreeMap<usize, usize> = check_ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mapped = Labeling::from_pairs(l.iter().map(|(v, val)| (back[&v], val)));
    if !verify_strict(&check_g, &mapped, k)?.ok {
        return Err(ConstructError::InternalVerification {
            context: "leaf-cycle reattachment".into(),
        });
    }
    Ok(l)
}

/// Updates the block list after the cycle interior has been removed: a
/// whole cycle block disappears; a chorded block loses the detached face,
/// its chord to the face becoming an outer edge.
fn prune_blocks(rest: &mut Piece, cycle: &[usize], x: usize, y: usize) {
    let cycle_set: BTreeSet<usize> = cycle.iter().copied().collect();
    let mut out = Vec::with_capacity(rest.blocks.len());
    for b in rest.blocks.drain(..) {
        let outer_set: BTreeSet<usize> = b.outer.iter().copied().collect();
        if outer_set == cycle_set && b.chords.is_empty() {
            continue; // the detached cycle was a whole block
        }
        if cycle_set.is_subset(&outer_set)
            && b.chords
                .iter()
                .any(|&(u, v)| (u == x && v == y) || (u == y && v == x))
        {
            let keep: Vec<usize> = b
                .outer
                .iter()
                .copied()
                .filter(|v| !cycle_set.contains(v) || *v == x || *v == y)
                .collect();
            let chords: Vec<(usize, usize)> = b
                .chords
                .iter()
                .copied()
                .filter(|&(u, v)| !((u == x && v == y) || (u == y && v == x)))
                .collect();
            out.push(OuterplanarEmbedding {
                outer: keep,
                chords,
            });
            continue;
        }
        out.push(b);
    }
    rest.blocks = out;
}
