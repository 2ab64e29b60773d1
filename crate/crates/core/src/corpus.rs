//! Deterministic generation of outerplanar test graphs: chains of cycle
//! and two-face blocks glued at cut vertices, with optional pendant paths,
//! all faces at least a requested girth.

use crate::graph::{Graph, OuterplanarEmbedding};

/// One generated instance: the graph plus its block embeddings.
#[derive(Debug, Clone)]
pub struct OuterplanarInstance {
    pub graph: Graph,
    pub blocks: Vec<OuterplanarEmbedding>,
}

struct XorShift(u64);

impl XorShift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

/// Builds `count` instances with 2 to 4 blocks each and girth at least
/// `min_girth`, deterministically from `seed`.
pub fn outerplanar_corpus(count: usize, min_girth: usize, seed: u64) -> Vec<OuterplanarInstance> {
    let mut rng = XorShift(seed | 1);
    (0..count)
        .map(|_| generate_instance(&mut rng, min_girth))
        .collect()
}

fn generate_instance(rng: &mut XorShift, min_girth: usize) -> OuterplanarInstance {
    let block_count = 2 + rng.below(3) as usize;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut blocks: Vec<OuterplanarEmbedding> = Vec::new();
    let mut next_vertex = 0usize;
    let mut attach_points: Vec<usize> = Vec::new();

    for b in 0..block_count {
        // Occasionally reach a new block through a short pendant path.
        let root = if b == 0 {
            None
        } else {
            let mut at = attach_points[rng.below(attach_points.len() as u64) as usize];
            if rng.below(3) == 0 {
                let hops = 1 + rng.below(2) as usize;
                for _ in 0..hops {
                    let v = next_vertex;
                    next_vertex += 1;
                    edges.push((at, v));
                    at = v;
                }
            }
            Some(at)
        };

        let two_faces = rng.below(2) == 0;
        let emb = if two_faces {
            let f1 = min_girth + rng.below(3) as usize;
            let f2 = min_girth + rng.below(3) as usize;
            let outer_len = f1 + f2 - 2;
            let outer = block_vertices(root, outer_len, &mut next_vertex);
            for i in 0..outer_len {
                edges.push((outer[i], outer[(i + 1) % outer_len]));
            }
            let chord = (outer[0], outer[f1 - 1]);
            edges.push(chord);
            OuterplanarEmbedding {
                outer,
                chords: vec![chord],
            }
        } else {
            let len = min_girth + rng.below(4) as usize;
            let outer = block_vertices(root, len, &mut next_vertex);
            for i in 0..len {
                edges.push((outer[i], outer[(i + 1) % len]));
            }
            OuterplanarEmbedding::cycle(outer)
        };
        attach_points.extend(emb.outer.iter().copied());
        blocks.push(emb);
    }

    // A stray pendant vertex now and then.
    if rng.below(2) == 0 {
        let at = attach_points[rng.below(attach_points.len() as u64) as usize];
        edges.push((at, next_vertex));
        next_vertex += 1;
    }

    let graph = Graph::new(next_vertex, &edges).expect("generated graph is valid");
    OuterplanarInstance { graph, blocks }
}

fn block_vertices(root: Option<usize>, len: usize, next_vertex: &mut usize) -> Vec<usize> {
    let mut outer = Vec::with_capacity(len);
    if let Some(r) = root {
        outer.push(r);
    }
    while outer.len() < len {
        outer.push(*next_vertex);
        *next_vertex += 1;
    }
    outer
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{girth, validate_embedding};

    #[test]
    fn corpus_instances_are_valid_and_meet_the_girth_bound() {
        for inst in outerplanar_corpus(50, 9, 0xFEED) {
            validate_embedding(&inst.graph, &inst.blocks).expect("embedding valid");
            let g = girth(&inst.graph).expect("blocks guarantee a cycle");
            assert!(g >= 9, "girth {g} below bound");
        }
    }

    #[test]
    fn corpus_is_deterministic() {
        let a = outerplanar_corpus(5, 9, 42);
        let b = outerplanar_corpus(5, 9, 42);
        for (x, y) in a.iter().zip(b.iter()) {
            assert_eq!(x.graph, y.graph);
        }
    }
}
