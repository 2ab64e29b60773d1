//! Small canonical labelings used as test anchors and CLI demonstrations.

use crate::graph::{Graph, Partition};
use crate::labeling::Labeling;

/// The 7-cycle with a strict square-distance labeling: consecutive gaps
/// 4, 3481, 361, 841, 2209, 49, 25 — the squares of 2, 59, 19, 29, 47, 7, 5.
pub fn c7_strict_square() -> (Graph, Labeling) {
    (
        Graph::cycle(7).unwrap(),
        Labeling::from_values(&[0, 4, 3485, 3124, 2283, 74, 25]),
    )
}

/// K6 labeled 0, 2, 4, 7, 9, 11: every pairwise gap is a prime or the
/// square of a prime.
pub fn k6_power_squares() -> (Graph, Labeling) {
    (
        Graph::complete(6).unwrap(),
        Labeling::from_values(&[0, 2, 4, 7, 9, 11]),
    )
}

/// K4 labeled 0, 2, 5, 7: every pairwise gap is prime.
pub fn k4_prime() -> (Graph, Labeling) {
    (
        Graph::complete(4).unwrap(),
        Labeling::from_values(&[0, 2, 5, 7]),
    )
}

/// The complete 3-partite graph K_{1,2,2} with its essentially unique
/// prime-distance labeling 0 / 2, -2 / 5, -5.
pub fn k122_prime() -> (Graph, Partition, Labeling) {
    let (g, parts) = Graph::complete_multipartite(&[1, 2, 2]).unwrap();
    let l = Labeling::from_values(&[0, 2, -2, 5, -5]);
    (g, parts, l)
}
