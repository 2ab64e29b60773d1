//! Shared fixtures for the benchmark targets.

use pdg_core::Graph;

/// The Petersen graph: 3-chromatic, girth 5, a standard coloring workout.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5)); // outer cycle
        edges.push((i, i + 5)); // spokes
        edges.push((i + 5, (i + 2) % 5 + 5)); // inner pentagram
    }
    Graph::new(10, &edges).unwrap()
}
