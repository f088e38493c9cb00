//! Standard small graphs.

use crate::graph::Graph;

/// Complete graph `K_t`.
pub fn complete(t: usize) -> Graph {
    Graph::from_edges_lenient(t, (0..t).flat_map(|u| (u + 1..t).map(move |v| (u, v))))
}

/// Balanced complete bipartite graph `K_{d,d}`; sides are `0..d` and `d..2d`.
pub fn complete_bipartite(d: usize) -> Graph {
    complete_bipartite_sized(d, d)
}

pub fn complete_bipartite_sized(a: usize, b: usize) -> Graph {
    Graph::from_edges_lenient(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Cycle `C_n` on `0..n` in cyclic order. Needs `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    Graph::from_edges_lenient(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Path on `n` vertices (`n - 1` edges).
pub fn path(n: usize) -> Graph {
    Graph::from_edges_lenient(n, (1..n).map(|i| (i - 1, i)))
}

/// Petersen graph: outer 5-cycle `0..5`, spokes `i ~ i+5`, inner pentagram.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges_lenient(10, outer.chain(spokes).chain(inner).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(complete_bipartite(3).edge_count(), 9);
        assert_eq!(cycle(7).edge_count(), 7);
        assert_eq!(path(4).edge_count(), 3);
        let p = petersen();
        assert_eq!(p.edge_count(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
    }
}
