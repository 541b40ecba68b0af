//! Named graph families used throughout the tests and examples.

use super::Graph;

impl Graph {
    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is simple")
    }

    /// Path `P_n` on `n` vertices.
    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path is simple")
    }

    /// Cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle is simple")
    }

    /// Star `K_{1,leaves}` with the centre at vertex 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::complete_bipartite(1, leaves)
    }

    /// Complete bipartite `K_{a,b}`: parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::new(a + b, edges).expect("complete bipartite graph is simple")
    }

    /// Circulant graph: `u ~ u ± s (mod n)` for each offset `s`.
    pub fn circulant(n: usize, offsets: &[usize]) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for &s in offsets {
                let v = (u + s) % n;
                let pair = (u.min(v), u.max(v));
                if u != v && !edges.contains(&pair) {
                    edges.push(pair);
                }
            }
        }
        Graph::new(n, edges).expect("deduplicated circulant is simple")
    }

    /// The Petersen graph (3-regular, 10 vertices).
    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::new(10, outer.chain(spokes).chain(inner)).expect("petersen is simple")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        assert_eq!(Graph::complete(5).m(), 10);
        assert_eq!(Graph::path(4).m(), 3);
        assert_eq!(Graph::cycle(7).m(), 7);
        assert_eq!(Graph::complete_bipartite(2, 3).m(), 6);
        assert_eq!(Graph::petersen().m(), 15);
        assert!(Graph::petersen().degree_stats().is_regular);
    }

    #[test]
    fn circulants_are_regular() {
        for (offsets, k) in [(&[1][..], 2), (&[1, 4][..], 3), (&[1, 2][..], 4)] {
            let g = Graph::circulant(8, offsets);
            let s = g.degree_stats();
            assert!(s.is_regular);
            assert_eq!(s.min_degree, k);
        }
    }
}
