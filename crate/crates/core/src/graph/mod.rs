//! Simple undirected graphs and the degree statistics the index bounds consume.
//!
//! [`Graph`] admits disconnected graphs and isolated vertices so that
//! component additivity of the indices can be exercised; the bound checks
//! enforce connectivity themselves.

mod canonical;
mod edgelist;
mod enumerate;
mod families;
mod graph6;
mod random;

use std::collections::VecDeque;

use thiserror::Error;

pub use canonical::{canonical_code, decode_code, MAX_CANONICAL_ORDER};
pub use edgelist::{parse_edge_list, to_edge_list};
pub use enumerate::{enumerate_connected, CONNECTED_CLASS_COUNTS, MAX_ENUMERATION_ORDER};
pub use graph6::{encode_graph6, parse_graph6, parse_graph6_lines, GRAPH6_MAX_ORDER};
pub use random::{random_connected, random_connected_with, RETRY_BUDGET};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    MultiEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<GraphError>,
    },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("{0}")]
    Argument(String),
    #[error("no connected sample for n = {n}, p = {p} within {attempts} attempts")]
    SamplingExhausted { n: usize, p: f64, attempts: usize },
}

impl GraphError {
    /// The underlying error with any line-number wrapper removed.
    pub fn root(&self) -> &GraphError {
        match self {
            GraphError::AtLine { source, .. } => source.root(),
            other => other,
        }
    }

    /// Line number attached to the error, if it came from a text parser.
    pub fn line(&self) -> Option<usize> {
        match self {
            GraphError::AtLine { line, .. } | GraphError::Malformed { line, .. } => Some(*line),
            _ => None,
        }
    }

    pub(crate) fn at_line(self, line: usize) -> GraphError {
        match self {
            e @ (GraphError::AtLine { .. } | GraphError::Malformed { .. }) => e,
            e => GraphError::AtLine {
                line,
                source: Box::new(e),
            },
        }
    }
}

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Edges are stored normalized (`u < v`) and sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, repeated unordered pairs and
    /// out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut adj = vec![Vec::new(); n];
        let mut normalized = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if adj[u].contains(&v) {
                return Err(GraphError::MultiEdge(u.min(v), u.max(v)));
            }
            adj[u].push(v);
            adj[v].push(u);
            normalized.push((u.min(v), u.max(v)));
        }
        normalized.sort_unstable();
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: normalized,
            adj,
        })
    }

    /// Order (vertex count).
    pub fn n(&self) -> usize {
        self.n
    }

    /// Size (edge count).
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// True iff every vertex is reachable from vertex 0.
    pub fn is_connected(&self) -> bool {
        self.reachable_from(0).iter().all(|&seen| seen)
    }

    fn reachable_from(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut label = vec![usize::MAX; self.n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            let seen = self.reachable_from(start);
            let comp: Vec<usize> = (0..self.n).filter(|&v| seen[v]).collect();
            for &v in &comp {
                label[v] = out.len();
            }
            out.push(comp);
        }
        out
    }

    /// Subgraph induced by `vertices`, relabeled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph, GraphError> {
        let mut index = vec![usize::MAX; self.n];
        for (new, &old) in vertices.iter().enumerate() {
            if old >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: old,
                    n: self.n,
                });
            }
            index[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::new(vertices.len(), edges)
    }

    /// Copy of the graph with the pair `{u, v}` added if absent or removed if
    /// present.
    pub fn with_toggled(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let (a, b) = (u.min(v), u.max(v));
        if b >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: b,
                n: self.n,
            });
        }
        let mut edges = self.edges.clone();
        match edges.binary_search(&(a, b)) {
            Ok(pos) => {
                edges.remove(pos);
            }
            Err(_) => edges.push((a, b)),
        }
        Graph::new(self.n, edges)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(self.n + other.n, edges).expect("union of simple graphs is simple")
    }

    pub fn degree_stats(&self) -> DegreeStats {
        DegreeStats::of(self)
    }
}

/// Structural quantities shared by every bound: order, size, degree
/// sequence and its extremes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeStats {
    pub n: usize,
    pub m: usize,
    pub degrees: Vec<usize>,
    /// Minimum degree.
    pub min_degree: usize,
    /// Maximum degree.
    pub max_degree: usize,
    pub is_regular: bool,
    /// `d_u * d_v` takes a single value over all edges (vacuously true
    /// without edges).
    pub edge_product_constant: bool,
    /// Every edge joins a minimum-degree vertex to a maximum-degree vertex.
    pub bidegreed_extreme: bool,
}

impl DegreeStats {
    pub fn of(g: &Graph) -> DegreeStats {
        let degrees: Vec<usize> = (0..g.n()).map(|u| g.degree(u)).collect();
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let mut products = g.edges().iter().map(|&(u, v)| degrees[u] * degrees[v]);
        let edge_product_constant = match products.next() {
            Some(first) => products.all(|p| p == first),
            None => true,
        };
        let bidegreed_extreme = g.edges().iter().all(|&(u, v)| {
            let (lo, hi) = (degrees[u].min(degrees[v]), degrees[u].max(degrees[v]));
            lo == min_degree && hi == max_degree
        });
        DegreeStats {
            n: g.n(),
            m: g.m(),
            min_degree,
            max_degree,
            is_regular: min_degree == max_degree,
            edge_product_constant,
            bidegreed_extreme,
            degrees,
        }
    }
}

/// True iff every vertex of `g` is reachable from vertex 0.
pub fn is_connected(g: &Graph) -> bool {
    g.is_connected()
}

pub fn degree_stats(g: &Graph) -> DegreeStats {
    DegreeStats::of(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_p3_stats() {
        let g = Graph::path(3);
        let s = g.degree_stats();
        assert_eq!(s.degrees, vec![1, 2, 1]);
        assert_eq!((s.min_degree, s.max_degree, s.m), (1, 2, 2));
        assert!(!s.is_regular);
        // both edges have product 2
        assert!(s.edge_product_constant);
    }

    #[test]
    fn complete_k4_stats() {
        let s = Graph::complete(4).degree_stats();
        assert_eq!(s.degrees, vec![3; 4]);
        assert!(s.is_regular);
        assert_eq!(s.m, 6);
    }

    #[test]
    fn star_has_constant_edge_product() {
        let s = Graph::star(3).degree_stats();
        assert_eq!(s.degrees, vec![3, 1, 1, 1]);
        assert!(s.edge_product_constant);
        assert!(s.bidegreed_extreme);
        assert!(!s.is_regular);
    }

    #[test]
    fn p4_edge_products_vary() {
        let s = Graph::path(4).degree_stats();
        assert!(!s.edge_product_constant);
        assert!(!s.bidegreed_extreme);
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(3).is_connected());
        let two_k2 = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_k2.is_connected());
        assert_eq!(two_k2.components(), vec![vec![0, 1], vec![2, 3]]);
        let k1 = Graph::new(1, []).unwrap();
        assert!(k1.is_connected());
    }

    #[test]
    fn constructor_rejects_bad_edges() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(GraphError::MultiEdge(0, 1))
        );
        assert_eq!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(Graph::new(0, []), Err(GraphError::NoVertices));
    }

    #[test]
    fn toggle_adds_and_removes() {
        let p3 = Graph::path(3);
        let k3 = p3.with_toggled(2, 0).unwrap();
        assert_eq!(k3, Graph::complete(3));
        assert_eq!(k3.with_toggled(0, 2).unwrap(), p3);
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = Graph::path(4).disjoint_union(&Graph::complete(3));
        let comps = g.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(g.induced(&comps[1]).unwrap(), Graph::complete(3));
        assert_eq!(g.induced(&comps[0]).unwrap(), Graph::path(4));
    }
}
