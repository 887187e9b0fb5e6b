//! Loopless multigraphs and the structural toolkit built on them.
//!
//! A single [`Multigraph`] type carries simple graphs, cubic multigraphs,
//! trees and Cartesian products. Vertices are the indices `0..n`; an edge is
//! an unordered pair with a multiplicity of at least one.

mod bridges;
mod classify;
mod factor;
pub mod generate;
pub mod io;
mod matching;
mod product;
mod smooth;
pub mod trees;
mod triangles;

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use thiserror::Error;

pub use bridges::{bridge_decomposition, bridges, BridgeDecomposition, Component, ComponentType};
pub use classify::{classify, is_claw_free, is_diamond_free, triangles_at, ClassFlags};
pub use factor::{two_factor, TwoFactor};
pub use generate::{generate, Family};
pub use matching::{maximum_matching, perfect_matching, Matching};
pub use product::{cartesian_product, product_pair};
pub use smooth::smooth;
pub use triangles::{triangle_contraction, triangle_expansion, TriangleMap};

/// Vertex index.
pub type Vertex = usize;

/// An unordered vertex pair, always stored with `.0 < .1`.
pub type Edge = (Vertex, Vertex);

/// Normalizes an unordered pair so the smaller endpoint comes first.
pub fn edge(u: Vertex, v: Vertex) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {0} is not allowed")]
    Loop(Vertex),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: Vertex, order: usize },
    #[error("edge multiplicity must be at least 1 (pair {0:?})")]
    ZeroMultiplicity(Edge),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not simple")]
    NotSimple,
    #[error("vertex {vertex} has degree {degree}, expected {expected}")]
    WrongDegree { vertex: Vertex, degree: usize, expected: usize },
    #[error("component {0:?} is neither a single vertex, a cycle, nor 2-edge-connected with maximum degree 3")]
    UntypedComponent(Vec<Vertex>),
    #[error("triangle structure violated: {0}")]
    TriangleStructure(String),
    #[error("graph has a bridge {0:?}")]
    HasBridge(Edge),
    #[error("no 2-factor exists under the requested constraints")]
    NoTwoFactor,
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("invalid parameters for family `{family}`: {reason}")]
    InvalidParams { family: String, reason: String },
    #[error("invalid two-factor: {0}")]
    InvalidFactor(String),
    #[error("parse error on line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

/// An undirected loopless multigraph on vertices `0..n`.
///
/// The graph is immutable once built; every transformation returns a new
/// value. Adjacency lists are sorted by neighbour index, so every traversal
/// in this crate visits neighbours in ascending order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: BTreeMap<Edge, usize>,
    adj: Vec<Vec<(Vertex, usize)>>,
}

impl Multigraph {
    /// Builds a graph from `(u, v)` pairs; repeated pairs raise the multiplicity.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Self::from_weighted_edges(n, edges.into_iter().map(|(u, v)| (u, v, 1)))
    }

    /// Builds a graph from `(u, v, multiplicity)` triples. Repeated pairs add up.
    pub fn from_weighted_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex, usize)>,
    {
        let mut map: BTreeMap<Edge, usize> = BTreeMap::new();
        for (u, v, mult) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, order: n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if mult == 0 {
                return Err(GraphError::ZeroMultiplicity(edge(u, v)));
            }
            *map.entry(edge(u, v)).or_insert(0) += mult;
        }
        Ok(Self::from_map(n, map))
    }

    fn from_map(n: usize, edges: BTreeMap<Edge, usize>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (&(u, v), &m) in &edges {
            adj[u].push((v, m));
            adj[v].push((u, m));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Multigraph { n, edges, adj }
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self::from_map(n, BTreeMap::new())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges counted with multiplicity.
    pub fn size(&self) -> usize {
        self.edges.values().sum()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    /// Distinct vertex pairs with their multiplicities, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (Edge, usize)> + '_ {
        self.edges.iter().map(|(&e, &m)| (e, m))
    }

    /// Every edge once per unit of multiplicity, as `(u, v, copy)`.
    pub fn edge_copies(&self) -> impl Iterator<Item = (Vertex, Vertex, usize)> + '_ {
        self.edges.iter().flat_map(|(&(u, v), &m)| (0..m).map(move |c| (u, v, c)))
    }

    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> usize {
        if u == v {
            return 0;
        }
        self.edges.get(&edge(u, v)).copied().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.multiplicity(u, v) > 0
    }

    /// Neighbours with multiplicities, ascending by index.
    pub fn neighbors_with_multiplicity(&self, v: Vertex) -> &[(Vertex, usize)] {
        &self.adj[v]
    }

    /// Distinct neighbours, ascending.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].iter().map(|&(w, _)| w)
    }

    /// Degree counted with multiplicity.
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].iter().map(|&(_, m)| m).sum()
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_simple(&self) -> bool {
        self.edges.values().all(|&m| m == 1)
    }

    pub fn is_regular(&self, d: usize) -> bool {
        self.vertices().all(|v| self.degree(v) == d)
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// BFS distances from `source`; `None` for unreachable vertices.
    pub fn distances_from(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            let d = dist[v].unwrap();
            for w in self.neighbors(v) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Subgraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Multigraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut map = BTreeMap::new();
        for (&(u, v), &m) in &self.edges {
            if index[u] != usize::MAX && index[v] != usize::MAX {
                map.insert(edge(index[u], index[v]), m);
            }
        }
        Self::from_map(vertices.len(), map)
    }

    /// Returns a copy with the multiplicity of `(u, v)` raised by `mult`.
    pub fn with_edge(&self, u: Vertex, v: Vertex, mult: usize) -> Result<Multigraph, GraphError> {
        Self::from_weighted_edges(self.n, self.edges().map(|((a, b), m)| (a, b, m)).chain([(u, v, mult)]))
    }

    /// Returns a copy with one unit of multiplicity removed from `(u, v)`.
    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Multigraph {
        let mut map = self.edges.clone();
        let key = edge(u, v);
        if let Some(m) = map.get_mut(&key) {
            *m -= 1;
            if *m == 0 {
                map.remove(&key);
            }
        }
        Self::from_map(self.n, map)
    }

    /// Distinct-pair support as a simple graph.
    pub fn support(&self) -> Multigraph {
        Self::from_map(self.n, self.edges.keys().map(|&e| (e, 1)).collect())
    }

    pub(crate) fn require_simple(&self) -> Result<(), GraphError> {
        if self.is_simple() {
            Ok(())
        } else {
            Err(GraphError::NotSimple)
        }
    }

    pub(crate) fn require_connected(&self) -> Result<(), GraphError> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(GraphError::Disconnected)
        }
    }

    pub(crate) fn require_cubic(&self) -> Result<(), GraphError> {
        match self.vertices().find(|&v| self.degree(v) != 3) {
            None => Ok(()),
            Some(v) => Err(GraphError::WrongDegree { vertex: v, degree: self.degree(v), expected: 3 }),
        }
    }
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multigraph(n={}, edges=[", self.n)?;
        for (i, ((u, v), m)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if m == 1 {
                write!(f, "{u}-{v}")?;
            } else {
                write!(f, "{u}-{v}x{m}")?;
            }
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loops_are_rejected() {
        assert_eq!(Multigraph::from_edges(3, [(0, 1), (2, 2)]), Err(GraphError::Loop(2)));
    }

    #[test]
    fn degree_counts_multiplicity() {
        let g = Multigraph::from_edges(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.degree(1), 3);
        assert_eq!(g.multiplicity(0, 1), 2);
        assert_eq!(g.size(), 3);
        assert!(!g.is_simple());
        assert!(g.support().is_simple());
    }

    #[test]
    fn out_of_range_vertex() {
        assert!(matches!(
            Multigraph::from_edges(2, [(0, 5)]),
            Err(GraphError::VertexOutOfRange { vertex: 5, order: 2 })
        ));
    }

    #[test]
    fn without_edge_drops_one_copy() {
        let g = Multigraph::from_weighted_edges(2, [(0, 1, 2)]).unwrap();
        let h = g.without_edge(1, 0);
        assert_eq!(h.multiplicity(0, 1), 1);
        assert_eq!(h.without_edge(0, 1).size(), 0);
    }

    #[test]
    fn components_sorted() {
        let g = Multigraph::from_edges(5, [(3, 4), (0, 2)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 2], vec![1], vec![3, 4]]);
        assert!(!g.is_connected());
    }
}
