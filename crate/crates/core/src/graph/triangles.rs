use std::collections::BTreeMap;

use super::classify::triangles_at;
use super::{edge, Edge, GraphError, Multigraph, Vertex};

/// Replaces every vertex `h` of a loopless cubic multigraph by the triangle
/// `{3h, 3h+1, 3h+2}`.
///
/// The incidences of `h` are handed out to `3h`, `3h+1`, `3h+2` in the order
/// of the ascending edge-copy list, so the result is fully determined by `h`.
pub fn triangle_expansion(h: &Multigraph) -> Result<Multigraph, GraphError> {
    h.require_cubic()?;
    let mut next_slot = vec![0usize; h.order()];
    let mut edges = Vec::with_capacity(3 * h.order() + h.size());
    for t in h.vertices() {
        edges.extend([(3 * t, 3 * t + 1), (3 * t, 3 * t + 2), (3 * t + 1, 3 * t + 2)]);
    }
    for (a, b, _) in h.edge_copies() {
        let sa = next_slot[a];
        let sb = next_slot[b];
        next_slot[a] += 1;
        next_slot[b] += 1;
        edges.push((3 * a + sa, 3 * b + sb));
    }
    Multigraph::from_edges(3 * h.order(), edges)
}

/// How the vertices of a triangle-structured cubic graph group into triangles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleMap {
    /// Triangle `i` of the source graph, sorted; triangles are ordered by
    /// smallest vertex.
    pub triangles: Vec<[Vertex; 3]>,
    /// `triangle_of[v]` is the triangle (contracted vertex) containing `v`.
    pub triangle_of: Vec<usize>,
    /// For each contracted pair, the source edges joining the two triangles.
    pub links: BTreeMap<Edge, Vec<Edge>>,
}

impl TriangleMap {
    /// Source edges realizing the contracted pair `(a, b)`.
    pub fn realizing_edges(&self, a: usize, b: usize) -> &[Edge] {
        self.links.get(&edge(a, b)).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// Contracts every triangle of a simple cubic graph in which each vertex
/// lies in exactly one triangle.
///
/// Edges between triangles become edges of the contracted multigraph, with
/// parallel links kept as multiplicity.
pub fn triangle_contraction(g: &Multigraph) -> Result<(Multigraph, TriangleMap), GraphError> {
    g.require_simple()?;
    g.require_cubic()?;
    let mut triangles = Vec::new();
    for v in g.vertices() {
        let ts = triangles_at(g, v);
        if ts.len() != 1 {
            return Err(GraphError::TriangleStructure(format!("vertex {v} lies in {} triangles", ts.len())));
        }
        if ts[0][0] == v {
            triangles.push(ts[0]);
        }
    }
    let mut triangle_of = vec![usize::MAX; g.order()];
    for (i, t) in triangles.iter().enumerate() {
        for &v in t {
            triangle_of[v] = i;
        }
    }
    let mut links: BTreeMap<Edge, Vec<Edge>> = BTreeMap::new();
    for ((u, v), _) in g.edges() {
        let (a, b) = (triangle_of[u], triangle_of[v]);
        if a != b {
            links.entry(edge(a, b)).or_default().push((u, v));
        }
    }
    let h = Multigraph::from_weighted_edges(triangles.len(), links.iter().map(|(&(a, b), es)| (a, b, es.len())))?;
    Ok((h, TriangleMap { triangles, triangle_of, links }))
}
