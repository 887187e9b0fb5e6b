use super::{GraphError, Multigraph, Vertex};

/// Cartesian product `G □ H` of two simple graphs.
///
/// The pair `(g, h)` is numbered `g * |V(H)| + h`.
pub fn cartesian_product(g: &Multigraph, h: &Multigraph) -> Result<Multigraph, GraphError> {
    g.require_simple()?;
    h.require_simple()?;
    let nh = h.order();
    let id = |a: Vertex, b: Vertex| a * nh + b;
    let mut edges = Vec::with_capacity(g.order() * h.size() + h.order() * g.size());
    for a in g.vertices() {
        for ((x, y), _) in h.edges() {
            edges.push((id(a, x), id(a, y)));
        }
    }
    for ((x, y), _) in g.edges() {
        for b in h.vertices() {
            edges.push((id(x, b), id(y, b)));
        }
    }
    Multigraph::from_edges(g.order() * nh, edges)
}

/// Inverse of the product numbering.
pub fn product_pair(index: Vertex, h_order: usize) -> (Vertex, Vertex) {
    (index / h_order, index % h_order)
}
