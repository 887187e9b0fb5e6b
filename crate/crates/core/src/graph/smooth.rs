use super::{GraphError, Multigraph, Vertex};

/// Smooths the degree-2 vertex `v`: deletes it and joins its two neighbours
/// by one more edge.
///
/// Vertices above `v` shift down by one. A degree-2 vertex whose two edges
/// go to the same neighbour would leave a loop, which is rejected.
pub fn smooth(g: &Multigraph, v: Vertex) -> Result<Multigraph, GraphError> {
    if v >= g.order() {
        return Err(GraphError::VertexOutOfRange { vertex: v, order: g.order() });
    }
    let degree = g.degree(v);
    if degree != 2 {
        return Err(GraphError::WrongDegree { vertex: v, degree, expected: 2 });
    }
    let ends: Vec<Vertex> =
        g.neighbors_with_multiplicity(v).iter().flat_map(|&(w, m)| std::iter::repeat_n(w, m)).collect();
    let shift = |x: Vertex| if x > v { x - 1 } else { x };
    let (a, b) = (shift(ends[0]), shift(ends[1]));
    if a == b {
        return Err(GraphError::Loop(a));
    }
    let edges =
        g.edges().filter(|&((x, y), _)| x != v && y != v).map(|((x, y), m)| (shift(x), shift(y), m)).chain([(a, b, 1)]);
    Multigraph::from_weighted_edges(g.order() - 1, edges)
}
