use serde::{Deserialize, Serialize};

use super::{edge, Edge, GraphError, Multigraph, Vertex};

/// Cut edges of a connected graph, ascending. A pair of multiplicity two or
/// more is never a bridge.
pub fn bridges(g: &Multigraph) -> Result<Vec<Edge>, GraphError> {
    g.require_connected()?;
    Ok(find_bridges(g))
}

/// Low-link bridge search over every component.
pub(crate) fn find_bridges(g: &Multigraph) -> Vec<Edge> {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut out = Vec::new();

    for root in g.vertices() {
        if disc[root] != usize::MAX {
            continue;
        }
        // (vertex, parent, next neighbour position)
        let mut stack: Vec<(Vertex, Option<Vertex>, usize)> = vec![(root, None, 0)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(&mut (v, parent, ref mut pos)) = stack.last_mut() {
            let nbrs = g.neighbors_with_multiplicity(v);
            if *pos < nbrs.len() {
                let (w, mult) = nbrs[*pos];
                *pos += 1;
                if Some(w) == parent && mult == 1 {
                    continue;
                }
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, Some(v), 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(p) = parent {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        out.push(edge(p, v));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Classification of a component of `G - B(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ComponentType {
    /// A single vertex.
    I,
    /// A cycle `C_m`, `m >= 2` (a doubled edge is `C_2`).
    II,
    /// 2-edge-connected with maximum degree 3.
    III,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub vertices: Vec<Vertex>,
    pub kind: ComponentType,
}

/// Bridges, the typed components they separate, and the bridge tree `T_G`.
///
/// Components are ordered by their smallest vertex; tree vertex `i` is
/// component `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeDecomposition {
    pub bridges: Vec<Edge>,
    pub components: Vec<Component>,
    pub tree: Multigraph,
    /// `component_of[v]` is the index of the component containing `v`.
    pub component_of: Vec<usize>,
}

impl BridgeDecomposition {
    /// Bridges incident to component `c`, as `(inside endpoint, outside endpoint)`.
    pub fn ports(&self, c: usize) -> Vec<(Vertex, Vertex)> {
        self.bridges
            .iter()
            .filter_map(|&(u, v)| {
                if self.component_of[u] == c {
                    Some((u, v))
                } else if self.component_of[v] == c {
                    Some((v, u))
                } else {
                    None
                }
            })
            .collect()
    }
}

pub fn bridge_decomposition(g: &Multigraph) -> Result<BridgeDecomposition, GraphError> {
    let bridge_list = bridges(g)?;
    let mut remaining = g.clone();
    for &(u, v) in &bridge_list {
        remaining = remaining.without_edge(u, v);
    }
    let parts = remaining.components();
    let mut component_of = vec![0; g.order()];
    for (i, part) in parts.iter().enumerate() {
        for &v in part {
            component_of[v] = i;
        }
    }

    let mut components = Vec::with_capacity(parts.len());
    for part in parts {
        let sub = remaining.induced_subgraph(&part);
        let kind = if part.len() == 1 {
            ComponentType::I
        } else if sub.is_regular(2) {
            ComponentType::II
        } else if sub.max_degree() == 3 && find_bridges(&sub).is_empty() {
            ComponentType::III
        } else {
            return Err(GraphError::UntypedComponent(part));
        };
        components.push(Component { vertices: part, kind });
    }

    let tree =
        Multigraph::from_edges(components.len(), bridge_list.iter().map(|&(u, v)| (component_of[u], component_of[v])))?;

    Ok(BridgeDecomposition { bridges: bridge_list, components, tree, component_of })
}
