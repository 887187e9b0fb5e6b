//! The bridged case: solve each 2-edge-connected piece of the bridge tree on
//! an augmented graph and take the union.

use super::{
    certify, check_hypotheses, construct_2ec, select_2ec, select_doubled_pair, ComponentLog, ComponentRole,
    ConstructError, Construction, ConstructionLog, Stage,
};
use crate::graph::{bridge_decomposition, edge, smooth, BridgeDecomposition, ComponentType, Edge, Multigraph, Vertex};
use crate::observe::{Bound, Model};

/// A set of at most n/6 vertices for a connected claw-free diamond-free
/// cubic graph, verified under the vertex model on the whole graph.
///
/// The bridge tree is rooted at one end of a diametral path. A leaf piece has
/// one degree-2 vertex, which is smoothed into a doubled pair. An inner piece
/// with ports `x_1, .., x_r` (`x_1` toward the root) gets the edges
/// `x_1x_2, x_3x_4, ..` when `r` is even; when `r` is odd it gets
/// `x_2x_3, x_4x_5, ..` and `x_1` is smoothed. Triangles between bridges
/// take nothing.
pub fn construct_general(g: &Multigraph) -> Result<Construction, ConstructError> {
    check_hypotheses(g, true, false)?;
    let d = bridge_decomposition(g)?;
    if d.bridges.is_empty() {
        return construct_2ec(g);
    }
    let (set, log) = select_general(g, &d)?;
    if 6 * set.len() > g.order() {
        return Err(ConstructError::Internal(format!("selected {} vertices for order {}", set.len(), g.order())));
    }
    let certificate = certify(g, &set, Model::Vertex, Bound::fraction(g.order() as u64, 6))?;
    Ok(Construction { certificate, log })
}

fn select_general(g: &Multigraph, d: &BridgeDecomposition) -> Result<(Vec<Vertex>, ConstructionLog), ConstructError> {
    let tree = &d.tree;
    let from_zero = tree.distances_from(0);
    let far = from_zero.iter().map(|x| x.expect("bridge tree is connected")).max().unwrap_or(0);
    let root = from_zero.iter().position(|&x| x == Some(far)).unwrap_or(0);
    let depth: Vec<usize> = tree.distances_from(root).into_iter().map(|x| x.expect("connected")).collect();
    let parent = |c: usize| tree.neighbors(c).find(|&p| depth[p] + 1 == depth[c]);

    let mut selected = Vec::new();
    let mut components = Vec::new();
    for (c, comp) in d.components.iter().enumerate() {
        let mut entry = ComponentLog {
            component: c,
            depth: depth[c],
            role: ComponentRole::Triangle,
            vertices: comp.vertices.clone(),
            ports: Vec::new(),
            added_edges: Vec::new(),
            smoothed: None,
            selected: Vec::new(),
            labels: Vec::new(),
            inner: None,
        };
        match comp.kind {
            ComponentType::I => {
                return Err(ConstructError::Internal(format!("single-vertex piece {c} in a claw-free graph")));
            }
            ComponentType::II => {
                if comp.vertices.len() != 3 {
                    return Err(ConstructError::Internal(format!("cycle piece {c} is not a triangle")));
                }
            }
            ComponentType::III => {
                let mut labels = comp.vertices.clone();
                let local_of = |v: Vertex| comp.vertices.binary_search(&v).expect("vertex of this piece");
                let mut local = g.induced_subgraph(&comp.vertices);
                let up = parent(c);
                let mut ports: Vec<Vertex> = d.ports(c).into_iter().map(|(inside, _)| inside).collect();
                ports.sort_unstable();
                if let Some(p) = up {
                    let x1 = d
                        .ports(c)
                        .into_iter()
                        .find(|&(_, outside)| d.component_of[outside] == p)
                        .map(|(inside, _)| inside)
                        .expect("a bridge to the parent");
                    ports.retain(|&x| x != x1);
                    ports.insert(0, x1);
                }
                if ports.iter().any(|&x| local.degree(local_of(x)) != 2) {
                    return Err(ConstructError::Internal(format!("piece {c} has a port of degree other than 2")));
                }
                let r = ports.len();
                let (smoothed, pairs): (Option<Vertex>, Vec<Edge>) = if r == 1 {
                    entry.role = ComponentRole::Leaf;
                    (Some(ports[0]), Vec::new())
                } else if r.is_multiple_of(2) {
                    entry.role = ComponentRole::EvenPorts;
                    (None, ports.chunks(2).map(|p| (p[0], p[1])).collect())
                } else {
                    entry.role = ComponentRole::OddPorts;
                    (Some(ports[0]), ports[1..].chunks(2).map(|p| (p[0], p[1])).collect())
                };
                for &(a, b) in &pairs {
                    local = local.with_edge(local_of(a), local_of(b), 1)?;
                    entry.added_edges.push(edge(a, b));
                }
                let (local_set, inner) = match smoothed {
                    None => {
                        check_hypotheses(&local, true, true).map_err(|e| augmented_failure(c, e))?;
                        select_2ec(&local, None)?
                    }
                    Some(x) => {
                        let i = local_of(x);
                        local = smooth(&local, i)?;
                        labels.remove(i);
                        check_hypotheses(&local, false, true).map_err(|e| augmented_failure(c, e))?;
                        select_doubled_pair(&local)?
                    }
                };
                entry.smoothed = smoothed;
                entry.ports = ports;
                entry.selected = local_set.iter().map(|&i| labels[i]).collect();
                entry.labels = labels;
                entry.inner = Some(Box::new(inner));
                selected.extend(entry.selected.iter().copied());
            }
        }
        components.push(entry);
    }
    selected.sort_unstable();
    let mut log = ConstructionLog::new(Stage::General, g.order());
    log.selected = selected.clone();
    log.components = components;
    Ok((selected, log))
}

fn augmented_failure(c: usize, e: ConstructError) -> ConstructError {
    ConstructError::Internal(format!("augmented piece {c} fails the hypotheses: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{gamma_p_exact, SearchLimits};
    use crate::graph::generate::{generate, Family};
    use crate::observe::verify_certificate;
    use proptest::prelude::*;

    #[test]
    fn bridgeless_input_matches_2ec() {
        let g = generate(&Family::Figure1).unwrap();
        let a = construct_general(&g).unwrap();
        let b = construct_2ec(&g).unwrap();
        assert_eq!(a.certificate, b.certificate);
    }

    /// A leaf piece: a doubled-pair multigraph with the doubled pair
    /// subdivided once, so the new vertex is the only one of degree 2.
    fn leaf(seed: u64) -> Multigraph {
        let m = generate(&Family::RandomDoubledPair { n: 4, seed }).unwrap();
        let ((x, y), _) = m.edges().find(|&(_, mult)| mult == 2).unwrap();
        let mut edges: Vec<(Vertex, Vertex)> = m.without_edge(x, y).edge_copies().map(|(u, v, _)| (u, v)).collect();
        let p = m.order();
        edges.extend([(x, p), (y, p)]);
        Multigraph::from_edges(p + 1, edges).unwrap()
    }

    #[test]
    fn two_leaves_joined_by_a_bridge() {
        let (a, b) = (leaf(1), leaf(2));
        let shift = a.order();
        let mut edges: Vec<(Vertex, Vertex)> = a.edge_copies().map(|(u, v, _)| (u, v)).collect();
        edges.extend(b.edge_copies().map(|(u, v, _)| (u + shift, v + shift)));
        edges.push((shift - 1, shift + b.order() - 1));
        let g = Multigraph::from_edges(shift + b.order(), edges).unwrap();
        assert_eq!(g.order(), 30);
        let c = construct_general(&g).unwrap();
        assert!(c.set().len() <= 4);
        assert!(c.log.components.iter().all(|p| p.role == ComponentRole::Leaf));
        let exact = gamma_p_exact(&g, Model::Vertex, &SearchLimits::default()).unwrap();
        assert!(exact.value <= c.set().len());
    }

    #[test]
    fn bridged_random_instances() {
        for seed in 0..10 {
            let g = generate(&Family::RandomBridgedCfdf { parts: 2 + seed as usize % 5, seed }).unwrap();
            let c = construct_general(&g).unwrap();
            assert!(6 * c.set().len() <= g.order());
            verify_certificate(&c.certificate, &g).unwrap();
            if g.order() <= 30 {
                let exact = gamma_p_exact(&g, Model::Vertex, &SearchLimits::default()).unwrap();
                assert!(exact.value <= c.set().len());
            }
        }
    }

    #[test]
    fn disconnected_input_rejected() {
        let f = generate(&Family::Figure1).unwrap();
        let mut edges: Vec<(Vertex, Vertex)> = f.edge_copies().map(|(u, v, _)| (u, v)).collect();
        edges.extend(f.edge_copies().map(|(u, v, _)| (u + 12, v + 12)));
        let g = Multigraph::from_edges(24, edges).unwrap();
        assert!(matches!(construct_general(&g), Err(ConstructError::Hypothesis(_))));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn random_bridged_graphs_certify(parts in 2usize..9, seed in any::<u64>()) {
            let g = generate(&Family::RandomBridgedCfdf { parts, seed }).unwrap();
            let c = construct_general(&g).unwrap();
            prop_assert!(6 * c.set().len() <= g.order());
            verify_certificate(&c.certificate, &g).unwrap();
        }
    }
}
