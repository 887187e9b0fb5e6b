//! Named graph families with fixed vertex numberings.
//!
//! The numbering of each family is part of its contract:
//!
//! | family | numbering |
//! |---|---|
//! | `path(n)` | `0-1-…-(n-1)` |
//! | `cycle(n)` | path plus `(n-1)-0` |
//! | `complete(n)` | `0..n` |
//! | `complete_bipartite(a, b)` | side A `0..a`, side B `a..a+b` |
//! | `star(k)` | centre `0`, leaves `1..=k` |
//! | `double_star(a, b)` | centres `0`, `1`; leaves of `0` are `2..2+a`, leaves of `1` follow |
//! | `diamond_necklace(k)` | diamond `i` is `4i..4i+4` with tips `4i`, `4i+3`; tip `4i+3` joins tip `4(i+1 mod k)` |
//! | `ring_of_diamonds(k)` | same as `diamond_necklace(k)`, `k >= 2` |
//! | `triangle_expansion(H)` | vertex `h` of `H` becomes `{3h, 3h+1, 3h+2}` |
//! | `figure1` | left triangles `{0,4,5}`, `{1,2,3}`, right `{6,10,11}`, `{7,8,9}`; `u = 2`, `v = 11` |
//! | `figure2_g0` | centre triangle `{0,1,2}`, pendant blocks `{3,4,5}`, `{6,7,8}`, `{9,10,11}` |
//! | `hypercube(d)` | `Q_d = Q_{d-1} □ K_2`, product numbering |
//! | `random_*` | deterministic in the seed (ChaCha8) |

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::bridges::find_bridges;
use super::{cartesian_product, triangle_expansion, Edge, GraphError, Multigraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    DoubleStar(usize, usize),
    DiamondNecklace(usize),
    RingOfDiamonds(usize),
    TriangleExpansion(Box<Multigraph>),
    Figure1,
    Figure2G0,
    Hypercube(usize),
    RandomTree {
        n: usize,
        seed: u64,
    },
    /// Loopless, connected, bridgeless cubic multigraph on `n` (even) vertices.
    RandomCubicMultigraph {
        n: usize,
        seed: u64,
    },
    /// Triangle expansion of `RandomCubicMultigraph { n, seed }`: a simple
    /// 2-edge-connected claw-free diamond-free cubic graph on `3n` vertices.
    RandomCfdf {
        n: usize,
        seed: u64,
    },
    /// Claw-free diamond-free cubic graph whose bridge tree has `parts` nodes.
    RandomBridgedCfdf {
        parts: usize,
        seed: u64,
    },
    /// Replaces the edge `edge` of `base` by `a - x = y - b` with `xy` doubled;
    /// `x = n`, `y = n + 1`.
    DoubledPairGadget {
        base: Box<Multigraph>,
        edge: Edge,
    },
    /// `DoubledPairGadget` on `RandomCfdf { n, seed }` at a random edge
    /// between triangles.
    RandomDoubledPair {
        n: usize,
        seed: u64,
    },
}

impl Family {
    /// Parses a family name with integer parameters, as used on the command
    /// line and in manifests. Random families take their seed from `seed`.
    pub fn parse(name: &str, params: &[usize], seed: u64) -> Result<Family, GraphError> {
        let need = |k: usize| -> Result<(), GraphError> {
            if params.len() == k {
                Ok(())
            } else {
                Err(GraphError::InvalidParams {
                    family: name.to_string(),
                    reason: format!("expected {k} parameter(s), got {}", params.len()),
                })
            }
        };
        let p = |i: usize| params[i];
        let family = match name {
            "path" => need(1).map(|_| Family::Path(p(0)))?,
            "cycle" => need(1).map(|_| Family::Cycle(p(0)))?,
            "complete" => need(1).map(|_| Family::Complete(p(0)))?,
            "complete_bipartite" => need(2).map(|_| Family::CompleteBipartite(p(0), p(1)))?,
            "star" => need(1).map(|_| Family::Star(p(0)))?,
            "double_star" => need(2).map(|_| Family::DoubleStar(p(0), p(1)))?,
            "diamond_necklace" => need(1).map(|_| Family::DiamondNecklace(p(0)))?,
            "ring_of_diamonds" => need(1).map(|_| Family::RingOfDiamonds(p(0)))?,
            "figure1" => need(0).map(|_| Family::Figure1)?,
            "figure2_g0" => need(0).map(|_| Family::Figure2G0)?,
            "hypercube" => need(1).map(|_| Family::Hypercube(p(0)))?,
            "random_tree" => need(1).map(|_| Family::RandomTree { n: p(0), seed })?,
            "random_cubic_multigraph" => need(1).map(|_| Family::RandomCubicMultigraph { n: p(0), seed })?,
            "random_cfdf" => need(1).map(|_| Family::RandomCfdf { n: p(0), seed })?,
            "random_bridged_cfdf" => need(1).map(|_| Family::RandomBridgedCfdf { parts: p(0), seed })?,
            "random_doubled_pair" => need(1).map(|_| Family::RandomDoubledPair { n: p(0), seed })?,
            "triangle_expansion" | "doubled_pair_gadget" => {
                return Err(GraphError::InvalidParams {
                    family: name.to_string(),
                    reason: "needs a base graph, not integer parameters".into(),
                })
            }
            other => return Err(GraphError::UnknownFamily(other.to_string())),
        };
        Ok(family)
    }
}

fn invalid(family: &str, reason: impl Into<String>) -> GraphError {
    GraphError::InvalidParams { family: family.to_string(), reason: reason.into() }
}

pub fn generate(family: &Family) -> Result<Multigraph, GraphError> {
    match *family {
        Family::Path(n) => {
            if n == 0 {
                return Err(invalid("path", "n must be at least 1"));
            }
            Multigraph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Cycle(n) => {
            if n < 3 {
                return Err(invalid("cycle", "n must be at least 3"));
            }
            Multigraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Complete(n) => {
            if n == 0 {
                return Err(invalid("complete", "n must be at least 1"));
            }
            Multigraph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
        }
        Family::CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return Err(invalid("complete_bipartite", "both sides must be non-empty"));
            }
            Multigraph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
        }
        Family::Star(k) => {
            if k == 0 {
                return Err(invalid("star", "needs at least one leaf"));
            }
            Multigraph::from_edges(k + 1, (1..=k).map(|i| (0, i)))
        }
        Family::DoubleStar(a, b) => {
            if a == 0 || b == 0 {
                return Err(invalid("double_star", "each centre needs at least one leaf"));
            }
            let edges =
                std::iter::once((0, 1)).chain((2..2 + a).map(|i| (0, i))).chain((2 + a..2 + a + b).map(|i| (1, i)));
            Multigraph::from_edges(2 + a + b, edges)
        }
        Family::DiamondNecklace(k) => {
            if k == 0 {
                return Err(invalid("diamond_necklace", "k must be at least 1"));
            }
            diamond_ring(k)
        }
        Family::RingOfDiamonds(k) => {
            if k < 2 {
                return Err(invalid("ring_of_diamonds", "k must be at least 2"));
            }
            diamond_ring(k)
        }
        Family::TriangleExpansion(ref h) => triangle_expansion(h),
        Family::Figure1 => Multigraph::from_edges(
            12,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 5),
                (0, 5),
                (1, 3),
                (0, 4),
                (2, 8),
                (6, 7),
                (7, 8),
                (8, 9),
                (9, 10),
                (10, 11),
                (6, 11),
                (5, 11),
                (6, 10),
                (7, 9),
            ],
        ),
        Family::Figure2G0 => Multigraph::from_weighted_edges(
            12,
            [
                (0, 1, 1),
                (1, 2, 1),
                (0, 2, 1),
                (2, 3, 1),
                (3, 4, 1),
                (3, 5, 1),
                (4, 5, 2),
                (0, 6, 1),
                (6, 7, 1),
                (6, 8, 1),
                (7, 8, 2),
                (1, 9, 1),
                (9, 10, 1),
                (9, 11, 1),
                (10, 11, 2),
            ],
        ),
        Family::Hypercube(d) => {
            let k2 = Multigraph::from_edges(2, [(0, 1)])?;
            let mut q = Multigraph::empty(1);
            for _ in 0..d {
                q = cartesian_product(&q, &k2)?;
            }
            Ok(q)
        }
        Family::RandomTree { n, seed } => {
            if n == 0 {
                return Err(invalid("random_tree", "n must be at least 1"));
            }
            Multigraph::from_edges(n, random_tree_edges(n, &mut ChaCha8Rng::seed_from_u64(seed)))
        }
        Family::RandomCubicMultigraph { n, seed } => {
            if n == 0 || n % 2 == 1 {
                return Err(invalid("random_cubic_multigraph", "n must be even and positive"));
            }
            Ok(random_2ec_cubic(n, &mut ChaCha8Rng::seed_from_u64(seed)))
        }
        Family::RandomCfdf { n, seed } => {
            if n == 0 || n % 2 == 1 {
                return Err(invalid("random_cfdf", "n must be even and positive"));
            }
            triangle_expansion(&random_2ec_cubic(n, &mut ChaCha8Rng::seed_from_u64(seed)))
        }
        Family::RandomBridgedCfdf { parts, seed } => {
            if parts < 2 {
                return Err(invalid("random_bridged_cfdf", "needs at least two parts"));
            }
            let h = random_bridged_cubic(parts, &mut ChaCha8Rng::seed_from_u64(seed))?;
            triangle_expansion(&h)
        }
        Family::DoubledPairGadget { ref base, edge } => doubled_pair_gadget(base, edge),
        Family::RandomDoubledPair { n, seed } => {
            if n == 0 || n % 2 == 1 {
                return Err(invalid("random_doubled_pair", "n must be even and positive"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let h = random_2ec_cubic(n, &mut rng);
            let g = triangle_expansion(&h)?;
            let between: Vec<Edge> = g.edges().map(|(e, _)| e).filter(|&(u, v)| u / 3 != v / 3).collect();
            let e = between[rng.gen_range(0..between.len())];
            doubled_pair_gadget(&g, e)
        }
    }
}

fn diamond_ring(k: usize) -> Result<Multigraph, GraphError> {
    let mut edges = Vec::new();
    for i in 0..k {
        let b = 4 * i;
        edges.extend([(b, b + 1), (b, b + 2), (b + 1, b + 2), (b + 1, b + 3), (b + 2, b + 3)]);
        edges.push((b + 3, 4 * ((i + 1) % k)));
    }
    Multigraph::from_edges(4 * k, edges)
}

fn doubled_pair_gadget(base: &Multigraph, (a, b): Edge) -> Result<Multigraph, GraphError> {
    if base.multiplicity(a, b) == 0 {
        return Err(invalid("doubled_pair_gadget", format!("{a}-{b} is not an edge")));
    }
    let n = base.order();
    let g = base.without_edge(a, b);
    Multigraph::from_weighted_edges(
        n + 2,
        g.edges().map(|((u, v), m)| (u, v, m)).chain([(a, n, 1), (n, n + 1, 2), (n + 1, b, 1)]),
    )
}

fn random_tree_edges(n: usize, rng: &mut ChaCha8Rng) -> Vec<Edge> {
    match n {
        1 => return vec![],
        2 => return vec![(0, 1)],
        _ => {}
    }
    let prufer: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &x in &prufer {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &prufer {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Configuration-model sampling, rejecting loops, disconnection and bridges.
fn random_2ec_cubic(n: usize, rng: &mut ChaCha8Rng) -> Multigraph {
    loop {
        let mut points: Vec<Vertex> = (0..3 * n).map(|p| p / 3).collect();
        points.shuffle(rng);
        let pairs: Vec<Edge> = points.chunks(2).map(|c| (c[0], c[1])).collect();
        if pairs.iter().any(|&(u, v)| u == v) {
            continue;
        }
        let g = Multigraph::from_edges(n, pairs).expect("loopless pairs");
        if g.is_connected() && find_bridges(&g).is_empty() {
            return g;
        }
    }
}

/// A connected loopless cubic multigraph whose bridges form a tree on
/// `parts` nodes. Tree nodes of degree 3 are sometimes a single vertex;
/// other nodes are 2-edge-connected blocks with one degree-2 port per
/// incident bridge (a cycle of ports, or a random bridgeless cubic
/// multigraph with edges subdivided).
fn random_bridged_cubic(parts: usize, rng: &mut ChaCha8Rng) -> Result<Multigraph, GraphError> {
    let tree = random_tree_edges(parts, rng);
    let mut tree_degree = vec![0usize; parts];
    for &(a, b) in &tree {
        tree_degree[a] += 1;
        tree_degree[b] += 1;
    }

    let mut edges: Vec<Edge> = Vec::new();
    let mut order = 0usize;
    let mut ports: Vec<Vec<Vertex>> = Vec::with_capacity(parts);
    for &r in &tree_degree {
        let base = order;
        if r == 3 && rng.gen_bool(0.35) {
            order += 1;
            ports.push(vec![base; 3]);
            continue;
        }
        if r >= 2 && rng.gen_bool(0.25) {
            // A cycle of r ports (a doubled edge when r = 2).
            edges.extend((0..r).map(|i| (base + i, base + (i + 1) % r)));
            order += r;
            ports.push((base..base + r).collect());
            continue;
        }
        let min_m = (2 * r).div_ceil(3).max(2);
        let m = 2 * rng.gen_range(min_m.div_ceil(2)..=min_m.div_ceil(2) + 2);
        let block = random_2ec_cubic(m, rng);
        let mut copies: Vec<Edge> = block.edge_copies().map(|(u, v, _)| (u, v)).collect();
        copies.shuffle(rng);
        let (split, keep) = copies.split_at(r);
        edges.extend(keep.iter().map(|&(u, v)| (base + u, base + v)));
        let mut block_ports = Vec::with_capacity(r);
        for (i, &(u, v)) in split.iter().enumerate() {
            let x = base + m + i;
            edges.extend([(base + u, x), (x, base + v)]);
            block_ports.push(x);
        }
        order += m + r;
        ports.push(block_ports);
    }
    for &(a, b) in &tree {
        let pa = ports[a].pop().expect("port available");
        let pb = ports[b].pop().expect("port available");
        edges.push((pa, pb));
    }
    Multigraph::from_edges(order, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{bridge_decomposition, classify, ComponentType};

    #[test]
    fn cycle_six() {
        let c = generate(&Family::Cycle(6)).unwrap();
        assert_eq!((c.order(), c.size()), (6, 6));
        assert!(c.is_regular(2));
    }

    #[test]
    fn necklace_two_is_connected_claw_free_cubic() {
        let d = generate(&Family::DiamondNecklace(2)).unwrap();
        let f = classify(&d);
        assert_eq!(d.order(), 8);
        assert!(f.cubic && f.claw_free && f.connected && f.simple);
        assert!(!f.diamond_free);
        assert_eq!(generate(&Family::DiamondNecklace(1)).unwrap(), generate(&Family::Complete(4)).unwrap());
        assert_eq!(generate(&Family::RingOfDiamonds(3)).unwrap(), generate(&Family::DiamondNecklace(3)).unwrap());
    }

    #[test]
    fn invalid_params() {
        assert!(matches!(generate(&Family::DiamondNecklace(0)), Err(GraphError::InvalidParams { .. })));
        assert!(matches!(generate(&Family::Cycle(2)), Err(GraphError::InvalidParams { .. })));
        assert!(matches!(Family::parse("petersen", &[], 0), Err(GraphError::UnknownFamily(_))));
        assert!(matches!(Family::parse("cycle", &[], 0), Err(GraphError::InvalidParams { .. })));
    }

    #[test]
    fn figure1_labels() {
        let g = generate(&Family::Figure1).unwrap();
        let f = classify(&g);
        assert_eq!(g.order(), 12);
        assert!(f.cubic && f.claw_free && f.diamond_free && f.two_edge_connected);
        // u = 2 and v = 11 sit on the triangles whose cross edges are single.
        assert!(g.has_edge(2, 8) && g.has_edge(5, 11));
    }

    #[test]
    fn hypercube_orders() {
        for d in 0..5 {
            let q = generate(&Family::Hypercube(d)).unwrap();
            assert_eq!(q.order(), 1 << d);
            assert!(q.is_regular(d));
        }
    }

    #[test]
    fn random_families_are_deterministic() {
        let a = generate(&Family::RandomCubicMultigraph { n: 12, seed: 7 }).unwrap();
        let b = generate(&Family::RandomCubicMultigraph { n: 12, seed: 7 }).unwrap();
        assert_eq!(a, b);
        let t = generate(&Family::RandomTree { n: 15, seed: 3 }).unwrap();
        assert!(classify(&t).tree);
    }

    #[test]
    fn bridged_family_shape() {
        for seed in 0..40 {
            let g = generate(&Family::RandomBridgedCfdf { parts: 2 + (seed as usize % 6), seed }).unwrap();
            let f = classify(&g);
            assert!(f.cubic && f.claw_free && f.diamond_free && f.simple && f.connected, "seed {seed}");
            assert!(!f.two_edge_connected);
            let d = bridge_decomposition(&g).unwrap();
            assert!(d.components.iter().all(|c| c.kind != ComponentType::I));
            for c in d.components.iter().filter(|c| c.kind == ComponentType::II) {
                assert_eq!(c.vertices.len(), 3);
            }
        }
    }

    #[test]
    fn doubled_pair_family_shape() {
        for seed in 0..20 {
            let g = generate(&Family::RandomDoubledPair { n: 4, seed }).unwrap();
            let f = classify(&g);
            assert!(f.cubic && f.claw_free && f.diamond_free && f.two_edge_connected);
            assert_eq!(g.edges().filter(|&(_, m)| m == 2).count(), 1);
            assert_eq!(g.order(), 14);
        }
    }
}
