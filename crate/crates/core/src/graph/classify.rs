use serde::{Deserialize, Serialize};

use super::{bridges::find_bridges, Multigraph, Vertex};

/// Structural flags used as hypotheses throughout the crate.
///
/// Claw- and diamond-freeness are evaluated on the simple support of the
/// graph. A diamond is K4 minus an edge taken as a *subgraph*, so a graph is
/// diamond-free iff no edge lies in two triangles (K4 is therefore not).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFlags {
    pub cubic: bool,
    pub claw_free: bool,
    pub diamond_free: bool,
    pub two_edge_connected: bool,
    pub connected: bool,
    pub tree: bool,
    pub simple: bool,
}

impl ClassFlags {
    /// Hypotheses of the n/6 construction for 2-edge-connected graphs.
    pub fn is_cfdf_cubic(&self) -> bool {
        self.cubic && self.claw_free && self.diamond_free
    }
}

pub fn classify(g: &Multigraph) -> ClassFlags {
    let connected = g.is_connected();
    let simple = g.is_simple();
    ClassFlags {
        cubic: g.is_regular(3),
        claw_free: is_claw_free(g),
        diamond_free: is_diamond_free(g),
        two_edge_connected: connected && g.order() > 0 && find_bridges(g).is_empty(),
        connected,
        tree: connected && simple && g.order() > 0 && g.size() + 1 == g.order(),
        simple,
    }
}

/// True iff no vertex has three pairwise non-adjacent neighbours.
pub fn is_claw_free(g: &Multigraph) -> bool {
    g.vertices().all(|v| {
        let nbrs: Vec<Vertex> = g.neighbors(v).collect();
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                if g.has_edge(nbrs[i], nbrs[j]) {
                    continue;
                }
                for k in j + 1..nbrs.len() {
                    if !g.has_edge(nbrs[i], nbrs[k]) && !g.has_edge(nbrs[j], nbrs[k]) {
                        return false;
                    }
                }
            }
        }
        true
    })
}

/// True iff no edge of the support lies in two triangles.
pub fn is_diamond_free(g: &Multigraph) -> bool {
    g.edges().all(|((u, v), _)| g.neighbors(u).filter(|&w| w != v && g.has_edge(v, w)).count() < 2)
}

/// All triangles through `v`, each as a sorted triple.
pub fn triangles_at(g: &Multigraph, v: Vertex) -> Vec<[Vertex; 3]> {
    let nbrs: Vec<Vertex> = g.neighbors(v).collect();
    let mut out = Vec::new();
    for i in 0..nbrs.len() {
        for j in i + 1..nbrs.len() {
            if g.has_edge(nbrs[i], nbrs[j]) {
                let mut t = [v, nbrs[i], nbrs[j]];
                t.sort_unstable();
                out.push(t);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{generate, Family};

    fn gen(f: Family) -> Multigraph {
        generate(&f).unwrap()
    }

    /// Exhaustive search for a diamond subgraph: four vertices with at least
    /// five of their six pairs present.
    fn has_diamond_subgraph_brute(g: &Multigraph) -> bool {
        let n = g.order();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let q = [a, b, c, d];
                        let mut count = 0;
                        for i in 0..4 {
                            for j in i + 1..4 {
                                if g.has_edge(q[i], q[j]) {
                                    count += 1;
                                }
                            }
                        }
                        if count >= 5 {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    #[test]
    fn k33_is_cubic_with_claws() {
        let f = classify(&gen(Family::CompleteBipartite(3, 3)));
        assert!(f.cubic);
        assert!(!f.claw_free);
        assert!(f.diamond_free);
    }

    #[test]
    fn figure1_flags() {
        let f = classify(&gen(Family::Figure1));
        assert!(f.cubic && f.claw_free && f.diamond_free && f.two_edge_connected && f.simple);
        assert!(!f.tree);
    }

    #[test]
    fn k4_contains_a_diamond_subgraph() {
        let k4 = gen(Family::Complete(4));
        assert!(has_diamond_subgraph_brute(&k4));
        assert!(!classify(&k4).diamond_free);
        assert!(classify(&k4).claw_free);
    }

    #[test]
    fn diamond_check_agrees_with_brute_force() {
        let samples = [
            gen(Family::Figure1),
            gen(Family::DiamondNecklace(2)),
            gen(Family::Complete(5)),
            gen(Family::Cycle(3)),
            gen(Family::Hypercube(3)),
            gen(Family::CompleteBipartite(2, 3)),
        ];
        for g in &samples {
            assert_eq!(is_diamond_free(g), !has_diamond_subgraph_brute(g), "{g:?}");
        }
    }

    #[test]
    fn trees_and_paths() {
        assert!(classify(&gen(Family::Path(5))).tree);
        assert!(!classify(&gen(Family::Cycle(5))).tree);
        assert!(classify(&gen(Family::Star(3))).tree);
        assert!(!classify(&gen(Family::Star(3))).claw_free);
    }

    #[test]
    fn triangles_through_vertex() {
        let k4 = gen(Family::Complete(4));
        assert_eq!(triangles_at(&k4, 0), vec![[0, 1, 2], [0, 1, 3], [0, 2, 3]]);
    }
}
