use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::{edge, Edge, Multigraph, Vertex};

const NONE: usize = usize::MAX;

/// A set of pairwise vertex-disjoint edges, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub edges: Vec<Edge>,
}

impl Matching {
    pub fn new(mut edges: Vec<Edge>) -> Self {
        for e in &mut edges {
            *e = edge(e.0, e.1);
        }
        edges.sort_unstable();
        Matching { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// The vertex matched to `v`, if any.
    pub fn partner(&self, v: Vertex) -> Option<Vertex> {
        self.edges.iter().find_map(|&(a, b)| {
            if a == v {
                Some(b)
            } else if b == v {
                Some(a)
            } else {
                None
            }
        })
    }

    /// Edges are pairwise disjoint and present in `g`.
    pub fn is_valid_in(&self, g: &Multigraph) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().all(|&(u, v)| g.has_edge(u, v) && seen.insert(u) && seen.insert(v))
    }

    pub fn is_perfect_in(&self, g: &Multigraph) -> bool {
        self.is_valid_in(g) && 2 * self.len() == g.order()
    }
}

/// Maximum-cardinality matching of the simple support of `g` (Edmonds'
/// blossom algorithm). Parallel edges add nothing beyond their support pair.
pub fn maximum_matching(g: &Multigraph) -> Matching {
    let adj: Vec<Vec<Vertex>> = g.vertices().map(|v| g.neighbors(v).collect()).collect();
    Blossom::new(&adj).solve()
}

/// A perfect matching of `g` that uses none of the `forbidden` pairs, or
/// `None` when no such matching exists.
///
/// Forbidding a pair removes every parallel copy of it.
pub fn perfect_matching(g: &Multigraph, forbidden: &[Edge]) -> Option<Matching> {
    let banned: BTreeSet<Edge> = forbidden.iter().map(|&(u, v)| edge(u, v)).collect();
    let adj: Vec<Vec<Vertex>> =
        g.vertices().map(|v| g.neighbors(v).filter(|&w| !banned.contains(&edge(v, w))).collect()).collect();
    let m = Blossom::new(&adj).solve();
    (2 * m.len() == g.order()).then_some(m)
}

struct Blossom<'a> {
    adj: &'a [Vec<Vertex>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<Vertex>]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    fn solve(mut self) -> Matching {
        let n = self.adj.len();
        // Greedy start, lowest index first.
        for v in 0..n {
            if self.mate[v] == NONE {
                if let Some(&w) = self.adj[v].iter().find(|&&w| self.mate[w] == NONE) {
                    self.mate[v] = w;
                    self.mate[w] = v;
                }
            }
        }
        for root in 0..n {
            if self.mate[root] != NONE {
                continue;
            }
            if let Some(mut u) = self.find_augmenting_path(root) {
                while u != NONE {
                    let pv = self.parent[u];
                    let next = self.mate[pv];
                    self.mate[u] = pv;
                    self.mate[pv] = u;
                    u = next;
                }
            }
        }
        Matching::new((0..n).filter(|&v| self.mate[v] != NONE && v < self.mate[v]).map(|v| (v, self.mate[v])).collect())
    }

    fn lowest_common_base(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for i in 0..self.adj[v].len() {
                let to = self.adj[v][i];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lowest_common_base(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for u in 0..n {
                        if self.in_blossom[self.base[u]] {
                            self.base[u] = cur;
                            if !self.used[u] {
                                self.used[u] = true;
                                queue.push_back(u);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    queue.push_back(m);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{generate, Family};
    use proptest::prelude::*;

    fn brute_max_matching(g: &Multigraph) -> usize {
        fn go(g: &Multigraph, used: &mut Vec<bool>, from: usize) -> usize {
            let Some(v) = (from..g.order()).find(|&v| !used[v]) else {
                return 0;
            };
            used[v] = true;
            let mut best = go(g, used, v + 1);
            for w in g.neighbors(v).collect::<Vec<_>>() {
                if !used[w] {
                    used[w] = true;
                    best = best.max(1 + go(g, used, v + 1));
                    used[w] = false;
                }
            }
            used[v] = false;
            best
        }
        go(g, &mut vec![false; g.order()], 0)
    }

    #[test]
    fn c6_matchings() {
        let c6 = generate(&Family::Cycle(6)).unwrap();
        let m = perfect_matching(&c6, &[]).unwrap();
        assert!(m.is_perfect_in(&c6));
        let alt = perfect_matching(&c6, &[m.edges[0]]).unwrap();
        assert!(alt.is_perfect_in(&c6));
        assert!(alt.edges.iter().all(|e| !m.edges.contains(e)));
        // Forbidding one edge of each alternating matching leaves none.
        assert!(perfect_matching(&c6, &[(0, 1), (1, 2)]).is_none());
    }

    #[test]
    fn odd_cycle_has_no_perfect_matching() {
        assert!(perfect_matching(&generate(&Family::Cycle(5)).unwrap(), &[]).is_none());
        assert_eq!(maximum_matching(&generate(&Family::Cycle(5)).unwrap()).len(), 2);
    }

    #[test]
    fn petersen_like_blossoms() {
        // Two triangles joined by a path; forces blossom contraction.
        let g = Multigraph::from_edges(8, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 7)])
            .unwrap();
        let m = perfect_matching(&g, &[]).unwrap();
        assert!(m.is_perfect_in(&g));
        // Each triangle must send its cut vertex outward.
        assert_eq!(m.partner(3), Some(2));
        assert_eq!(m.partner(4), Some(5));
    }

    #[test]
    fn forbidding_keeps_other_edges_for_2ec_cubic() {
        for seed in 0..30 {
            let h = generate(&Family::RandomCubicMultigraph { n: 10, seed }).unwrap();
            for ((u, v), _) in h.edges() {
                let m = perfect_matching(&h, &[(u, v)]).expect("a perfect matching avoiding any one edge");
                assert!(!m.edges.contains(&(u, v)));
                assert!(m.is_perfect_in(&h));
            }
        }
    }

    proptest! {
        #[test]
        fn blossom_is_maximum(n in 1usize..11, pairs in proptest::collection::vec((0usize..11, 0usize..11), 0..30)) {
            let g = Multigraph::from_edges(
                n,
                pairs.into_iter().filter(|&(u, v)| u < n && v < n && u != v),
            ).unwrap();
            let m = maximum_matching(&g);
            prop_assert!(m.is_valid_in(&g));
            prop_assert_eq!(m.len(), brute_max_matching(&g));
        }
    }
}
