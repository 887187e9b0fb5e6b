//! Bitmask closures for graphs of order at most 128.
//!
//! The edge-model closure here is not the literal three-rule process. At its
//! fixed point an edge is observed exactly when both ends are, so the edge
//! rules collapse to one vertex rule: an observed vertex of degree > 1 whose
//! edges to unobserved vertices, counted with multiplicity, number exactly
//! one observes that neighbour. Tests check this against `observe`.

use crate::graph::{Multigraph, Vertex};

pub(crate) const MAX_BITS: usize = 128;

pub(crate) struct BitGraph {
    pub n: usize,
    pub nb: Vec<u128>,
    /// Neighbours with multiplicity.
    pub adj: Vec<Vec<(Vertex, usize)>>,
    pub degree: Vec<usize>,
}

impl BitGraph {
    pub fn new(g: &Multigraph) -> Self {
        assert!(g.order() <= MAX_BITS);
        let nb = g.vertices().map(|v| g.neighbors(v).fold(0u128, |m, w| m | 1 << w)).collect();
        let adj = g.vertices().map(|v| g.neighbors_with_multiplicity(v).to_vec()).collect();
        let degree = g.vertices().map(|v| g.degree(v)).collect();
        BitGraph { n: g.order(), nb, adj, degree }
    }

    pub fn full(&self) -> u128 {
        if self.n == 128 {
            u128::MAX
        } else {
            (1u128 << self.n) - 1
        }
    }

    pub fn closed_neighborhood(&self, s: u128) -> u128 {
        bits(s).fold(s, |m, v| m | self.nb[v])
    }

    /// Vertex-model propagation (zero forcing) from `obs`.
    pub fn force_vertex(&self, mut obs: u128) -> u128 {
        loop {
            let before = obs;
            for v in bits(obs) {
                let open = self.nb[v] & !obs;
                if open.is_power_of_two() {
                    obs |= open;
                }
            }
            if obs == before {
                return obs;
            }
        }
    }

    /// Edge-model propagation from `obs`, valid once every edge between
    /// observed vertices counts as observed (true after the domination step).
    pub fn force_edge(&self, mut obs: u128) -> u128 {
        loop {
            let before = obs;
            for v in bits(obs) {
                if self.degree[v] < 2 {
                    continue;
                }
                let mut open = self.adj[v].iter().filter(|&&(w, _)| obs >> w & 1 == 0);
                if let (Some(&(w, 1)), None) = (open.next(), open.next()) {
                    obs |= 1 << w;
                }
            }
            if obs == before {
                return obs;
            }
        }
    }
}

pub(crate) fn bits(mut m: u128) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

pub(crate) fn mask_of(vs: &[Vertex]) -> u128 {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul((n - i) as u128) / (i as u128 + 1))
}

/// Calls `f` on every `k`-subset of `0..n` in lexicographic order until it
/// returns `true`; returns whether it did.
pub(crate) fn any_subset(n: usize, k: usize, mut f: impl FnMut(&[usize], u128) -> bool) -> bool {
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx, mask_of(&idx)) {
            return true;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return false;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
