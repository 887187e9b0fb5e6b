use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::bridges::find_bridges;
use super::matching::{perfect_matching, Matching};
use super::{edge, Edge, GraphError, Multigraph, Vertex};

/// A spanning collection of vertex-disjoint cycles.
///
/// Each cycle is listed as its vertex sequence; consecutive vertices (and the
/// last and first) are adjacent. A two-vertex cycle `[u, v]` uses two
/// parallel copies of `uv`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoFactor {
    pub cycles: Vec<Vec<Vertex>>,
}

impl TwoFactor {
    /// How many copies of each pair the factor uses.
    pub fn edge_usage(&self) -> BTreeMap<Edge, usize> {
        let mut usage = BTreeMap::new();
        for c in &self.cycles {
            for i in 0..c.len() {
                *usage.entry(edge(c[i], c[(i + 1) % c.len()])).or_insert(0) += 1;
            }
        }
        usage
    }

    /// Index of the cycle through each vertex.
    pub fn cycle_of(&self, n: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; n];
        for (i, c) in self.cycles.iter().enumerate() {
            for &v in c {
                out[v] = i;
            }
        }
        out
    }

    /// True if some cycle uses the pair `(u, v)`.
    pub fn contains_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_usage().contains_key(&edge(u, v))
    }

    /// Checks that this is a 2-factor of `g`.
    pub fn validate(&self, g: &Multigraph) -> Result<(), GraphError> {
        let bad = |s: String| Err(GraphError::InvalidFactor(s));
        let mut seen = vec![false; g.order()];
        for c in &self.cycles {
            if c.len() < 2 {
                return bad(format!("cycle {c:?} is too short"));
            }
            for &v in c {
                if v >= g.order() || std::mem::replace(&mut seen[v], true) {
                    return bad(format!("vertex {v} repeated or out of range"));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return bad(format!("vertex {v} is not covered"));
        }
        for ((u, v), used) in self.edge_usage() {
            if used > g.multiplicity(u, v) {
                return bad(format!("pair {u}-{v} used {used} times"));
            }
        }
        Ok(())
    }

    /// The edges left over in a cubic host, which form a perfect matching.
    pub fn complement(&self, g: &Multigraph) -> Result<Matching, GraphError> {
        self.validate(g)?;
        let usage = self.edge_usage();
        let mut rest = Vec::new();
        for ((u, v), m) in g.edges() {
            let left = m - usage.get(&(u, v)).copied().unwrap_or(0);
            rest.extend(std::iter::repeat_n((u, v), left));
        }
        let matching = Matching::new(rest);
        if matching.is_perfect_in(g) {
            Ok(matching)
        } else {
            Err(GraphError::InvalidFactor("complement is not a perfect matching".into()))
        }
    }
}

/// A 2-factor of a bridgeless cubic multigraph, built as the complement of
/// a perfect matching.
///
/// With `required = Some(e)` the factor uses (a copy of) `e`; this needs `g`
/// to be 2-edge-connected. A pair of multiplicity two or more always keeps a
/// copy in the factor, so only a simple `e` is forbidden to the matching.
pub fn two_factor(g: &Multigraph, required: Option<Edge>) -> Result<TwoFactor, GraphError> {
    g.require_cubic()?;
    if let Some(&b) = find_bridges(g).first() {
        return Err(GraphError::HasBridge(b));
    }
    let mut forbidden = Vec::new();
    if let Some((u, v)) = required {
        g.require_connected()?;
        match g.multiplicity(u, v) {
            0 => return Err(GraphError::InvalidFactor(format!("required pair {u}-{v} is not an edge"))),
            1 => forbidden.push(edge(u, v)),
            _ => {}
        }
    }
    let matching = perfect_matching(g, &forbidden).ok_or(GraphError::NoTwoFactor)?;
    let factor = factor_from_matching(g, &matching);
    factor.validate(g)?;
    Ok(factor)
}

/// Walks the complement of `matching` in a cubic host into cycles. Each
/// cycle starts at its smallest vertex and heads to its smaller neighbour.
pub(crate) fn factor_from_matching(g: &Multigraph, matching: &Matching) -> TwoFactor {
    let mut remaining: BTreeMap<Edge, usize> = g.edges().collect();
    for e in &matching.edges {
        if let Some(m) = remaining.get_mut(e) {
            *m -= 1;
        }
    }
    remaining.retain(|_, m| *m > 0);
    let nbrs = |v: Vertex| -> Vec<(Vertex, usize)> {
        g.neighbors(v).filter_map(|w| remaining.get(&edge(v, w)).map(|&m| (w, m))).collect()
    };
    let mut visited = vec![false; g.order()];
    let mut cycles = Vec::new();
    for start in g.vertices() {
        if visited[start] {
            continue;
        }
        let first = nbrs(start);
        visited[start] = true;
        if let [(w, 2)] = first.as_slice() {
            visited[*w] = true;
            cycles.push(vec![start, *w]);
            continue;
        }
        let mut cycle = vec![start];
        let mut prev = start;
        let mut cur = first[0].0;
        while cur != start {
            visited[cur] = true;
            cycle.push(cur);
            let next = nbrs(cur).into_iter().map(|(w, _)| w).find(|&w| w != prev).unwrap();
            prev = cur;
            cur = next;
        }
        cycles.push(cycle);
    }
    TwoFactor { cycles }
}
