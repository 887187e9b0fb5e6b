//! Choosing one endpoint of every matching edge so that each cycle of a
//! 2-factor receives at least one chosen vertex.

use std::collections::{BTreeMap, VecDeque};

use super::ConstructError;
use crate::graph::{edge, Edge, Matching, TwoFactor, Vertex};

/// The graph J on the cycles of a 2-factor: cycles `i` and `j` are adjacent
/// when some matching edge joins them. Layers are BFS distances from cycle 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleAdjacency {
    pub cycles: usize,
    /// Matching edges joining each adjacent pair of cycles `(i, j)`, `i < j`.
    pub links: BTreeMap<(usize, usize), Vec<Edge>>,
    pub depth: Vec<usize>,
    pub layers: Vec<Vec<usize>>,
    /// For each non-root cycle, its lowest-index neighbour one layer up.
    pub parent: Vec<Option<usize>>,
    pub cycle_of: Vec<usize>,
}

impl CycleAdjacency {
    pub fn new(cycles: &TwoFactor, m: &Matching) -> Result<Self, ConstructError> {
        let n = cycles.cycles.iter().flatten().map(|&v| v + 1).max().unwrap_or(0);
        let cycle_of = cycles.cycle_of(n);
        let k = cycles.cycles.len();
        let mut links: BTreeMap<(usize, usize), Vec<Edge>> = BTreeMap::new();
        for &(a, b) in &m.edges {
            let (ca, cb) = match (cycle_of.get(a), cycle_of.get(b)) {
                (Some(&ca), Some(&cb)) if ca != usize::MAX && cb != usize::MAX => (ca, cb),
                _ => return Err(ConstructError::Internal(format!("matching edge {a}-{b} leaves the factor"))),
            };
            if ca != cb {
                links.entry((ca.min(cb), ca.max(cb))).or_default().push(edge(a, b));
            }
        }
        let mut adj = vec![Vec::new(); k];
        for &(i, j) in links.keys() {
            adj[i].push(j);
            adj[j].push(i);
        }
        let mut depth = vec![usize::MAX; k];
        let mut parent = vec![None; k];
        let mut queue = VecDeque::new();
        if k > 0 {
            depth[0] = 0;
            queue.push_back(0);
        }
        while let Some(c) = queue.pop_front() {
            for &d in &adj[c] {
                if depth[d] == usize::MAX {
                    depth[d] = depth[c] + 1;
                    parent[d] = Some(c);
                    queue.push_back(d);
                }
            }
        }
        if depth.contains(&usize::MAX) {
            return Err(ConstructError::Internal("cycle graph J is disconnected".into()));
        }
        let height = depth.iter().copied().max().unwrap_or(0);
        let mut layers = vec![Vec::new(); if k == 0 { 0 } else { height + 1 }];
        for (c, &d) in depth.iter().enumerate() {
            layers[d].push(c);
        }
        Ok(CycleAdjacency { cycles: k, links, depth, layers, parent, cycle_of })
    }

    pub fn neighbors(&self, c: usize) -> Vec<usize> {
        self.links
            .keys()
            .filter_map(|&(i, j)| {
                if i == c {
                    Some(j)
                } else if j == c {
                    Some(i)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Root-to-deepest path `y_1 .. y_d`: the deepest cycle of lowest index,
    /// reached through BFS parents.
    pub fn deepest_path(&self) -> Vec<usize> {
        let Some(last) = self.layers.last() else {
            return Vec::new();
        };
        let mut path = vec![last[0]];
        while let Some(p) = self.parent[*path.last().unwrap()] {
            path.push(p);
        }
        path.reverse();
        path
    }
}

/// Picks exactly one endpoint of every edge of `m` so that every cycle of
/// `cycles` contains a picked vertex.
///
/// Along the deepest path one edge per step contributes its endpoint nearer
/// the root; every other edge between cycles contributes its deeper endpoint
/// (between cycles of equal depth, the endpoint on the lower-index cycle);
/// an edge inside one cycle contributes its smaller endpoint. Any cycle still
/// missed is repaired by swapping the endpoint of an edge whose other cycle
/// stays hit.
pub fn select_hitting_endpoints(
    cycles: &TwoFactor,
    m: &Matching,
    j: &CycleAdjacency,
) -> Result<Vec<Vertex>, ConstructError> {
    let path = j.deepest_path();
    let mut path_edges: Vec<Edge> = Vec::new();
    for step in path.windows(2) {
        let key = (step[0].min(step[1]), step[0].max(step[1]));
        path_edges.push(j.links[&key][0]);
    }
    let of = |v: Vertex| j.cycle_of[v];
    let mut chosen: Vec<Vertex> = m
        .edges
        .iter()
        .map(|&(a, b)| {
            let (ca, cb) = (of(a), of(b));
            if ca == cb {
                a.min(b)
            } else if path_edges.contains(&(a, b)) {
                if j.depth[ca] < j.depth[cb] {
                    a
                } else {
                    b
                }
            } else {
                match j.depth[ca].cmp(&j.depth[cb]) {
                    std::cmp::Ordering::Greater => a,
                    std::cmp::Ordering::Less => b,
                    std::cmp::Ordering::Equal => {
                        if ca < cb {
                            a
                        } else {
                            b
                        }
                    }
                }
            }
        })
        .collect();

    let hits = |chosen: &[Vertex]| {
        let mut count = vec![0usize; j.cycles];
        for &v in chosen {
            count[of(v)] += 1;
        }
        count
    };
    loop {
        let count = hits(&chosen);
        let missed: Vec<usize> = (0..j.cycles).filter(|&c| count[c] == 0).collect();
        let Some(&target) = missed.first() else {
            break;
        };
        let swap = m.edges.iter().enumerate().find_map(|(i, &(a, b))| {
            let other = if chosen[i] == a { b } else { a };
            (of(other) == target && count[of(chosen[i])] >= 2).then_some((i, other))
        });
        let Some((i, other)) = swap else {
            return Err(ConstructError::Internal(format!("cycle {target} cannot be hit")));
        };
        chosen[i] = other;
        let after = hits(&chosen);
        let still: Vec<usize> = (0..j.cycles).filter(|&c| after[c] == 0).collect();
        assert!(still.len() < missed.len() && still.iter().all(|c| missed.contains(c)));
    }
    chosen.sort_unstable();
    if let Some(c) = cycles.cycles.iter().position(|c| !c.iter().any(|v| chosen.binary_search(v).is_ok())) {
        return Err(ConstructError::Internal(format!("cycle {c} missed after repair")));
    }
    Ok(chosen)
}
