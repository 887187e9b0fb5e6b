//! Exhaustive enumeration of unlabeled trees.

use std::collections::BTreeSet;

use super::{Edge, Multigraph, Vertex};

/// One representative of every isomorphism class of trees on `n` vertices.
///
/// Trees on `n` vertices are grown from those on `n - 1` by attaching a leaf
/// everywhere, then deduplicated by a centre-rooted canonical code. The
/// output order follows the codes and is deterministic.
pub fn free_trees(n: usize) -> Vec<Multigraph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: BTreeSet<(String, Vec<Edge>)> = BTreeSet::new();
    level.insert((canonical_code(1, &[]), Vec::new()));
    for size in 2..=n {
        let mut next = BTreeSet::new();
        let mut seen = BTreeSet::new();
        for (_, edges) in &level {
            for attach in 0..size - 1 {
                let mut grown = edges.clone();
                grown.push((attach, size - 1));
                let code = canonical_code(size, &grown);
                if seen.insert(code.clone()) {
                    next.insert((code, grown));
                }
            }
        }
        level = next;
    }
    level.into_iter().map(|(_, edges)| Multigraph::from_edges(n, edges).expect("tree edges are valid")).collect()
}

/// Isomorphism-invariant code of a tree given by its edge list.
pub fn canonical_code(n: usize, edges: &[Edge]) -> String {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    centers(&adj).into_iter().map(|c| rooted_code(&adj, c, usize::MAX)).min().unwrap_or_default()
}

pub fn tree_code(t: &Multigraph) -> String {
    let edges: Vec<Edge> = t.edges().map(|(e, _)| e).collect();
    canonical_code(t.order(), &edges)
}

fn centers(adj: &[Vec<Vertex>]) -> Vec<Vertex> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut leaves: Vec<Vertex> = (0..n).filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= leaves.len();
        let mut next = Vec::new();
        for &l in &leaves {
            for &w in &adj[l] {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        leaves = next;
    }
    leaves.sort_unstable();
    leaves
}

fn rooted_code(adj: &[Vec<Vertex>], v: Vertex, parent: Vertex) -> String {
    let mut kids: Vec<String> = adj[v].iter().filter(|&&w| w != parent).map(|&w| rooted_code(adj, w, v)).collect();
    kids.sort_unstable();
    format!("({})", kids.concat())
}
