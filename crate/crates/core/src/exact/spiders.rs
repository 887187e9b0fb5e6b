//! Tree oracles: strong support vertices, the γ_P = γ characterization, and
//! spider partitions.

use super::bits::{any_subset, binomial};
use super::{gamma_exact, gamma_p_exact, ExactError, SearchLimits};
use crate::graph::{classify, Edge, Multigraph, Vertex};
use crate::observe::Model;

/// Vertices adjacent to at least two leaves.
pub fn strong_support_count(g: &Multigraph) -> usize {
    g.vertices().filter(|&v| g.neighbors(v).filter(|&w| g.degree(w) == 1).count() >= 2).count()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeEquality {
    pub gamma: usize,
    pub gamma_p: usize,
    pub unique_gamma_set: bool,
    pub all_strong_support: bool,
    /// Unique γ-set made of strong support vertices.
    pub characterization: bool,
    /// γ_P = γ, computed directly.
    pub direct: bool,
    pub explanation: String,
}

fn require_tree(t: &Multigraph, what: &'static str) -> Result<(), ExactError> {
    if classify(t).tree {
        Ok(())
    } else {
        Err(ExactError::NotTree(what))
    }
}

/// Tests whether a tree has a unique minimum dominating set consisting of
/// strong support vertices, and compares with γ_P = γ computed directly.
pub fn tree_pd_equals_dom(t: &Multigraph, limits: &SearchLimits) -> Result<TreeEquality, ExactError> {
    require_tree(t, "the γ_P = γ test")?;
    if t.order() < 3 {
        return Err(ExactError::TreeTooSmall);
    }
    let (gamma, sets) = gamma_exact(t, limits)?;
    let gamma_p = gamma_p_exact(t, Model::Vertex, limits)?.value;
    let unique = sets.len() == 1;
    let weak: Vec<Vertex> =
        sets[0].iter().copied().filter(|&v| t.neighbors(v).filter(|&w| t.degree(w) == 1).count() < 2).collect();
    let all_strong = unique && weak.is_empty();
    let explanation = if !unique {
        format!("{} minimum dominating sets, not unique", sets.len())
    } else if !weak.is_empty() {
        format!("γ-set {:?} contains non-strong-support vertices {:?}", sets[0], weak)
    } else {
        format!("unique γ-set {:?} of strong support vertices", sets[0])
    };
    Ok(TreeEquality {
        gamma,
        gamma_p,
        unique_gamma_set: unique,
        all_strong_support: all_strong,
        characterization: unique && all_strong,
        direct: gamma == gamma_p,
        explanation,
    })
}

fn is_spider(t: &Multigraph, part: &[Vertex]) -> bool {
    let sub = t.induced_subgraph(part);
    sub.is_connected() && sub.vertices().filter(|&v| sub.degree(v) >= 3).count() <= 1
}

/// True iff every part induces a spider (a tree with at most one vertex of
/// degree three or more).
pub fn spider_partition_verify(t: &Multigraph, parts: &[Vec<Vertex>]) -> Result<bool, ExactError> {
    require_tree(t, "spider partitions")?;
    let mut seen = vec![false; t.order()];
    for part in parts {
        if part.is_empty() {
            return Err(ExactError::NotPartition("empty part".into()));
        }
        for &v in part {
            if v >= t.order() || std::mem::replace(&mut seen[v], true) {
                return Err(ExactError::NotPartition(format!("vertex {v} repeated or out of range")));
            }
        }
    }
    if let Some(v) = seen.iter().position(|s| !s) {
        return Err(ExactError::NotPartition(format!("vertex {v} uncovered")));
    }
    Ok(parts.iter().all(|p| is_spider(t, p)))
}

/// Minimum spider partition of a tree.
///
/// A part that induces a spider is connected, so every candidate partition
/// of a tree into `k` parts is obtained by deleting `k - 1` edges. The search
/// runs over edge subsets by ascending size.
pub fn spider_number(t: &Multigraph, limits: &SearchLimits) -> Result<(usize, Vec<Vec<Vertex>>), ExactError> {
    require_tree(t, "spider number")?;
    if t.order() > limits.max_order {
        return Err(ExactError::OrderGuard { what: "spider partition", order: t.order(), limit: limits.max_order });
    }
    let edges: Vec<Edge> = t.edges().map(|(e, _)| e).collect();
    let n = t.order();
    let mut budget = limits.max_subsets;
    for k in 0..=edges.len() {
        let cost = binomial(edges.len(), k);
        if cost > budget {
            return Err(ExactError::WorkGuard { what: "spider partition", limit: limits.max_subsets });
        }
        budget -= cost;
        let mut found = None;
        any_subset(edges.len(), k, |cut, _| {
            let kept: Vec<Edge> = edges.iter().enumerate().filter(|(i, _)| !cut.contains(i)).map(|(_, &e)| e).collect();
            let forest = Multigraph::from_edges(n, kept).expect("subgraph of a tree");
            let parts = forest.components();
            let ok = parts.iter().all(|p| p.iter().filter(|&&v| forest.degree(v) >= 3).count() <= 1);
            if ok {
                found = Some(parts);
            }
            ok
        });
        if let Some(parts) = found {
            return Ok((parts.len(), parts));
        }
    }
    unreachable!("singleton parts are spiders")
}

/// A partition of the vertex set into blocks.
pub type Partition = Vec<Vec<Vertex>>;

/// Every minimum spider partition of a tree, each as blocks ordered by
/// smallest vertex, the partitions in lexicographic order.
pub fn minimum_spider_partitions(t: &Multigraph, limits: &SearchLimits) -> Result<(usize, Vec<Partition>), ExactError> {
    let (k, _) = spider_number(t, limits)?;
    let edges: Vec<Edge> = t.edges().map(|(e, _)| e).collect();
    if binomial(edges.len(), k - 1) > limits.max_subsets {
        return Err(ExactError::WorkGuard { what: "all minimum spider partitions", limit: limits.max_subsets });
    }
    let mut all = Vec::new();
    any_subset(edges.len(), k - 1, |cut, _| {
        let kept = edges.iter().enumerate().filter(|(i, _)| !cut.contains(i)).map(|(_, &e)| e);
        let forest = Multigraph::from_edges(t.order(), kept).expect("subgraph of a tree");
        let parts = forest.components();
        if parts.iter().all(|p| p.iter().filter(|&&v| forest.degree(v) >= 3).count() <= 1) {
            all.push(parts);
        }
        false
    });
    all.sort();
    Ok((k, all))
}

/// The spider number through γ_P, which equals it on trees.
pub fn spider_number_via_gamma_p(t: &Multigraph, limits: &SearchLimits) -> Result<usize, ExactError> {
    require_tree(t, "spider number")?;
    Ok(gamma_p_exact(t, Model::Vertex, limits)?.value)
}
