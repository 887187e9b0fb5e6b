//! Exact oracles by exhaustive subset search.
//!
//! Every search visits subsets by ascending cardinality and, within one
//! cardinality, in lexicographic order, so witnesses are canonical. Graphs
//! that split into components are solved per component and summed.

mod bits;
mod spiders;

use thiserror::Error;

use crate::graph::{Multigraph, Vertex};
use crate::observe::{Model, ObserveError};
use bits::{any_subset, binomial, BitGraph, MAX_BITS};

pub use spiders::{
    minimum_spider_partitions, spider_number, spider_number_via_gamma_p, spider_partition_verify, strong_support_count,
    tree_pd_equals_dom, Partition, TreeEquality,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest component order for γ_P, γ and Z.
    pub max_order: usize,
    /// Largest order for listing every minimum dominating set.
    pub max_order_all_sets: usize,
    /// Cap on subset evaluations per component.
    pub max_subsets: u128,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_order: 40, max_order_all_sets: 20, max_subsets: 200_000_000 }
    }
}

impl SearchLimits {
    pub fn unbounded() -> Self {
        SearchLimits { max_order: MAX_BITS, max_order_all_sets: MAX_BITS, max_subsets: u128::MAX }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("size guard: {what} on order {order} exceeds the limit of {limit}")]
    OrderGuard { what: &'static str, order: usize, limit: usize },
    #[error("size guard: {what} needs more than {limit} subset evaluations")]
    WorkGuard { what: &'static str, limit: u128 },
    #[error("{0} requires a simple graph")]
    NotSimple(&'static str),
    #[error("{0} requires a tree")]
    NotTree(&'static str),
    #[error("tree must have at least 3 vertices")]
    TreeTooSmall,
    #[error("parts do not partition the vertex set: {0}")]
    NotPartition(String),
    #[error(transparent)]
    Observe(#[from] ObserveError),
}

impl ExactError {
    pub fn is_size_guard(&self) -> bool {
        matches!(self, ExactError::OrderGuard { .. } | ExactError::WorkGuard { .. })
    }
}

/// A minimum value together with one set attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub value: usize,
    pub witness: Vec<Vertex>,
}

/// Smallest `k` (and lexicographically first `k`-set) accepted by `accept`.
fn min_subset(
    bg: &BitGraph,
    what: &'static str,
    limits: &SearchLimits,
    mut accept: impl FnMut(u128) -> bool,
) -> Result<Solution, ExactError> {
    let mut budget = limits.max_subsets;
    for k in 0..=bg.n {
        let cost = binomial(bg.n, k);
        if cost > budget {
            return Err(ExactError::WorkGuard { what, limit: limits.max_subsets });
        }
        budget -= cost;
        let mut found = None;
        if any_subset(bg.n, k, |s, m| {
            if accept(m) {
                found = Some(s.to_vec());
                true
            } else {
                false
            }
        }) {
            return Ok(Solution { value: k, witness: found.unwrap() });
        }
    }
    unreachable!("the full vertex set is always accepted")
}

fn guard(g: &Multigraph, what: &'static str, limit: usize) -> Result<(), ExactError> {
    let limit = limit.min(MAX_BITS);
    if g.order() > limit {
        return Err(ExactError::OrderGuard { what, order: g.order(), limit });
    }
    Ok(())
}

/// Solves each component separately and sums.
fn per_component(
    g: &Multigraph,
    mut solve: impl FnMut(&Multigraph) -> Result<Solution, ExactError>,
) -> Result<Solution, ExactError> {
    let mut value = 0;
    let mut witness = Vec::new();
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp);
        let s = solve(&sub)?;
        value += s.value;
        witness.extend(s.witness.iter().map(|&i| comp[i]));
    }
    witness.sort_unstable();
    Ok(Solution { value, witness })
}

/// Power domination number and a witness under `model`.
pub fn gamma_p_exact(g: &Multigraph, model: Model, limits: &SearchLimits) -> Result<Solution, ExactError> {
    if model == Model::Vertex && !g.is_simple() {
        return Err(ObserveError::VertexModelOnMultigraph.into());
    }
    per_component(g, |c| {
        guard(c, "power domination", limits.max_order)?;
        let bg = BitGraph::new(c);
        let full = bg.full();
        min_subset(&bg, "power domination", limits, |s| {
            let start = bg.closed_neighborhood(s);
            let end = match model {
                Model::Vertex => bg.force_vertex(start),
                Model::Edge => bg.force_edge(start),
            };
            end == full
        })
    })
}

/// Domination number and the lexicographically first minimum dominating set.
pub fn domination_number(g: &Multigraph, limits: &SearchLimits) -> Result<Solution, ExactError> {
    per_component(g, |c| {
        guard(c, "domination", limits.max_order)?;
        let bg = BitGraph::new(c);
        let full = bg.full();
        min_subset(&bg, "domination", limits, |s| bg.closed_neighborhood(s) == full)
    })
}

/// Domination number and every minimum dominating set, in lexicographic order.
pub fn gamma_exact(g: &Multigraph, limits: &SearchLimits) -> Result<(usize, Vec<Vec<Vertex>>), ExactError> {
    guard(g, "all minimum dominating sets", limits.max_order_all_sets)?;
    let gamma = domination_number(g, limits)?.value;
    let bg = BitGraph::new(g);
    let full = bg.full();
    if binomial(bg.n, gamma) > limits.max_subsets {
        return Err(ExactError::WorkGuard { what: "all minimum dominating sets", limit: limits.max_subsets });
    }
    let mut sets = Vec::new();
    any_subset(bg.n, gamma, |s, m| {
        if bg.closed_neighborhood(m) == full {
            sets.push(s.to_vec());
        }
        false
    });
    Ok((gamma, sets))
}

/// Zero forcing number and a witness.
pub fn zero_forcing_number(g: &Multigraph, limits: &SearchLimits) -> Result<Solution, ExactError> {
    if !g.is_simple() {
        return Err(ExactError::NotSimple("zero forcing"));
    }
    per_component(g, |c| {
        guard(c, "zero forcing", limits.max_order)?;
        let bg = BitGraph::new(c);
        let full = bg.full();
        min_subset(&bg, "zero forcing", limits, |s| bg.force_vertex(s) == full)
    })
}

/// Every minimum power dominating set of a connected graph, lexicographic.
pub fn all_minimum_pds(g: &Multigraph, model: Model, limits: &SearchLimits) -> Result<Vec<Vec<Vertex>>, ExactError> {
    let k = gamma_p_exact(g, model, limits)?.value;
    guard(g, "all minimum power dominating sets", limits.max_order)?;
    let bg = BitGraph::new(g);
    if binomial(bg.n, k) > limits.max_subsets {
        return Err(ExactError::WorkGuard { what: "all minimum power dominating sets", limit: limits.max_subsets });
    }
    let full = bg.full();
    let mut sets = Vec::new();
    any_subset(bg.n, k, |s, m| {
        let start = bg.closed_neighborhood(m);
        let end = match model {
            Model::Vertex => bg.force_vertex(start),
            Model::Edge => bg.force_edge(start),
        };
        if end == full {
            sets.push(s.to_vec());
        }
        false
    });
    Ok(sets)
}
