//! Searching for a minimum power dominating set of G □ T that misses the
//! whole layer V(G) × V_i of some block V_i of a minimum spider partition.

use super::{product_guard, ProductError};
use crate::exact::{
    all_minimum_pds, gamma_p_exact, minimum_spider_partitions, spider_partition_verify, ExactError, SearchLimits,
};
use crate::graph::{cartesian_product, classify, product_pair, Multigraph, Vertex};
use crate::observe::{observed_set, Model};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlawWitness {
    pub g: Multigraph,
    pub t: Multigraph,
    /// A minimum power dominating set of G □ T.
    pub set: Vec<Vertex>,
    pub partition: Vec<Vec<Vertex>>,
    /// The block whose layer `set` misses.
    pub block: usize,
}

impl FlawWitness {
    /// Both factors as edge lists, with the set, partition and block.
    pub fn to_json(&self) -> serde_json::Value {
        let edges = |g: &Multigraph| g.edges().map(|(e, _)| e).collect::<Vec<_>>();
        serde_json::json!({
            "g": { "order": self.g.order(), "edges": edges(&self.g) },
            "t": { "order": self.t.order(), "edges": edges(&self.t) },
            "set": self.set,
            "partition": self.partition,
            "block": self.block,
        })
    }

    /// Re-checks minimality of `set`, the spider partition, and the empty
    /// intersection.
    pub fn check(&self, limits: &SearchLimits) -> Result<(), String> {
        let p = cartesian_product(&self.g, &self.t).map_err(|e| e.to_string())?;
        let seen = observed_set(&p, &self.set, Model::Vertex).map_err(|e| e.to_string())?;
        if seen.len() != p.order() {
            return Err("set does not power dominate the product".into());
        }
        let best = gamma_p_exact(&p, Model::Vertex, limits).map_err(|e| e.to_string())?.value;
        if best != self.set.len() {
            return Err(format!("set has {} vertices, minimum is {best}", self.set.len()));
        }
        let (sp, _) = crate::exact::spider_number(&self.t, limits).map_err(|e| e.to_string())?;
        if self.partition.len() != sp
            || !spider_partition_verify(&self.t, &self.partition).map_err(|e| e.to_string())?
        {
            return Err("not a minimum spider partition".into());
        }
        let block = self.partition.get(self.block).ok_or("block index out of range")?;
        if self.set.iter().any(|&v| block.contains(&product_pair(v, self.t.order()).1)) {
            return Err("set meets the block".into());
        }
        Ok(())
    }
}

/// The first minimum power dominating set of G □ T, in lexicographic order,
/// that avoids the layer of some block of some minimum spider partition of
/// T. Partitions are tried in lexicographic order, blocks by position.
pub fn flaw_witness_search(
    g: &Multigraph,
    t: &Multigraph,
    limits: &SearchLimits,
) -> Result<Option<FlawWitness>, ProductError> {
    if !classify(t).tree {
        return Err(ExactError::NotTree("flaw witness search").into());
    }
    if !g.is_simple() || !g.is_connected() {
        return Err(ProductError::Input("G"));
    }
    product_guard(g.order() * t.order(), limits)?;
    let p = cartesian_product(g, t)?;
    let sets = all_minimum_pds(&p, Model::Vertex, limits)?;
    let (_, partitions) = minimum_spider_partitions(t, limits)?;
    for set in sets {
        let layers: Vec<Vertex> = set.iter().map(|&v| product_pair(v, t.order()).1).collect();
        for partition in &partitions {
            if let Some(block) = partition.iter().position(|b| !b.iter().any(|x| layers.contains(x))) {
                return Ok(Some(FlawWitness { g: g.clone(), t: t.clone(), set, partition: partition.clone(), block }));
            }
        }
    }
    Ok(None)
}
