//! Bounds on the power domination number of Cartesian products.

mod flaw;

use serde::Serialize;
use thiserror::Error;

use crate::exact::{
    domination_number, gamma_p_exact, strong_support_count, zero_forcing_number, ExactError, SearchLimits,
};
use crate::graph::{cartesian_product, classify, GraphError, Multigraph, Vertex};
use crate::observe::{is_power_dominating, Model, PdsCertificate};

pub use flaw::{flaw_witness_search, FlawWitness};

/// Largest product order handed to the exact solvers.
pub const PRODUCT_CAP: usize = 40;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProductError {
    #[error("{0} must be simple and connected")]
    Input(&'static str),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl ProductError {
    pub fn is_size_guard(&self) -> bool {
        matches!(self, ProductError::Exact(e) if e.is_size_guard())
    }
}

/// Exact invariants of one factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FactorValues {
    pub order: usize,
    pub gamma_p: usize,
    pub gamma: usize,
    pub zero_forcing: usize,
    pub strong_support: usize,
    pub path: bool,
}

impl FactorValues {
    pub fn of(g: &Multigraph, limits: &SearchLimits) -> Result<Self, ProductError> {
        let c = classify(g);
        Ok(FactorValues {
            order: g.order(),
            gamma_p: gamma_p_exact(g, Model::Vertex, limits)?.value,
            gamma: domination_number(g, limits)?.value,
            zero_forcing: zero_forcing_number(g, limits)?.value,
            strong_support: strong_support_count(g),
            path: c.tree && g.max_degree() <= 2,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EqualityCase {
    /// γ_P(G) = γ(G) and H is a path: the product has γ_P = γ(G).
    PathFactor,
    /// γ_P(G) = Z(G) and γ(H) = 1: the product has γ_P = Z(G).
    DominatingVertex,
    /// v_s(G) = γ(G) and v_s(H) = Z(H): the product has γ_P = γ(G)Z(H).
    StrongSupport,
}

/// An equality case that applies, with the value it predicts. `swapped`
/// means the roles of the two factors are exchanged.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EqualityFlag {
    pub case: EqualityCase,
    pub swapped: bool,
    pub value: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub g: FactorValues,
    pub h: FactorValues,
    /// max(γ_P(G), γ_P(H)).
    pub lower_factor: usize,
    /// v_s(G) v_s(H).
    pub lower_vs: usize,
    /// min(γ_P(G)|V(H)|, γ_P(H)|V(G)|).
    pub upper_order: usize,
    /// min(γ(G)Z(H), γ(H)Z(G)).
    pub upper_gamma_z: usize,
    pub exact: Option<usize>,
    /// Z(G □ H), when it could be computed.
    pub zero_forcing_product: Option<usize>,
    pub equality_flags: Vec<EqualityFlag>,
}

impl BoundsReport {
    pub fn lower(&self) -> usize {
        self.lower_factor.max(self.lower_vs)
    }

    pub fn upper(&self) -> usize {
        self.upper_order.min(self.upper_gamma_z)
    }

    /// Every bound agrees with the exact values that are present.
    pub fn consistent(&self) -> bool {
        let sandwich = self.exact.is_none_or(|x| self.lower() <= x && x <= self.upper());
        let flags = self.exact.is_none_or(|x| self.equality_flags.iter().all(|f| f.value == x));
        let zf = self.zero_forcing_product.is_none_or(|z| self.lower_vs <= z && self.exact.is_none_or(|x| x <= z));
        sandwich && flags && zf
    }
}

fn require_simple_connected(g: &Multigraph, what: &'static str) -> Result<(), ProductError> {
    if g.is_simple() && g.is_connected() && g.order() > 0 {
        Ok(())
    } else {
        Err(ProductError::Input(what))
    }
}

fn product_guard(order: usize, limits: &SearchLimits) -> Result<(), ProductError> {
    let limit = PRODUCT_CAP.min(limits.max_order);
    if order > limit {
        return Err(ExactError::OrderGuard { what: "product", order, limit }.into());
    }
    Ok(())
}

fn equality_flags(a: &FactorValues, b: &FactorValues, swapped: bool) -> Vec<EqualityFlag> {
    let mut flags = Vec::new();
    if a.gamma_p == a.gamma && b.path {
        flags.push(EqualityFlag { case: EqualityCase::PathFactor, swapped, value: a.gamma });
    }
    if a.gamma_p == a.zero_forcing && b.gamma == 1 {
        flags.push(EqualityFlag { case: EqualityCase::DominatingVertex, swapped, value: a.zero_forcing });
    }
    if a.strong_support == a.gamma && b.strong_support == b.zero_forcing {
        flags.push(EqualityFlag { case: EqualityCase::StrongSupport, swapped, value: a.gamma * b.zero_forcing });
    }
    flags
}

/// All lower and upper bounds on γ_P(G □ H) from the factors, plus the exact
/// value when asked for and the product is small enough.
pub fn pd_bounds(
    g: &Multigraph,
    h: &Multigraph,
    compute_exact: bool,
    limits: &SearchLimits,
) -> Result<BoundsReport, ProductError> {
    require_simple_connected(g, "G")?;
    require_simple_connected(h, "H")?;
    if compute_exact {
        product_guard(g.order() * h.order(), limits)?;
    }
    let a = FactorValues::of(g, limits)?;
    let b = FactorValues::of(h, limits)?;
    let mut equality = equality_flags(&a, &b, false);
    equality.extend(equality_flags(&b, &a, true));
    let (exact, zf) = if compute_exact {
        let p = cartesian_product(g, h)?;
        let exact = gamma_p_exact(&p, Model::Vertex, limits)?.value;
        let zf = match zero_forcing_number(&p, limits) {
            Ok(s) => Some(s.value),
            Err(e) if e.is_size_guard() => None,
            Err(e) => return Err(e.into()),
        };
        (Some(exact), zf)
    } else {
        (None, None)
    };
    Ok(BoundsReport {
        g: a,
        h: b,
        lower_factor: a.gamma_p.max(b.gamma_p),
        lower_vs: a.strong_support * b.strong_support,
        upper_order: (a.gamma_p * b.order).min(b.gamma_p * a.order),
        upper_gamma_z: (a.gamma * b.zero_forcing).min(b.gamma * a.zero_forcing),
        exact,
        zero_forcing_product: zf,
        equality_flags: equality,
    })
}

/// The set D × Z in G □ H for a minimum dominating set D of G and a minimum
/// zero forcing set Z of H. It has γ(G)Z(H) vertices and power dominates.
pub fn dominating_times_forcing(
    g: &Multigraph,
    h: &Multigraph,
    limits: &SearchLimits,
) -> Result<Vec<Vertex>, ProductError> {
    require_simple_connected(g, "G")?;
    require_simple_connected(h, "H")?;
    let d = domination_number(g, limits)?.witness;
    let z = zero_forcing_number(h, limits)?.witness;
    let mut set: Vec<Vertex> = d.iter().flat_map(|&x| z.iter().map(move |&y| x * h.order() + y)).collect();
    set.sort_unstable();
    Ok(set)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum VizingVerdict {
    /// Some factor has γ_P < γ.
    HypothesisNotMet {
        gamma_p: (usize, usize),
        gamma: (usize, usize),
    },
    Holds {
        gamma_p: (usize, usize),
        bound: usize,
        product: usize,
    },
    /// A power dominating set of the product smaller than γ_P(T1)γ_P(T2).
    Refuted {
        gamma_p: (usize, usize),
        certificate: Box<PdsCertificate>,
    },
}

/// Checks γ_P(T1 □ T2) ≥ γ_P(T1)γ_P(T2) for trees with γ_P = γ.
pub fn vizing_tree_check(
    t1: &Multigraph,
    t2: &Multigraph,
    limits: &SearchLimits,
) -> Result<VizingVerdict, ProductError> {
    for (t, what) in [(t1, "T1"), (t2, "T2")] {
        if !classify(t).tree {
            return Err(ExactError::NotTree(what).into());
        }
    }
    let gp = (gamma_p_exact(t1, Model::Vertex, limits)?.value, gamma_p_exact(t2, Model::Vertex, limits)?.value);
    let gamma = (domination_number(t1, limits)?.value, domination_number(t2, limits)?.value);
    if gp != gamma {
        return Ok(VizingVerdict::HypothesisNotMet { gamma_p: gp, gamma });
    }
    product_guard(t1.order() * t2.order(), limits)?;
    let p = cartesian_product(t1, t2)?;
    let best = gamma_p_exact(&p, Model::Vertex, limits)?;
    if best.value >= gp.0 * gp.1 {
        return Ok(VizingVerdict::Holds { gamma_p: gp, bound: gp.0 * gp.1, product: best.value });
    }
    let (ok, certificate) = is_power_dominating(&p, &best.witness, Model::Vertex).map_err(ExactError::from)?;
    assert!(ok, "exact witness must power dominate");
    Ok(VizingVerdict::Refuted {
        gamma_p: gp,
        certificate: Box::new(certificate.expect("certificate for a dominating set")),
    })
}
