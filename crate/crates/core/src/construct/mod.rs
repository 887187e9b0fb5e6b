//! Power dominating sets of size at most n/6 for claw-free diamond-free
//! cubic graphs, each returned with a verified certificate.
//!
//! The 2-edge-connected case contracts triangles to a cubic multigraph `H`,
//! takes a 2-factor of `H` and lifts it to `G`. In every triangle the vertex
//! whose outside edge is not on the factor (its *mid*) sees both triangle
//! mates along the factor, so each lifted cycle reads `mid, mate, .., mate`
//! with mids at every third position. The outside edges at mids form a
//! perfect matching `M` of the mids; one endpoint of every `M` edge, chosen
//! to meet every cycle, power dominates `G`.

mod general;
mod hitting;
mod log;

use thiserror::Error;

use crate::graph::{
    classify, edge, triangle_contraction, two_factor, Edge, GraphError, Matching, Multigraph, TwoFactor, Vertex,
};
use crate::observe::{power_dominating_closure, verify_certificate, Bound, Model, PdsCertificate};

pub use general::construct_general;
pub use hitting::{select_hitting_endpoints, CycleAdjacency};
pub use log::{ComponentLog, ComponentRole, ConstructionLog, DoubledPair, Stage};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructError {
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
    #[error("K4 is excluded (it contains a diamond); its power domination number is 1")]
    CompleteGraph,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("internal construction failure: {0}")]
    Internal(String),
    #[error("constructed set failed verification: {0}")]
    Verification(String),
}

/// A certified set together with the objects that produced it.
#[derive(Debug, Clone)]
pub struct Construction {
    pub certificate: PdsCertificate,
    pub log: ConstructionLog,
}

impl Construction {
    pub fn set(&self) -> &[Vertex] {
        &self.certificate.set
    }
}

pub(crate) fn check_hypotheses(g: &Multigraph, simple: bool, two_edge_connected: bool) -> Result<(), ConstructError> {
    let f = classify(g);
    if g.order() == 4 && f.simple && f.cubic {
        return Err(ConstructError::CompleteGraph);
    }
    let mut missing = Vec::new();
    for (ok, name) in [
        (f.cubic, "cubic"),
        (f.claw_free, "claw-free"),
        (f.diamond_free, "diamond-free"),
        (f.connected, "connected"),
        (f.simple || !simple, "simple"),
        (f.two_edge_connected || !two_edge_connected, "2-edge-connected"),
    ] {
        if !ok {
            missing.push(name);
        }
    }
    if missing.is_empty() {
        Ok(())
    } else {
        Err(ConstructError::Hypothesis(format!("graph is not {}", missing.join(", "))))
    }
}

/// Replays the closure of `set` on `g`, then builds and re-verifies a
/// certificate against `bound`.
pub(crate) fn certify(
    g: &Multigraph,
    set: &[Vertex],
    model: Model,
    bound: Bound,
) -> Result<PdsCertificate, ConstructError> {
    let trace = power_dominating_closure(g, set, model).map_err(|e| ConstructError::Internal(e.to_string()))?;
    if !trace.observes_all(g.order()) {
        return Err(ConstructError::Verification(format!(
            "{} of {} vertices observed from {:?}",
            trace.observed.len(),
            g.order(),
            set
        )));
    }
    let cert = PdsCertificate::new(g, &trace, bound);
    verify_certificate(&cert, g).map_err(|e| ConstructError::Verification(e.to_string()))?;
    Ok(cert)
}

/// The selection for a 2-edge-connected claw-free diamond-free cubic graph,
/// with the 2-factor forced through `required` when given.
pub(crate) fn select_2ec(
    g: &Multigraph,
    required: Option<Edge>,
) -> Result<(Vec<Vertex>, ConstructionLog), ConstructError> {
    let n = g.order();
    let (h, tmap) = triangle_contraction(g)?;
    let required_h = required.map(|(a, b)| edge(tmap.triangle_of[a], tmap.triangle_of[b]));
    let h_factor = two_factor(&h, required_h)?;
    if h_factor.cycles.iter().any(|c| c.len() < 2) {
        return Err(ConstructError::Internal("contracted factor has a cycle shorter than 2".into()));
    }
    let h_matching = h_factor.complement(&h)?;

    let mut m_edges = Vec::with_capacity(h_matching.len());
    for &(a, b) in &h_matching.edges {
        let pick = tmap
            .realizing_edges(a, b)
            .iter()
            .copied()
            .find(|&e| Some(e) != required)
            .ok_or_else(|| ConstructError::Internal(format!("no edge realizes matched pair {a}-{b}")))?;
        m_edges.push(pick);
    }
    let m = Matching::new(m_edges);
    let mut is_mid = vec![false; n];
    for &(a, b) in &m.edges {
        is_mid[a] = true;
        is_mid[b] = true;
    }
    for t in &tmap.triangles {
        if t.iter().filter(|&&v| is_mid[v]).count() != 1 {
            return Err(ConstructError::Internal(format!("triangle {t:?} does not have exactly one mid")));
        }
    }

    let mut factor_adj: Vec<Vec<Vertex>> = vec![Vec::new(); n];
    for ((a, b), _) in g.edges() {
        let inside = tmap.triangle_of[a] == tmap.triangle_of[b];
        let on_factor = if inside { is_mid[a] || is_mid[b] } else { m.edges.binary_search(&(a, b)).is_err() };
        if on_factor {
            factor_adj[a].push(b);
            factor_adj[b].push(a);
        }
    }
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in (0..n).filter(|&v| is_mid[v]) {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut prev = start;
        let mut cur = *factor_adj[start].iter().min().expect("mid has factor edges");
        while cur != start {
            seen[cur] = true;
            cycle.push(cur);
            let next = factor_adj[cur].iter().copied().find(|&w| w != prev).expect("factor is 2-regular");
            prev = cur;
            cur = next;
        }
        cycles.push(cycle);
    }
    for c in &cycles {
        let well_formed = c.len() >= 6
            && c.len() % 3 == 0
            && c.iter().enumerate().all(|(i, &v)| is_mid[v] == (i % 3 == 0))
            && (0..c.len()).step_by(3).all(|i| {
                let (x, y, z) = (c[(i + c.len() - 1) % c.len()], c[i], c[i + 1]);
                tmap.triangle_of[x] == tmap.triangle_of[y] && tmap.triangle_of[y] == tmap.triangle_of[z]
            });
        if !well_formed {
            return Err(ConstructError::Internal(format!("lifted cycle {c:?} lacks the triangle pattern")));
        }
    }
    let factor = TwoFactor { cycles };
    factor.validate(g)?;
    if let Some((a, b)) = required {
        if !factor.contains_edge(a, b) {
            return Err(ConstructError::Internal(format!("required edge {a}-{b} is not on the lifted factor")));
        }
    }

    let j = CycleAdjacency::new(&factor, &m)?;
    let selected = select_hitting_endpoints(&factor, &m, &j)?;
    for &(a, b) in &m.edges {
        if selected.binary_search(&a).is_ok() == selected.binary_search(&b).is_ok() {
            return Err(ConstructError::Internal(format!("matching edge {a}-{b} lacks exactly one chosen end")));
        }
    }

    let mut log = ConstructionLog::new(Stage::TwoEdgeConnected, n);
    log.contracted = h.edges().collect();
    log.contracted_factor = h_factor.cycles;
    log.cycles = factor.cycles;
    log.matching = m.edges;
    log.selected = selected.clone();
    Ok((selected, log))
}

/// A set of exactly n/6 vertices for a 2-edge-connected claw-free
/// diamond-free cubic graph, verified under the vertex model.
pub fn construct_2ec(g: &Multigraph) -> Result<Construction, ConstructError> {
    check_hypotheses(g, true, true)?;
    let (set, log) = select_2ec(g, None)?;
    if 6 * set.len() != g.order() {
        return Err(ConstructError::Internal(format!("selected {} vertices for order {}", set.len(), g.order())));
    }
    let certificate = certify(g, &set, Model::Vertex, Bound::fraction(g.order() as u64, 6))?;
    Ok(Construction { certificate, log })
}

/// The doubled-pair selection: delete the pair, join its outside neighbours,
/// force the factor through the new edge, and map the set back.
pub(crate) fn select_doubled_pair(g: &Multigraph) -> Result<(Vec<Vertex>, ConstructionLog), ConstructError> {
    let doubled: Vec<(Edge, usize)> = g.edges().filter(|&(_, m)| m > 1).collect();
    let (u, v) = match doubled.as_slice() {
        [((u, v), 2)] => (*u, *v),
        [] => return Err(ConstructError::Hypothesis("no doubled pair".into())),
        [(_, 2), ..] => return Err(ConstructError::Hypothesis(format!("{} doubled pairs", doubled.len()))),
        _ => return Err(ConstructError::Hypothesis("an edge has multiplicity above 2".into())),
    };
    let outside = |x: Vertex, y: Vertex| g.neighbors(x).find(|&t| t != y);
    let (Some(w), Some(z)) = (outside(u, v), outside(v, u)) else {
        return Err(ConstructError::Hypothesis("doubled pair has no outside neighbours".into()));
    };
    if w == z {
        return Err(ConstructError::Hypothesis(format!("both ends of the doubled pair meet {w}")));
    }
    let labels: Vec<Vertex> = g.vertices().filter(|&x| x != u && x != v).collect();
    let local = |x: Vertex| labels.binary_search(&x).expect("kept vertex");
    let (lw, lz) = (local(w), local(z));
    let reduced = g.induced_subgraph(&labels).with_edge(lw, lz, 1)?;
    let f = classify(&reduced);
    if !(f.simple && f.cubic && f.claw_free && f.diamond_free && f.two_edge_connected) {
        return Err(ConstructError::Internal(format!("reduced graph lost a hypothesis: {f:?}")));
    }
    let (local_set, inner) = select_2ec(&reduced, Some(edge(lw, lz)))?;
    let set: Vec<Vertex> = local_set.iter().map(|&x| labels[x]).collect();
    if set.iter().any(|x| [u, v, w, z].contains(x)) {
        return Err(ConstructError::Internal(format!("selection {set:?} meets the doubled pair gadget")));
    }

    let mut cycles: Vec<Vec<Vertex>> = inner.cycles.iter().map(|c| c.iter().map(|&x| labels[x]).collect()).collect();
    for c in &mut cycles {
        let len = c.len();
        if let Some(i) = (0..len).find(|&i| edge(c[i], c[(i + 1) % len]) == edge(w, z)) {
            let splice = if c[i] == z { [v, u] } else { [u, v] };
            c.splice(i + 1..i + 1, splice);
            break;
        }
    }
    let mut log = ConstructionLog::new(Stage::DoubledPair, g.order());
    log.doubled_pair = Some(DoubledPair { u, v, w, z });
    log.cycles = cycles;
    log.matching = inner.matching.iter().map(|&(a, b)| edge(labels[a], labels[b])).collect();
    log.selected = set.clone();
    log.reduced = Some(Box::new(inner));
    Ok((set, log))
}

/// A set of at most (n - 2)/6 vertices for a 2-edge-connected claw-free
/// diamond-free cubic multigraph with exactly one doubled pair, avoiding the
/// pair and its outside neighbours, verified under the edge model.
pub fn construct_doubled_pair(g: &Multigraph) -> Result<Construction, ConstructError> {
    check_hypotheses(g, false, true)?;
    let (set, log) = select_doubled_pair(g)?;
    let certificate = certify(g, &set, Model::Edge, Bound::fraction(g.order() as u64 - 2, 6))?;
    Ok(Construction { certificate, log })
}
