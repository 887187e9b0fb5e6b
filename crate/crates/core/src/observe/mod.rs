//! The observation engine: a domination step followed by propagation.
//!
//! Two rule sets are implemented. The *vertex* model observes `N[S]` and then
//! lets any observed vertex with exactly one unobserved neighbour observe it.
//! The *edge* model labels vertices and individual edge copies:
//!
//! 1. a vertex incident to an observed edge is observed;
//! 2. an edge joining two observed vertices is observed;
//! 3. if a vertex has `k > 1` incident edges and `k - 1` are observed, all
//!    `k` are observed.
//!
//! On simple graphs the two agree on observed vertices. On multigraphs they
//! do not (a doubled edge blocks rule 3), so the vertex model refuses them.
//!
//! Propagation runs in synchronized rounds: every event enabled at the start
//! of a round fires, then the state is rescanned. The closure is the same
//! under any schedule; rounds only make the trace canonical.

mod certificate;

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Multigraph, Vertex};

pub use certificate::{fingerprint, verify_certificate, Bound, CertificateError, Fingerprint, PdsCertificate};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Vertex,
    Edge,
}

impl std::str::FromStr for Model {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "vertex" => Ok(Model::Vertex),
            "edge" => Ok(Model::Edge),
            other => Err(format!("unknown model `{other}` (expected vertex or edge)")),
        }
    }
}

impl std::fmt::Display for Model {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Model::Vertex => "vertex",
            Model::Edge => "edge",
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ObserveError {
    #[error("the vertex model is only defined on simple graphs; use the edge model")]
    VertexModelOnMultigraph,
    #[error("zero forcing is only defined on simple graphs")]
    ZeroForcingOnMultigraph,
    #[error("seed vertex {vertex} out of range for a graph of order {order}")]
    SeedOutOfRange { vertex: Vertex, order: usize },
}

/// One parallel copy of the pair `(u, v)`, `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeCopy(pub Vertex, pub Vertex, pub usize);

/// A propagation event together with the witness that allowed it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum Event {
    /// `by` is observed and `vertex` is its only unobserved neighbour.
    Force { by: Vertex, vertex: Vertex },
    /// Edge rule 1: `vertex` lies on the observed edge `edge`.
    IncidentEdge { edge: EdgeCopy, vertex: Vertex },
    /// Edge rule 2: both ends of `edge` are observed.
    JoinsObserved { edge: EdgeCopy },
    /// Edge rule 3: every other edge at `at` is observed, so `edge` is too.
    AllButOne { at: Vertex, edge: EdgeCopy },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Round {
    pub index: usize,
    /// Vertices first observed in this round, ascending.
    pub vertices: Vec<Vertex>,
    /// Edge copies first observed in this round (edge model), ascending.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub edges: Vec<EdgeCopy>,
    /// One event per newly observed item; empty for round 0.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub events: Vec<Event>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObservationTrace {
    pub initial: Vec<Vertex>,
    pub model: Model,
    /// Zero forcing: round 0 is the seed set itself, with no domination step.
    pub propagation_only: bool,
    pub rounds: Vec<Round>,
    /// Final observed vertices, ascending.
    pub observed: Vec<Vertex>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub observed_edges: Vec<EdgeCopy>,
}

impl ObservationTrace {
    pub fn observes_all(&self, n: usize) -> bool {
        self.observed.len() == n
    }

    /// Number of propagation rounds after round 0.
    pub fn propagation_rounds(&self) -> usize {
        self.rounds.len().saturating_sub(1)
    }

    /// Re-checks every event against `g` and returns the replayed observed
    /// vertex set. Fails on the first event whose witness does not hold at
    /// the start of its round, or when the recorded sets disagree with the
    /// events that justify them.
    pub fn replay(&self, g: &Multigraph) -> Result<Vec<Vertex>, ReplayError> {
        replay(self, g)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReplayError {
    #[error("trace has no rounds")]
    Empty,
    #[error("vertex {0} out of range")]
    OutOfRange(Vertex),
    #[error("edge copy {0:?} does not exist")]
    NoSuchEdge(EdgeCopy),
    #[error("round 0 does not match the initial step of the seed set")]
    BadInitialRound,
    #[error("round {round}: event {event:?} is not enabled")]
    EventNotEnabled { round: usize, event: Event },
    #[error("round {round}: recorded observations differ from those its events justify")]
    UnjustifiedObservations { round: usize },
    #[error("round {round} is out of sequence")]
    RoundIndex { round: usize },
    #[error("final observed set does not match the replay")]
    FinalMismatch,
    #[error("model {0} cannot run on this graph")]
    Model(Model),
}

fn check_seed(g: &Multigraph, s: &[Vertex]) -> Result<Vec<Vertex>, ObserveError> {
    if let Some(&v) = s.iter().find(|&&v| v >= g.order()) {
        return Err(ObserveError::SeedOutOfRange { vertex: v, order: g.order() });
    }
    let set: BTreeSet<Vertex> = s.iter().copied().collect();
    Ok(set.into_iter().collect())
}

/// Domination step plus propagation to the fixed point, with a full trace.
pub fn power_dominating_closure(g: &Multigraph, s: &[Vertex], model: Model) -> Result<ObservationTrace, ObserveError> {
    let seed = check_seed(g, s)?;
    match model {
        Model::Vertex => {
            if !g.is_simple() {
                return Err(ObserveError::VertexModelOnMultigraph);
            }
            Ok(VertexEngine::new(g, &seed, false).run(seed))
        }
        Model::Edge => Ok(EdgeEngine::new(g, &seed).run(seed)),
    }
}

/// Propagation only, starting from exactly `s`.
pub fn zero_forcing_closure(g: &Multigraph, s: &[Vertex]) -> Result<ObservationTrace, ObserveError> {
    let seed = check_seed(g, s)?;
    if !g.is_simple() {
        return Err(ObserveError::ZeroForcingOnMultigraph);
    }
    Ok(VertexEngine::new(g, &seed, true).run(seed))
}

/// Decides whether `s` power dominates `g`; on success also returns a
/// certificate whose claimed bound is `|s|`.
pub fn is_power_dominating(
    g: &Multigraph,
    s: &[Vertex],
    model: Model,
) -> Result<(bool, Option<PdsCertificate>), ObserveError> {
    let trace = power_dominating_closure(g, s, model)?;
    if trace.observes_all(g.order()) {
        let bound = Bound::integer(trace.initial.len() as u64);
        Ok((true, Some(PdsCertificate::new(g, &trace, bound))))
    } else {
        Ok((false, None))
    }
}

/// Final observed vertex set only, without recording a trace.
pub fn observed_set(g: &Multigraph, s: &[Vertex], model: Model) -> Result<Vec<Vertex>, ObserveError> {
    power_dominating_closure(g, s, model).map(|t| t.observed)
}

struct VertexEngine<'a> {
    g: &'a Multigraph,
    observed: Vec<bool>,
    propagation_only: bool,
}

impl<'a> VertexEngine<'a> {
    fn new(g: &'a Multigraph, seed: &[Vertex], propagation_only: bool) -> Self {
        let mut observed = vec![false; g.order()];
        for &v in seed {
            observed[v] = true;
            if !propagation_only {
                for w in g.neighbors(v) {
                    observed[w] = true;
                }
            }
        }
        VertexEngine { g, observed, propagation_only }
    }

    fn enabled(&self) -> Vec<Event> {
        let mut events = Vec::new();
        let mut claimed = vec![false; self.g.order()];
        for v in self.g.vertices().filter(|&v| self.observed[v]) {
            let mut unobserved = self.g.neighbors(v).filter(|&w| !self.observed[w]);
            if let (Some(w), None) = (unobserved.next(), unobserved.next()) {
                if !std::mem::replace(&mut claimed[w], true) {
                    events.push(Event::Force { by: v, vertex: w });
                }
            }
        }
        events
    }

    fn run(mut self, seed: Vec<Vertex>) -> ObservationTrace {
        let first: Vec<Vertex> = self.g.vertices().filter(|&v| self.observed[v]).collect();
        let mut rounds = vec![Round { index: 0, vertices: first, edges: vec![], events: vec![] }];
        loop {
            let events = self.enabled();
            if events.is_empty() {
                break;
            }
            let mut vertices: Vec<Vertex> = events
                .iter()
                .map(|e| match *e {
                    Event::Force { vertex, .. } => vertex,
                    _ => unreachable!("vertex engine only forces"),
                })
                .collect();
            for &v in &vertices {
                self.observed[v] = true;
            }
            vertices.sort_unstable();
            rounds.push(Round { index: rounds.len(), vertices, edges: vec![], events });
        }
        ObservationTrace {
            initial: seed,
            model: Model::Vertex,
            propagation_only: self.propagation_only,
            rounds,
            observed: self.g.vertices().filter(|&v| self.observed[v]).collect(),
            observed_edges: vec![],
        }
    }
}

/// Edge copies of `g` indexed in `edge_copies()` order, plus incidence lists.
struct EdgeIndex {
    copies: Vec<EdgeCopy>,
    incident: Vec<Vec<usize>>,
}

impl EdgeIndex {
    fn new(g: &Multigraph) -> Self {
        let copies: Vec<EdgeCopy> = g.edge_copies().map(|(u, v, c)| EdgeCopy(u, v, c)).collect();
        let mut incident = vec![Vec::new(); g.order()];
        for (i, &EdgeCopy(u, v, _)) in copies.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        EdgeIndex { copies, incident }
    }

    fn position(&self, e: EdgeCopy) -> Option<usize> {
        self.copies.binary_search(&e).ok()
    }
}

struct EdgeEngine<'a> {
    g: &'a Multigraph,
    index: EdgeIndex,
    observed: Vec<bool>,
    observed_edge: Vec<bool>,
}

impl<'a> EdgeEngine<'a> {
    fn new(g: &'a Multigraph, seed: &[Vertex]) -> Self {
        let index = EdgeIndex::new(g);
        let mut observed = vec![false; g.order()];
        let mut observed_edge = vec![false; index.copies.len()];
        for &v in seed {
            observed[v] = true;
            for &e in &index.incident[v] {
                observed_edge[e] = true;
                let EdgeCopy(a, b, _) = index.copies[e];
                observed[a] = true;
                observed[b] = true;
            }
        }
        EdgeEngine { g, index, observed, observed_edge }
    }

    /// Every event enabled in the current state that observes something new;
    /// at most one event per new vertex and per new edge.
    fn enabled(&self) -> Vec<Event> {
        let mut events = Vec::new();
        let mut new_vertex = vec![false; self.g.order()];
        let mut new_edge = vec![false; self.index.copies.len()];
        for (i, &e) in self.index.copies.iter().enumerate() {
            let EdgeCopy(a, b, _) = e;
            if self.observed_edge[i] {
                for x in [a, b] {
                    if !self.observed[x] && !std::mem::replace(&mut new_vertex[x], true) {
                        events.push(Event::IncidentEdge { edge: e, vertex: x });
                    }
                }
            } else if self.observed[a] && self.observed[b] && !std::mem::replace(&mut new_edge[i], true) {
                events.push(Event::JoinsObserved { edge: e });
            }
        }
        for x in self.g.vertices() {
            let inc = &self.index.incident[x];
            if inc.len() < 2 {
                continue;
            }
            let mut open = inc.iter().filter(|&&i| !self.observed_edge[i]);
            if let (Some(&i), None) = (open.next(), open.next()) {
                if !std::mem::replace(&mut new_edge[i], true) {
                    events.push(Event::AllButOne { at: x, edge: self.index.copies[i] });
                }
            }
        }
        events
    }

    fn apply(&mut self, event: &Event) {
        match *event {
            Event::IncidentEdge { vertex, .. } => self.observed[vertex] = true,
            Event::JoinsObserved { edge } | Event::AllButOne { edge, .. } => {
                let i = self.index.position(edge).expect("indexed edge");
                self.observed_edge[i] = true;
            }
            Event::Force { .. } => unreachable!("edge engine does not force"),
        }
    }

    fn run(mut self, seed: Vec<Vertex>) -> ObservationTrace {
        let first_vertices: Vec<Vertex> = self.g.vertices().filter(|&v| self.observed[v]).collect();
        let first_edges: Vec<EdgeCopy> = self.observed_edges();
        let mut rounds = vec![Round { index: 0, vertices: first_vertices, edges: first_edges, events: vec![] }];
        loop {
            let events = self.enabled();
            if events.is_empty() {
                break;
            }
            let mut vertices = Vec::new();
            let mut edges = Vec::new();
            for ev in &events {
                match *ev {
                    Event::IncidentEdge { vertex, .. } => vertices.push(vertex),
                    Event::JoinsObserved { edge } | Event::AllButOne { edge, .. } => edges.push(edge),
                    Event::Force { .. } => unreachable!(),
                }
                self.apply(ev);
            }
            vertices.sort_unstable();
            edges.sort_unstable();
            rounds.push(Round { index: rounds.len(), vertices, edges, events });
        }
        ObservationTrace {
            initial: seed,
            model: Model::Edge,
            propagation_only: false,
            rounds,
            observed: self.g.vertices().filter(|&v| self.observed[v]).collect(),
            observed_edges: self.observed_edges(),
        }
    }

    fn observed_edges(&self) -> Vec<EdgeCopy> {
        self.index.copies.iter().zip(&self.observed_edge).filter(|(_, &o)| o).map(|(&e, _)| e).collect()
    }
}

/// Applies enabled events one at a time in an order drawn from `rng`, and
/// returns the final observed vertex set. Used to check that the closure does
/// not depend on the schedule.
pub fn closure_with_random_schedule<R: Rng>(
    g: &Multigraph,
    s: &[Vertex],
    model: Model,
    propagation_only: bool,
    rng: &mut R,
) -> Result<Vec<Vertex>, ObserveError> {
    let seed = check_seed(g, s)?;
    match model {
        Model::Vertex => {
            if !g.is_simple() {
                return Err(ObserveError::VertexModelOnMultigraph);
            }
            let mut engine = VertexEngine::new(g, &seed, propagation_only);
            loop {
                let events = engine.enabled();
                let Some(Event::Force { vertex, .. }) = events.choose(rng) else {
                    break;
                };
                engine.observed[*vertex] = true;
            }
            Ok(g.vertices().filter(|&v| engine.observed[v]).collect())
        }
        Model::Edge => {
            let mut engine = EdgeEngine::new(g, &seed);
            loop {
                let events = engine.enabled();
                let Some(ev) = events.choose(rng) else {
                    break;
                };
                engine.apply(ev);
            }
            Ok(g.vertices().filter(|&v| engine.observed[v]).collect())
        }
    }
}

fn replay(trace: &ObservationTrace, g: &Multigraph) -> Result<Vec<Vertex>, ReplayError> {
    let first = trace.rounds.first().ok_or(ReplayError::Empty)?;
    if let Some(&v) = trace.initial.iter().find(|&&v| v >= g.order()) {
        return Err(ReplayError::OutOfRange(v));
    }
    let seed = trace.initial.clone();
    match trace.model {
        Model::Vertex => {
            if !g.is_simple() {
                return Err(ReplayError::Model(Model::Vertex));
            }
            let mut engine = VertexEngine::new(g, &seed, trace.propagation_only);
            let start: Vec<Vertex> = g.vertices().filter(|&v| engine.observed[v]).collect();
            if first.index != 0 || first.vertices != start || !first.edges.is_empty() || !first.events.is_empty() {
                return Err(ReplayError::BadInitialRound);
            }
            for (k, round) in trace.rounds.iter().enumerate().skip(1) {
                if round.index != k {
                    return Err(ReplayError::RoundIndex { round: k });
                }
                let mut justified = Vec::new();
                for ev in &round.events {
                    let Event::Force { by, vertex } = *ev else {
                        return Err(ReplayError::EventNotEnabled { round: k, event: ev.clone() });
                    };
                    if by >= g.order() || vertex >= g.order() {
                        return Err(ReplayError::OutOfRange(by.max(vertex)));
                    }
                    let mut open = g.neighbors(by).filter(|&w| !engine.observed[w]);
                    let only = matches!((open.next(), open.next()), (Some(w), None) if w == vertex);
                    if !engine.observed[by] || !only {
                        return Err(ReplayError::EventNotEnabled { round: k, event: ev.clone() });
                    }
                    justified.push(vertex);
                }
                justified.sort_unstable();
                justified.dedup();
                if justified != round.vertices || !round.edges.is_empty() {
                    return Err(ReplayError::UnjustifiedObservations { round: k });
                }
                for &v in &justified {
                    engine.observed[v] = true;
                }
            }
            let fin: Vec<Vertex> = g.vertices().filter(|&v| engine.observed[v]).collect();
            if fin != trace.observed {
                return Err(ReplayError::FinalMismatch);
            }
            Ok(fin)
        }
        Model::Edge => {
            if trace.propagation_only {
                return Err(ReplayError::Model(Model::Edge));
            }
            let mut engine = EdgeEngine::new(g, &seed);
            let start: Vec<Vertex> = g.vertices().filter(|&v| engine.observed[v]).collect();
            if first.index != 0
                || first.vertices != start
                || first.edges != engine.observed_edges()
                || !first.events.is_empty()
            {
                return Err(ReplayError::BadInitialRound);
            }
            for (k, round) in trace.rounds.iter().enumerate().skip(1) {
                if round.index != k {
                    return Err(ReplayError::RoundIndex { round: k });
                }
                let mut vertices = Vec::new();
                let mut edges = Vec::new();
                for ev in &round.events {
                    let not_enabled = || ReplayError::EventNotEnabled { round: k, event: ev.clone() };
                    let pos = |e: EdgeCopy| engine.index.position(e).ok_or(ReplayError::NoSuchEdge(e));
                    match *ev {
                        Event::IncidentEdge { edge, vertex } => {
                            let i = pos(edge)?;
                            if !engine.observed_edge[i] || (vertex != edge.0 && vertex != edge.1) {
                                return Err(not_enabled());
                            }
                            vertices.push(vertex);
                        }
                        Event::JoinsObserved { edge } => {
                            pos(edge)?;
                            if !engine.observed[edge.0] || !engine.observed[edge.1] {
                                return Err(not_enabled());
                            }
                            edges.push(edge);
                        }
                        Event::AllButOne { at, edge } => {
                            let i = pos(edge)?;
                            if at >= g.order() {
                                return Err(ReplayError::OutOfRange(at));
                            }
                            let inc = &engine.index.incident[at];
                            let mut open = inc.iter().filter(|&&j| !engine.observed_edge[j]);
                            let ok = inc.len() > 1 && matches!((open.next(), open.next()), (Some(&j), None) if j == i);
                            if !ok {
                                return Err(not_enabled());
                            }
                            edges.push(edge);
                        }
                        Event::Force { .. } => return Err(not_enabled()),
                    }
                }
                vertices.sort_unstable();
                vertices.dedup();
                edges.sort_unstable();
                edges.dedup();
                if vertices != round.vertices || edges != round.edges {
                    return Err(ReplayError::UnjustifiedObservations { round: k });
                }
                for ev in &round.events {
                    engine.apply(ev);
                }
            }
            let fin: Vec<Vertex> = g.vertices().filter(|&v| engine.observed[v]).collect();
            if fin != trace.observed {
                return Err(ReplayError::FinalMismatch);
            }
            Ok(fin)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate::{generate, Family};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gen(f: Family) -> Multigraph {
        generate(&f).unwrap()
    }

    #[test]
    fn p5_centre_observes_all_by_round_2() {
        let t = power_dominating_closure(&gen(Family::Path(5)), &[2], Model::Vertex).unwrap();
        assert!(t.observes_all(5));
        assert_eq!(t.rounds[0].vertices, vec![1, 2, 3]);
        assert_eq!(t.rounds.len(), 2);
        assert_eq!(t.rounds[1].vertices, vec![0, 4]);
        assert_eq!(t.replay(&gen(Family::Path(5))).unwrap(), vec![0, 1, 2, 3, 4]);
    }

    /// `u = v` doubled, pendants `w - u` and `z - v`: vertices w=0, u=1, v=2, z=3.
    fn doubled_gadget() -> Multigraph {
        Multigraph::from_weighted_edges(4, [(0, 1, 1), (1, 2, 2), (2, 3, 1)]).unwrap()
    }

    #[test]
    fn doubled_edge_stalls_the_edge_model() {
        let g = doubled_gadget();
        let t = power_dominating_closure(&g, &[0], Model::Edge).unwrap();
        assert_eq!(t.observed, vec![0, 1]);
        assert_eq!(t.observed_edges, vec![EdgeCopy(0, 1, 0)]);
        assert_eq!(t.propagation_rounds(), 0);
        t.replay(&g).unwrap();
    }

    #[test]
    fn doubled_edge_stall_matches_exhaustive_rule_application() {
        // Hand replay: u has three edge copies, only w-u is observed, so
        // rule 3 (k - 1 of k) never fires at u; rules 1 and 2 add nothing.
        let g = doubled_gadget();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let fin = closure_with_random_schedule(&g, &[0], Model::Edge, false, &mut rng).unwrap();
            assert_eq!(fin, vec![0, 1]);
        }
    }

    #[test]
    fn vertex_model_refuses_multigraphs() {
        assert_eq!(
            power_dominating_closure(&doubled_gadget(), &[0], Model::Vertex),
            Err(ObserveError::VertexModelOnMultigraph)
        );
        assert_eq!(zero_forcing_closure(&doubled_gadget(), &[0]), Err(ObserveError::ZeroForcingOnMultigraph));
    }

    #[test]
    fn figure1_pairs() {
        let g = gen(Family::Figure1);
        let (ok, cert) = is_power_dominating(&g, &[2, 11], Model::Vertex).unwrap();
        assert!(ok);
        verify_certificate(&cert.unwrap(), &g).unwrap();
        for u in g.vertices() {
            assert!(!is_power_dominating(&g, &[u], Model::Vertex).unwrap().0);
        }
    }

    #[test]
    fn k4_and_k33_singletons() {
        let k4 = gen(Family::Complete(4));
        assert!((0..4).all(|v| is_power_dominating(&k4, &[v], Model::Vertex).unwrap().0));
        let k33 = gen(Family::CompleteBipartite(3, 3));
        assert!((0..6).all(|v| !is_power_dominating(&k33, &[v], Model::Vertex).unwrap().0));
    }

    #[test]
    fn zero_forcing_examples() {
        let p = gen(Family::Path(7));
        assert!(zero_forcing_closure(&p, &[0]).unwrap().observes_all(7));
        let c4 = gen(Family::Cycle(4));
        assert_eq!(zero_forcing_closure(&c4, &[0]).unwrap().observed, vec![0]);
        let empty = zero_forcing_closure(&c4, &[]).unwrap();
        assert!(empty.observed.is_empty());
        assert_eq!(empty.rounds.len(), 1);
    }

    #[test]
    fn seed_out_of_range() {
        assert!(matches!(
            power_dominating_closure(&gen(Family::Path(3)), &[3], Model::Vertex),
            Err(ObserveError::SeedOutOfRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn tampered_traces_fail_replay() {
        let g = gen(Family::Figure1);
        let t = power_dominating_closure(&g, &[2, 11], Model::Vertex).unwrap();
        let mut bad = t.clone();
        bad.rounds[1].events.pop();
        assert!(bad.replay(&g).is_err());
        let mut bad = t.clone();
        bad.initial = vec![2];
        assert_eq!(bad.replay(&g), Err(ReplayError::BadInitialRound));
        let mut bad = t.clone();
        if let Event::Force { by, .. } = &mut bad.rounds[1].events[0] {
            *by = (*by + 1) % 12;
        }
        assert!(bad.replay(&g).is_err());

        let e = power_dominating_closure(&g, &[2, 11], Model::Edge).unwrap();
        e.replay(&g).unwrap();
        let mut bad = e.clone();
        bad.rounds.last_mut().unwrap().edges.clear();
        assert!(bad.replay(&g).is_err());
    }

    #[test]
    fn edge_model_observes_every_edge_when_complete() {
        let g = gen(Family::Figure1);
        let t = power_dominating_closure(&g, &[2, 11], Model::Edge).unwrap();
        assert!(t.observes_all(12));
        assert_eq!(t.observed_edges.len(), g.size());
    }

    fn simple_graph() -> impl Strategy<Value = Multigraph> {
        (1usize..11).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let pairs = (0..n).flat_map(|v| (0..v).map(move |u| (u, v)));
                let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
                Multigraph::from_edges(n, edges).unwrap()
            })
        })
    }

    fn multigraph() -> impl Strategy<Value = Multigraph> {
        (2usize..9).prop_flat_map(|n| {
            proptest::collection::vec((0..n, 0..n, 1usize..3), 0..2 * n).prop_map(move |raw| {
                let edges = raw.into_iter().filter(|(u, v, _)| u != v);
                Multigraph::from_weighted_edges(n, edges).unwrap()
            })
        })
    }

    fn subset(g: &Multigraph, mask: u32) -> Vec<Vertex> {
        g.vertices().filter(|&v| mask >> v & 1 == 1).collect()
    }

    proptest! {
        #[test]
        fn closure_is_schedule_independent(g in multigraph(), mask in any::<u32>(), seed in any::<u64>()) {
            let s = subset(&g, mask);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let edge = power_dominating_closure(&g, &s, Model::Edge).unwrap().observed;
            let simple = g.is_simple();
            let vertex = simple.then(|| power_dominating_closure(&g, &s, Model::Vertex).unwrap().observed);
            let zf = simple.then(|| zero_forcing_closure(&g, &s).unwrap().observed);
            for _ in 0..10 {
                prop_assert_eq!(closure_with_random_schedule(&g, &s, Model::Edge, false, &mut rng).unwrap(), edge.clone());
                if let (Some(vertex), Some(zf)) = (&vertex, &zf) {
                    prop_assert_eq!(&closure_with_random_schedule(&g, &s, Model::Vertex, false, &mut rng).unwrap(), vertex);
                    prop_assert_eq!(&closure_with_random_schedule(&g, &s, Model::Vertex, true, &mut rng).unwrap(), zf);
                }
            }
        }

        #[test]
        fn models_agree_on_simple_graphs(g in simple_graph(), mask in any::<u32>()) {
            let s = subset(&g, mask);
            let v = power_dominating_closure(&g, &s, Model::Vertex).unwrap();
            let e = power_dominating_closure(&g, &s, Model::Edge).unwrap();
            prop_assert_eq!(&v.observed, &e.observed);
            prop_assert_eq!(v.replay(&g).unwrap(), e.replay(&g).unwrap());
        }

        #[test]
        fn edge_fixed_point_observes_exactly_edges_between_observed(g in multigraph(), mask in any::<u32>()) {
            let t = power_dominating_closure(&g, &subset(&g, mask), Model::Edge).unwrap();
            let inside: Vec<EdgeCopy> = g
                .edge_copies()
                .filter(|&(u, v, _)| t.observed.binary_search(&u).is_ok() && t.observed.binary_search(&v).is_ok())
                .map(|(u, v, c)| EdgeCopy(u, v, c))
                .collect();
            prop_assert_eq!(t.observed_edges, inside);
        }

        #[test]
        fn closure_is_monotone(g in multigraph(), a in any::<u32>(), b in any::<u32>()) {
            let small = power_dominating_closure(&g, &subset(&g, a & b), Model::Edge).unwrap().observed;
            let big = power_dominating_closure(&g, &subset(&g, a), Model::Edge).unwrap().observed;
            prop_assert!(small.iter().all(|v| big.binary_search(v).is_ok()));
        }
    }
}
