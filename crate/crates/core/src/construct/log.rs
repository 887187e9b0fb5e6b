use std::fmt;

use serde::Serialize;

use crate::graph::{Edge, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    TwoEdgeConnected,
    DoubledPair,
    General,
}

/// The doubled pair `u = v` with outside neighbours `w` of `u` and `z` of `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DoubledPair {
    pub u: Vertex,
    pub v: Vertex,
    pub w: Vertex,
    pub z: Vertex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentRole {
    /// A triangle between bridges; it contributes no vertices.
    Triangle,
    /// One bridge: smooth the degree-2 vertex, then the doubled-pair case.
    Leaf,
    /// Even number of degree-2 vertices: pair them up.
    EvenPorts,
    /// Odd number: pair all but the parent port, then smooth that one.
    OddPorts,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentLog {
    pub component: usize,
    pub depth: usize,
    pub role: ComponentRole,
    pub vertices: Vec<Vertex>,
    /// Degree-2 vertices, the port toward the parent first.
    pub ports: Vec<Vertex>,
    pub added_edges: Vec<Edge>,
    pub smoothed: Option<Vertex>,
    pub selected: Vec<Vertex>,
    /// The construction on the augmented component. Its vertex `i` is
    /// `labels[i]` in the input graph.
    pub labels: Vec<Vertex>,
    pub inner: Option<Box<ConstructionLog>>,
}

/// Every intermediate object of a construction, in the labels of the graph
/// it was run on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionLog {
    pub stage: Stage,
    pub order: usize,
    /// The triangle-contracted multigraph as `(pair, multiplicity)`.
    pub contracted: Vec<(Edge, usize)>,
    pub contracted_factor: Vec<Vec<Vertex>>,
    /// A 2-factor of the input graph met by the selection.
    pub cycles: Vec<Vec<Vertex>>,
    pub matching: Vec<Edge>,
    pub selected: Vec<Vertex>,
    pub doubled_pair: Option<DoubledPair>,
    /// The construction on the reduced graph (doubled-pair stage).
    pub reduced: Option<Box<ConstructionLog>>,
    pub components: Vec<ComponentLog>,
}

impl ConstructionLog {
    pub(crate) fn new(stage: Stage, order: usize) -> Self {
        ConstructionLog {
            stage,
            order,
            contracted: Vec::new(),
            contracted_factor: Vec::new(),
            cycles: Vec::new(),
            matching: Vec::new(),
            selected: Vec::new(),
            doubled_pair: None,
            reduced: None,
            components: Vec::new(),
        }
    }

    /// Cycle lengths of the chosen 2-factor.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Vec::len).collect()
    }

    fn write_indented(&self, f: &mut fmt::Formatter<'_>, pad: &str) -> fmt::Result {
        let stage = match self.stage {
            Stage::TwoEdgeConnected => "2-edge-connected",
            Stage::DoubledPair => "one doubled pair",
            Stage::General => "general",
        };
        writeln!(f, "{pad}stage: {stage}, order {}", self.order)?;
        if !self.contracted.is_empty() {
            let edges: Vec<String> = self
                .contracted
                .iter()
                .map(|&((a, b), m)| if m == 1 { format!("{a}-{b}") } else { format!("{a}-{b}x{m}") })
                .collect();
            writeln!(f, "{pad}contracted: {}", edges.join(" "))?;
            writeln!(f, "{pad}contracted 2-factor: {:?}", self.contracted_factor)?;
        }
        if let Some(p) = self.doubled_pair {
            writeln!(f, "{pad}doubled pair u={} v={}, w={} z={}", p.u, p.v, p.w, p.z)?;
        }
        if let Some(r) = &self.reduced {
            writeln!(f, "{pad}reduced graph:")?;
            r.write_indented(f, &format!("{pad}  "))?;
        }
        for (i, c) in self.cycles.iter().enumerate() {
            writeln!(f, "{pad}cycle {i} (length {}): {:?}", c.len(), c)?;
        }
        if !self.matching.is_empty() {
            writeln!(f, "{pad}matching: {:?}", self.matching)?;
        }
        for c in &self.components {
            writeln!(
                f,
                "{pad}component {} depth {} {:?}: ports {:?}, added {:?}, smoothed {:?}, selected {:?}",
                c.component, c.depth, c.role, c.ports, c.added_edges, c.smoothed, c.selected
            )?;
            if let Some(inner) = &c.inner {
                inner.write_indented(f, &format!("{pad}  "))?;
            }
        }
        writeln!(f, "{pad}selected: {:?}", self.selected)
    }
}

impl fmt::Display for ConstructionLog {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_indented(f, "")
    }
}
