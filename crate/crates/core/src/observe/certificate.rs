//! Self-contained power domination certificates.
//!
//! A certificate names the graph by a fingerprint of its canonical edge list,
//! the model, the set, the claimed bound, and the full round trace. Checking
//! one replays every event; nothing from the producer is trusted.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use super::{Model, ObservationTrace, ReplayError, Round};
use crate::graph::io::write_edge_list;
use crate::graph::{Multigraph, Vertex};

pub const FORMAT: &str = "powerdom-certificate";
pub const VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprint {
    pub order: usize,
    pub size: usize,
    /// SHA-256 of the canonical edge list, hex encoded.
    pub edge_list_sha256: String,
}

pub fn fingerprint(g: &Multigraph) -> Fingerprint {
    let digest = Sha256::digest(write_edge_list(g).as_bytes());
    Fingerprint { order: g.order(), size: g.size(), edge_list_sha256: hex::encode(digest) }
}

/// A non-negative rational `num / den` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bound {
    pub num: u64,
    pub den: u64,
}

impl Bound {
    pub fn fraction(num: u64, den: u64) -> Self {
        assert!(den > 0, "bound denominator must be positive");
        let g = gcd(num, den);
        Bound { num: num / g, den: den / g }
    }

    pub fn integer(k: u64) -> Self {
        Bound { num: k, den: 1 }
    }

    /// True if a set of this size satisfies the bound.
    pub fn admits(&self, size: usize) -> bool {
        (size as u128) * (self.den as u128) <= self.num as u128
    }
}

impl std::fmt::Display for Bound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a.max(1)
    } else {
        gcd(b, a % b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdsCertificate {
    pub format: String,
    pub version: u32,
    pub graph: Fingerprint,
    pub model: Model,
    pub set: Vec<Vertex>,
    pub bound: Bound,
    pub rounds: Vec<Round>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("not a certificate (format `{0}`)")]
    Format(String),
    #[error("unsupported certificate version {0}")]
    Version(u32),
    #[error("certificate was issued for a different graph")]
    Fingerprint,
    #[error("set has {size} vertices, above the claimed bound {bound}")]
    BoundExceeded { size: usize, bound: Bound },
    #[error("set lists a vertex twice or out of order")]
    SetNotCanonical,
    #[error("replay failed: {0}")]
    Replay(#[from] ReplayError),
    #[error("{missing} vertices remain unobserved")]
    Incomplete { missing: usize },
    #[error("malformed certificate JSON: {0}")]
    Json(String),
}

impl PdsCertificate {
    pub fn new(g: &Multigraph, trace: &ObservationTrace, bound: Bound) -> Self {
        PdsCertificate {
            format: FORMAT.to_string(),
            version: VERSION,
            graph: fingerprint(g),
            model: trace.model,
            set: trace.initial.clone(),
            bound,
            rounds: trace.rounds.clone(),
        }
    }

    /// The trace this certificate claims; the observed sets are taken from
    /// its rounds and are checked by replay.
    pub fn trace(&self) -> ObservationTrace {
        let mut observed: Vec<Vertex> = self.rounds.iter().flat_map(|r| r.vertices.iter().copied()).collect();
        observed.sort_unstable();
        let mut observed_edges: Vec<_> = self.rounds.iter().flat_map(|r| r.edges.iter().copied()).collect();
        observed_edges.sort_unstable();
        ObservationTrace {
            initial: self.set.clone(),
            model: self.model,
            propagation_only: false,
            rounds: self.rounds.clone(),
            observed,
            observed_edges,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CertificateError> {
        serde_json::from_str(text).map_err(|e| CertificateError::Json(e.to_string()))
    }
}

/// Checks `cert` against `g` by full replay.
pub fn verify_certificate(cert: &PdsCertificate, g: &Multigraph) -> Result<(), CertificateError> {
    if cert.format != FORMAT {
        return Err(CertificateError::Format(cert.format.clone()));
    }
    if cert.version != VERSION {
        return Err(CertificateError::Version(cert.version));
    }
    if cert.graph != fingerprint(g) {
        return Err(CertificateError::Fingerprint);
    }
    if cert.set.windows(2).any(|w| w[0] >= w[1]) {
        return Err(CertificateError::SetNotCanonical);
    }
    if !cert.bound.admits(cert.set.len()) {
        return Err(CertificateError::BoundExceeded { size: cert.set.len(), bound: cert.bound });
    }
    let observed = cert.trace().replay(g)?;
    if observed.len() != g.order() {
        return Err(CertificateError::Incomplete { missing: g.order() - observed.len() });
    }
    Ok(())
}
