use thiserror::Error;

/// Errors produced by graph construction, parsing, and the improvement
/// algorithms. Precondition violations name the violated condition so the
/// CLI can surface them directly.
#[derive(Debug, Error)]
pub enum Error {
    #[error("node id {id} out of range for graph with {node_count} nodes")]
    InvalidNode { id: u32, node_count: usize },

    #[error("edge ({u}, {v}) has non-positive weight {weight}")]
    InvalidWeight { u: u32, v: u32, weight: f64 },

    #[error("seed set is empty")]
    EmptySeed,

    #[error("seed set has zero volume (all seed nodes are isolated)")]
    ZeroVolumeSeed,

    #[error(
        "seed set too large: vol(R) = {seed_volume} exceeds vol of complement = {complement_volume}"
    )]
    SeedTooLarge {
        seed_volume: f64,
        complement_volume: f64,
    },

    #[error("conductance undefined for the empty set or the full vertex set")]
    UndefinedConductance,

    #[error("invalid parameter {name}: {value}")]
    InvalidParameter { name: &'static str, value: f64 },

    #[error("quality guarantee not applicable: {0}")]
    GuaranteeNotApplicable(&'static str),

    #[error("instance too large for exhaustive oracle: {nodes} nodes exceeds cap {cap}")]
    OracleCapExceeded { nodes: usize, cap: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
