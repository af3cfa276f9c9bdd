use thiserror::Error;

/// Errors produced by graph construction, spectral computation and the
/// polynomial calculus.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} not found")]
    EdgeNotFound(usize, usize),
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("a tree has no base")]
    TreeHasNoBase,
    #[error("alpha = {0} is outside [0, 1]")]
    AlphaOutOfRange(String),
    #[error("invalid alpha literal {0:?}")]
    InvalidAlpha(String),
    #[error("power iteration did not converge within {0} iterations")]
    NoConvergence(usize),
    #[error("vector is not a unit vector (norm {0})")]
    NotUnitVector(f64),
    #[error("vector length {got} does not match vertex count {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("closed form mismatch for f_(k+1) f_l - f_k f_(l+1) at k={k}, l={l}")]
    ClosedFormMismatch { k: usize, l: usize },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("invalid family parameters: {0}")]
    InvalidFamilyParams(String),
    #[error("invalid family spec {input:?}: {reason}")]
    FamilyParse { input: String, reason: String },
    #[error("invalid move set: {0}")]
    InvalidMoveSet(String),
    #[error("edge {0}-{1} is not a cut edge")]
    NotACutEdge(usize, usize),
    #[error("2-switch conflict: {0}")]
    SwitchConflict(String),
    #[error("invalid pendant path shift: {0}")]
    InvalidShift(String),
    #[error("order {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("no graph of order {n} with diameter {d} and cyclomatic number {cyclomatic}")]
    EmptySpace { n: usize, d: usize, cyclomatic: usize },
    #[error("invalid search space: {0}")]
    InvalidSpace(String),
    #[error("graph6 parse error at byte {position}: {reason}")]
    Graph6 { position: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
