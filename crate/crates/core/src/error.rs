use thiserror::Error;

#[derive(Debug, Error)]
pub enum FoveaError {
    #[error("field error: {0}")]
    Field(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid presentation: {0}")]
    Presentation(String),
    #[error("path enumeration exceeded {cap} paths; nilpotency bound too large")]
    PathExplosion { cap: usize },
    #[error("modules live over different quivers")]
    BaseMismatch,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("decomposition failed after {0} attempts; raise the field characteristic")]
    Decomposition(usize),
    #[error("field characteristic {p} does not exceed module dimension {dim}")]
    FieldTooSmall { p: u64, dim: usize },
    #[error("almost split check failed: {0}")]
    AlmostSplit(String),
    #[error("indecomposable list is incomplete")]
    IncompleteList,
    #[error("morphism is not in the span of pushed-down lifts")]
    NotLiftable,
    #[error("window did not stabilize within radius {0}")]
    WindowUnstable(i64),
    #[error("subset is not convex")]
    NotConvex,
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, FoveaError>;
