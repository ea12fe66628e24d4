use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid vertex name {0:?}")]
    InvalidVertexName(String),
    #[error("vertex {0} declared twice")]
    DuplicateVertex(String),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("loop edge at {0}")]
    LoopEdge(String),
    #[error("edge {0}-{1} listed twice")]
    DuplicateEdge(String, String),
    #[error("lambda edge {0}-{1} is not an edge of the complement of gamma")]
    LambdaNotInComplement(String, String),
    #[error("vertex {0} does not lie on a lambda edge")]
    VertexNotInLambda(String),
    #[error("vertices lie in different lambda components")]
    MixedComponents,
    #[error("vertex {0} is not in the stated lambda component")]
    VertexNotInStatedComponent(String),
    #[error("lambda component of {0} contains a cycle; simple paths are not unique")]
    NotUniquePath(String),
    #[error("condition requires R1 (lambda must be a forest)")]
    PreconditionR1,
    #[error("gamma contains a triangle")]
    NotTriangleFree,
    #[error("completion is not saturated")]
    NotSaturated,
    #[error("words belong to different ambient groups")]
    AmbientMismatch,
    #[error("word exceeds {0} letters")]
    WordTooLong(usize),
    #[error("generator {0} of the assignment maps to the identity")]
    AssignmentTrivialImage(usize),
    #[error("assignment has {got} words but the commuting graph has {expected} vertices")]
    AssignmentSize { expected: usize, got: usize },
    #[error("bad family parameters: {0}")]
    BadParams(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("completion index {omega} disagrees with predicted index {expected}")]
    IndexMismatch { expected: u64, omega: u64 },
    #[error("trim did not terminate within {0} steps")]
    TrimDiverged(usize),
    #[error("kernel witness {0} found for a trimmed reflection set")]
    ReflectionKernelWitness(String),
}

pub type Result<T> = std::result::Result<T, Error>;
