use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at offset {1}: {0}")]
    Parse(String, usize),

    #[error("ambient variable sets differ: [{0}] vs [{1}]")]
    AmbientMismatch(String, String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("relation is not monic in the designated power of `{0}`")]
    NotMonicRelation(String),

    #[error("polynomial is not symmetric: transposition ({0} {1}) changes it")]
    NotSymmetric(usize, usize),

    #[error("point is not on the model (value {0})")]
    NotOnModel(String),

    #[error("point lies on the Hessian locus")]
    OnHessian,

    #[error("point is singular on the model")]
    SingularPoint,

    #[error("quadratic form is degenerate: rank {0}, expected {1}")]
    DegenerateForm(usize, usize),

    #[error("cone vertex check failed: {0}")]
    VertexCheck(String),

    #[error("no rational point found on the conic within search bound {0}")]
    NoConicPoint(u64),

    #[error("binary form is not squarefree")]
    NotSquarefree,

    #[error("polynomial must be squarefree of degree 6, got: {0}")]
    BadSextic(String),

    #[error("degenerate fibration parameters: {0}")]
    DegenerateFiber(String),

    #[error("group law degenerated: {0}")]
    GroupLaw(String),

    #[error("unknown certificate `{0}`; available: {1}")]
    UnknownCertificate(String, String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
