use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("step {index} is callable; symbolic building needs polynomial or series steps")]
    SymbolicUnsupported { index: usize },

    #[error("requested order {requested} exceeds the system order {order}")]
    OrderExceeded { requested: usize, order: usize },

    #[error("step {index} is constant in its first argument")]
    ConstantStep { index: usize },

    #[error("inner map does not send the domain into itself: {0}")]
    NotEndomorphism(String),

    #[error("inner map has no fixpoint at the basepoint")]
    NoFixpoint,

    #[error("coordinate map is not invertible (zero scale)")]
    NonInvertible,

    #[error("linear transform with zero scale is degenerate")]
    DegenerateScale,

    #[error("configuration error: {0}")]
    Configuration(String),

    #[error("sup-norm method not applicable: {0}")]
    MethodInapplicable(String),

    #[error("bound not applicable: {0}")]
    Inapplicable(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("partition error: {0}")]
    Partition(String),

    #[error("marching produced a non-finite value at row {row}, step {step}")]
    Marching { row: usize, step: usize },

    #[error("not checkable: {0}")]
    NotCheckable(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}
