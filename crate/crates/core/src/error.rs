use thiserror::Error;

/// Errors produced anywhere in the weight-recursion pipeline.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid monomial pattern: {0}")]
    InvalidPattern(String),

    #[error("invalid function spec: {0}")]
    InvalidSpec(String),

    #[error("variable index {index} exceeds variable count {n}")]
    IndexOutOfRange { index: u32, n: u32 },

    #[error("row index {row} out of range for {n} variables")]
    RowOutOfRange { row: u64, n: u32 },

    #[error("level {v} out of range 1..={top}")]
    LevelOutOfRange { v: u32, top: u32 },

    #[error("enumeration budget exceeded: {n} variables requested, budget is {budget}")]
    EnumerationBudget { n: u32, budget: u32 },

    #[error("matrix budget exceeded: state width {width} bits, budget is {budget}")]
    MatrixBudget { width: u32, budget: u32 },

    #[error("initial conditions infeasible: order {order} needs weights up to n = {needed}, budget is {budget}")]
    InitialConditionsInfeasible { order: usize, needed: u32, budget: u32 },

    #[error("the pure linear function has no rules matrix")]
    LinearSpec,

    #[error("polynomial error: {0}")]
    Polynomial(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("minimal polynomial computation failed: {0}")]
    MinPoly(String),

    #[error("propagated weight out of range at n = {n}")]
    WeightOutOfRange { n: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
