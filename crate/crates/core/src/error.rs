use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("compositions of different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("value {value} out of range 1..={max}")]
    OutOfRange { value: usize, max: usize },
    #[error("color {color} out of range 2..={max}")]
    ColorOutOfRange { color: usize, max: usize },
    #[error("size {size} exceeds the enumeration bound {bound}")]
    SizeBound { size: usize, bound: usize },
    #[error("not a standard filling: {0}")]
    NotStandard(String),
    #[error("not an involution: color {color} at element {element}")]
    NotInvolution { color: usize, element: usize },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("malformed augmentation: {0}")]
    Augmentation(String),
    #[error("classification failed: {0}")]
    Classification(String),
    #[error("not a dual equivalence: {0}")]
    NotDualEquivalence(String),
    #[error("statistic is not constant on the class of element {0}")]
    StatisticNotConstant(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("fixture error: {0}")]
    Fixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;
