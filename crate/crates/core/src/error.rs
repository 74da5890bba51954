use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported root system {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("not a point of the nullspace variety: {0}")]
    NotInVariety(String),
    #[error("weight is not regular: {0}")]
    NotRegular(String),
    #[error("inconsistent involution: {0}")]
    Involution(String),
    #[error("degenerate chart line for root {0}")]
    DegenerateChart(String),
    #[error("parabolic closure is not a subalgebra")]
    NotSubalgebra,
    #[error("algebra dimension {g} exceeds the cap {cap}")]
    TooLarge { g: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
