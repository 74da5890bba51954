pub mod algebra;
pub mod error;
pub mod exterior;
pub mod grassmann;
pub mod linalg;
pub mod nullspace;
pub mod report;
pub mod repthy;
pub mod roots;
pub mod sampling;

pub use error::{Error, Result};
