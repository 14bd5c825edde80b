pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod linalg;
pub mod projective;
pub mod rnc;
pub mod scalar;
pub mod symbolic;
pub mod vonstaudt;
pub mod wdn;

pub use error::{Error, Result};
pub use projective::{Configuration, Hyperplane, ProjectivePoint};
pub use scalar::{FieldSpec, Scalar};
