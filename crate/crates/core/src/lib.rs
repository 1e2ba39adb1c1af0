pub mod classical;
pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod field;
pub mod forms;
pub mod matrix;
pub mod modstruct;
pub mod report;
pub mod reptable;
pub mod jordan;
pub mod lattice;
pub mod subspace;
pub mod torus;
pub mod witness;

pub use error::{Error, Result};
pub use field::FieldPrime;
pub use matrix::Matrix;
pub use subspace::SubspaceBasis;
