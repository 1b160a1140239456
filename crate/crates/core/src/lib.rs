pub mod auttype;
pub mod bounds;
pub mod codes;
pub mod cyclotomic;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod lattice;
pub mod matrix;
pub mod normal_form;
pub mod neighbor;
pub mod num;
pub mod poly;

pub use codes::LinearCode;
pub use error::{Error, Result};
pub use lattice::{EnumOptions, Lattice};
pub use matrix::ExactMatrix;
