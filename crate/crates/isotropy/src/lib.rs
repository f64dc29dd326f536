pub mod cli;
pub mod commutant;
pub mod engine;
pub mod error;
pub mod exact;
pub mod normal_form;
pub mod oracle;
pub mod shape;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{ExactMatrix, GaussianRational};
pub use shape::{CaseTag, ShapeSpec};
