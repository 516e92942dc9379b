pub mod analysis;
pub mod catalog;
pub mod error;
pub mod exec;
pub mod numeric;
pub mod poly;
pub mod scalar;
pub mod system;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::GaussianRational;
