pub mod cli;
pub mod coxeter;
pub mod denom;
pub mod distance;
pub mod dorey;
pub mod error;
pub mod quiver;
pub mod rootsys;
pub mod words;

pub use error::{Error, Result};
