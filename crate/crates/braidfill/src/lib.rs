pub mod braid;
pub mod cli;
pub mod dynamics;
pub mod error;
pub mod export;
pub mod families;
pub mod surgery;
pub mod verifier;

pub use error::{Error, Result};
