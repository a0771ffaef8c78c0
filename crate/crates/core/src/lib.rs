pub mod config;
pub mod error;
pub mod families;
pub mod harness;
pub mod ideal;
pub mod report;
pub mod ring;
pub mod topology;
pub mod zsym;

pub use error::{Error, Result};
