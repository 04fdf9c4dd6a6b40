//! Trace monoids, homology of small categories and derived limits.

pub mod cli;
pub mod dimension;
pub mod error;
pub mod fincat;
pub mod graph;
pub mod homology;
pub mod limcoh;
pub mod limits;
pub mod syzygy;
pub mod trace;

pub use error::{Error, Result};
pub use limits::Limits;
