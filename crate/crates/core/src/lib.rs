pub mod classifier;
pub mod cliquewidth;
pub mod error;
pub mod generators;
pub mod graph;
pub mod patterns;
pub mod structure;
pub mod suites;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
