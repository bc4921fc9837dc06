//! Spanning tree auxiliary graphs: construction, counting, Cartesian
//! factorization, recognition and inversion.

pub mod error;
pub mod factor;
pub mod generate;
pub mod graph;
pub mod oracles;
pub mod params;
pub mod recognition;
pub mod spanning;
pub mod stag;
pub mod strategy;

pub use error::{Error, Result};
pub use graph::{EdgeId, Graph, VertexId};
