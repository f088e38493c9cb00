pub mod cli;
pub mod config;
pub mod error;
pub mod expansion;
pub mod generators;
pub mod graph;
pub mod independence;
pub mod rotation;
pub mod spectrum;
pub mod suite;
pub mod util;

pub use config::Config;
pub use error::{Error, Result};
pub use graph::{CycleCertificate, Graph, PathCertificate, VertexSet};
