//! 4-hypergraphs, triple systems and the standard design families.

pub mod families;
mod forms;
mod hypergraph;
mod profile;
mod triples;

pub use forms::QuadraticFormSpace;
pub use hypergraph::{Block, Hypergraph, MAX_POINTS};
pub use profile::DesignProfile;
pub use triples::TripleSystem;
