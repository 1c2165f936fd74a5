//! Triangle-weight pruning for maximum clique search.

pub mod cli;
pub mod extract;
pub mod fixtures;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod prune;
pub mod set;
pub mod triangles;

pub use extract::{extract_max_clique, is_clique, CliqueResult};
pub use graph::Graph;
pub use prune::{full_trace, Trace, TraceMode};
pub use set::{EdgeSet, VertexSet};
pub use triangles::{enumerate_triangles, Triangle};
