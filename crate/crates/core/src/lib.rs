//! Exact, parameterized and approximate independent-set algorithms for
//! Erdős–Rényi random graphs, a largest-common-induced-subgraph solver, and
//! the Monte Carlo and sweep harness used to check them.

pub mod approx;
pub mod common;
pub mod decide;
pub mod error;
pub mod exact;
pub mod graph;
pub mod harness;
pub mod rng;
mod subsets;

pub use error::{BudgetSite, Error, Result};
pub use graph::{Graph, GraphSpec, VertexSet};
pub use rng::Prng;
