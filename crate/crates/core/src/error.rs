use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Where an exhaustive-search budget was exceeded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BudgetSite {
    /// Direct call to a brute-force independent-set oracle.
    BruteForce,
    /// The branching solver hit a subgraph with no good vertex.
    Fallback,
    /// Full common-subgraph enumeration.
    CommonSubgraph,
    /// Step 4 of the threshold common-subgraph algorithm: a size-k common subgraph exists.
    CommonSubgraphStep4,
}

impl fmt::Display for BudgetSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            BudgetSite::BruteForce => "brute-force enumeration",
            BudgetSite::Fallback => "branching fallback",
            BudgetSite::CommonSubgraph => "common-subgraph enumeration",
            BudgetSite::CommonSubgraphStep4 => "common-subgraph step 4 delegation",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge probability {0} is outside [0, 1]")]
    InvalidProbability(f64),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex {0} listed twice in a vertex set")]
    DuplicateVertex(usize),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("mapping is not a bijection: {0}")]
    InvalidMapping(String),

    #[error("{site}: subgraph on {size} vertices exceeds the cap of {cap}")]
    Budget {
        site: BudgetSite,
        size: usize,
        cap: usize,
    },

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("block {block}: {source}")]
    Block {
        block: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// True for budget errors, including ones wrapped with a block index.
    pub fn is_budget(&self) -> bool {
        match self {
            Error::Budget { .. } => true,
            Error::Block { source, .. } => source.is_budget(),
            _ => false,
        }
    }
}
