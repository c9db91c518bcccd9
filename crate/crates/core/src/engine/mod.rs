//! Contractibility decision procedures.
//!
//! Every solver here is exhaustive. Oversize searches stop with
//! [`EngineError::BudgetExceeded`], which is never reported as a negative
//! answer.

mod bits;
mod dcs;
mod pattern;
mod search;
mod solvers;
mod witness;

use thiserror::Error;

use crate::graph::GraphError;

pub use dcs::{p4_contractible, solve_2dcs, TwoDcsSolution};
pub use pattern::{PatternJson, PatternSpec, MAX_EXPLICIT_PATTERN};
pub use solvers::{c3_contractible, contracts_to, cyclicity, find_suitable_pair, SuitablePair};
pub use witness::{verify_witness, WitnessJson, WitnessStructure, WitnessViolation};

/// Largest graph the bitset solvers accept.
pub const MAX_SEARCH_VERTICES: usize = 128;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("pattern has {pattern} vertices but the graph has only {graph}")]
    PatternTooLarge { pattern: usize, graph: usize },
    #[error("graph has {0} vertices; exhaustive search supports at most {MAX_SEARCH_VERTICES}")]
    GraphTooLarge(usize),
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("invalid terminal sets: {0}")]
    InvalidTerminals(String),
    #[error("search budget of {0} nodes exceeded")]
    BudgetExceeded(u64),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Upper bound on the number of branch nodes a single call may explore.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: Option<u64>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { max_nodes: None };

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
        }
    }

    pub(crate) fn meter(self) -> Meter {
        Meter {
            used: 0,
            limit: self.max_nodes,
        }
    }
}

#[derive(Debug)]
pub(crate) struct Meter {
    used: u64,
    limit: Option<u64>,
}

impl Meter {
    pub(crate) fn tick(&mut self) -> Result<(), EngineError> {
        self.used += 1;
        match self.limit {
            Some(limit) if self.used > limit => Err(EngineError::BudgetExceeded(limit)),
            _ => Ok(()),
        }
    }
}
