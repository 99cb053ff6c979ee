//! Exact small-scale oracles and seeded experiment drivers.

mod biclique;
mod clique;
mod experiments;

pub use biclique::{max_balanced_biclique_exact, DEFAULT_BICLIQUE_VERTEX_LIMIT};
pub use clique::{
    enumerate_maximal_cliques, max_clique_exact, max_independent_exact, DEFAULT_CLIQUE_NODE_BUDGET,
    DEFAULT_CLIQUE_VERTEX_LIMIT,
};
pub use experiments::{
    balls_into_bins, run_grid_experiment, run_ranked_experiment, Aggregate, Assertion,
    BallsConfig, BallsReport, BicliqueStat, GridExperimentConfig, GridReport, GridTrial,
    RankedExperimentConfig, RankedReport, RankedTrial, TrendRow,
};

use serde::Serialize;

/// Certified output of an exact oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    /// The optimum (or best found, when `exact` is false).
    pub value: usize,
    pub witness: OracleWitness,
    /// Search nodes visited.
    pub explored: u64,
    /// False only when a node budget ran out before the search finished.
    pub exact: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleWitness {
    VertexSet(Vec<u32>),
    Bipartition { left: Vec<u32>, right: Vec<u32> },
}

impl OracleWitness {
    pub fn vertex_set(&self) -> Option<&[u32]> {
        match self {
            OracleWitness::VertexSet(vs) => Some(vs),
            OracleWitness::Bipartition { .. } => None,
        }
    }
}
