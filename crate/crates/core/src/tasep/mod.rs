//! The totally asymmetric exclusion process on `n` cells with entry rate
//! `alpha` and exit rate `beta`: the exact chain and the combinatorial
//! formulas for its stationary distribution.

mod chain;
mod formulas;
mod state;

pub use chain::{build_chain, simulate, stationary, total_variation, Chain, SimulationConfig};
pub use formulas::{
    distribution, pair_weight, partition_z, partition_z_with, prob_pairs, prob_paths,
    prob_tableaux, prob_tableaux_weighted, prob_trees, tableau_weight, tree_weight, unit_partition,
    Method, ZMethod,
};
pub use state::{state_to_path, Distribution, RateParams, TasepState};
