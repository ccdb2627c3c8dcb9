//! Bijections between tableaux, binary trees, visit words, polyominoes and
//! pairs of paths.

mod phi;
mod pipeline;

pub use phi::{phi, phi_inverse};
pub use pipeline::{
    dyck_to_polyomino, pair_of_paths_direct, polyomino_to_pair, tableau_to_pair_direct,
    tree_to_dyck,
};
