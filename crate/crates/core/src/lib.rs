//! Catalan tableaux, binary trees and pairs of lattice paths, and the exact
//! stationary distribution of the totally asymmetric exclusion process
//! (TASEP) with open boundaries.
//!
//! The [`bijection`] module maps tableaux to binary trees (preserving the
//! profile/canopy and the branch statistics) and on to pairs of
//! non-crossing paths. The [`tasep`] module solves the discrete TASEP chain
//! in exact rational arithmetic and evaluates the combinatorial formulas for
//! its stationary law built on those objects.

pub mod bijection;
pub mod count;
mod error;
pub mod limits;
pub mod linalg;
pub mod path;
pub mod tableau;
pub mod tasep;
pub mod tree;

pub use error::{Error, Result};
pub use limits::Limits;
pub use path::{Column, DyckLetter, DyckWord, LatticePath, PathPair, Polyomino, Step};
pub use tableau::{enumerate_tableaux, tableaux_with_profile, CatalanTableau, Shape, Violation};
pub use tree::{enumerate_trees, BinaryTree, CanopyLetter, CanopyWord};

pub use num_rational::BigRational as Rational;
