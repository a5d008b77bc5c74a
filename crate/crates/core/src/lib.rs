//! Exact combinatorics of symmetric-group representations and the multiplicity
//! bounds built on them.
//!
//! Partitions, Specht dimensions, Kostka and Littlewood-Richardson numbers,
//! induced-module decompositions, admissible sets and the orbit model of a
//! zero-dimensional symmetric set. All counts are arbitrary precision.
//!
//! With the default `parallel` feature the hot loops run on rayon; build with
//! `--no-default-features` for a sequential library.

pub mod admissible;
pub mod bounds;
pub mod decomposition;
pub mod error;
mod exec;
pub mod induction;
pub mod oracle;
pub mod orbit;
pub mod partition;
pub mod tableaux;

pub use admissible::{admissible_set, fat_hook_check, is_admissible, restriction_check, AdmissibleSet};
pub use bounds::{BoundCalculator, BoundKind, BoundParams, BoundReport};
pub use decomposition::Decomposition;
pub use error::{Error, Result};
pub use induction::{sign_twist, split_module, split_multiplicity, young_module};
pub use orbit::{example_variety, h0_decomposition, OrbitSpec};
pub use partition::{Partition, PartitionTuple};
pub use tableaux::{kostka, lr_coefficient, specht_dim};

/// Drops every memoized Kostka number, LR coefficient, split module and
/// admissible support. Useful for timing and for bounding memory in long runs.
pub fn clear_caches() {
    tableaux::clear_caches();
    induction::clear_cache();
    admissible::clear_cache();
}
