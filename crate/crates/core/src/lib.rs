//! Finite group toolkit for almost trivial group topologies.
//!
//! Every group topology on a finite group is almost trivial, i.e. of the form
//! `ζ_N` for a normal subgroup `N` (the closure of the identity, which is
//! open). This crate builds finite groups from a small spec language and
//! decides, through subgroup computations, which identity maps between such
//! topologies are semitopological (or n-step semitopological), which groups
//! are Taimanov, totally Taimanov or Arnautov, and which topologies are
//! A-complete. Each decision has an independent brute-force cross-check.

pub mod catalog;
pub mod classify;
pub mod error;
pub mod group;
pub mod parser;
pub mod perm;
pub mod perm_action;
pub mod report;
pub mod semitop;
pub mod spec;
pub mod subgroup;
pub mod topology;

pub use error::{Error, Result};
pub use group::{
    build_group, build_group_with, center, centralizer, BuildOptions, Element, FiniteGroup,
};
pub use parser::parse_group_spec;
pub use perm::Permutation;
pub use spec::GroupSpec;
pub use subgroup::Subgroup;
pub use topology::{make_topology, AlmostTrivialTopology};
