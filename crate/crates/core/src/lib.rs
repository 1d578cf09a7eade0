//! Hopf Galois structures on finite separable extensions, computed from the
//! Galois group of the normal closure.
//!
//! A degree-`n` extension `K/k` with normal closure group `G` and subgroup
//! `G′ = Gal(K̃/K)` is modelled by an [`ExtensionDatum`]. Structures are
//! regular subgroups of `Sym(G/G′)` normalized by the left coset action.

pub mod catalog;
pub mod error;
pub mod finite;
pub mod group;
pub mod groupid;
pub mod holomorph;
pub mod hopf;
pub mod lattice;
pub mod linalg;
pub mod field;
pub mod descent;
pub mod cli;
pub mod perm;

pub use error::{Error, Result};
pub use hopf::{ExtensionDatum, HGStructure, Verdict};
pub use group::{left_coset_action, CosetSpace, GroupDocument, PermGroup};
pub use perm::Permutation;
