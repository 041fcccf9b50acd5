//! Exact computation with p-subgroup posets of finite permutation groups.
//!
//! The crate is organised bottom-up:
//!
//! * [`perm`] and [`group`]: permutations, stabilizer chains, materialized
//!   element tables and the subgroup algorithms built on them (Sylow
//!   subgroups, normalizers, centralizers, p-cores, solvability, products).
//! * [`poset`]: the posets `S_p(G)`, `A_p(G)`, `B_p(G)`, the `i(X)`
//!   reduction, fixed subposets, p-rank and the two reduction lemmas used to
//!   shrink `A_p(G)` without changing its homotopy type.
//! * [`topology`]: order complexes, sparse boundary matrices, Smith normal
//!   form and reduced integral homology.
//! * [`verify`]: per-instance claim checks producing [`verify::Verdict`]s.
//!
//! Everything here is `no_std` with `alloc`; file formats, timing and the
//! command line live in the `psc` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod arith;
pub mod error;
pub mod group;
pub mod perm;
pub mod poset;
pub mod topology;
pub mod verify;

#[cfg(test)]
mod fixtures;

pub use error::{Error, Result};
pub use group::{ElementId, Group, GroupSpec, Limits, Subgroup};
pub use perm::Permutation;
pub use poset::{PosetKind, RankWitness, SubgroupPoset};
pub use topology::{FinitePoset, HomologyGroups, IntegerMatrix, SimplicialComplex, SmithNormalForm};
