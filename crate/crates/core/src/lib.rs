//! Exact combinatorics of branched covers of the Riemann sphere.
//!
//! A branched cover `M -> S^2` of degree `d` with `n` branch points is
//! encoded by its monodromy: a tuple of `n` permutations of `d` sheets whose
//! cycle types are the ramification profiles over each branch point, whose
//! ordered product is the identity, and which generate a transitive group.
//!
//! The crate provides:
//!
//! * [`partitions`]: integer partitions in canonical (weakly decreasing) form.
//! * [`branch_datum`]: branch data and the Riemann–Hurwitz bookkeeping.
//! * [`realizability`]: a backtracking monodromy search deciding whether a
//!   branch datum is realized by a connected cover, plus a brute-force oracle.
//! * [`complexity`]: exact complexities `c * pi` of covers and surfaces,
//!   including the minimal-total-length search.

pub mod branch_datum;
pub mod complexity;
mod error;
pub mod partitions;
pub mod realizability;

pub use branch_datum::{implied_genus, BranchDatum, Genus, PiMultiple, MAX_DEGREE};
pub use complexity::{
    branching_multisets, cover_complexity, hyperbolic_area_coeff, hyperelliptic_witness,
    m_min_search, m_min_search_with, simple_complexity_formula, simple_complexity_search,
    simple_complexity_search_with, surface_complexity, surface_complexity_with,
    ComplexityReport, TraceEntry,
};
pub use error::{Error, Result};
pub use partitions::{enumerate_partitions, Partition};
pub use realizability::{
    brute_force_realizable, brute_force_realizable_capped, find_monodromy, find_monodromy_with,
    realize_attempt, verify_witness, Permutation, PermutationTuple, RealizabilityResult,
    RealizabilityStatus, SearchOptions, DEFAULT_BUDGET, DEFAULT_ORACLE_CAP,
};
