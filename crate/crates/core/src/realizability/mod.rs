//! Realizability of branch data by connected branched covers of the sphere.
//!
//! A datum `(g, d, Pi_1..Pi_n)` is realizable exactly when there is a tuple
//! of permutations `s_1..s_n` of `d` sheets with
//!
//! * `cycle_type(s_i) = Pi_i`,
//! * `s_1 s_2 ... s_n = 1` (composed left to right),
//! * `<s_1, ..., s_n>` transitive,
//!
//! and the datum is compatible (the genus is then forced by Riemann–Hurwitz).
//! [`find_monodromy`] searches for such a tuple with pruning;
//! [`brute_force_realizable`] enumerates naively and serves as an oracle.

mod class;
mod oracle;
mod perm;
mod search;

use serde::{Serialize, Serializer};

use crate::branch_datum::{BranchDatum, Genus};
use crate::error::{Error, Result};
use crate::partitions::Partition;

pub use oracle::{brute_force_realizable, brute_force_realizable_capped, DEFAULT_ORACLE_CAP};
pub use perm::{cycle_type, is_transitive, total_ramification, Permutation, PermutationTuple};

/// Default node budget for one search.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of permutations assigned before giving up.
    pub budget: u64,
    /// Threads used to fan out the second search position.
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, workers: 1 }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: u64) -> Self {
        Self { budget, ..Self::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealizabilityStatus {
    Realizable(PermutationTuple),
    NotRealizable,
    /// The node budget ran out before the search finished.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizabilityResult {
    pub status: RealizabilityStatus,
    pub nodes_explored: u64,
}

impl RealizabilityResult {
    fn not_realizable(nodes_explored: u64) -> Self {
        Self { status: RealizabilityStatus::NotRealizable, nodes_explored }
    }

    pub fn is_realizable(&self) -> bool {
        matches!(self.status, RealizabilityStatus::Realizable(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self.status, RealizabilityStatus::Unknown)
    }

    pub fn witness(&self) -> Option<&PermutationTuple> {
        match &self.status {
            RealizabilityStatus::Realizable(w) => Some(w),
            _ => None,
        }
    }

    /// `"realizable"`, `"not_realizable"` or `"unknown"`.
    pub fn status_name(&self) -> &'static str {
        match self.status {
            RealizabilityStatus::Realizable(_) => "realizable",
            RealizabilityStatus::NotRealizable => "not_realizable",
            RealizabilityStatus::Unknown => "unknown",
        }
    }

    /// Same status, ignoring the witness and node count.
    pub fn same_status(&self, other: &Self) -> bool {
        self.status_name() == other.status_name()
    }
}

impl Serialize for RealizabilityResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            status: &'static str,
            witness: Option<&'a PermutationTuple>,
            nodes_explored: u64,
        }
        Repr {
            status: self.status_name(),
            witness: self.witness(),
            nodes_explored: self.nodes_explored,
        }
        .serialize(serializer)
    }
}

/// Checks that `t` is a monodromy tuple for `datum`: matching cycle types,
/// identity product and a transitive group.
pub fn verify_witness(t: &PermutationTuple, datum: &BranchDatum) -> Result<bool> {
    if t.degree() != datum.degree() {
        return Err(Error::InvalidInput(format!(
            "witness has degree {} but the datum has degree {}",
            t.degree(),
            datum.degree()
        )));
    }
    if t.len() != datum.branch_points() {
        return Ok(false);
    }
    let types_match = t
        .perms()
        .iter()
        .zip(datum.partitions())
        .all(|(p, pi)| &p.cycle_type() == pi);
    Ok(types_match && t.product().is_identity() && t.is_transitive())
}

pub fn find_monodromy(datum: &BranchDatum, budget: u64) -> RealizabilityResult {
    find_monodromy_with(datum, &SearchOptions::with_budget(budget))
}

pub fn find_monodromy_with(datum: &BranchDatum, options: &SearchOptions) -> RealizabilityResult {
    if !datum.is_compatible() {
        return RealizabilityResult::not_realizable(0);
    }
    // no cover of degree 1 has a branch point
    if datum.degree() == 1 && datum.branch_points() >= 1 {
        return RealizabilityResult::not_realizable(0);
    }
    let (outcome, nodes_explored) = search::search(datum, options.budget, options.workers);
    let status = match outcome {
        search::Outcome::Found(w) => RealizabilityStatus::Realizable(w),
        search::Outcome::Exhausted => RealizabilityStatus::NotRealizable,
        search::Outcome::OutOfBudget => RealizabilityStatus::Unknown,
    };
    RealizabilityResult { status, nodes_explored }
}

/// Realizability of raw input `(genus, degree, partitions)`.
///
/// Degree-1 input with at least one listed point is answered
/// `NotRealizable` before any validation or search, since a degree-1 cover
/// is unbranched. Everything else must form a valid [`BranchDatum`].
pub fn realize_attempt(
    genus: Genus,
    degree: usize,
    partitions: Vec<Partition>,
    options: &SearchOptions,
) -> Result<RealizabilityResult> {
    if degree == 1 && !partitions.is_empty() {
        return Ok(RealizabilityResult::not_realizable(0));
    }
    let datum = BranchDatum::new(genus, degree, partitions)?;
    Ok(find_monodromy_with(&datum, options))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(g: Genus, d: usize, parts: &[&[usize]]) -> BranchDatum {
        let ps = parts.iter().map(|p| Partition::new(p.to_vec()).unwrap()).collect();
        BranchDatum::new(g, d, ps).unwrap()
    }

    fn tuple(perms: &[&[usize]]) -> PermutationTuple {
        let ps: Vec<_> = perms.iter().map(|p| Permutation::new(p.to_vec()).unwrap()).collect();
        PermutationTuple::new(ps[0].degree(), ps).unwrap()
    }

    #[test]
    fn verifies_witnesses() {
        let c = &[1, 2, 0][..];
        let dat = datum(1, 3, &[&[3], &[3], &[3]]);
        assert_eq!(verify_witness(&tuple(&[c, c, c]), &dat), Ok(true));
        let c2 = &[2, 0, 1][..];
        // c * c * c^-1 = c != 1
        assert_eq!(verify_witness(&tuple(&[c, c, c2]), &dat), Ok(false));
        let id = &[0, 1][..];
        let dat2 = datum(0, 2, &[&[2], &[2]]);
        assert_eq!(verify_witness(&tuple(&[id, id]), &dat2), Ok(false));
        assert!(verify_witness(&tuple(&[id, id]), &dat).is_err());
    }

    #[test]
    fn finds_three_cycles() {
        let dat = datum(1, 3, &[&[3], &[3], &[3]]);
        let r = find_monodromy(&dat, DEFAULT_BUDGET);
        let w = r.witness().expect("realizable");
        assert_eq!(verify_witness(w, &dat), Ok(true));
    }

    #[test]
    fn refutes_the_degree_four_exception() {
        let dat = datum(0, 4, &[&[3, 1], &[2, 2], &[2, 2]]);
        assert!(dat.is_compatible());
        let r = find_monodromy(&dat, DEFAULT_BUDGET);
        assert_eq!(r.status, RealizabilityStatus::NotRealizable);
    }

    #[test]
    fn hyperelliptic_torus() {
        let dat = datum(1, 2, &[&[2], &[2], &[2], &[2]]);
        let r = find_monodromy(&dat, DEFAULT_BUDGET);
        let t = &[1, 0][..];
        assert_eq!(r.witness(), Some(&tuple(&[t, t, t, t])));
    }

    #[test]
    fn incompatible_data_short_circuit() {
        let dat = datum(1, 3, &[&[3], &[3]]);
        let r = find_monodromy(&dat, DEFAULT_BUDGET);
        assert_eq!(r, RealizabilityResult::not_realizable(0));
    }

    #[test]
    fn degree_one_attempts_are_refused_without_search() {
        let ones = vec![Partition::ones(1); 3];
        let r = realize_attempt(0, 1, ones, &SearchOptions::default()).unwrap();
        assert_eq!(r, RealizabilityResult::not_realizable(0));
        // the trivial cover of the sphere by itself
        let r = realize_attempt(0, 1, vec![], &SearchOptions::default()).unwrap();
        assert!(r.is_realizable());
    }

    #[test]
    fn tiny_budget_gives_unknown() {
        let dat = datum(0, 4, &[&[3, 1], &[2, 2], &[2, 2]]);
        let r = find_monodromy(&dat, 2);
        assert!(r.is_unknown());
    }

    #[test]
    fn single_branch_point_is_impossible() {
        // compatible only for g = 0, d = 1; with d = 2 the datum is incompatible
        let dat = datum(0, 2, &[&[2]]);
        assert_eq!(find_monodromy(&dat, DEFAULT_BUDGET).status, RealizabilityStatus::NotRealizable);
    }

    #[test]
    fn result_json_shape() {
        let dat = datum(1, 2, &[&[2], &[2], &[2], &[2]]);
        let r = find_monodromy(&dat, DEFAULT_BUDGET);
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["status"], "realizable");
        assert_eq!(v["witness"]["degree"], 2);
        assert_eq!(v["witness"]["perms"][0], serde_json::json!([1, 0]));
        let r = RealizabilityResult::not_realizable(7);
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"status":"not_realizable","witness":null,"nodes_explored":7}"#
        );
    }
}
