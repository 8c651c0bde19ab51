//! Brute-force realizability by plain enumeration.
//!
//! Shares nothing with the search kernel: classes come from filtering all
//! `d!` permutations, every position but the last is enumerated in full, and
//! connectivity is a breadth-first flood fill.

use std::collections::VecDeque;

use itertools::Itertools;

use super::perm::{Permutation, PermutationTuple};
use super::{RealizabilityResult, RealizabilityStatus};
use crate::branch_datum::BranchDatum;
use crate::error::{Error, Result};

pub const DEFAULT_ORACLE_CAP: usize = 5;

fn cycle_lengths(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        if len > 0 {
            out.push(len);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn connected(d: usize, perms: &[Vec<usize>]) -> bool {
    let mut reached = vec![false; d];
    let mut queue = VecDeque::from([0]);
    reached[0] = true;
    let mut count = 1;
    while let Some(x) = queue.pop_front() {
        for p in perms {
            let y = p[x];
            if !reached[y] {
                reached[y] = true;
                count += 1;
                queue.push_back(y);
            }
        }
    }
    count == d
}

pub fn brute_force_realizable(datum: &BranchDatum) -> Result<RealizabilityResult> {
    brute_force_realizable_capped(datum, DEFAULT_ORACLE_CAP)
}

pub fn brute_force_realizable_capped(datum: &BranchDatum, cap: usize) -> Result<RealizabilityResult> {
    let d = datum.degree();
    if d > cap {
        return Err(Error::OracleScope { degree: d, cap });
    }
    let n = datum.branch_points();
    let profiles: Vec<Vec<usize>> = datum.partitions().iter().map(|p| p.parts().to_vec()).collect();

    let everything: Vec<Vec<usize>> = (0..d).permutations(d).collect();
    let classes: Vec<Vec<&Vec<usize>>> = profiles
        .iter()
        .map(|target| everything.iter().filter(|p| &cycle_lengths(p) == target).collect())
        .collect();

    let mut nodes = 0u64;
    let mut found: Option<Vec<Vec<usize>>> = None;
    let free = n.saturating_sub(1);
    let heads: Vec<Vec<&Vec<usize>>> = if free == 0 {
        vec![Vec::new()]
    } else {
        classes[..free].iter().map(|c| c.iter().copied()).multi_cartesian_product().collect()
    };
    for head in heads {
        nodes += 1;
        let mut perms: Vec<Vec<usize>> = head.into_iter().cloned().collect();
        if n > 0 {
            // x -> perms[k-1](...perms[0](x))
            let mut prod: Vec<usize> = (0..d).collect();
            for p in &perms {
                prod = prod.iter().map(|&x| p[x]).collect();
            }
            let mut last = vec![0; d];
            for (i, &x) in prod.iter().enumerate() {
                last[x] = i;
            }
            if cycle_lengths(&last) != profiles[n - 1] {
                continue;
            }
            perms.push(last);
        }
        if connected(d, &perms) {
            found = Some(perms);
            break;
        }
    }

    let status = match found {
        Some(perms) => {
            // Euler characteristic of the cover: d * chi(S^2 - n points) + (points over B)
            let points_over_branch: i64 = profiles.iter().map(|p| p.len() as i64).sum();
            let chi = d as i64 * (2 - n as i64) + points_over_branch;
            if chi != 2 - 2 * datum.genus() as i64 {
                RealizabilityStatus::NotRealizable
            } else {
                let perms = perms
                    .into_iter()
                    .map(|p| Permutation::new(p).expect("enumerated permutation"))
                    .collect();
                RealizabilityStatus::Realizable(PermutationTuple::new(d, perms)?)
            }
        }
        None => RealizabilityStatus::NotRealizable,
    };
    Ok(RealizabilityResult { status, nodes_explored: nodes })
}
