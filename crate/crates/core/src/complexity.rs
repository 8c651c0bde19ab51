//! Complexity of covers and of surfaces, as exact multiples of `pi`.
//!
//! A cover of degree `d` branched over `n >= 3` points has complexity
//! `d * area(S^2 - B) = 2 pi d (n - 2)`. By Riemann–Hurwitz the total length
//! `m` of its branch datum satisfies `m + 2g - 2 = d (n - 2)`, so minimizing
//! complexity over covers of a genus-`g` surface is the same as minimizing
//! `k = d (n - 2)` over realizable data, which [`m_min_search`] does in
//! ascending order of `k`.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::branch_datum::{BranchDatum, Genus, PiMultiple, MAX_DEGREE};
use crate::error::{Error, Result};
use crate::partitions::{branching_partitions, Partition};
use crate::realizability::{
    find_monodromy_with, Permutation, PermutationTuple, RealizabilityResult, SearchOptions,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    /// `d (n - 2)` for every datum probed in this round.
    pub k: u64,
    pub data_count: usize,
    pub realizable_found: bool,
    pub unknown_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexityReport {
    pub genus: Genus,
    pub value: PiMultiple,
    /// Total length of `achieved_by`; equals `m_min` when `certified`.
    pub total_length: usize,
    pub achieved_by: BranchDatum,
    pub witness: PermutationTuple,
    /// False when some probe below the reported value ran out of budget,
    /// in which case `value` is only an upper bound.
    pub certified: bool,
    pub trace: Vec<TraceEntry>,
}

fn require_genus(g: Genus) -> Result<()> {
    if g < 1 {
        return Err(Error::GenusOutOfRange(g));
    }
    Ok(())
}

/// Area of the sphere minus `n` points, in units of `pi`.
pub fn hyperbolic_area_coeff(n: usize) -> Result<PiMultiple> {
    if n < 3 {
        return Err(Error::NonHyperbolic(n));
    }
    Ok(PiMultiple::new(2 * (n as i64 - 2)))
}

/// `2 pi d (n - 2)`. This is only the formula; it does not assert that a
/// `(d, n)` cover exists.
pub fn cover_complexity(d: usize, n: usize) -> Result<PiMultiple> {
    if d < 1 {
        return Err(Error::InvalidInput("degree must be at least 1".into()));
    }
    let area = hyperbolic_area_coeff(n)?;
    Ok(PiMultiple::new(d as i64 * area.coeff))
}

/// `8 pi g`.
pub fn simple_complexity_formula(g: Genus) -> Result<PiMultiple> {
    require_genus(g)?;
    Ok(PiMultiple::new(8 * g as i64))
}

/// Complexity coefficient `4 d (d + g - 2)` of a simple cover of degree `d`
/// of a genus-`g` surface.
fn simple_cover_coeff(d: usize, g: Genus) -> i64 {
    let d = d as i64;
    4 * d * (d + g as i64 - 2)
}

/// The hyperelliptic double cover: `2g + 2` branch points, each with profile `(2)`,
/// all monodromies equal to the transposition of the two sheets.
pub fn hyperelliptic_witness(g: Genus) -> Result<(BranchDatum, PermutationTuple)> {
    require_genus(g)?;
    let n = 2 * g as usize + 2;
    let datum = BranchDatum::new(g, 2, vec![Partition::full_cycle(2); n])?;
    let witness = PermutationTuple::new(2, vec![Permutation::transposition(2, 0, 1); n])?;
    Ok((datum, witness))
}

pub fn simple_complexity_search(g: Genus, d_cap: usize) -> Result<ComplexityReport> {
    simple_complexity_search_with(g, d_cap, &SearchOptions::default())
}

/// Least degree `d` in `2..=d_cap` admitting a simple cover of a genus-`g`
/// surface, found by running the monodromy search on the forced simple datum
/// `n = 2(d + g - 1)` copies of `(2, 1, ..., 1)`. Degree 1 never branches.
pub fn simple_complexity_search_with(
    g: Genus,
    d_cap: usize,
    options: &SearchOptions,
) -> Result<ComplexityReport> {
    require_genus(g)?;
    if d_cap < 2 {
        return Err(Error::InvalidInput(format!("d_cap must be at least 2, got {d_cap}")));
    }
    let mut trace = Vec::new();
    let mut certified = true;
    for d in 2..=d_cap.min(MAX_DEGREE) {
        let n = 2 * (d + g as usize - 1);
        let datum = BranchDatum::new(g, d, vec![Partition::transposition(d); n])?;
        let result = find_monodromy_with(&datum, options);
        trace.push(TraceEntry {
            k: (d * (n - 2)) as u64,
            data_count: 1,
            realizable_found: result.is_realizable(),
            unknown_count: result.is_unknown() as usize,
        });
        if result.is_unknown() {
            certified = false;
        }
        if let Some(w) = result.witness() {
            return Ok(ComplexityReport {
                genus: g,
                value: PiMultiple::new(simple_cover_coeff(d, g)),
                total_length: datum.total_length(),
                witness: w.clone(),
                achieved_by: datum,
                certified,
                trace,
            });
        }
    }
    Err(Error::NotFound(d_cap))
}

/// Streams every multiset of `n` branching partitions of `d` with total length
/// `m`. Each multiset is listed once, as a non-increasing sequence in the
/// reverse-lexicographic order of partitions.
pub fn branching_multisets(d: usize, n: usize, m: usize) -> Result<BranchingMultisets> {
    let pool = branching_partitions(d)?;
    let lens = pool.iter().map(Partition::len).collect();
    Ok(BranchingMultisets {
        pool,
        lens,
        n,
        m,
        max_len: d.saturating_sub(1),
        idx: Vec::with_capacity(n),
        used: 0,
        started: false,
        bump: false,
        done: false,
    })
}

pub struct BranchingMultisets {
    pool: Vec<Partition>,
    lens: Vec<usize>,
    n: usize,
    m: usize,
    max_len: usize,
    idx: Vec<usize>,
    used: usize,
    started: bool,
    bump: bool,
    done: bool,
}

impl BranchingMultisets {
    /// Whether `depth` chosen partitions of total length `used` can still be
    /// completed: every further branching partition has length in `1..=d-1`.
    fn feasible(&self, depth: usize, used: usize) -> bool {
        let slots = self.n - depth;
        used <= self.m && slots <= self.m - used && self.m - used <= slots * self.max_len
    }

    fn first_from(&self, lo: usize) -> Option<usize> {
        let depth = self.idx.len() + 1;
        (lo..self.pool.len()).find(|&j| self.feasible(depth, self.used + self.lens[j]))
    }
}

impl Iterator for BranchingMultisets {
    type Item = Vec<Partition>;

    fn next(&mut self) -> Option<Vec<Partition>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.n == 0 {
                self.done = true;
                return (self.m == 0).then(Vec::new);
            }
        }
        'outer: loop {
            if self.bump {
                self.bump = false;
                loop {
                    let Some(top) = self.idx.pop() else {
                        self.done = true;
                        return None;
                    };
                    self.used -= self.lens[top];
                    if let Some(j) = self.first_from(top + 1) {
                        self.idx.push(j);
                        self.used += self.lens[j];
                        break;
                    }
                }
            }
            while self.idx.len() < self.n {
                let lo = self.idx.last().copied().unwrap_or(0);
                match self.first_from(lo) {
                    Some(j) => {
                        self.idx.push(j);
                        self.used += self.lens[j];
                    }
                    None if self.idx.is_empty() => {
                        self.done = true;
                        return None;
                    }
                    None => {
                        self.bump = true;
                        continue 'outer;
                    }
                }
            }
            self.bump = true;
            return Some(self.idx.iter().map(|&j| self.pool[j].clone()).collect());
        }
    }
}

/// All compatible data of a genus-`g` surface with `d (n - 2) = k`,
/// `d >= 2` and `n >= 3`, ordered by degree and then as in [`branching_multisets`].
fn data_at(g: Genus, k: u64) -> Result<Vec<BranchDatum>> {
    let m = k as i64 + 2 - 2 * g as i64;
    let mut out = Vec::new();
    if m < 3 {
        return Ok(out);
    }
    let m = m as usize;
    for d in 2..=(k as usize).min(MAX_DEGREE) {
        if !(k as usize).is_multiple_of(d) {
            continue;
        }
        let n = k as usize / d + 2;
        if m < n || m > n * (d - 1) {
            continue;
        }
        for parts in branching_multisets(d, n, m)? {
            out.push(BranchDatum::new(g, d, parts)?);
        }
    }
    Ok(out)
}

pub fn m_min_search(g: Genus, budget: u64) -> Result<ComplexityReport> {
    m_min_search_with(g, &SearchOptions::with_budget(budget))
}

/// Least complexity of a cover of the genus-`g` surface.
///
/// Rounds `k = 1, 2, ...` probe every compatible datum with `d (n - 2) = k`;
/// the first round with a realizable datum gives `2 k pi = 2 pi (m + 2g - 2)`.
/// The hyperelliptic cover has `k = 4g`, which bounds the number of rounds.
/// With `options.workers > 1` the data of one round are probed concurrently.
pub fn m_min_search_with(g: Genus, options: &SearchOptions) -> Result<ComplexityReport> {
    require_genus(g)?;
    let probe_options = SearchOptions { workers: 1, ..*options };
    let pool = if options.workers > 1 {
        rayon::ThreadPoolBuilder::new().num_threads(options.workers).build().ok()
    } else {
        None
    };

    let mut trace = Vec::new();
    let mut certified = true;
    for k in 1..=4 * g as u64 {
        let data = data_at(g, k)?;
        let unknowns = AtomicUsize::new(0);
        let probe = |datum: &BranchDatum| -> Option<(BranchDatum, RealizabilityResult)> {
            let r = find_monodromy_with(datum, &probe_options);
            if r.is_unknown() {
                unknowns.fetch_add(1, Ordering::Relaxed);
            }
            r.is_realizable().then(|| (datum.clone(), r))
        };
        let hit = match &pool {
            Some(pool) => pool.install(|| data.par_iter().find_map_first(probe)),
            None => data.iter().find_map(probe),
        };
        let unknown_count = unknowns.load(Ordering::Relaxed);
        trace.push(TraceEntry {
            k,
            data_count: data.len(),
            realizable_found: hit.is_some(),
            unknown_count,
        });
        if let Some((datum, result)) = hit {
            return Ok(ComplexityReport {
                genus: g,
                value: PiMultiple::new(2 * k as i64),
                total_length: datum.total_length(),
                witness: result.witness().expect("realizable").clone(),
                achieved_by: datum,
                certified,
                trace,
            });
        }
        if unknown_count > 0 {
            certified = false;
        }
    }

    // Only reachable if every probe at k = 4g ran out of budget.
    let (datum, witness) = hyperelliptic_witness(g)?;
    Ok(ComplexityReport {
        genus: g,
        value: PiMultiple::new(8 * g as i64),
        total_length: datum.total_length(),
        achieved_by: datum,
        witness,
        certified: false,
        trace,
    })
}

pub fn surface_complexity(g: Genus, budget: u64) -> Result<ComplexityReport> {
    m_min_search(g, budget)
}

pub fn surface_complexity_with(g: Genus, options: &SearchOptions) -> Result<ComplexityReport> {
    m_min_search_with(g, options)
}
