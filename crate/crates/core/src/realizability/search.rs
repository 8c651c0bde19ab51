//! Backtracking search for monodromy tuples.
//!
//! Positions are searched in an order chosen by class size: the largest
//! class sits at position 0 and is fixed to one representative (the problem
//! is invariant under simultaneous conjugation), the second largest sits last
//! and is forced to the inverse of the running product, and the smaller
//! classes in between are enumerated. When there are at least two enumerated
//! positions, the first of them is further restricted to elements that are
//! lexicographically least under conjugation by the centralizer of the fixed
//! representative. A found tuple is brought back to the caller's order with
//! Hurwitz moves.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use super::class::{centralizer, representative, ClassIter};
use super::perm::{Permutation, PermutationTuple, UnionFind};
use crate::branch_datum::BranchDatum;
use crate::partitions::Partition;

/// Centralizers larger than this are not used for symmetry breaking.
const CENTRALIZER_LIMIT: u128 = 4096;

const FLUSH_EVERY: u64 = 1024;

pub(crate) enum Outcome {
    Found(PermutationTuple),
    Exhausted,
    OutOfBudget,
}

struct Plan {
    d: usize,
    n: usize,
    /// search position -> index in the datum
    order: Vec<usize>,
    classes: Vec<Partition>,
    /// cycle-length histogram of the forced last position
    last_hist: Vec<usize>,
    first: Vec<u8>,
    centralizer: Vec<Vec<u8>>,
}

impl Plan {
    fn new(datum: &BranchDatum) -> Self {
        let d = datum.degree();
        let n = datum.branch_points();
        let mut by_size: Vec<usize> = (0..n).collect();
        // descending class size == ascending centralizer order; stable for determinism
        by_size.sort_by_key(|&i| datum.partitions()[i].centralizer_order());
        let order: Vec<usize> = if n >= 2 {
            let mut o = vec![by_size[0]];
            o.extend_from_slice(&by_size[2..]);
            o.push(by_size[1]);
            o
        } else {
            by_size
        };
        let classes: Vec<Partition> = order.iter().map(|&i| datum.partitions()[i].clone()).collect();
        let last_hist = classes
            .last()
            .map(|c| {
                let mut h = c.multiplicities();
                h.resize(d + 1, 0);
                h
            })
            .unwrap_or_default();
        let first = if n >= 2 { representative(&classes[0]) } else { Vec::new() };
        let centralizer = if n >= 4 && classes[0].centralizer_order() <= CENTRALIZER_LIMIT {
            centralizer(&first)
        } else {
            Vec::new()
        };
        Self { d, n, order, classes, last_hist, first, centralizer }
    }

    /// Whether `b` is the least of its orbit under conjugation by the
    /// centralizer of the fixed first permutation.
    fn is_orbit_minimal(&self, b: &[u8], scratch: &mut [u8]) -> bool {
        for h in &self.centralizer {
            for i in 0..self.d {
                scratch[h[i] as usize] = h[b[i] as usize];
            }
            if &*scratch < b {
                return false;
            }
        }
        true
    }

    /// Maps a tuple in search order back to datum order.
    fn restore_order(&self, perms: Vec<Permutation>) -> PermutationTuple {
        let mut keys = self.order.clone();
        let mut tuple = PermutationTuple::new(self.d, perms).expect("kernel permutations have degree d");
        for pass in 0..keys.len() {
            for i in 0..keys.len().saturating_sub(1 + pass) {
                if keys[i] > keys[i + 1] {
                    tuple.braid(i);
                    keys.swap(i, i + 1);
                }
            }
        }
        tuple
    }
}

struct Worker<'a> {
    plan: &'a Plan,
    budget: u64,
    nodes: &'a AtomicU64,
    cancel: &'a AtomicBool,
    pending: u64,
    chosen: Vec<Vec<u8>>,
    prods: Vec<Vec<u8>>,
    hist: Vec<usize>,
    seen: Vec<bool>,
    scratch: Vec<u8>,
}

enum Flow {
    Found,
    Exhausted,
    Stop,
}

impl<'a> Worker<'a> {
    fn new(plan: &'a Plan, budget: u64, nodes: &'a AtomicU64, cancel: &'a AtomicBool) -> Self {
        let d = plan.d;
        Self {
            plan,
            budget,
            nodes,
            cancel,
            pending: 0,
            chosen: vec![vec![0; d]; plan.n],
            prods: vec![vec![0; d]; plan.n],
            hist: vec![0; d + 1],
            seen: vec![false; d],
            scratch: vec![0; d],
        }
    }

    /// Counts one assigned permutation; false when the search must stop.
    fn tick(&mut self) -> bool {
        self.pending += 1;
        if self.pending >= FLUSH_EVERY {
            self.flush();
            if self.cancel.load(Ordering::Relaxed) {
                return false;
            }
        }
        self.nodes.load(Ordering::Relaxed) + self.pending <= self.budget
    }

    fn flush(&mut self) {
        self.nodes.fetch_add(self.pending, Ordering::Relaxed);
        self.pending = 0;
    }

    fn set(&mut self, level: usize, perm: &[u8]) {
        self.chosen[level].copy_from_slice(perm);
        if level == 0 {
            self.prods[0].copy_from_slice(perm);
        } else {
            let (done, rest) = self.prods.split_at_mut(level);
            let prev = &done[level - 1];
            for (out, &x) in rest[0].iter_mut().zip(prev.iter()) {
                *out = perm[x as usize];
            }
        }
    }

    fn forced_matches(&mut self, level: usize) -> bool {
        let d = self.plan.d;
        let forced = &mut self.chosen[level];
        if level == 0 {
            for (i, x) in forced.iter_mut().enumerate() {
                *x = i as u8;
            }
        } else {
            for (i, &x) in self.prods[level - 1].iter().enumerate() {
                forced[x as usize] = i as u8;
            }
        }
        self.hist.iter_mut().for_each(|h| *h = 0);
        self.seen.iter_mut().for_each(|s| *s = false);
        for start in 0..d {
            if self.seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !self.seen[x] {
                self.seen[x] = true;
                x = forced[x] as usize;
                len += 1;
            }
            self.hist[len] += 1;
            if self.hist[len] > self.plan.last_hist[len] {
                return false;
            }
        }
        self.hist == self.plan.last_hist
    }

    fn transitive(&self) -> bool {
        let mut uf = UnionFind::new(self.plan.d);
        for p in &self.chosen {
            for (i, &x) in p.iter().enumerate() {
                uf.union(i, x as usize);
            }
            if uf.components() == 1 {
                return true;
            }
        }
        uf.components() == 1
    }

    fn dfs(&mut self, level: usize) -> Flow {
        let n = self.plan.n;
        if level + 1 == n {
            if !self.tick() {
                return Flow::Stop;
            }
            if self.forced_matches(level) && self.transitive() {
                return Flow::Found;
            }
            return Flow::Exhausted;
        }
        let mut classes = ClassIter::new(&self.plan.classes[level]);
        let mut buf = vec![0u8; self.plan.d];
        let breaking = level == 1 && !self.plan.centralizer.is_empty();
        while classes.next_into(&mut buf) {
            if !self.tick() {
                return Flow::Stop;
            }
            if breaking && !self.plan.is_orbit_minimal(&buf, &mut self.scratch) {
                continue;
            }
            self.set(level, &buf);
            match self.dfs(level + 1) {
                Flow::Exhausted => {}
                other => return other,
            }
        }
        Flow::Exhausted
    }

    fn witness(&self) -> PermutationTuple {
        let perms = self.chosen.iter().map(|p| Permutation::from_bytes(p)).collect();
        self.plan.restore_order(perms)
    }
}

/// Runs the search on a compatible datum of degree `>= 2` or with `n = 0`.
/// Returns the outcome and the number of assigned permutations.
pub(crate) fn search(datum: &BranchDatum, budget: u64, workers: usize) -> (Outcome, u64) {
    let plan = Plan::new(datum);
    if plan.n == 0 {
        let outcome = if plan.d == 1 {
            Outcome::Found(PermutationTuple::new(1, Vec::new()).expect("degree 1"))
        } else {
            Outcome::Exhausted
        };
        return (outcome, 0);
    }
    let nodes = AtomicU64::new(0);
    let cancel = AtomicBool::new(false);

    if workers <= 1 || plan.n < 3 {
        let mut w = Worker::new(&plan, budget, &nodes, &cancel);
        let flow = if plan.n >= 2 {
            let first = plan.first.clone();
            if w.tick() {
                w.set(0, &first);
                w.dfs(1)
            } else {
                Flow::Stop
            }
        } else {
            w.dfs(0)
        };
        w.flush();
        let outcome = match flow {
            Flow::Found => Outcome::Found(w.witness()),
            Flow::Exhausted => Outcome::Exhausted,
            Flow::Stop => Outcome::OutOfBudget,
        };
        return (outcome, nodes.load(Ordering::Relaxed));
    }

    // Fan out over the choices for position 1.
    nodes.fetch_add(1, Ordering::Relaxed);
    let mut candidates = Vec::new();
    {
        let mut it = ClassIter::new(&plan.classes[1]);
        let mut buf = vec![0u8; plan.d];
        let mut scratch = vec![0u8; plan.d];
        while it.next_into(&mut buf) {
            if plan.centralizer.is_empty() || plan.is_orbit_minimal(&buf, &mut scratch) {
                candidates.push(buf.clone());
            }
        }
    }
    let out_of_budget = AtomicBool::new(false);
    let run = |b: &Vec<u8>| -> Option<PermutationTuple> {
        if cancel.load(Ordering::Relaxed) {
            return None;
        }
        let mut w = Worker::new(&plan, budget, &nodes, &cancel);
        w.set(0, &plan.first);
        let flow = if w.tick() {
            w.set(1, b);
            w.dfs(2)
        } else {
            Flow::Stop
        };
        w.flush();
        match flow {
            Flow::Found => {
                cancel.store(true, Ordering::Relaxed);
                Some(w.witness())
            }
            Flow::Exhausted => None,
            Flow::Stop => {
                if !cancel.load(Ordering::Relaxed) {
                    out_of_budget.store(true, Ordering::Relaxed);
                    cancel.store(true, Ordering::Relaxed);
                }
                None
            }
        }
    };
    let found = match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(|| candidates.par_iter().find_map_any(run)),
        Err(_) => candidates.iter().find_map(run),
    };
    let outcome = match found {
        Some(w) => Outcome::Found(w),
        None if out_of_budget.load(Ordering::Relaxed) => Outcome::OutOfBudget,
        None => Outcome::Exhausted,
    };
    (outcome, nodes.load(Ordering::Relaxed))
}
