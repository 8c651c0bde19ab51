//! Enumeration of a conjugacy class of `S_d` without materializing it.

use itertools::Itertools;

use crate::partitions::Partition;

/// Streams every permutation of a fixed cycle type exactly once.
///
/// A permutation is laid out as its cycles written one after another, each
/// cycle starting at the smallest sheet not yet used. The iterator walks that
/// layout depth first: a cycle-start slot chooses a cycle length (largest
/// first), every other slot chooses an unused sheet (smallest first).
pub(crate) struct ClassIter {
    d: usize,
    counts: Vec<usize>,
    seq: Vec<u8>,
    used: Vec<bool>,
    cycle_end: Vec<usize>,
    start_len: Vec<usize>,
    assigned: Vec<bool>,
    started: bool,
    exhausted: bool,
}

impl ClassIter {
    pub(crate) fn new(class: &Partition) -> Self {
        let d = class.target();
        Self {
            d,
            counts: class.multiplicities(),
            seq: vec![0; d],
            used: vec![false; d],
            cycle_end: vec![0; d],
            start_len: vec![0; d],
            assigned: vec![false; d],
            started: false,
            exhausted: false,
        }
    }

    fn is_start(&self, j: usize) -> bool {
        j == 0 || self.cycle_end[j - 1] == j
    }

    fn advance(&mut self, j: usize) -> bool {
        let start = self.is_start(j);
        if self.assigned[j] {
            self.used[self.seq[j] as usize] = false;
            if start {
                self.counts[self.start_len[j]] += 1;
            }
        }
        if start {
            let p = self.used.iter().position(|&u| !u).expect("a sheet is free");
            let below = if self.assigned[j] { self.start_len[j] } else { self.counts.len() };
            if let Some(len) = (1..below).rev().find(|&l| self.counts[l] > 0) {
                self.counts[len] -= 1;
                self.used[p] = true;
                self.seq[j] = p as u8;
                self.start_len[j] = len;
                self.cycle_end[j] = j + len;
                self.assigned[j] = true;
                return true;
            }
        } else {
            let from = if self.assigned[j] { self.seq[j] as usize + 1 } else { 0 };
            if let Some(p) = (from..self.d).find(|&p| !self.used[p]) {
                self.used[p] = true;
                self.seq[j] = p as u8;
                self.cycle_end[j] = self.cycle_end[j - 1];
                self.assigned[j] = true;
                return true;
            }
        }
        self.assigned[j] = false;
        false
    }

    fn write(&self, out: &mut [u8]) {
        let mut s = 0;
        while s < self.d {
            let e = self.cycle_end[s];
            for i in s..e - 1 {
                out[self.seq[i] as usize] = self.seq[i + 1];
            }
            out[self.seq[e - 1] as usize] = self.seq[s];
            s = e;
        }
    }

    /// Writes the next class element into `out`; false once exhausted.
    pub(crate) fn next_into(&mut self, out: &mut [u8]) -> bool {
        if self.exhausted {
            return false;
        }
        let mut j = if self.started { self.d - 1 } else { 0 };
        self.started = true;
        loop {
            if self.advance(j) {
                if j + 1 == self.d {
                    self.write(out);
                    return true;
                }
                j += 1;
            } else if j == 0 {
                self.exhausted = true;
                return false;
            } else {
                j -= 1;
            }
        }
    }
}

/// First element produced by [`ClassIter`].
pub(crate) fn representative(class: &Partition) -> Vec<u8> {
    let mut out = vec![0; class.target()];
    assert!(ClassIter::new(class).next_into(&mut out));
    out
}

/// All elements of the centralizer of `perm` other than the identity.
///
/// A centralizing element permutes cycles of equal length among themselves
/// and rotates each cycle.
pub(crate) fn centralizer(perm: &[u8]) -> Vec<Vec<u8>> {
    let d = perm.len();
    let mut seen = vec![false; d];
    let mut by_len: Vec<Vec<Vec<u8>>> = vec![Vec::new(); d + 1];
    for s in 0..d {
        if seen[s] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x as u8);
            x = perm[x] as usize;
        }
        by_len[cycle.len()].push(cycle);
    }

    // per cycle length: every (arrangement of the cycles, rotation of each)
    let per_len: Vec<Vec<Vec<(usize, usize)>>> = by_len
        .iter()
        .filter(|cs| !cs.is_empty())
        .map(|cs| {
            let k = cs[0].len();
            let m = cs.len();
            (0..m)
                .permutations(m)
                .flat_map(|arrangement| {
                    (0..m)
                        .map(|_| 0..k)
                        .multi_cartesian_product()
                        .map(move |rot| arrangement.iter().copied().zip(rot).collect())
                })
                .collect()
        })
        .collect();
    let groups: Vec<&Vec<Vec<u8>>> = by_len.iter().filter(|cs| !cs.is_empty()).collect();

    let mut out = Vec::new();
    for choice in per_len.iter().map(|opts| opts.iter()).multi_cartesian_product() {
        let mut h = vec![0u8; d];
        for (cycles, maps) in groups.iter().zip(&choice) {
            let k = cycles[0].len();
            for (src, &(dst, rot)) in cycles.iter().zip(maps.iter()) {
                for t in 0..k {
                    h[src[t] as usize] = cycles[dst][(t + rot) % k];
                }
            }
        }
        if h.iter().enumerate().any(|(i, &x)| i != x as usize) {
            out.push(h);
        }
    }
    out
}
