#![allow(dead_code)]

use hurwitz_core::{BranchDatum, Genus, Partition, Permutation};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

pub fn datum(g: Genus, d: usize, parts: &[&[usize]]) -> BranchDatum {
    BranchDatum::new(g, d, parts.iter().map(|p| part(p)).collect()).unwrap()
}

pub fn random_permutation(d: usize, rng: &mut impl Rng) -> Permutation {
    let mut images: Vec<usize> = (0..d).collect();
    images.shuffle(rng);
    Permutation::new(images).unwrap()
}

/// Every ordered list of `n` branching partitions of `d`.
pub fn branching_tuples(d: usize, n: usize) -> Vec<Vec<Partition>> {
    let pool: Vec<Partition> = hurwitz_core::enumerate_partitions(d)
        .unwrap()
        .into_iter()
        .filter(Partition::is_branching)
        .collect();
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Partition>| {
                pool.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.push(p.clone());
                    v
                })
            })
            .collect();
    }
    out
}
