mod common;

use common::{branching_tuples, datum, random_permutation};
use hurwitz_core::{
    brute_force_realizable, brute_force_realizable_capped, find_monodromy, find_monodromy_with, implied_genus, verify_witness,
    BranchDatum, Partition, Permutation, RealizabilityStatus, SearchOptions, DEFAULT_BUDGET,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

/// Every compatible datum with `n` ordered branch points of degree `d`.
fn compatible_data(d: usize, n: usize) -> Vec<BranchDatum> {
    branching_tuples(d, n)
        .into_iter()
        .filter_map(|ps| {
            let g = implied_genus(d, &ps).ok()?;
            BranchDatum::new(g, d, ps).ok()
        })
        .collect()
}

#[test]
fn search_agrees_with_oracle_for_three_points() {
    let mut realizable = 0;
    let mut total = 0;
    for d in 2..=5 {
        for dat in compatible_data(d, 3) {
            let fast = find_monodromy(&dat, DEFAULT_BUDGET);
            let slow = brute_force_realizable(&dat).unwrap();
            assert!(fast.same_status(&slow), "{dat}: {} vs {}", fast.status_name(), slow.status_name());
            if let Some(w) = fast.witness() {
                assert_eq!(verify_witness(w, &dat), Ok(true), "{dat}");
                realizable += 1;
            }
            total += 1;
        }
    }
    // counts of ordered triples, frozen from the brute-force oracle
    assert_eq!((realizable, total), (ORDERED_REALIZABLE_N3, ORDERED_COMPATIBLE_N3));
}

const ORDERED_REALIZABLE_N3: usize = 94;
const ORDERED_COMPATIBLE_N3: usize = 97;

#[test]
fn search_agrees_with_oracle_for_four_points() {
    for d in 2..=4 {
        for dat in compatible_data(d, 4) {
            let fast = find_monodromy(&dat, DEFAULT_BUDGET);
            let slow = brute_force_realizable(&dat).unwrap();
            assert!(fast.same_status(&slow), "{dat}");
            if let Some(w) = fast.witness() {
                assert_eq!(verify_witness(w, &dat), Ok(true), "{dat}");
            }
        }
    }
}

#[test]
fn realizable_only_if_compatible() {
    for d in 1..=4 {
        for n in 0..=4 {
            for ps in branching_tuples(d, n) {
                for g in 0..=3 {
                    let dat = BranchDatum::new(g, d, ps.clone()).unwrap();
                    let r = find_monodromy(&dat, DEFAULT_BUDGET);
                    if r.is_realizable() {
                        assert!(dat.is_compatible(), "{dat}");
                    }
                    assert!(!r.is_unknown());
                }
            }
        }
    }
}

#[test]
fn witnesses_satisfy_riemann_hurwitz() {
    for d in 2..=5 {
        for n in 3..=4 {
            if d == 5 && n == 4 {
                continue;
            }
            for dat in compatible_data(d, n) {
                if let Some(w) = find_monodromy(&dat, DEFAULT_BUDGET).witness() {
                    let genus = implied_genus(d, &w.cycle_types()).unwrap();
                    assert_eq!(genus, dat.genus());
                    assert_eq!(2 - 2 * genus as i64, 2 * d as i64 - w.total_ramification() as i64);
                }
            }
        }
    }
}

#[test]
fn simple_witnesses_have_one_ramification_point_per_branch_point() {
    for (g, d) in [(0, 3), (1, 3), (0, 4), (1, 4), (2, 3)] {
        let n = 2 * (d + g as usize - 1);
        let dat = BranchDatum::new(g, d, vec![Partition::transposition(d); n]).unwrap();
        assert!(dat.is_simple() && dat.is_compatible());
        let w = find_monodromy(&dat, DEFAULT_BUDGET);
        let w = w.witness().unwrap_or_else(|| panic!("{dat} should be realizable"));
        assert_eq!(w.total_ramification(), n);
    }
}

#[test]
fn larger_instances_match_oracle() {
    let cases: &[(u32, usize, &[&[usize]])] = &[
        (0, 6, &[&[3, 3], &[2, 2, 2], &[4, 1, 1]]),
        (0, 6, &[&[3, 3], &[2, 2, 2], &[3, 2, 1]]),
        (0, 6, &[&[2, 2, 2], &[2, 2, 2], &[3, 3]]),
        (0, 6, &[&[2, 2, 2], &[2, 2, 2], &[4, 2]]),
        (1, 6, &[&[6], &[2, 2, 2], &[3, 3]]),
        (3, 7, &[&[7], &[7], &[7]]),
        (0, 7, &[&[3, 3, 1], &[2, 2, 2, 1], &[4, 3]]),
    ];
    for &(g, d, parts) in cases {
        let dat = datum(g, d, parts);
        assert!(dat.is_compatible(), "{dat}");
        let fast = find_monodromy(&dat, DEFAULT_BUDGET);
        let slow = brute_force_realizable_capped(&dat, 7).unwrap();
        assert!(fast.same_status(&slow), "{dat}");
        if let Some(w) = fast.witness() {
            assert_eq!(verify_witness(w, &dat), Ok(true));
        }
    }
}

#[test]
fn two_fixed_point_free_involutions() {
    // The product of two fixed-point-free involutions has every cycle length
    // repeated an even number of times, so only (d/2, d/2) is reachable.
    let invol: &[usize] = &[2, 2, 2, 2];
    for (third, expect) in [(&[4usize, 4][..], true), (&[5, 3][..], false), (&[6, 2][..], false)] {
        let dat = datum(0, 8, &[invol, invol, third]);
        assert!(dat.is_compatible());
        let r = find_monodromy(&dat, DEFAULT_BUDGET);
        assert_eq!(r.is_realizable(), expect, "{dat}");
        assert!(!r.is_unknown());
    }
}

#[test]
fn worker_count_does_not_change_status() {
    for d in 3..=5 {
        for dat in compatible_data(d, 4).into_iter().step_by(7) {
            let one = find_monodromy(&dat, DEFAULT_BUDGET);
            let many = find_monodromy_with(&dat, &SearchOptions { budget: DEFAULT_BUDGET, workers: 4 });
            assert!(one.same_status(&many), "{dat}");
            if let Some(w) = many.witness() {
                assert_eq!(verify_witness(w, &dat), Ok(true));
            }
        }
    }
}

#[test]
fn single_worker_witness_is_deterministic() {
    let dat = datum(0, 5, &[&[3, 1, 1], &[2, 2, 1], &[5], &[2, 1, 1, 1]]);
    let a = find_monodromy(&dat, DEFAULT_BUDGET);
    let b = find_monodromy(&dat, DEFAULT_BUDGET);
    assert_eq!(a, b);
}

fn any_compatible_datum() -> impl Strategy<Value = BranchDatum> {
    let data: Vec<BranchDatum> = (2..=4)
        .flat_map(|d| (3..=4).flat_map(move |n| compatible_data(d, n)))
        .collect();
    proptest::sample::select(data)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn status_is_invariant_under_reordering(dat in any_compatible_datum(), seed in any::<u64>()) {
        let mut order: Vec<usize> = (0..dat.branch_points()).collect();
        rand::seq::SliceRandom::shuffle(&mut order[..], &mut StdRng::seed_from_u64(seed));
        let shuffled = dat.permuted(&order);
        prop_assert_eq!(dat.is_compatible(), shuffled.is_compatible());
        let a = find_monodromy(&dat, DEFAULT_BUDGET);
        let b = find_monodromy(&shuffled, DEFAULT_BUDGET);
        prop_assert!(a.same_status(&b));
        if let Some(w) = b.witness() {
            prop_assert_eq!(verify_witness(w, &shuffled), Ok(true));
        }
    }

    #[test]
    fn conjugated_witnesses_still_verify(dat in any_compatible_datum(), seed in any::<u64>()) {
        if let RealizabilityStatus::Realizable(w) = find_monodromy(&dat, DEFAULT_BUDGET).status {
            let mut rng = StdRng::seed_from_u64(seed);
            let h: Permutation = random_permutation(dat.degree(), &mut rng);
            prop_assert_eq!(verify_witness(&w.conjugate_by(&h), &dat), Ok(true));
        }
    }
}

#[test]
fn search_agrees_with_oracle_beyond_acceptance_range() {
    let mut data = compatible_data(5, 4);
    data.extend(compatible_data(6, 3));
    for dat in data {
        let fast = find_monodromy(&dat, DEFAULT_BUDGET);
        let slow = brute_force_realizable_capped(&dat, 6).unwrap();
        assert!(fast.same_status(&slow), "{dat}: {} vs {}", fast.status_name(), slow.status_name());
        if let Some(w) = fast.witness() {
            assert_eq!(verify_witness(w, &dat), Ok(true), "{dat}");
        }
    }
}
