use std::collections::{BTreeMap, BTreeSet};

use minkowski_order::arrangement::region_count;
use minkowski_order::sweep::{lambda_arrangement, lambda_sequence, ranking_arrangement};
use minkowski_order::{EventSet, Permutation, Rational};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Sequences = BTreeSet<Vec<Permutation>>;

/// Distinct sequences produced by position vectors with the given times.
fn sequences(times: &[i64], positions: impl Iterator<Item = Vec<i64>>) -> Sequences {
    let mut out = BTreeSet::new();
    for xs in positions {
        let events: Vec<(i64, &[i64])> = times.iter().zip(&xs).map(|(&t, x)| (t, std::slice::from_ref(x))).collect();
        let Ok(e) = EventSet::from_ints(1, &events) else { continue };
        if let Ok(lambda) = lambda_sequence(&e) {
            out.insert(lambda.entries().to_vec());
        }
    }
    out
}

fn rationals(times: &[i64]) -> Vec<Rational> {
    times.iter().map(|&t| Rational::from(t)).collect()
}

/// Largest number of sequences sharing a first entry, i.e. the same order of
/// positions.
fn largest_group(found: &Sequences) -> usize {
    let mut groups: BTreeMap<&Permutation, usize> = BTreeMap::new();
    for s in found {
        *groups.entry(&s[0]).or_default() += 1;
    }
    groups.into_values().max().unwrap_or(0)
}

#[test]
fn three_times_on_a_dense_grid() {
    let times = [0, 1, 2];
    let d = region_count(&ranking_arrangement(&rationals(&times)).unwrap()).unwrap();
    let full = region_count(&lambda_arrangement(&rationals(&times)).unwrap()).unwrap();
    assert_eq!(d, BigUint::from(2u32));
    assert_eq!(full, BigUint::from(8u32));
    let grid = (-12..=12).flat_map(|a| (-12..=12).flat_map(move |b| (-12..=12).map(move |c| vec![a, b, c])));
    let found = sequences(&times, grid);
    assert_eq!(BigUint::from(found.len()), full);
    assert!(BigUint::from(largest_group(&found)) <= d);
}

#[test]
fn four_times_by_sampling() {
    let times = [0, 1, 3, 7];
    let d = region_count(&ranking_arrangement(&rationals(&times)).unwrap()).unwrap();
    let full = region_count(&lambda_arrangement(&rationals(&times)).unwrap()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let samples = (0..40_000).map(|_| (0..4).map(|_| rng.gen_range(-80..=80)).collect());
    let found = sequences(&times, samples);
    assert_eq!(BigUint::from(found.len()), full);
    assert!(BigUint::from(largest_group(&found)) <= d);
}
