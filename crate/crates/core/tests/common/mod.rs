#![allow(dead_code)]

use minkowski_order::arrangement::{is_generic, Arrangement, Hyperplane};
use minkowski_order::classical::{is_generic_points, PointSet};
use minkowski_order::relativity::{interval_sq, Event};
use minkowski_order::{EventSet, Rational, RationalVector, Separation};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn ints(rng: &mut ChaCha8Rng, n: usize, range: i64) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(-range..=range)).collect()
}

/// Distinct events with no lightlike pair; a mix of timelike and spacelike
/// pairs.
pub fn mixed_events(rng: &mut ChaCha8Rng, k: usize, n: usize) -> EventSet {
    loop {
        let events: Vec<Event> = (0..k)
            .map(|_| Event::from_ints(rng.gen_range(-6..=6), &ints(rng, n, 5)))
            .collect();
        let ok = (0..k).all(|i| {
            (i + 1..k).all(|j| events[i] != events[j] && !interval_sq(&events[i], &events[j]).unwrap().is_zero())
        });
        if ok {
            return EventSet::new(n, events).unwrap();
        }
    }
}

/// Pairwise spacelike events.
pub fn spacelike_events(rng: &mut ChaCha8Rng, k: usize, n: usize, t_range: i64, x_range: i64) -> EventSet {
    loop {
        let events: Vec<Event> = (0..k)
            .map(|_| Event::from_ints(rng.gen_range(-t_range..=t_range), &ints(rng, n, x_range)))
            .collect();
        let ok = (0..k).all(|i| {
            (i + 1..k).all(|j| {
                events[i] != events[j] && interval_sq(&events[i], &events[j]).unwrap().is_negative()
            })
        });
        if ok {
            return EventSet::new(n, events).unwrap();
        }
    }
}

pub fn generic_spacelike_events(rng: &mut ChaCha8Rng, k: usize, n: usize) -> EventSet {
    loop {
        let e = spacelike_events(rng, k, n, 4, 12);
        if is_generic(&e).unwrap().generic {
            return e;
        }
    }
}

/// One space dimension, times strictly increasing, all pairs spacelike, all
/// critical velocities distinct.
pub fn sweep_events(rng: &mut ChaCha8Rng, k: usize) -> EventSet {
    loop {
        let mut times: Vec<i64> = (0..k).map(|_| rng.gen_range(-20..=20)).collect();
        times.sort();
        if times.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        let events: Vec<Event> = times.iter().map(|&t| Event::from_ints(t, &[rng.gen_range(-60..=60)])).collect();
        let Ok(e) = EventSet::new(1, events) else { continue };
        if e.check_all_spacelike().is_err() {
            continue;
        }
        let mut v: Vec<Rational> = Vec::new();
        for i in 0..k {
            for j in i + 1..k {
                let (a, b) = (e.event(i), e.event(j));
                v.push((&a.t - &b.t).checked_div(&(&a.x[0] - &b.x[0])).unwrap());
            }
        }
        v.sort();
        if v.windows(2).all(|w| w[0] != w[1]) {
            return e;
        }
    }
}

pub fn generic_points(rng: &mut ChaCha8Rng, k: usize, n: usize) -> PointSet {
    loop {
        let pts: Vec<RationalVector> = (0..k).map(|_| RationalVector::from_ints(&ints(rng, n, 9))).collect();
        let Ok(p) = PointSet::new(n, pts) else { continue };
        if is_generic_points(&p).unwrap().generic {
            return p;
        }
    }
}

pub fn random_arrangement(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Arrangement {
    let mut a = Arrangement::new(n);
    while a.len() < m {
        let normal = ints(rng, n, 3);
        if normal.iter().all(|&c| c == 0) {
            continue;
        }
        let h = Hyperplane::new(RationalVector::from_ints(&normal), Rational::from(rng.gen_range(-3..=3))).unwrap();
        a.insert(h).unwrap();
    }
    a
}

pub fn is_mixed(e: &EventSet) -> bool {
    let mut kinds = std::collections::BTreeSet::new();
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            kinds.insert(e.separation(i, j) == Separation::Spacelike);
        }
    }
    kinds.len() == 2
}
