//! The orders in which a set of events can occur for different inertial
//! observers.
//!
//! Every permutation of the events is tested directly: the velocities at
//! which it is the observed order form an open polyhedron (consecutive events
//! must have increasing boosted times), and the permutation is realized iff
//! that polyhedron is nonempty and, for physical observers, meets the open
//! unit ball. Distinct regions of the simultaneity arrangement realize
//! distinct permutations, so the count is a region count.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::arrangement::{chromatic_polynomial, f_bound};
use crate::error::{Error, Result};
use crate::exactmath::{
    lp_strict_feasible, strict_witness_in_unit_ball, Rational, RationalVector,
    StrictHalfspaceSystem, StrictRow,
};
use crate::graph::Graph;
use crate::relativity::{dilate, unchecked_scaled_time, EventSet, Separation};

/// Largest `k` for which all `k!` permutations are tested by default.
pub const DEFAULT_CAP: usize = 8;

/// An ordering of items: entry `r` is the (0-based) index of the item in
/// position `r`, earliest first. Displayed and serialized 1-based.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(zero_based: Vec<usize>) -> Result<Self> {
        let k = zero_based.len();
        let mut seen = vec![false; k];
        for &i in &zero_based {
            if i >= k || seen[i] {
                return Err(Error::InvalidPermutation(format!("{zero_based:?} is not a bijection on 0..{k}")));
            }
            seen[i] = true;
        }
        Ok(Permutation(zero_based))
    }

    pub fn from_one_based(entries: &[usize]) -> Result<Self> {
        let zero: Option<Vec<usize>> = entries.iter().map(|&i| i.checked_sub(1)).collect();
        let zero = zero.ok_or_else(|| Error::InvalidPermutation(format!("{entries:?} contains 0")))?;
        Self::new(zero)
    }

    /// Parses compact one-line notation such as `"1324"` (items 1..9).
    pub fn from_digits(s: &str) -> Result<Self> {
        let digits: Option<Vec<usize>> = s.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect();
        let digits = digits.ok_or_else(|| Error::InvalidPermutation(s.to_string()))?;
        Self::from_one_based(&digits)
    }

    pub fn identity(k: usize) -> Self {
        Permutation((0..k).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|i| i + 1).collect()
    }

    /// Position of each item.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (r, &i) in self.0.iter().enumerate() {
            pos[i] = r;
        }
        pos
    }

    pub fn inverse(&self) -> Permutation {
        Permutation(self.positions())
    }

    /// `(self ∘ other)(r) = self(other(r))` in one-line notation.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&r| self.0[r]).collect())
    }

    pub fn reversed(&self) -> Permutation {
        Permutation(self.0.iter().rev().copied().collect())
    }

    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for a in 0..self.0.len() {
            for b in a + 1..self.0.len() {
                if self.0[a] > self.0[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Swaps the entries at positions `p` and `p + 1`.
    pub fn swap_adjacent(&self, p: usize) -> Permutation {
        let mut v = self.0.clone();
        v.swap(p, p + 1);
        Permutation(v)
    }

    /// Whether item `a` comes before item `b`.
    pub fn precedes(&self, a: usize, b: usize) -> bool {
        let pos = self.positions();
        pos[a] < pos[b]
    }

    /// All permutations of `0..k` in lexicographic order.
    pub fn all(k: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..k).collect();
        loop {
            out.push(Permutation(cur.clone()));
            let Some(i) = (1..k).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..k).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.len() > 9 { "-" } else { "" };
        let parts: Vec<String> = self.0.iter().map(|i| (i + 1).to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(serializer)
    }
}

/// A realized order together with a velocity at which it is observed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderWitness {
    pub order: Permutation,
    #[serde(rename = "v")]
    pub velocity: RationalVector,
}

/// A set of distinct orders, kept sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderSet {
    ball_restricted: bool,
    witnesses: Vec<OrderWitness>,
}

impl OrderSet {
    pub fn new(ball_restricted: bool, mut witnesses: Vec<OrderWitness>) -> Self {
        witnesses.sort_by(|a, b| a.order.cmp(&b.order));
        witnesses.dedup_by(|a, b| a.order == b.order);
        OrderSet { ball_restricted, witnesses }
    }

    pub fn ball_restricted(&self) -> bool {
        self.ball_restricted
    }

    pub fn len(&self) -> usize {
        self.witnesses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn witnesses(&self) -> &[OrderWitness] {
        &self.witnesses
    }

    pub fn orders(&self) -> impl Iterator<Item = &Permutation> {
        self.witnesses.iter().map(|w| &w.order)
    }

    pub fn contains(&self, order: &Permutation) -> bool {
        self.witnesses.binary_search_by(|w| w.order.cmp(order)).is_ok()
    }

    pub fn is_subset_of(&self, other: &OrderSet) -> bool {
        self.orders().all(|o| other.contains(o))
    }
}

impl Serialize for OrderSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let orders: Vec<&Permutation> = self.orders().collect();
        let mut s = serializer.serialize_struct("OrderSet", 4)?;
        s.serialize_field("ball_restricted", &self.ball_restricted)?;
        s.serialize_field("count", &self.len())?;
        s.serialize_field("orders", &orders)?;
        s.serialize_field("witnesses", &self.witnesses)?;
        s.end()
    }
}

/// Strict system in velocity space whose solutions observe the events in
/// the order `order`: `t_a - x_a·v < t_b - x_b·v` for each consecutive pair.
pub fn order_system(events: &EventSet, order: &Permutation) -> Result<StrictHalfspaceSystem> {
    if order.len() != events.len() {
        return Err(Error::InvalidPermutation(format!(
            "order of length {} for {} events",
            order.len(),
            events.len()
        )));
    }
    events.check_no_lightlike()?;
    let mut system = StrictHalfspaceSystem::new(events.dim())?;
    for w in order.as_slice().windows(2) {
        let (a, b) = (events.event(w[0]), events.event(w[1]));
        // (x_b - x_a) · v < t_b - t_a
        system.push(StrictRow::less(b.x.sub(&a.x)?, &b.t - &a.t))?;
    }
    Ok(system)
}

/// Tests all `k!` permutations, in parallel, against the strict systems
/// produced by `system_for`. The result does not depend on thread count.
pub(crate) fn enumerate_orders<F>(k: usize, cap: usize, restrict_to_ball: bool, system_for: F) -> Result<OrderSet>
where
    F: Fn(&Permutation) -> Result<StrictHalfspaceSystem> + Sync,
{
    if k > cap {
        return Err(Error::CapExceeded { k, cap });
    }
    let found: Vec<Option<OrderWitness>> = Permutation::all(k)
        .into_par_iter()
        .map(|order| {
            let system = system_for(&order)?;
            let witness = if restrict_to_ball {
                strict_witness_in_unit_ball(&system)?
            } else {
                lp_strict_feasible(&system)?
            };
            Ok(witness.map(|velocity| OrderWitness { order, velocity }))
        })
        .collect::<Result<_>>()?;
    Ok(OrderSet::new(restrict_to_ball, found.into_iter().flatten().collect()))
}

/// The orders of the events seen by observers.
///
/// With `restrict_to_ball` every order realized at some `|v| < 1` is
/// returned. Without it, the light-speed limit is dropped and one order is
/// returned per region of the arrangement of spacelike pairs: the
/// lexicographically least order realized at any velocity of that region.
/// When every pair is spacelike this is simply every order realized at some
/// velocity.
pub fn feasible_orders(events: &EventSet, restrict_to_ball: bool) -> Result<OrderSet> {
    feasible_orders_with_cap(events, restrict_to_ball, DEFAULT_CAP)
}

pub fn feasible_orders_with_cap(events: &EventSet, restrict_to_ball: bool, cap: usize) -> Result<OrderSet> {
    events.check_no_lightlike()?;
    let all = enumerate_orders(events.len(), cap, restrict_to_ball, |p| order_system(events, p))?;
    if restrict_to_ball {
        return Ok(all);
    }
    let spacelike: Vec<(usize, usize)> = (0..events.len())
        .flat_map(|i| (i + 1..events.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| events.separation(i, j) == Separation::Spacelike)
        .collect();
    let mut regions = HashSet::new();
    let representatives = all
        .witnesses
        .into_iter()
        .filter(|w| {
            let pos = w.order.positions();
            let signature: Vec<bool> = spacelike.iter().map(|&(i, j)| pos[i] < pos[j]).collect();
            regions.insert(signature)
        })
        .collect();
    Ok(OrderSet::new(false, representatives))
}

/// Number of orders in which the events occur for physical observers.
pub fn count_orders(events: &EventSet) -> Result<usize> {
    Ok(feasible_orders(events, true)?.len())
}

/// Ranks the events by boosted time at `v`; `None` if two times tie.
pub fn rank_at_velocity(events: &EventSet, v: &RationalVector) -> Result<Option<Permutation>> {
    let times: Vec<Rational> = events
        .events()
        .iter()
        .map(|e| unchecked_scaled_time(e, v))
        .collect::<Result<_>>()?;
    rank_by_key(&times)
}

pub(crate) fn rank_by_key(keys: &[Rational]) -> Result<Option<Permutation>> {
    let mut idx: Vec<usize> = (0..keys.len()).collect();
    idx.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    if idx.windows(2).any(|w| keys[w[0]] == keys[w[1]]) {
        return Ok(None);
    }
    Permutation::new(idx).map(Some)
}

/// `1 + a_1 + ... + a_n` where `chi_G(t) = t^k - a_1 t^(k-1) + ...` and
/// `a_i = 0` for `i >= k`.
pub fn graph_order_bound(graph: &Graph, n: usize) -> Result<BigUint> {
    let chi = chromatic_polynomial(graph);
    let k = graph.vertex_count();
    let mut total = BigInt::from(1);
    for i in 1..=n.min(k.saturating_sub(1)) {
        let c = chi.coeff(k - i);
        let a = if i % 2 == 0 { c } else { -c };
        if a.is_negative() {
            return Err(Error::Invariant(format!("chromatic coefficient a_{i} = {a} is negative")));
        }
        total += a;
    }
    Ok(total.magnitude().clone())
}

/// Denominator of the sampling grid for Monte Carlo velocities.
const GRID: i64 = 1 << 20;

/// Uniform rational point of the open unit ball on a grid of spacing
/// `1 / GRID`, by rejection.
pub(crate) fn sample_unit_ball(rng: &mut ChaCha8Rng, n: usize) -> RationalVector {
    loop {
        let v = RationalVector::new(
            (0..n)
                .map(|_| Rational::ratio(rng.gen_range(-(GRID - 1)..GRID), GRID))
                .collect(),
        );
        if v.norm_sq() < Rational::one() {
            return v;
        }
    }
}

/// Orders observed at `samples` random sub-light velocities. Always a subset
/// of [`feasible_orders`] with the ball restriction; ties are skipped.
pub fn monte_carlo_orders(events: &EventSet, samples: usize, seed: u64) -> Result<OrderSet> {
    events.check_no_lightlike()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found: BTreeMap<Permutation, RationalVector> = BTreeMap::new();
    for _ in 0..samples {
        let v = sample_unit_ball(&mut rng, events.dim());
        if let Some(order) = rank_at_velocity(events, &v)? {
            found.entry(order).or_insert(v);
        }
    }
    Ok(OrderSet::new(
        true,
        found
            .into_iter()
            .map(|(order, velocity)| OrderWitness { order, velocity })
            .collect(),
    ))
}

/// Doubles the dilation factor, starting from 1, until the dilated events
/// reach the maximal order count `f(n, k)`. Returns the factor, or `None`
/// after `max_doublings` unsuccessful doublings.
pub fn saturating_dilation(events: &EventSet, max_doublings: usize) -> Result<Option<Rational>> {
    events.check_all_spacelike()?;
    let target = f_bound(events.dim(), events.len());
    let mut a = Rational::one();
    for _ in 0..=max_doublings {
        let count = count_orders(&dilate(events, &a)?)?;
        if BigUint::from(count) == target {
            return Ok(Some(a));
        }
        a = &a * &Rational::from(2);
    }
    Ok(None)
}

/// True if every timelike pair appears in its causal order.
pub fn is_causally_consistent(events: &EventSet, order: &Permutation) -> bool {
    let pos = order.positions();
    (0..events.len()).all(|i| {
        (0..events.len()).all(|j| {
            i == j
                || events.separation(i, j) != Separation::Timelike
                || (events.event(i).t < events.event(j).t) == (pos[i] < pos[j])
        })
    })
}
