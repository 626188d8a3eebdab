//! Flashes emitted simultaneously at fixed points of Euclidean space, seen
//! by observers at rest: the observed order is the order of distance.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arrangement::{pair_family_genericity, Arrangement, GenericityReport, Hyperplane, Label};
use crate::error::{Error, Result};
use crate::exactmath::{LinearEquation, Rational, RationalVector, StrictHalfspaceSystem, StrictRow};
use crate::ordering::{enumerate_orders, rank_by_key, sample_unit_ball, OrderSet, OrderWitness, Permutation, DEFAULT_CAP};

/// `k >= 1` pairwise distinct points of `R^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawPointSet")]
pub struct PointSet {
    n: usize,
    points: Vec<RationalVector>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPointSet {
    n: usize,
    points: Vec<RationalVector>,
}

impl TryFrom<RawPointSet> for PointSet {
    type Error = Error;
    fn try_from(raw: RawPointSet) -> Result<Self> {
        PointSet::new(raw.n, raw.points)
    }
}

impl PointSet {
    pub fn new(n: usize, points: Vec<RationalVector>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        if points.is_empty() {
            return Err(Error::TooFew { need: 1, got: 0 });
        }
        for p in &points {
            if p.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, found: p.dim() });
            }
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(Error::DuplicatePoint(i + 1, j + 1));
                }
            }
        }
        Ok(PointSet { n, points })
    }

    pub fn from_ints(n: usize, points: &[&[i64]]) -> Result<Self> {
        Self::new(n, points.iter().map(|p| RationalVector::from_ints(p)).collect())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[RationalVector] {
        &self.points
    }

    /// The perpendicular bisector of `p_i` and `p_j`:
    /// `(p_i - p_j)·x = (|p_i|^2 - |p_j|^2) / 2`.
    fn bisector(&self, i: usize, j: usize) -> Result<LinearEquation> {
        let (a, b) = (&self.points[i], &self.points[j]);
        let rhs = (a.norm_sq() - b.norm_sq()) * Rational::ratio(1, 2);
        Ok(LinearEquation::new(a.sub(b)?, rhs))
    }
}

pub fn bisector_arrangement(points: &PointSet) -> Result<Arrangement> {
    let mut arrangement = Arrangement::new(points.dim());
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let eq = points.bisector(i, j)?;
            arrangement.insert(Hyperplane::labelled(eq.normal, eq.rhs, Label::pair(i, j))?)?;
        }
    }
    Ok(arrangement)
}

/// Observation points that see the flashes in `order`: each point is
/// strictly closer than the next, `2(p_b - p_a)·x < |p_b|^2 - |p_a|^2`.
pub fn observation_system(points: &PointSet, order: &Permutation) -> Result<StrictHalfspaceSystem> {
    if order.len() != points.len() {
        return Err(Error::InvalidPermutation(format!(
            "order of length {} for {} points",
            order.len(),
            points.len()
        )));
    }
    let mut system = StrictHalfspaceSystem::new(points.dim())?;
    for w in order.as_slice().windows(2) {
        let (a, b) = (&points.points[w[0]], &points.points[w[1]]);
        system.push(StrictRow::less(b.sub(a)?.scale(&Rational::from(2)), b.norm_sq() - a.norm_sq()))?;
    }
    Ok(system)
}

/// Every order in which the flashes can be seen from some point of `R^n`.
pub fn observed_orders(points: &PointSet) -> Result<OrderSet> {
    observed_orders_with_cap(points, DEFAULT_CAP)
}

pub fn observed_orders_with_cap(points: &PointSet, cap: usize) -> Result<OrderSet> {
    enumerate_orders(points.len(), cap, false, |p| observation_system(points, p))
}

/// Points ranked by squared distance from `x`, nearest first.
pub fn observed_order_at(points: &PointSet, x: &RationalVector) -> Result<Permutation> {
    let dist: Vec<Rational> = points.points.iter().map(|p| Ok(p.sub(x)?.norm_sq())).collect::<Result<_>>()?;
    if let Some(order) = rank_by_key(&dist)? {
        return Ok(order);
    }
    for i in 0..dist.len() {
        for j in i + 1..dist.len() {
            if dist[i] == dist[j] {
                return Err(Error::Equidistant(i + 1, j + 1));
            }
        }
    }
    unreachable!("rank_by_key reports ties only when two keys are equal")
}

/// Genericity of the bisector arrangement: its intersection poset must be
/// the truncated partition lattice.
pub fn is_generic_points(points: &PointSet) -> Result<GenericityReport> {
    pair_family_genericity(points.len(), points.dim(), |i, j| points.bisector(i, j))
}

/// Orders seen from random observation points in a ball around the points.
/// Points equidistant from two flashes are skipped.
pub fn monte_carlo_observed(points: &PointSet, samples: usize, seed: u64) -> Result<OrderSet> {
    let radius = points
        .points
        .iter()
        .flat_map(|p| p.iter())
        .map(Rational::abs)
        .max()
        .unwrap_or_else(Rational::zero);
    let radius = (radius + Rational::one()) * Rational::from(4);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = BTreeMap::new();
    for _ in 0..samples {
        let x = sample_unit_ball(&mut rng, points.dim()).scale(&radius);
        match observed_order_at(points, &x) {
            Ok(order) => {
                found.entry(order).or_insert(x);
            }
            Err(Error::Equidistant(..)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(OrderSet::new(
        false,
        found
            .into_iter()
            .map(|(order, velocity)| OrderWitness { order, velocity })
            .collect(),
    ))
}
