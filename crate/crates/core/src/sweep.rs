//! Events on a line: as the observer velocity sweeps from -1 to 1 the
//! observed order changes by one adjacent swap at each critical velocity.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::{Serialize, Serializer};

use crate::arrangement::{factorial, Arrangement, Hyperplane, Label};
use crate::error::{Error, Result};
use crate::exactmath::{Rational, RationalVector};
use crate::ordering::{rank_by_key, Permutation};
use crate::relativity::{boost_time_scaled, EventSet};

/// 1-based positions `a` such that step `i` swaps positions `a` and `a + 1`.
pub type ReducedWord = Vec<usize>;

/// `v_ij = (t_i - t_j) / (x_i - x_j)` for each pair `i < j` (0-based keys).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalVelocityTable(BTreeMap<(usize, usize), Rational>);

impl CriticalVelocityTable {
    pub fn get(&self, i: usize, j: usize) -> Option<&Rational> {
        self.0.get(&(i.min(j), i.max(j)))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.0.iter()
    }

    /// Pairs sorted by critical velocity; ties keep pair order.
    pub fn sorted(&self) -> Vec<((usize, usize), Rational)> {
        let mut v: Vec<_> = self.0.iter().map(|(&p, r)| (p, r.clone())).collect();
        v.sort_by(|a, b| a.1.cmp(&b.1));
        v
    }
}

impl Serialize for CriticalVelocityTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let m: BTreeMap<String, &Rational> = self
            .0
            .iter()
            .map(|(&(i, j), v)| (Label::pair(i, j).to_string(), v))
            .collect();
        m.serialize(serializer)
    }
}

pub fn critical_velocities(events: &EventSet) -> Result<CriticalVelocityTable> {
    if events.dim() != 1 {
        return Err(Error::NotOneDimensional(events.dim()));
    }
    let mut table = BTreeMap::new();
    for i in 0..events.len() {
        for j in i + 1..events.len() {
            let (a, b) = (events.event(i), events.event(j));
            let dx = &a.x[0] - &b.x[0];
            if dx.is_zero() {
                return Err(Error::RepeatedPosition(i + 1, j + 1));
            }
            table.insert((i, j), (&a.t - &b.t).checked_div(&dx)?);
        }
    }
    events.check_all_spacelike()?;
    Ok(CriticalVelocityTable(table))
}

/// The orders seen from velocity -1 to 1, one per interval between critical
/// velocities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct LambdaSequence(Vec<Permutation>);

impl LambdaSequence {
    pub fn new(entries: Vec<Permutation>) -> Result<Self> {
        let s = LambdaSequence(entries);
        s.validate()?;
        Ok(s)
    }

    pub fn entries(&self) -> &[Permutation] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Invariant(m));
        let Some(first) = self.0.first() else {
            return bad("empty sequence".into());
        };
        let k = first.len();
        if self.0.len() != 1 + k * (k.saturating_sub(1)) / 2 {
            return bad(format!("{} entries for k = {k}", self.0.len()));
        }
        if self.0.last() != Some(&first.reversed()) {
            return bad("last entry is not the reverse of the first".into());
        }
        let base = first.inverse();
        for (step, w) in self.0.windows(2).enumerate() {
            if w[1].len() != k || swap_position(&w[0], &w[1]).is_none() {
                return bad(format!("entries {step} and {} differ by more than an adjacent swap", step + 1));
            }
            if base.compose(&w[1]).inversions() != step + 1 {
                return bad(format!("step {} does not go up in the weak order", step + 1));
            }
        }
        Ok(())
    }
}

fn swap_position(a: &Permutation, b: &Permutation) -> Option<usize> {
    let (a, b) = (a.as_slice(), b.as_slice());
    let diff: Vec<usize> = (0..a.len()).filter(|&p| a[p] != b[p]).collect();
    match diff[..] {
        [p, q] if q == p + 1 && a[p] == b[q] && a[q] == b[p] => Some(p),
        _ => None,
    }
}

/// Samples the order at the midpoint of every interval cut out of `(-1, 1)`
/// by the critical velocities.
pub fn lambda_sequence(events: &EventSet) -> Result<LambdaSequence> {
    let sorted = critical_velocities(events)?.sorted();
    for w in sorted.windows(2) {
        if w[0].1 == w[1].1 {
            let ((i, j), (r, s)) = (w[0].0, w[1].0);
            return Err(Error::CriticalVelocityTie(i + 1, j + 1, r + 1, s + 1));
        }
    }
    let mut cuts = vec![-Rational::one()];
    cuts.extend(sorted.into_iter().map(|(_, v)| v));
    cuts.push(Rational::one());
    let entries = cuts
        .windows(2)
        .map(|w| {
            let v = RationalVector::new(vec![w[0].midpoint(&w[1])]);
            let times: Vec<Rational> =
                events.events().iter().map(|e| boost_time_scaled(e, &v)).collect::<Result<_>>()?;
            rank_by_key(&times)?.ok_or_else(|| Error::Invariant(format!("tie at sample velocity {}", v[0])))
        })
        .collect::<Result<Vec<_>>>()?;
    LambdaSequence::new(entries)
}

pub fn reduced_word(lambda: &LambdaSequence) -> Result<ReducedWord> {
    lambda.validate()?;
    Ok(lambda
        .entries()
        .windows(2)
        .map(|w| swap_position(&w[0], &w[1]).expect("validated") + 1)
        .collect())
}

/// Maximal chains in the weak order of the symmetric group on `k` letters,
/// i.e. standard Young tableaux of staircase shape.
pub fn staircase_chain_count(k: usize) -> BigUint {
    let m = k * k.saturating_sub(1) / 2;
    let mut denom = BigUint::from(1u32);
    for i in 1..k {
        denom *= BigUint::from(2 * i - 1).pow((k - i) as u32);
    }
    factorial(m) / denom
}

/// Upper bound on the number of distinct sequences for `k` events.
pub fn sequence_upper_bound(k: usize) -> BigUint {
    BigUint::from(1 + k * k.saturating_sub(1) / 2) * staircase_chain_count(k)
}

/// A reduced word that no configuration of five points in the plane
/// produces.
pub fn known_unrealizable_word(k: usize) -> Option<ReducedWord> {
    (k == 5).then(|| vec![1, 3, 4, 2, 1, 3, 4, 2, 1, 3])
}

/// Arrangement in position space `R^k` for fixed times `t`: for each pair of
/// pairs, the positions at which their critical velocities coincide,
/// `(t_i - t_j)(x_r - x_s) = (t_r - t_s)(x_i - x_j)`. Coinciding hyperplanes
/// are merged and keep every label.
pub fn ranking_arrangement(times: &[Rational]) -> Result<Arrangement> {
    let k = times.len();
    if k < 3 {
        return Err(Error::TooFew { need: 3, got: k });
    }
    for i in 0..k {
        if let Some(d) = times[i + 1..].iter().position(|t| *t == times[i]) {
            return Err(Error::RepeatedTime(i + 1, i + d + 2));
        }
    }
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect();
    let mut arrangement = Arrangement::new(k);
    for (a, &(i, j)) in pairs.iter().enumerate() {
        for &(r, s) in &pairs[a + 1..] {
            let dt_ij = &times[i] - &times[j];
            let dt_rs = &times[r] - &times[s];
            let mut normal = vec![Rational::zero(); k];
            normal[r] += &dt_ij;
            normal[s] -= &dt_ij;
            normal[i] -= &dt_rs;
            normal[j] += &dt_rs;
            arrangement.insert(Hyperplane::labelled(
                RationalVector::new(normal),
                Rational::zero(),
                Label::PairOfPairs((i, j), (r, s)),
            )?)?;
        }
    }
    Ok(arrangement)
}

/// [`ranking_arrangement`] together with the hyperplanes `x_i = x_j`, where
/// the critical velocities have their poles. For fixed times its regions are
/// in bijection with the sequences that occur; regions of the ranking
/// arrangement alone only separate sequences sharing the order of positions.
pub fn lambda_arrangement(times: &[Rational]) -> Result<Arrangement> {
    let mut arrangement = ranking_arrangement(times)?;
    let k = times.len();
    for i in 0..k {
        for j in i + 1..k {
            let normal = RationalVector::unit(k, i).sub(&RationalVector::unit(k, j))?;
            arrangement.insert(Hyperplane::labelled(normal, Rational::zero(), Label::pair(i, j))?)?;
        }
    }
    Ok(arrangement)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub v: CriticalVelocityTable,
    pub lambda: LambdaSequence,
    pub word: ReducedWord,
}

pub fn sweep_report(events: &EventSet) -> Result<SweepReport> {
    let lambda = lambda_sequence(events)?;
    Ok(SweepReport {
        v: critical_velocities(events)?,
        word: reduced_word(&lambda)?,
        lambda,
    })
}
