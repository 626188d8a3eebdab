//! Open polyhedra given by strict inequalities: nonemptiness, witnesses, and
//! the distance of their closure from the origin.

use serde::{Deserialize, Serialize};

use super::linsolve::solve_square;
use super::simplex::{maximize, LpOutcome};
use super::{Rational, RationalVector};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    /// `normal · v < bound`
    Less,
    /// `normal · v > bound`
    Greater,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StrictRow {
    pub normal: RationalVector,
    pub bound: Rational,
    pub sense: Sense,
}

impl StrictRow {
    pub fn less(normal: RationalVector, bound: Rational) -> Self {
        StrictRow { normal, bound, sense: Sense::Less }
    }

    pub fn greater(normal: RationalVector, bound: Rational) -> Self {
        StrictRow { normal, bound, sense: Sense::Greater }
    }

    /// The row rewritten as `a · v < b`.
    fn as_less(&self) -> (RationalVector, Rational) {
        match self.sense {
            Sense::Less => (self.normal.clone(), self.bound.clone()),
            Sense::Greater => (self.normal.neg(), -&self.bound),
        }
    }

    pub fn holds_at(&self, v: &RationalVector) -> Result<bool> {
        let lhs = self.normal.dot(v)?;
        Ok(match self.sense {
            Sense::Less => lhs < self.bound,
            Sense::Greater => lhs > self.bound,
        })
    }
}

/// A conjunction of strict linear inequalities in `R^dim`.
///
/// Rows with a zero normal are constant; they are evaluated on insertion and
/// never stored. A constant false row marks the whole system contradictory.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StrictHalfspaceSystem {
    dim: usize,
    rows: Vec<StrictRow>,
    constant_rows: usize,
    contradictory: bool,
}

impl StrictHalfspaceSystem {
    pub fn new(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(StrictHalfspaceSystem {
            dim,
            rows: Vec::new(),
            constant_rows: 0,
            contradictory: false,
        })
    }

    pub fn from_rows(dim: usize, rows: impl IntoIterator<Item = StrictRow>) -> Result<Self> {
        let mut s = Self::new(dim)?;
        for row in rows {
            s.push(row)?;
        }
        Ok(s)
    }

    pub fn push(&mut self, row: StrictRow) -> Result<()> {
        if row.normal.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: row.normal.dim(),
            });
        }
        if row.normal.is_zero() {
            self.constant_rows += 1;
            if !row.holds_at(&RationalVector::zeros(self.dim))? {
                self.contradictory = true;
            }
            return Ok(());
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[StrictRow] {
        &self.rows
    }

    /// Number of zero-normal rows seen by [`push`](Self::push).
    pub fn constant_rows(&self) -> usize {
        self.constant_rows
    }

    /// True if a zero-normal row was false.
    pub fn is_contradictory(&self) -> bool {
        self.contradictory
    }

    /// Exact check that `v` satisfies every row strictly.
    pub fn satisfied_by(&self, v: &RationalVector) -> Result<bool> {
        if self.contradictory {
            return Ok(false);
        }
        for row in &self.rows {
            if !row.holds_at(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Same check against the closure (`<=` / `>=`).
    pub fn closure_contains(&self, v: &RationalVector) -> Result<bool> {
        if self.contradictory {
            return Ok(false);
        }
        for row in &self.rows {
            let (a, b) = row.as_less();
            if a.dot(v)? > b {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Finds a point satisfying every strict inequality, or `None` if the open
/// polyhedron is empty.
///
/// Maximizes a common slack `eps <= 1` subject to `a_i · v + eps <= b_i`
/// with the exact simplex; the open set is nonempty iff the optimum is
/// positive, and the optimal `v` is then the witness.
pub fn lp_strict_feasible(system: &StrictHalfspaceSystem) -> Result<Option<RationalVector>> {
    if system.contradictory {
        return Ok(None);
    }
    let n = system.dim;
    if system.rows.is_empty() {
        return Ok(Some(RationalVector::zeros(n)));
    }
    // Variables: v = p - q with p, q >= 0, then eps >= 0.
    let mut a = Vec::with_capacity(system.rows.len() + 1);
    let mut b = Vec::with_capacity(system.rows.len() + 1);
    for row in &system.rows {
        let (normal, bound) = row.as_less();
        let mut coeffs: Vec<Rational> = normal.entries().to_vec();
        coeffs.extend(normal.entries().iter().map(|x| -x));
        coeffs.push(Rational::one());
        a.push(coeffs);
        b.push(bound);
    }
    let mut eps_cap = vec![Rational::zero(); 2 * n + 1];
    eps_cap[2 * n] = Rational::one();
    a.push(eps_cap.clone());
    b.push(Rational::one());

    match maximize(&a, &b, &eps_cap) {
        LpOutcome::Optimal { x, value } if value.is_positive() => {
            let v = RationalVector::new((0..n).map(|i| &x[i] - &x[n + i]).collect());
            if !system.satisfied_by(&v)? {
                return Err(Error::Invariant(format!("LP witness {v} violates a strict row")));
            }
            Ok(Some(v))
        }
        LpOutcome::Optimal { .. } | LpOutcome::Infeasible => Ok(None),
        LpOutcome::Unbounded => Err(Error::Invariant("slack LP reported unbounded".into())),
    }
}

/// The point of least Euclidean norm in the closure of the open polyhedron,
/// together with its squared norm.
///
/// The minimizer is the orthogonal projection of the origin onto the affine
/// hull of some face. Every subset of at most `dim` linearly independent
/// bounding hyperplanes is tried in lexicographic order; projections lying in
/// the closure are kept and the smallest is returned (first found on ties).
pub fn min_norm_closure_point(
    system: &StrictHalfspaceSystem,
) -> Result<(RationalVector, Rational)> {
    if system.contradictory {
        return Err(Error::Infeasible);
    }
    let n = system.dim;
    let rows: Vec<(RationalVector, Rational)> = system.rows.iter().map(StrictRow::as_less).collect();
    let mut best: Option<(RationalVector, Rational)> = None;
    let max_size = n.min(rows.len());
    for size in 0..=max_size {
        for subset in Combinations::new(rows.len(), size) {
            let Some(p) = project_origin(n, &rows, &subset)? else {
                continue;
            };
            if !system.closure_contains(&p)? {
                continue;
            }
            let d = p.norm_sq();
            if best.as_ref().is_none_or(|(_, bd)| d < *bd) {
                best = Some((p, d));
            }
        }
        // The origin is optimal whenever it is feasible.
        if size == 0 && best.is_some() {
            break;
        }
    }
    best.ok_or(Error::Infeasible)
}

/// Squared distance from the origin to the closure of the open polyhedron.
pub fn min_norm_sq_closure(system: &StrictHalfspaceSystem) -> Result<Rational> {
    min_norm_closure_point(system).map(|(_, d)| d)
}

/// Least-norm point of `{v : a_i · v = b_i, i in subset}` via the normal
/// equations; `None` if the chosen normals are dependent.
fn project_origin(
    n: usize,
    rows: &[(RationalVector, Rational)],
    subset: &[usize],
) -> Result<Option<RationalVector>> {
    if subset.is_empty() {
        return Ok(Some(RationalVector::zeros(n)));
    }
    let mut gram = vec![vec![Rational::zero(); subset.len()]; subset.len()];
    for (i, &ri) in subset.iter().enumerate() {
        for (j, &rj) in subset.iter().enumerate().skip(i) {
            let g = rows[ri].0.dot(&rows[rj].0)?;
            gram[j][i] = g.clone();
            gram[i][j] = g;
        }
    }
    let rhs: Vec<Rational> = subset.iter().map(|&i| rows[i].1.clone()).collect();
    let Some(lambda) = solve_square(&gram, &rhs) else {
        return Ok(None);
    };
    let mut p = RationalVector::zeros(n);
    for (l, &i) in lambda.iter().zip(subset) {
        p = p.add(&rows[i].0.scale(l))?;
    }
    Ok(Some(p))
}

/// A point strictly inside the open polyhedron and strictly inside the open
/// unit ball, or `None` if they do not meet.
///
/// Moves from the slack-LP witness toward the closest closure point, halving
/// the step until the norm drops below one; every point of that open segment
/// is interior, and its norm tends to the closure minimum, which is below one.
pub fn strict_witness_in_unit_ball(
    system: &StrictHalfspaceSystem,
) -> Result<Option<RationalVector>> {
    let Some(witness) = lp_strict_feasible(system)? else {
        return Ok(None);
    };
    let one = Rational::one();
    if witness.norm_sq() < one {
        return Ok(Some(witness));
    }
    let (closest, dist_sq) = min_norm_closure_point(system)?;
    if dist_sq >= one {
        return Ok(None);
    }
    let half = Rational::ratio(1, 2);
    let mut lambda = half.clone();
    for _ in 0..4096 {
        let candidate = closest.lerp(&witness, &lambda)?;
        if candidate.norm_sq() < one && system.satisfied_by(&candidate)? {
            return Ok(Some(candidate));
        }
        lambda *= &half;
    }
    Err(Error::Invariant("interior witness search did not converge".into()))
}

/// Lexicographic `size`-subsets of `0..n`.
pub(crate) struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub(crate) fn new(n: usize, size: usize) -> Self {
        let current = (size <= n).then(|| (0..size).collect());
        Combinations { n, current }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}
