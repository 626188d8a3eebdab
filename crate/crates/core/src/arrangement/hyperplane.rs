use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactmath::{LinearEquation, Rational, RationalVector};
use crate::graph::Graph;
use crate::relativity::EventSet;

/// Provenance of a hyperplane. Indices are 0-based; rendered 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    /// The hyperplane on which items `i < j` tie.
    Pair(usize, usize),
    /// The hyperplane on which the pair `a` ties with the pair `b`.
    PairOfPairs((usize, usize), (usize, usize)),
}

impl Label {
    pub fn pair(i: usize, j: usize) -> Self {
        Label::Pair(i.min(j), i.max(j))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Label::Pair(i, j) => write!(f, "({},{})", i + 1, j + 1),
            Label::PairOfPairs((i, j), (r, s)) => {
                write!(f, "({},{})|({},{})", i + 1, j + 1, r + 1, s + 1)
            }
        }
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The affine hyperplane `normal · v = offset`, kept in a canonical scaling
/// (first nonzero normal entry equal to one) so that equal point sets compare
/// equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Hyperplane {
    normal: RationalVector,
    offset: Rational,
    labels: Vec<Label>,
}

impl Hyperplane {
    pub fn new(normal: RationalVector, offset: Rational) -> Result<Self> {
        let lead = normal
            .iter()
            .find(|x| !x.is_zero())
            .cloned()
            .ok_or(Error::ZeroNormal)?;
        let inv = lead.recip()?;
        Ok(Hyperplane {
            normal: normal.scale(&inv),
            offset: &offset * &inv,
            labels: Vec::new(),
        })
    }

    pub fn labelled(normal: RationalVector, offset: Rational, label: Label) -> Result<Self> {
        let mut h = Self::new(normal, offset)?;
        h.labels.push(label);
        Ok(h)
    }

    pub fn normal(&self) -> &RationalVector {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    pub fn equation(&self) -> LinearEquation {
        LinearEquation::new(self.normal.clone(), self.offset.clone())
    }

    fn same_set(&self, other: &Hyperplane) -> bool {
        self.normal == other.normal && self.offset == other.offset
    }
}

/// A finite set of distinct affine hyperplanes in `R^dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrangement {
    dim: usize,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    pub fn new(dim: usize) -> Self {
        Arrangement { dim, hyperplanes: Vec::new() }
    }

    /// Adds `h`, merging its labels into an existing hyperplane with the same
    /// point set. Returns the index it ended up at.
    pub fn insert(&mut self, h: Hyperplane) -> Result<usize> {
        if h.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: h.dim() });
        }
        if let Some(i) = self.hyperplanes.iter().position(|g| g.same_set(&h)) {
            let existing = &mut self.hyperplanes[i];
            for l in h.labels {
                if !existing.labels.contains(&l) {
                    existing.labels.push(l);
                }
            }
            existing.labels.sort();
            return Ok(i);
        }
        self.hyperplanes.push(h);
        Ok(self.hyperplanes.len() - 1)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    /// True when some hyperplane carries more than one label.
    pub fn has_merged_labels(&self) -> bool {
        self.hyperplanes.iter().any(|h| h.labels.len() > 1)
    }
}

/// Velocity-space hyperplanes `(x_i - x_j) · v = t_i - t_j` for the edges of
/// `graph`: the velocities at which events `i` and `j` are simultaneous.
pub fn build_event_arrangement(events: &EventSet, graph: &Graph) -> Result<Arrangement> {
    if graph.vertex_count() != events.len() {
        return Err(Error::DimensionMismatch {
            expected: events.len(),
            found: graph.vertex_count(),
        });
    }
    let mut a = Arrangement::new(events.dim());
    for (i, j) in graph.edges() {
        let (pi, pj) = (events.event(i), events.event(j));
        let normal = pi.x.sub(&pj.x)?;
        if normal.is_zero() {
            return Err(Error::RepeatedPosition(i + 1, j + 1));
        }
        a.insert(Hyperplane::labelled(normal, &pi.t - &pj.t, Label::pair(i, j))?)?;
    }
    Ok(a)
}

/// Homogenizes `A` with a new last coordinate `u`: each `a · v = b` becomes
/// `a · v - b u = 0`, and `u = 0` is added.
pub fn cone(arrangement: &Arrangement) -> Result<Arrangement> {
    let mut out = Arrangement::new(arrangement.dim + 1);
    for h in &arrangement.hyperplanes {
        let mut lifted = Hyperplane::new(h.normal.extended(-&h.offset), Rational::zero())?;
        lifted.labels = h.labels.clone();
        out.insert(lifted)?;
    }
    out.insert(Hyperplane::new(
        RationalVector::unit(arrangement.dim + 1, arrangement.dim),
        Rational::zero(),
    )?)?;
    Ok(out)
}

/// Hyperplanes `z_i = z_j` in `R^k` for the edges of `graph`.
pub fn graphical_arrangement(graph: &Graph) -> Arrangement {
    let k = graph.vertex_count();
    let mut a = Arrangement::new(k);
    for (i, j) in graph.edges() {
        let normal = RationalVector::unit(k, i).sub(&RationalVector::unit(k, j)).expect("same dim");
        a.insert(Hyperplane::labelled(normal, Rational::zero(), Label::pair(i, j)).expect("nonzero"))
            .expect("same dim");
    }
    a
}

/// The braid arrangement `z_i = z_j`, `1 <= i < j <= k`.
pub fn braid_arrangement(k: usize) -> Arrangement {
    graphical_arrangement(&Graph::complete(k))
}
