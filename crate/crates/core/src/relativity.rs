//! Events in Minkowski space `R^{1,n}` (units with c = 1) and the causal
//! structure between them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{Rational, RationalVector};
use crate::graph::Graph;

/// An event `(t, x)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Event {
    pub t: Rational,
    pub x: RationalVector,
}

impl Event {
    pub fn new(t: Rational, x: RationalVector) -> Self {
        Event { t, x }
    }

    /// Integer coordinates, mostly for tests and examples.
    pub fn from_ints(t: i64, x: &[i64]) -> Self {
        Event::new(Rational::from(t), RationalVector::from_ints(x))
    }

    pub fn dim(&self) -> usize {
        self.x.dim()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Separation {
    Timelike,
    Lightlike,
    Spacelike,
}

/// Squared Minkowski norm of the displacement `a - b`.
pub fn interval_sq(a: &Event, b: &Event) -> Result<Rational> {
    let dx = a.x.sub(&b.x)?;
    Ok((&a.t - &b.t).square() - dx.norm_sq())
}

pub fn classify_pair(a: &Event, b: &Event) -> Result<Separation> {
    let s = interval_sq(a, b)?;
    Ok(if s.is_positive() {
        Separation::Timelike
    } else if s.is_zero() {
        Separation::Lightlike
    } else {
        Separation::Spacelike
    })
}

/// `k >= 1` pairwise distinct events sharing a space dimension `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawEventSet")]
pub struct EventSet {
    n: usize,
    events: Vec<Event>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEventSet {
    n: usize,
    events: Vec<Event>,
}

impl TryFrom<RawEventSet> for EventSet {
    type Error = Error;
    fn try_from(raw: RawEventSet) -> Result<Self> {
        EventSet::new(raw.n, raw.events)
    }
}

impl EventSet {
    pub fn new(n: usize, events: Vec<Event>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        if events.is_empty() {
            return Err(Error::EmptyEventSet);
        }
        for e in &events {
            if e.dim() != n {
                return Err(Error::DimensionMismatch { expected: n, found: e.dim() });
            }
        }
        for i in 0..events.len() {
            for j in i + 1..events.len() {
                if events[i] == events[j] {
                    return Err(Error::DuplicateEvent(i + 1, j + 1));
                }
            }
        }
        Ok(EventSet { n, events })
    }

    /// Builds a set from `(t, x)` integer tuples.
    pub fn from_ints(n: usize, events: &[(i64, &[i64])]) -> Result<Self> {
        Self::new(n, events.iter().map(|(t, x)| Event::from_ints(*t, x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn event(&self, i: usize) -> &Event {
        &self.events[i]
    }

    pub fn times(&self) -> Vec<Rational> {
        self.events.iter().map(|e| e.t.clone()).collect()
    }

    /// Separation of events `i` and `j` (0-based).
    pub fn separation(&self, i: usize, j: usize) -> Separation {
        classify_pair(&self.events[i], &self.events[j]).expect("dimensions checked on construction")
    }

    /// Fails with the first lightlike pair (1-based).
    pub fn check_no_lightlike(&self) -> Result<()> {
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.separation(i, j) == Separation::Lightlike {
                    return Err(Error::Lightlike(i + 1, j + 1));
                }
            }
        }
        Ok(())
    }

    /// Fails with the first pair that is not spacelike separated (1-based).
    pub fn check_all_spacelike(&self) -> Result<()> {
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.separation(i, j) != Separation::Spacelike {
                    return Err(Error::NotSpacelike(i + 1, j + 1));
                }
            }
        }
        Ok(())
    }

    /// Pairwise classification; the diagonal is `None`.
    pub fn separation_matrix(&self) -> Vec<Vec<Option<Separation>>> {
        (0..self.len())
            .map(|i| {
                (0..self.len())
                    .map(|j| (i != j).then(|| self.separation(i, j)))
                    .collect()
            })
            .collect()
    }
}

/// Graph on the events whose edges are the spacelike separated pairs.
pub type SeparationGraph = Graph;

pub fn separation_graph(events: &EventSet) -> Result<SeparationGraph> {
    events.check_no_lightlike()?;
    let mut g = Graph::empty(events.len());
    for i in 0..events.len() {
        for j in i + 1..events.len() {
            if events.separation(i, j) == Separation::Spacelike {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

/// The causal order on an event set: `p < q` iff they are timelike separated
/// and `p` is earlier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CausalPoset {
    k: usize,
    less: Vec<Vec<bool>>,
}

impl CausalPoset {
    pub fn len(&self) -> usize {
        self.k
    }

    pub fn is_empty(&self) -> bool {
        self.k == 0
    }

    /// Strict relation `i < j` (0-based).
    pub fn less(&self, i: usize, j: usize) -> bool {
        self.less[i][j]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        i == j || self.less[i][j]
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// All strict relations `(i, j)` with `i < j` in the order, 0-based.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.k {
            for j in 0..self.k {
                if self.less[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn incomparability_graph(&self) -> Graph {
        let mut g = Graph::empty(self.k);
        for i in 0..self.k {
            for j in i + 1..self.k {
                if !self.comparable(i, j) {
                    g.add_edge(i, j).expect("in range");
                }
            }
        }
        g
    }
}

#[allow(clippy::needless_range_loop)]
pub fn causal_poset(events: &EventSet) -> Result<CausalPoset> {
    events.check_no_lightlike()?;
    let k = events.len();
    let mut less = vec![vec![false; k]; k];
    for i in 0..k {
        for j in 0..k {
            if i != j
                && events.separation(i, j) == Separation::Timelike
                && events.event(i).t < events.event(j).t
            {
                less[i][j] = true;
            }
        }
    }
    for a in 0..k {
        for b in 0..k {
            if !less[a][b] {
                continue;
            }
            if less[b][a] {
                return Err(Error::Invariant(format!("causal order not antisymmetric at {}, {}", a + 1, b + 1)));
            }
            for c in 0..k {
                if less[b][c] && !less[a][c] {
                    return Err(Error::Invariant(format!(
                        "causal order not transitive at {}, {}, {}",
                        a + 1,
                        b + 1,
                        c + 1
                    )));
                }
            }
        }
    }
    Ok(CausalPoset { k, less })
}

/// Scales every space coordinate by `a > 0`.
pub fn dilate(events: &EventSet, a: &Rational) -> Result<EventSet> {
    if !a.is_positive() {
        return Err(Error::NonPositiveDilation(a.to_string()));
    }
    EventSet::new(
        events.n,
        events
            .events
            .iter()
            .map(|e| Event::new(e.t.clone(), e.x.scale(a)))
            .collect(),
    )
}

/// `t - x·v`, the boosted time of `e` divided by the Lorentz factor of `v`.
///
/// The factor is positive and the same for every event, so these values rank
/// events exactly as the true boosted times do while staying rational.
pub fn boost_time_scaled(e: &Event, v: &RationalVector) -> Result<Rational> {
    let speed_sq = v.norm_sq();
    if speed_sq >= Rational::one() {
        return Err(Error::Superluminal(speed_sq.to_string()));
    }
    unchecked_scaled_time(e, v)
}

/// `t - x·v` without the speed check; used where `v` is only a
/// point of velocity space rather than a physical observer.
pub(crate) fn unchecked_scaled_time(e: &Event, v: &RationalVector) -> Result<Rational> {
    Ok(&e.t - e.x.dot(v)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(t: i64, x: i64) -> Event {
        Event::from_ints(t, &[x])
    }

    fn worked_example() -> EventSet {
        EventSet::from_ints(1, &[(0, &[1]), (1, &[6]), (2, &[4]), (3, &[11])]).unwrap()
    }

    #[test]
    fn classification() {
        assert_eq!(classify_pair(&ev(0, 0), &ev(1, 0)).unwrap(), Separation::Timelike);
        assert_eq!(classify_pair(&ev(0, 0), &ev(0, 1)).unwrap(), Separation::Spacelike);
        assert_eq!(classify_pair(&ev(0, 0), &ev(1, 1)).unwrap(), Separation::Lightlike);
        assert!(classify_pair(&ev(0, 0), &Event::from_ints(0, &[0, 0])).is_err());
    }

    #[test]
    fn event_set_validation() {
        assert_eq!(EventSet::new(1, vec![]), Err(Error::EmptyEventSet));
        assert_eq!(EventSet::new(1, vec![ev(0, 0), ev(0, 0)]), Err(Error::DuplicateEvent(1, 2)));
        assert!(matches!(
            EventSet::new(2, vec![ev(0, 0)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn worked_example_is_complete() {
        let g = separation_graph(&worked_example()).unwrap();
        assert_eq!(g, Graph::complete(4));
        let p = causal_poset(&worked_example()).unwrap();
        assert!(p.relations().is_empty());
    }

    #[test]
    fn timelike_pair_has_no_edge() {
        let e = EventSet::new(1, vec![ev(0, 0), ev(5, 1)]).unwrap();
        assert_eq!(separation_graph(&e).unwrap().edge_count(), 0);
    }

    #[test]
    fn mixed_three_events() {
        let e = EventSet::new(1, vec![ev(0, 0), ev(0, 3), ev(10, 0)]).unwrap();
        let g = separation_graph(&e).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let p = causal_poset(&e).unwrap();
        assert_eq!(p.relations(), vec![(0, 2), (1, 2)]);
        assert_eq!(p.incomparability_graph(), g);
    }

    #[test]
    fn chain() {
        let e = EventSet::new(1, vec![ev(0, 0), ev(2, 0), ev(4, 0)]).unwrap();
        let p = causal_poset(&e).unwrap();
        assert_eq!(p.relations(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn lightlike_rejected_with_pair() {
        let e = EventSet::new(1, vec![ev(0, 0), ev(0, 5), ev(1, 1)]).unwrap();
        assert_eq!(separation_graph(&e), Err(Error::Lightlike(1, 3)));
        assert_eq!(causal_poset(&e).unwrap_err(), Error::Lightlike(1, 3));
    }

    #[test]
    fn dilation() {
        let e = EventSet::new(1, vec![ev(1, 2)]).unwrap();
        assert_eq!(dilate(&e, &Rational::one()).unwrap(), e);
        assert_eq!(dilate(&e, &Rational::from(3)).unwrap().event(0), &ev(1, 6));
        assert!(dilate(&e, &Rational::zero()).is_err());
        assert!(dilate(&e, &Rational::from(-1)).is_err());

        let pair = EventSet::new(1, vec![ev(0, 0), ev(2, 1)]).unwrap();
        assert_eq!(pair.separation(0, 1), Separation::Timelike);
        let wide = dilate(&pair, &Rational::from(5)).unwrap();
        assert_eq!(wide.separation(0, 1), Separation::Spacelike);
    }

    #[test]
    fn scaled_times() {
        let v0 = RationalVector::zeros(1);
        assert_eq!(boost_time_scaled(&ev(7, 3), &v0).unwrap(), Rational::from(7));
        let half = RationalVector::new(vec![Rational::ratio(1, 2)]);
        assert_eq!(boost_time_scaled(&ev(2, 4), &half).unwrap(), Rational::zero());
        assert!(boost_time_scaled(&ev(2, 4), &RationalVector::from_ints(&[1])).is_err());

        let v = RationalVector::new(vec![Rational::ratio(-9, 10)]);
        let got: Vec<Rational> = worked_example()
            .events()
            .iter()
            .map(|e| boost_time_scaled(e, &v).unwrap())
            .collect();
        let want = [
            Rational::ratio(9, 10),
            Rational::ratio(32, 5),
            Rational::ratio(28, 5),
            Rational::ratio(129, 10),
        ];
        assert_eq!(got, want);
    }

    #[test]
    fn event_json() {
        let json = r#"{"n":1,"events":[{"t":"0","x":["1"]},{"t":"1/2","x":["6"]}]}"#;
        let e: EventSet = serde_json::from_str(json).unwrap();
        assert_eq!(e.event(1).t, Rational::ratio(1, 2));
        assert_eq!(serde_json::to_string(&e).unwrap(), json);
        let bad = r#"{"n":2,"events":[{"t":"0","x":["1"]}]}"#;
        assert!(serde_json::from_str::<EventSet>(bad).is_err());
    }
}
