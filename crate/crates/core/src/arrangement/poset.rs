//! Intersection posets, Möbius values, and region counting.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use serde::Serialize;

use super::Arrangement;
use crate::error::{Error, Result};
use crate::exactmath::{big_to_json, solve_linear, AffineSubspace, IntPolynomial, LinearEquation};

/// A nonempty intersection of hyperplanes.
#[derive(Clone, Debug)]
pub struct Flat {
    /// Indices (into the arrangement) of every hyperplane containing the flat.
    pub hyperplanes: Vec<usize>,
    pub subspace: AffineSubspace,
    pub mobius: BigInt,
    /// Indices of the elements covering this one.
    pub covers: Vec<usize>,
}

impl Flat {
    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn rank(&self) -> usize {
        self.subspace.rank()
    }
}

/// The nonempty intersections of an arrangement ordered by reverse
/// inclusion. Element 0 is the ambient space; elements are sorted by rank.
#[derive(Clone, Debug)]
pub struct IntersectionPoset {
    ambient_dim: usize,
    elements: Vec<Flat>,
}

#[derive(Serialize)]
struct ElementJson {
    dim: usize,
    mobius: serde_json::Value,
    hyperplanes: Vec<usize>,
    covers: Vec<usize>,
}

impl Serialize for IntersectionPoset {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let elements: Vec<ElementJson> = self
            .elements
            .iter()
            .map(|f| ElementJson {
                dim: f.dim(),
                mobius: big_to_json(&f.mobius),
                hyperplanes: f.hyperplanes.iter().map(|h| h + 1).collect(),
                covers: f.covers.iter().map(|c| c + 1).collect(),
            })
            .collect();
        let mut s = serializer.serialize_struct("IntersectionPoset", 2)?;
        s.serialize_field("ambient_dim", &self.ambient_dim)?;
        s.serialize_field("elements", &elements)?;
        s.end()
    }
}

impl IntersectionPoset {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn elements(&self) -> &[Flat] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `x <= y` in the poset, i.e. flat `y` is contained in flat `x`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        is_subset(&self.elements[x].hyperplanes, &self.elements[y].hyperplanes)
    }

    pub fn rank(&self) -> usize {
        self.elements.last().map_or(0, Flat::rank)
    }

    /// `sum over x of mu(x) t^dim(x)`.
    pub fn characteristic_polynomial(&self) -> IntPolynomial {
        let mut coeffs = vec![BigInt::zero(); self.ambient_dim + 1];
        for f in &self.elements {
            coeffs[f.dim()] += &f.mobius;
        }
        IntPolynomial::new(coeffs)
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    // Both sorted.
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

fn contains_flat(eq: &LinearEquation, flat: &AffineSubspace) -> bool {
    eq.residual(&flat.point).is_ok_and(|r| r.is_zero())
        && flat
            .basis
            .iter()
            .all(|d| eq.normal.dot(d).is_ok_and(|x| x.is_zero()))
}

/// Builds the intersection poset by intersecting each flat of rank `r` with
/// every hyperplane not containing it, discarding empty intersections and
/// identifying flats by the canonical form of their defining equations.
pub fn intersection_poset(arrangement: &Arrangement) -> Result<IntersectionPoset> {
    let n = arrangement.dim();
    let equations: Vec<LinearEquation> =
        arrangement.hyperplanes().iter().map(|h| h.equation()).collect();
    let ambient = solve_linear(n, &[])?.expect("empty system is consistent");
    let mut elements = vec![Flat {
        hyperplanes: Vec::new(),
        subspace: ambient,
        mobius: BigInt::one(),
        covers: Vec::new(),
    }];
    let mut seen: HashMap<Vec<LinearEquation>, usize> = HashMap::new();
    seen.insert(Vec::new(), 0);

    let mut level: Vec<usize> = vec![0];
    while !level.is_empty() {
        let mut next_level = Vec::new();
        for &x in &level {
            for (h, eq) in equations.iter().enumerate() {
                if elements[x].hyperplanes.binary_search(&h).is_ok() {
                    continue;
                }
                let mut system = elements[x].subspace.canonical.clone();
                system.push(eq.clone());
                let Some(y) = solve_linear(n, &system)? else {
                    continue;
                };
                if y.dim() + 1 != elements[x].dim() {
                    return Err(Error::Invariant("intersection did not drop one dimension".into()));
                }
                let idx = match seen.get(&y.canonical) {
                    Some(&idx) => idx,
                    None => {
                        let hyperplanes: Vec<usize> = equations
                            .iter()
                            .enumerate()
                            .filter(|(_, e)| contains_flat(e, &y))
                            .map(|(i, _)| i)
                            .collect();
                        let idx = elements.len();
                        seen.insert(y.canonical.clone(), idx);
                        elements.push(Flat {
                            hyperplanes,
                            subspace: y,
                            mobius: BigInt::zero(),
                            covers: Vec::new(),
                        });
                        next_level.push(idx);
                        idx
                    }
                };
                if !elements[x].covers.contains(&idx) {
                    elements[x].covers.push(idx);
                }
            }
        }
        level = next_level;
    }

    for y in 1..elements.len() {
        let mut sum = BigInt::zero();
        for x in 0..y {
            if elements[x].rank() < elements[y].rank()
                && is_subset(&elements[x].hyperplanes, &elements[y].hyperplanes)
            {
                sum += &elements[x].mobius;
            }
        }
        elements[y].mobius = -sum;
    }
    for f in &mut elements {
        f.covers.sort_unstable();
    }

    Ok(IntersectionPoset { ambient_dim: n, elements })
}

pub fn characteristic_polynomial(arrangement: &Arrangement) -> Result<IntPolynomial> {
    Ok(intersection_poset(arrangement)?.characteristic_polynomial())
}

/// Number of regions, `(-1)^n chi(-1)`.
pub fn region_count(arrangement: &Arrangement) -> Result<BigUint> {
    let chi = characteristic_polynomial(arrangement)?;
    regions_from_characteristic(&chi, arrangement.dim())
}

pub(crate) fn regions_from_characteristic(chi: &IntPolynomial, n: usize) -> Result<BigUint> {
    let mut r = chi.eval(&BigInt::from(-1));
    if n % 2 == 1 {
        r = -r;
    }
    match r.sign() {
        Sign::Minus => Err(Error::Invariant(format!("negative region count {r}"))),
        _ => Ok(r.magnitude().clone()),
    }
}

/// Number of regions as the sum of the unsigned coefficients of `chi`.
pub fn region_count_by_coefficients(arrangement: &Arrangement) -> Result<BigUint> {
    let chi = characteristic_polynomial(arrangement)?;
    Ok(chi.abs_coeff_sum().magnitude().clone())
}
