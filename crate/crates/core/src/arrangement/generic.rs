//! Genericity of pair-indexed hyperplane families.
//!
//! A family `{H_ij}` is generic when its intersection poset is the rank-`n`
//! truncation of the partition lattice under the natural map sending a
//! partition to the intersection of the `H_ij` with `i ~ j`.

use std::collections::HashMap;

use serde::Serialize;

use super::Label;
use crate::error::Result;
use crate::exactmath::{solve_linear, LinearEquation};
use crate::relativity::EventSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GenericityViolation {
    /// A partition of rank at most `n` maps to an empty flat or a flat of
    /// the wrong dimension.
    WrongDimension,
    /// A partition of rank `n + 1` maps to a nonempty flat.
    ExcessIntersection,
    /// Two partitions map to the same flat.
    Collision,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenericityReport {
    pub generic: bool,
    pub violation: Option<GenericityViolation>,
    /// Hyperplanes whose intersection breaks the partition-lattice shape.
    pub certificate: Option<Vec<Label>>,
}

impl GenericityReport {
    fn pass() -> Self {
        GenericityReport { generic: true, violation: None, certificate: None }
    }

    fn fail(violation: GenericityViolation, mut certificate: Vec<Label>) -> Self {
        certificate.sort();
        certificate.dedup();
        GenericityReport {
            generic: false,
            violation: Some(violation),
            certificate: Some(certificate),
        }
    }
}

/// Set partitions of `0..k` as restricted growth strings, in lexicographic
/// order.
pub(crate) fn set_partitions(k: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, max: usize, k: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        let limit = if prefix.is_empty() { 0 } else { max + 1 };
        for b in 0..=limit {
            prefix.push(b);
            extend(prefix, max.max(b), k, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        out.push(Vec::new());
    } else {
        extend(&mut Vec::with_capacity(k), 0, k, &mut out);
    }
    out
}

fn blocks(rgs: &[usize]) -> Vec<Vec<usize>> {
    let count = rgs.iter().max().map_or(0, |m| m + 1);
    let mut out = vec![Vec::new(); count];
    for (i, &b) in rgs.iter().enumerate() {
        out[b].push(i);
    }
    out
}

/// Tests a family of hyperplanes `H_ij` on `k` items in `R^n`, where
/// `pair_equation(i, j)` (`i < j`) gives `H_ij`.
///
/// The family must be closed under the tie relation (`H_ij ∩ H_jl ⊆ H_il`),
/// so every intersection of members equals the flat of the partition the
/// members generate. Each block contributes the star of equations from its
/// least element, which generates the block.
pub fn pair_family_genericity<F>(k: usize, n: usize, pair_equation: F) -> Result<GenericityReport>
where
    F: Fn(usize, usize) -> Result<LinearEquation>,
{
    let mut partitions: Vec<(usize, Vec<Vec<usize>>)> = set_partitions(k)
        .iter()
        .map(|rgs| {
            let b = blocks(rgs);
            (k - b.len(), b)
        })
        .filter(|(rank, _)| *rank <= n + 1)
        .collect();
    partitions.sort_by_key(|(rank, _)| *rank);

    let mut flats = HashMap::new();
    let mut collision: Option<Vec<Label>> = None;
    for (rank, bl) in &partitions {
        let mut labels = Vec::new();
        let mut equations = Vec::new();
        for block in bl {
            for &j in &block[1..] {
                labels.push(Label::pair(block[0], j));
                equations.push(pair_equation(block[0], j)?);
            }
        }
        let flat = solve_linear(n, &equations)?;
        if *rank <= n {
            match flat {
                Some(f) if f.dim() == n - rank => {
                    if let Some(prev) = flats.insert(f.canonical, labels.clone()) {
                        if collision.is_none() {
                            let mut both: Vec<Label> = prev;
                            both.extend(labels);
                            collision = Some(both);
                        }
                    }
                }
                _ => return Ok(GenericityReport::fail(GenericityViolation::WrongDimension, labels)),
            }
        } else if flat.is_some() {
            return Ok(GenericityReport::fail(GenericityViolation::ExcessIntersection, labels));
        }
    }
    Ok(match collision {
        Some(labels) => GenericityReport::fail(GenericityViolation::Collision, labels),
        None => GenericityReport::pass(),
    })
}

/// Genericity of an all-spacelike event set, tested on the hyperplanes
/// `(x_i - x_j) · v = t_i - t_j` over every pair.
pub fn is_generic(events: &EventSet) -> Result<GenericityReport> {
    events.check_all_spacelike()?;
    pair_family_genericity(events.len(), events.dim(), |i, j| {
        let (a, b) = (events.event(i), events.event(j));
        Ok(LinearEquation::new(a.x.sub(&b.x)?, &a.t - &b.t))
    })
}
