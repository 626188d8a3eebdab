use serde::{Deserialize, Serialize};

use super::{Rational, RationalVector};
use crate::error::{Error, Result};

/// The equation `normal · v = rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LinearEquation {
    pub normal: RationalVector,
    pub rhs: Rational,
}

impl LinearEquation {
    pub fn new(normal: RationalVector, rhs: Rational) -> Self {
        LinearEquation { normal, rhs }
    }

    pub fn residual(&self, v: &RationalVector) -> Result<Rational> {
        Ok(self.normal.dot(v)? - &self.rhs)
    }
}

/// The solution set of a consistent linear system: `point + span(basis)`.
///
/// `canonical` is the reduced row echelon form of the defining system with
/// zero rows removed; two systems cut out the same affine subspace exactly
/// when their canonical forms are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineSubspace {
    pub point: RationalVector,
    pub basis: Vec<RationalVector>,
    pub canonical: Vec<LinearEquation>,
}

impl AffineSubspace {
    pub fn ambient_dim(&self) -> usize {
        self.point.dim()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Codimension, i.e. the rank of the defining system.
    pub fn rank(&self) -> usize {
        self.canonical.len()
    }

    pub fn contains(&self, v: &RationalVector) -> Result<bool> {
        for eq in &self.canonical {
            if !eq.residual(v)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Exact Gauss–Jordan elimination in `R^dim`. Returns `None` when the system
/// is inconsistent.
pub fn solve_linear(dim: usize, equalities: &[LinearEquation]) -> Result<Option<AffineSubspace>> {
    for eq in equalities {
        if eq.normal.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: eq.normal.dim(),
            });
        }
    }
    // Augmented rows: dim coefficients followed by the right-hand side.
    let mut rows: Vec<Vec<Rational>> = equalities
        .iter()
        .map(|eq| {
            let mut row = eq.normal.entries().to_vec();
            row.push(eq.rhs.clone());
            row
        })
        .collect();

    let mut pivots: Vec<usize> = Vec::new();
    let mut next = 0;
    for col in 0..dim {
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = rows[next][col].recip()?;
        for x in rows[next].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &factor * p;
            }
        }
        pivots.push(col);
        next += 1;
    }

    if rows[next..].iter().any(|row| !row[dim].is_zero()) {
        return Ok(None);
    }
    rows.truncate(next);

    let mut point = vec![Rational::zero(); dim];
    for (row, &col) in rows.iter().zip(&pivots) {
        point[col] = row[dim].clone();
    }
    let basis = (0..dim)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut dir = vec![Rational::zero(); dim];
            dir[free] = Rational::one();
            for (row, &col) in rows.iter().zip(&pivots) {
                dir[col] = -&row[free];
            }
            RationalVector::new(dir)
        })
        .collect();
    let canonical = rows
        .into_iter()
        .map(|mut row| {
            let rhs = row.pop().expect("augmented row");
            LinearEquation::new(RationalVector::new(row), rhs)
        })
        .collect();

    Ok(Some(AffineSubspace {
        point: RationalVector::new(point),
        basis,
        canonical,
    }))
}

/// Solves the square system `m x = b`; `None` when `m` is singular.
pub(crate) fn solve_square(m: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = b.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, p);
        let inv = a[col][col].recip().ok()?;
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        let pivot = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &f * p;
                }
            }
        }
    }
    Some(a.into_iter().map(|mut r| r.pop().expect("augmented")).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq(normal: &[i64], rhs: i64) -> LinearEquation {
        LinearEquation::new(RationalVector::from_ints(normal), Rational::from(rhs))
    }

    #[test]
    fn single_equation_in_the_plane() {
        let s = solve_linear(2, &[eq(&[1, 0], 1)]).unwrap().unwrap();
        assert_eq!(s.point, RationalVector::from_ints(&[1, 0]));
        assert_eq!(s.basis, vec![RationalVector::from_ints(&[0, 1])]);
        assert_eq!(s.dim(), 1);
    }

    #[test]
    fn inconsistent_line() {
        assert!(solve_linear(1, &[eq(&[1], 1), eq(&[1], 2)]).unwrap().is_none());
    }

    #[test]
    fn empty_system_is_everything() {
        let s = solve_linear(3, &[]).unwrap().unwrap();
        assert_eq!(s.dim(), 3);
        assert_eq!(s.point, RationalVector::zeros(3));
    }

    #[test]
    fn canonical_form_ignores_presentation() {
        let a = solve_linear(2, &[eq(&[1, 1], 2), eq(&[1, -1], 0)]).unwrap().unwrap();
        let b = solve_linear(2, &[eq(&[2, 0], 2), eq(&[3, 3], 6), eq(&[0, 5], 5)])
            .unwrap()
            .unwrap();
        assert_eq!(a.canonical, b.canonical);
        assert_eq!(a.point, RationalVector::from_ints(&[1, 1]));
    }

    #[test]
    fn dimension_mismatch() {
        assert!(solve_linear(2, &[eq(&[1], 0)]).is_err());
    }

    #[test]
    fn square_solver() {
        let m = vec![
            vec![Rational::from(2), Rational::from(1)],
            vec![Rational::from(1), Rational::from(3)],
        ];
        let x = solve_square(&m, &[Rational::from(3), Rational::from(5)]).unwrap();
        assert_eq!(x, vec![Rational::ratio(4, 5), Rational::ratio(7, 5)]);
        let singular = vec![vec![Rational::one(); 2]; 2];
        assert!(solve_square(&singular, &[Rational::one(), Rational::one()]).is_none());
    }
}
