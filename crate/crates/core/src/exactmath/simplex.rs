//! Dense two-phase primal simplex over exact rationals.
//!
//! Solves `maximize c·x  subject to  A x <= b, x >= 0` using a full tableau
//! and Bland's rule, so the pivot sequence (and therefore the returned
//! vertex) depends only on the input.

use super::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { x: Vec<Rational>, value: Rational },
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    /// Reduced objective coefficients; the objective equals `value + d·x_N`.
    d: Vec<Rational>,
    value: Rational,
    /// Columns that may never enter the basis.
    frozen: Vec<bool>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, e: usize) {
        let inv = self.rows[r][e].recip().expect("pivot on a nonzero entry");
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        self.rhs[r] *= &inv;
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][e].is_zero() {
                continue;
            }
            let f = self.rows[i][e].clone();
            for (x, p) in self.rows[i].iter_mut().zip(&prow) {
                *x -= &f * p;
            }
            self.rhs[i] -= &f * &prhs;
        }
        if !self.d[e].is_zero() {
            let f = self.d[e].clone();
            self.value += &f * &prhs;
            for (x, p) in self.d.iter_mut().zip(&prow) {
                *x -= &f * p;
            }
        }
        self.basis[r] = e;
    }

    /// Runs Bland-rule iterations to optimality. Returns false if unbounded.
    fn optimize(&mut self) -> bool {
        loop {
            let Some(e) = (0..self.d.len()).find(|&j| !self.frozen[j] && self.d[j].is_positive())
            else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                if !self.rows[i][e].is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / &self.rows[i][e];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, e),
                None => return false,
            }
        }
    }

    fn set_objective(&mut self, c: &[Rational]) {
        let width = self.d.len();
        let cost = |j: usize| c.get(j).cloned().unwrap_or_else(Rational::zero);
        let mut d: Vec<Rational> = (0..width).map(cost).collect();
        let mut value = Rational::zero();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = cost(b);
            if cb.is_zero() {
                continue;
            }
            for (dj, t) in d.iter_mut().zip(&self.rows[i]) {
                *dj -= &cb * t;
            }
            value += &cb * &self.rhs[i];
        }
        self.d = d;
        self.value = value;
    }
}

pub(crate) fn maximize(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> LpOutcome {
    let m = b.len();
    let n = c.len();
    // Columns: structural 0..n, slacks n..n+m, auxiliary n+m.
    let width = n + m + 1;
    let aux = n + m;
    let rows: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row = vec![Rational::zero(); width];
            row[..n].clone_from_slice(&a[i]);
            row[n + i] = Rational::one();
            row[aux] = -Rational::one();
            row
        })
        .collect();
    let mut t = Tableau {
        rows,
        rhs: b.to_vec(),
        basis: (n..n + m).collect(),
        d: vec![Rational::zero(); width],
        value: Rational::zero(),
        frozen: vec![false; width],
    };

    let most_negative = (0..m)
        .filter(|&i| t.rhs[i].is_negative())
        .min_by(|&i, &j| t.rhs[i].cmp(&t.rhs[j]).then(i.cmp(&j)));
    if let Some(r) = most_negative {
        // Phase one: maximize -aux.
        t.d[aux] = -Rational::one();
        t.pivot(r, aux);
        let bounded = t.optimize();
        debug_assert!(bounded, "phase one is bounded by zero");
        if !t.value.is_zero() {
            return LpOutcome::Infeasible;
        }
        if let Some(r) = t.basis.iter().position(|&j| j == aux) {
            match (0..aux).find(|&j| !t.rows[r][j].is_zero()) {
                Some(e) => t.pivot(r, e),
                None => {
                    t.rows.remove(r);
                    t.rhs.remove(r);
                    t.basis.remove(r);
                }
            }
        }
    }
    t.frozen[aux] = true;
    t.set_objective(c);
    if !t.optimize() {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &j) in t.basis.iter().enumerate() {
        if j < n {
            x[j] = t.rhs[i].clone();
        }
    }
    LpOutcome::Optimal { x, value: t.value }
}
