//! Exact rational arithmetic and the linear algebra built on it.
//!
//! Every geometric decision in the crate (which side of a hyperplane, whether
//! an open polyhedron is empty, whether it meets the unit ball) is made here
//! without rounding.

mod feasibility;
mod linsolve;
mod polynomial;
mod rational;
mod simplex;
mod vector;

pub use feasibility::{
    lp_strict_feasible, min_norm_closure_point, min_norm_sq_closure, strict_witness_in_unit_ball,
    Sense, StrictHalfspaceSystem, StrictRow,
};
pub use linsolve::{solve_linear, AffineSubspace, LinearEquation};
pub(crate) use polynomial::big_to_json;
pub use polynomial::IntPolynomial;
pub use rational::Rational;
pub use vector::RationalVector;
