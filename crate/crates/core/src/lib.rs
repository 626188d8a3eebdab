//! Exact enumeration of the orders in which events of Minkowski space-time
//! are seen by inertial observers.
//!
//! The orders realized by observers with velocity `v` correspond to regions
//! of an arrangement of hyperplanes in velocity space, one hyperplane per
//! spacelike pair of events. The crate counts them two ways: by testing each
//! permutation for strict feasibility with an exact simplex, and by the
//! characteristic polynomial of the arrangement.

pub mod arrangement;
pub mod classical;
pub mod cli;
pub mod error;
pub mod exactmath;
pub mod graph;
pub mod ordering;
pub mod relativity;
pub mod sweep;

pub use error::{Error, ErrorKind, Result};
pub use exactmath::{Rational, RationalVector};
pub use graph::Graph;
pub use ordering::{count_orders, feasible_orders, OrderSet, Permutation};
pub use relativity::{Event, EventSet, Separation};
