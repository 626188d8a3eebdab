//! Affine hyperplane arrangements and the combinatorics used to count their
//! regions: intersection posets, Möbius values, characteristic and chromatic
//! polynomials, and Stirling numbers.

mod chromatic;
mod generic;
mod hyperplane;
mod poset;
mod stirling;

pub use chromatic::chromatic_polynomial;
pub use generic::{is_generic, pair_family_genericity, GenericityReport, GenericityViolation};
pub use hyperplane::{
    braid_arrangement, build_event_arrangement, cone, graphical_arrangement, Arrangement,
    Hyperplane, Label,
};
pub use poset::{
    characteristic_polynomial, intersection_poset, region_count, region_count_by_coefficients,
    Flat, IntersectionPoset,
};
pub use stirling::{f_bound, factorial, stirling_c};
