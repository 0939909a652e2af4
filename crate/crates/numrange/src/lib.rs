//! Numerical range of 2x2 complex matrices.
//!
//! For a 2x2 complex matrix `A`, the numerical range `W(A) = { <Ax, x> : |x| = 1 }`
//! is a filled ellipse whose foci are the eigenvalues of `A`; it can degenerate
//! to a round disk, a line segment, or a single point. This crate computes that
//! ellipse in closed form ([`numerical_range`]), cross-checks the geometry through
//! an independent canonicalization pipeline ([`canonicalize`]), factors the range
//! map through the Hopf map of the unit sphere ([`factor_decomposition`]), and
//! verifies everything against seeded Monte-Carlo sampling ([`verify_inclusion`]).

pub mod algebra;
pub mod range;
pub mod sampling;

mod error;

pub use algebra::{hopf_map, Complex64, Matrix2C, SphereVector, UnitVector2};
pub use error::Error;
pub use range::{
    canonicalize, center, degeneracy_threshold, factor_decomposition, factored_range_point,
    numerical_range, semi_axes, support_value, CanonicalForm, FactorDecomposition, PlaneTransform,
    RangeShape, ShapeKind,
};
pub use sampling::{
    convex_hull_2d, sample_range, sample_unit_vectors, verify_inclusion, SampleReport,
};
