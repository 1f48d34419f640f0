//! Exact verification of a centrally extended q-deformed Witt/Virasoro-type
//! algebra and numerical integration of the resulting qKdV equation.
//!
//! The crate is split along the objects it manipulates:
//!
//! - [`qscalar`]: the scalar field — exact rational functions in the
//!   deformation parameter `q` ([`qscalar::QExact`]) and their floating-point
//!   counterpart ([`qscalar::QNumeric`]), together with the q-integer,
//!   q-angle and central-coefficient functions and the scalar identities
//!   they satisfy.
//! - [`qseries`]: finitely supported Laurent fields on the circle and the
//!   q-difference calculus acting on them (`∂_q`, `τ`, `Θ`, the circle
//!   integral, the vector-field bracket).
//! - [`qwitt`]: the abstract graded algebra spanned by the generators `d_m`
//!   and a central element, its bracket, and the operator realization on
//!   Laurent fields.
//! - [`cocycle`]: the 2-cocycle defining the central extension, in both its
//!   integral and mode forms, and its Jacobi-type sum.
//! - [`qkdv`]: the qKdV right-hand side, the Euler-equation cross-checks,
//!   truncated mode integration with RK4, and the classical q→1 oracle.
//! - [`rng`]: a small linear-congruential generator for reproducible
//!   randomized verification cases.

pub mod cocycle;
pub mod error;
pub mod qkdv;
pub mod qscalar;
pub mod qseries;
pub mod qwitt;
pub mod rng;

pub use error::DomainError;
pub use qscalar::{QExact, QNumeric, Scalar};
pub use qseries::LaurentPoly;
