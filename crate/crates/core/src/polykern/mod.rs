//! Exact rational polytopes.
//!
//! Constraints are canonicalized on construction (integral coprime
//! coefficients, positive leading coefficient), so equality of constraint
//! systems is decidable by comparing sorted rows. All geometry here is
//! carried out with arbitrary-precision rationals.

mod constraint;
mod dd;
mod facets;
mod hpolytope;
mod lp;
pub mod rational;
mod vpolytope;

pub use constraint::{ConstraintKind, LinConstraint};
pub use dd::{facets_of, vertices};
pub use facets::{dual, irredundant_facets};
pub use hpolytope::HPolytope;
pub use lp::{maximize, minimize, LpOutcome};
pub use rational::Rational;
pub use vpolytope::VPolytope;
