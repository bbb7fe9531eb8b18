//! Exact polyhedral machinery for deciding whether the toric algebra spanned
//! by the t-spread monomials of degree d in n variables is Gorenstein.
//!
//! The crate has four layers:
//!
//! * [`polykern`] — exact rational polytopes: canonical linear constraints,
//!   H- and V-representations, an exact two-phase simplex, double
//!   description, irredundant facets, and polar duals.
//! * [`latgeom`] — lattice geometry: Smith normal form, integral charts of
//!   affine lattices, lattice-point enumeration (boundary included or
//!   excluded), minimal-dilation search, and an integer-decomposition
//!   witness.
//! * [`tspread`] — the monomial side: t-spread generators, exponent
//!   matrices, Krull dimension, the parameter reduction for n < dt, and the
//!   projected generator polytope.
//! * [`gorenstein`] — the decision layer: the geometric pipeline (minimal
//!   dilation, unique interior point, dual integrality), the closed-form
//!   classification, and cross-validation sweeps.
//!
//! Everything is computed over arbitrary-precision rationals; there is no
//! floating point anywhere in the crate.
//!
//! ```
//! use tveronese::tspread::SpreadParams;
//! use tveronese::gorenstein::{decide_algorithmic, decide_closed_form};
//!
//! let p = SpreadParams::new(8, 2, 3).unwrap();
//! let report = decide_algorithmic(&p, None).unwrap();
//! assert!(report.gorenstein_algorithmic);
//! assert_eq!(report.delta, Some(4));
//! assert_eq!(decide_closed_form(&p), report.gorenstein_algorithmic);
//! ```

pub mod error;
pub mod gorenstein;
pub mod latgeom;
pub mod polykern;
pub mod tspread;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
