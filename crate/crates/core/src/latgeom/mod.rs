//! Lattice geometry: Smith normal form, integral charts of the lattice
//! points of an affine hull, lattice-point enumeration, minimal-dilation
//! search, and integer-decomposition witnesses.

mod chart;
mod enumerate;
mod idp;
mod snf;

pub use chart::{affine_hull, lattice_chart, ChartImage, LatticeChart};
pub use enumerate::{find_delta, lattice_points, DeltaResult};
pub use idp::idp_witness;
pub use snf::{smith, Snf};

