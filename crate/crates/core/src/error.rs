//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by polytope construction, lattice routines, and the
/// t-spread pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input: dimension mismatches, non-positive scale factors,
    /// parameter tuples outside the admissible range, and similar.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The spread parameter t = 0 names a different object (plain Veronese
    /// subalgebras of the full polynomial ring) that this crate does not
    /// model; it is rejected distinctly from generic validation errors.
    #[error("t = 0 is out of scope: the zero-spread case is not handled by this crate")]
    SpreadOutOfScope,

    /// A polytope expected to be bounded has a recession direction.
    #[error("polyhedron is unbounded")]
    Unbounded,

    /// A polytope expected to be nonempty has no points.
    #[error("polyhedron is empty")]
    Empty,

    /// The polytope is not of the standard form required by the operation
    /// (e.g. the dual needs the origin strictly inside).
    #[error("polytope is not of the required standard form: {0}")]
    NotStandardType(String),

    /// The affine hull of the input contains no lattice points, so no
    /// integral chart of it exists.
    #[error("the affine hull contains no lattice points")]
    NoLatticePoints,

    /// `find_delta` exhausted its search bound without finding a dilation
    /// whose relative interior contains a lattice point.
    #[error("no interior lattice point found for any dilation factor up to {delta_max}")]
    DeltaBoundExceeded { delta_max: u32 },
}
