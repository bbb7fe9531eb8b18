//! Polytopes given by linear constraints.

use std::fmt;

use num_traits::Signed;

use super::constraint::LinConstraint;
use super::rational::Rational;
use crate::{Error, Result};

/// A (possibly empty or unbounded) polyhedron { x ∈ R^dim : every constraint
/// holds }. Constraint order is preserved for display; comparison is by the
/// sorted multiset of canonical rows, so two descriptions with the same rows
/// in different order are equal.
#[derive(Debug, Clone, Eq)]
pub struct HPolytope {
    ambient_dim: usize,
    constraints: Vec<LinConstraint>,
}

impl HPolytope {
    /// Builds a polyhedron, validating that every row matches the ambient
    /// dimension. Duplicate rows are collapsed.
    pub fn new(ambient_dim: usize, constraints: Vec<LinConstraint>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::InvalidArgument("ambient dimension is zero".into()));
        }
        for c in &constraints {
            if c.dim() != ambient_dim {
                return Err(Error::InvalidArgument(format!(
                    "constraint has {} coefficients in ambient dimension {}",
                    c.dim(),
                    ambient_dim
                )));
            }
        }
        let mut seen = std::collections::HashSet::new();
        let mut rows = Vec::with_capacity(constraints.len());
        for c in constraints {
            if seen.insert(c.clone()) {
                rows.push(c);
            }
        }
        Ok(HPolytope {
            ambient_dim,
            constraints: rows,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn constraints(&self) -> &[LinConstraint] {
        &self.constraints
    }

    /// Scales the polyhedron by k > 0.
    pub fn dilate(&self, k: &Rational) -> Result<Self> {
        if !k.is_positive() {
            return Err(Error::InvalidArgument(format!(
                "dilation factor must be positive, got {}",
                k
            )));
        }
        HPolytope::new(
            self.ambient_dim,
            self.constraints.iter().map(|c| c.dilated(k)).collect(),
        )
    }

    /// Translates the polyhedron by v.
    pub fn translate(&self, v: &[Rational]) -> Result<Self> {
        if v.len() != self.ambient_dim {
            return Err(Error::InvalidArgument(format!(
                "translation vector has length {} in ambient dimension {}",
                v.len(),
                self.ambient_dim
            )));
        }
        HPolytope::new(
            self.ambient_dim,
            self.constraints.iter().map(|c| c.translated(v)).collect(),
        )
    }

    /// Membership test; `strict` requires every inequality to hold strictly
    /// (equality rows stay exact), i.e. tests the relative interior with
    /// respect to the inequality rows.
    pub fn contains(&self, x: &[Rational], strict: bool) -> bool {
        x.len() == self.ambient_dim && self.constraints.iter().all(|c| c.satisfied(x, strict))
    }

    /// Rows sorted canonically (for order-insensitive comparison).
    pub fn canonical_rows(&self) -> Vec<LinConstraint> {
        let mut rows = self.constraints.clone();
        rows.sort();
        rows
    }
}

impl PartialEq for HPolytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.canonical_rows() == other.canonical_rows()
    }
}

impl fmt::Display for HPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "polyhedron in R^{}:", self.ambient_dim)?;
        for c in &self.constraints {
            writeln!(f, "  {}", c)?;
        }
        Ok(())
    }
}
