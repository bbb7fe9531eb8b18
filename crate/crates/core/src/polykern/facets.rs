//! Irredundant facets and polar duals.

use num_traits::Zero;

use super::constraint::{ConstraintKind, LinConstraint};
use super::hpolytope::HPolytope;
use super::lp::{maximize, LpOutcome};
use super::rational::Rational;
use super::vpolytope::VPolytope;
use crate::{Error, Result};

/// Returns the rows that actually bound the polytope: row a·x ≤ b is kept
/// iff maximizing a·x over the remaining rows exceeds b (checked by exact
/// LP), so every kept row is a facet when the input is full-dimensional.
///
/// Requires a full-dimensional description: equality rows are rejected.
/// Errors with `Empty` when the polytope has no points.
pub fn irredundant_facets(p: &HPolytope) -> Result<Vec<LinConstraint>> {
    let rows = p.constraints();
    if rows.iter().any(|c| c.kind() == ConstraintKind::Eq) {
        return Err(Error::NotStandardType(
            "equality row present; the polytope is not full-dimensional".into(),
        ));
    }
    let zeros = vec![Rational::zero(); p.ambient_dim()];
    if maximize(rows, &zeros)? == LpOutcome::Infeasible {
        return Err(Error::Empty);
    }
    let mut kept = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let others: Vec<LinConstraint> = rows
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, c)| c.clone())
            .collect();
        let (a, b, _) = row.le_oriented();
        match maximize(&others, &a)? {
            LpOutcome::Infeasible => return Err(Error::Empty),
            LpOutcome::Unbounded => kept.push(row.clone()),
            LpOutcome::Optimal { value, .. } => {
                if value > b {
                    kept.push(row.clone());
                }
            }
        }
    }
    Ok(kept)
}

/// Polar dual of a polytope with the origin strictly in its interior: the
/// convex hull of a/b over the irredundant facets a·x ≤ b. For a bounded
/// full-dimensional input this is exactly the vertex set of the dual
/// polytope.
pub fn dual(p: &HPolytope) -> Result<VPolytope> {
    let origin = vec![Rational::zero(); p.ambient_dim()];
    if !p.contains(&origin, true) {
        return Err(Error::NotStandardType(
            "the origin must lie strictly inside the polytope".into(),
        ));
    }
    let facets = irredundant_facets(p)?;
    let mut verts = Vec::with_capacity(facets.len());
    for f in facets {
        let (a, b, _) = f.le_oriented();
        debug_assert!(b > Rational::zero());
        verts.push(a.iter().map(|ai| ai / &b).collect());
    }
    VPolytope::new(p.ambient_dim(), verts)
}
