//! Staged decomposability check for lattice polytopes.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::enumerate::lattice_points;
use crate::polykern::rational::rat;
use crate::polykern::HPolytope;
use crate::{Error, Result};

/// Checks, for every 2 ≤ j ≤ k, that each lattice point of j·P splits as a
/// sum of j lattice points of P. Polytopes with this property for all j are
/// exactly those whose lattice points generate the cone over the polytope
/// degree by degree; a `false` here certifies a gap at some stage ≤ k.
pub fn idp_witness(p: &HPolytope, k: u32) -> Result<bool> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "decomposition depth must be at least 1".into(),
        ));
    }
    let base: BTreeSet<Vec<BigInt>> = lattice_points(p, false)?.into_iter().collect();
    let mut stage = base.clone();
    for j in 2..=k {
        let mut next = BTreeSet::new();
        for s in &base {
            for t in &stage {
                next.insert(s.iter().zip(t).map(|(a, b)| a + b).collect::<Vec<_>>());
            }
        }
        let target = lattice_points(&p.dilate(&rat(j as i64))?, false)?;
        if target.iter().any(|pt| !next.contains(pt)) {
            return Ok(false);
        }
        stage = next;
    }
    Ok(true)
}
