//! Polytopes given by their vertices.

use std::fmt;

use super::rational::Rational;
use crate::{Error, Result};

/// A polytope as the convex hull of finitely many points. Vertices are kept
/// sorted and deduplicated, so equality is plain structural equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VPolytope {
    ambient_dim: usize,
    vertices: Vec<Vec<Rational>>,
}

impl VPolytope {
    pub fn new(ambient_dim: usize, mut vertices: Vec<Vec<Rational>>) -> Result<Self> {
        if ambient_dim == 0 {
            return Err(Error::InvalidArgument("ambient dimension is zero".into()));
        }
        for v in &vertices {
            if v.len() != ambient_dim {
                return Err(Error::InvalidArgument(format!(
                    "vertex has {} coordinates in ambient dimension {}",
                    v.len(),
                    ambient_dim
                )));
            }
        }
        vertices.sort();
        vertices.dedup();
        Ok(VPolytope {
            ambient_dim,
            vertices,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vertices(&self) -> &[Vec<Rational>] {
        &self.vertices
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Whether every vertex has integer coordinates.
    pub fn is_integral(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| v.iter().all(Rational::is_integer))
    }
}

impl fmt::Display for VPolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "polytope in R^{} with vertices:", self.ambient_dim)?;
        for v in &self.vertices {
            let coords: Vec<String> = v.iter().map(|c| c.to_string()).collect();
            writeln!(f, "  ({})", coords.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polykern::rational::{rat, ratio};

    #[test]
    fn sorts_and_dedups() {
        let p = VPolytope::new(
            2,
            vec![
                vec![rat(1), rat(0)],
                vec![rat(0), rat(1)],
                vec![rat(1), rat(0)],
            ],
        )
        .unwrap();
        assert_eq!(p.vertices().len(), 2);
        assert_eq!(p.vertices()[0], vec![rat(0), rat(1)]);
    }

    #[test]
    fn integrality() {
        let p = VPolytope::new(2, vec![vec![rat(1), rat(2)]]).unwrap();
        assert!(p.is_integral());
        let q = VPolytope::new(2, vec![vec![rat(1), ratio(1, 2)]]).unwrap();
        assert!(!q.is_integral());
    }
}
