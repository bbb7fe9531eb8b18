//! Lattice-point enumeration and minimal-dilation search.
//!
//! Enumeration works in a full-dimensional chart of the input's affine
//! hull, so "strict" really means the relative interior: rows that are tight
//! on the whole polytope vanish into the chart, and every surviving row is
//! strictly sharpened. Inside the chart everything is integer arithmetic —
//! rows are scaled to integral right-hand sides, which turns strict
//! inequalities into a plain rhs-decrement.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::chart::{chart_scan, lattice_chart, ChartImage, LatticeChart};
use crate::polykern::rational::{ceil_int, floor_int, Rational};
use crate::polykern::{maximize, minimize, ConstraintKind, HPolytope, LpOutcome};
use crate::{Error, Result};

/// All lattice points of a bounded polyhedron, sorted lexicographically.
/// With `strict` the boundary relative to the affine hull is excluded, i.e.
/// the lattice points of the relative interior are returned.
///
/// Returns an empty list for empty input (including a hull with no lattice
/// points); errors with `Unbounded` when the input has a recession
/// direction.
pub fn lattice_points(p: &HPolytope, strict: bool) -> Result<Vec<Vec<BigInt>>> {
    let chart = match lattice_chart(p) {
        Ok(c) => c,
        Err(Error::NoLatticePoints) | Err(Error::Empty) => return Ok(Vec::new()),
        Err(e) => return Err(e),
    };
    points_in_chart(&chart, p, strict)
}

/// Enumeration through an explicit chart (shared by `lattice_points` and the
/// dilation scan).
pub(crate) fn points_in_chart(
    chart: &LatticeChart,
    p: &HPolytope,
    strict: bool,
) -> Result<Vec<Vec<BigInt>>> {
    match chart.image(p)? {
        ChartImage::Empty => Ok(Vec::new()),
        ChartImage::Origin => Ok(vec![chart.origin().to_vec()]),
        ChartImage::Poly(q) => {
            let ys = enumerate_full_dim(&q, strict)?;
            let mut pts: Vec<Vec<BigInt>> = ys.iter().map(|y| chart.to_ambient(y)).collect();
            pts.sort();
            Ok(pts)
        }
    }
}

/// One ≤-row with integer data: a·x ≤ b.
struct Row {
    a: Vec<BigInt>,
    b: BigInt,
}

/// Integer ≤-rows for the polytope, with strict inequalities already
/// sharpened (a·x < b over integers is a·x ≤ b−1).
fn integer_rows(q: &HPolytope, strict: bool) -> Vec<Row> {
    let mut rows = Vec::new();
    for c in q.constraints() {
        let den = c.rhs().denom().clone();
        let scaled: Vec<BigInt> = c.coeffs().iter().map(|v| v * &den).collect();
        let rhs = c.rhs().numer().clone();
        let adjust = |b: BigInt| if strict { b - BigInt::one() } else { b };
        match c.kind() {
            ConstraintKind::Le => rows.push(Row {
                a: scaled,
                b: adjust(rhs),
            }),
            ConstraintKind::Ge => rows.push(Row {
                a: scaled.iter().map(|v| -v).collect(),
                b: adjust(-rhs),
            }),
            ConstraintKind::Eq => {
                // equalities stay exact under strictness
                rows.push(Row {
                    a: scaled.iter().map(|v| -v).collect(),
                    b: -rhs.clone(),
                });
                rows.push(Row { a: scaled, b: rhs });
            }
        }
    }
    rows
}

/// Integer bounding box via constraint propagation, with exact LP as the
/// fallback for coordinates propagation cannot bound. Returns None when the
/// box is provably empty.
fn bounding_box(
    q: &HPolytope,
    rows: &[Row],
    m: usize,
) -> Result<Option<(Vec<BigInt>, Vec<BigInt>)>> {
    let mut lo: Vec<Option<BigInt>> = vec![None; m];
    let mut hi: Vec<Option<BigInt>> = vec![None; m];

    let max_rounds = 2 * m + 6;
    for _ in 0..max_rounds {
        let mut changed = false;
        for row in rows {
            // Minimal possible contribution of each variable, where known.
            let mut rest_total = BigInt::zero();
            let mut unknown: Vec<usize> = Vec::new();
            for (j, aj) in row.a.iter().enumerate() {
                if aj.is_zero() {
                    continue;
                }
                let contrib = if aj.is_positive() {
                    lo[j].as_ref().map(|l| aj * l)
                } else {
                    hi[j].as_ref().map(|h| aj * h)
                };
                match contrib {
                    Some(v) => rest_total += v,
                    None => unknown.push(j),
                }
            }
            if unknown.len() >= 2 {
                continue;
            }
            for (j, aj) in row.a.iter().enumerate() {
                if aj.is_zero() {
                    continue;
                }
                let (rest, bounded_j) = if unknown.is_empty() {
                    let own = if aj.is_positive() {
                        lo[j].as_ref().map(|l| aj * l).unwrap()
                    } else {
                        hi[j].as_ref().map(|h| aj * h).unwrap()
                    };
                    (&rest_total - own, j)
                } else if unknown == [j] {
                    (rest_total.clone(), j)
                } else {
                    continue;
                };
                let cap = &row.b - rest;
                if aj.is_positive() {
                    let bound = cap.div_floor(aj);
                    if hi[bounded_j].as_ref().is_none_or(|h| bound < *h) {
                        hi[bounded_j] = Some(bound);
                        changed = true;
                    }
                } else {
                    let bound = cap.div_ceil(aj);
                    if lo[bounded_j].as_ref().is_none_or(|l| bound > *l) {
                        lo[bounded_j] = Some(bound);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }

    // LP fallback for anything propagation left open; also certifies
    // unboundedness or infeasibility exactly.
    for j in 0..m {
        if hi[j].is_none() || lo[j].is_none() {
            let mut e = vec![Rational::zero(); m];
            e[j] = Rational::one();
            if hi[j].is_none() {
                match maximize(q.constraints(), &e)? {
                    LpOutcome::Infeasible => return Ok(None),
                    LpOutcome::Unbounded => return Err(Error::Unbounded),
                    LpOutcome::Optimal { value, .. } => hi[j] = Some(floor_int(&value)),
                }
            }
            if lo[j].is_none() {
                match minimize(q.constraints(), &e)? {
                    LpOutcome::Infeasible => return Ok(None),
                    LpOutcome::Unbounded => return Err(Error::Unbounded),
                    LpOutcome::Optimal { value, .. } => lo[j] = Some(ceil_int(&value)),
                }
            }
        }
    }

    let lo: Vec<BigInt> = lo.into_iter().map(Option::unwrap).collect();
    let hi: Vec<BigInt> = hi.into_iter().map(Option::unwrap).collect();
    if lo.iter().zip(&hi).any(|(l, h)| l > h) {
        return Ok(None);
    }
    Ok(Some((lo, hi)))
}

struct Search {
    m: usize,
    rows: Vec<Row>,
    lo: Vec<BigInt>,
    hi: Vec<BigInt>,
    /// suffix_min[r][j] = Σ_{l ≥ j} min(a_l·lo_l, a_l·hi_l) for row r.
    suffix_min: Vec<Vec<BigInt>>,
    /// rows touching each variable.
    by_var: Vec<Vec<usize>>,
    partial: Vec<BigInt>,
    x: Vec<BigInt>,
    found: Vec<Vec<BigInt>>,
}

impl Search {
    fn descend(&mut self, j: usize) {
        if j == self.m {
            debug_assert!(self
                .rows
                .iter()
                .zip(&self.partial)
                .all(|(r, p)| *p <= r.b));
            self.found.push(self.x.clone());
            return;
        }
        let mut lo_cur = self.lo[j].clone();
        let mut hi_cur = self.hi[j].clone();
        for &r in &self.by_var[j] {
            let aj = &self.rows[r].a[j];
            let cap = &self.rows[r].b - &self.partial[r] - &self.suffix_min[r][j + 1];
            if aj.is_positive() {
                let bound = cap.div_floor(aj);
                if bound < hi_cur {
                    hi_cur = bound;
                }
            } else {
                let bound = cap.div_ceil(aj);
                if bound > lo_cur {
                    lo_cur = bound;
                }
            }
            if lo_cur > hi_cur {
                return;
            }
        }
        // enter the range at lo_cur; each unit step adds a_rj to partials
        let touched: Vec<usize> = self.by_var[j].clone();
        for &r in &touched {
            let add = &self.rows[r].a[j] * &lo_cur;
            self.partial[r] += add;
        }
        let mut v = lo_cur.clone();
        loop {
            self.x[j] = v.clone();
            self.descend(j + 1);
            if v == hi_cur {
                break;
            }
            v += 1;
            for &r in &touched {
                let step = self.rows[r].a[j].clone();
                self.partial[r] += step;
            }
        }
        for &r in &touched {
            let sub = &self.rows[r].a[j] * &v;
            self.partial[r] -= sub;
        }
        self.x[j] = BigInt::zero();
    }
}

/// Depth-first enumeration of the integer points of a full-dimensional
/// polytope given by ≤-rows, with two-sided per-node pruning.
fn enumerate_full_dim(q: &HPolytope, strict: bool) -> Result<Vec<Vec<BigInt>>> {
    let m = q.ambient_dim();
    let rows = integer_rows(q, strict);
    let Some((lo, hi)) = bounding_box(q, &rows, m)? else {
        return Ok(Vec::new());
    };

    let mut suffix_min = Vec::with_capacity(rows.len());
    for row in &rows {
        let mut suf = vec![BigInt::zero(); m + 1];
        for j in (0..m).rev() {
            let aj = &row.a[j];
            let cell = if aj.is_zero() {
                BigInt::zero()
            } else if aj.is_positive() {
                aj * &lo[j]
            } else {
                aj * &hi[j]
            };
            suf[j] = &suf[j + 1] + cell;
        }
        suffix_min.push(suf);
    }
    let by_var: Vec<Vec<usize>> = (0..m)
        .map(|j| {
            (0..rows.len())
                .filter(|&r| !rows[r].a[j].is_zero())
                .collect()
        })
        .collect();

    // Quick infeasibility check at the root: a row whose best case already
    // exceeds its bound kills the whole box.
    for (r, row) in rows.iter().enumerate() {
        if suffix_min[r][0] > row.b {
            return Ok(Vec::new());
        }
    }

    let mut search = Search {
        m,
        partial: vec![BigInt::zero(); rows.len()],
        x: vec![BigInt::zero(); m],
        found: Vec::new(),
        rows,
        lo,
        hi,
        suffix_min,
        by_var,
    };
    search.descend(0);
    Ok(search.found)
}

/// Result of the minimal-dilation search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaResult {
    pub delta: u32,
    /// All lattice points in the relative interior of delta·P, sorted.
    pub interior_points: Vec<Vec<BigInt>>,
}

/// Finds the smallest δ ∈ [1, delta_max] for which the relative interior of
/// δ·P contains a lattice point, returning δ together with the full set of
/// interior lattice points at that dilation.
pub fn find_delta(p: &HPolytope, delta_max: u32) -> Result<DeltaResult> {
    if delta_max == 0 {
        return Err(Error::InvalidArgument("delta_max must be at least 1".into()));
    }
    let charter = chart_scan(p)?;
    for delta in 1..=delta_max {
        let big = BigInt::from(delta);
        let q = p.dilate(&Rational::from_integer(big.clone()))?;
        let Some(chart) = charter.chart(&big) else {
            continue; // this dilation's hull has no lattice points at all
        };
        let interior_points = points_in_chart(&chart, &q, true)?;
        if !interior_points.is_empty() {
            return Ok(DeltaResult {
                delta,
                interior_points,
            });
        }
    }
    Err(Error::DeltaBoundExceeded { delta_max })
}
