//! Affine hulls and integral charts of their lattice points.
//!
//! A chart parametrizes { x ∈ Z^n : x on the affine hull of P } as
//! origin + B·y with y ranging over Z^m, where the columns of B are a basis
//! of the hull's lattice of directions. Charts are how boundary-free
//! enumeration, dual construction, and reflexivity checks all get to work in
//! a full-dimensional coordinate system.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::snf::{mat_vec, smith, Snf};
use crate::polykern::rational::Rational;
use crate::polykern::{maximize, minimize, ConstraintKind, HPolytope, LinConstraint, LpOutcome};
use crate::{Error, Result};

/// The affine hull of a nonempty H-polytope, as an independent list of
/// equality constraints (empty when the polytope is full-dimensional).
///
/// A constraint row is part of the hull iff it holds with equality on the
/// entire polytope; that is detected exactly with linear programming.
pub fn affine_hull(p: &HPolytope) -> Result<Vec<LinConstraint>> {
    let n = p.ambient_dim();
    let mut eq_rows: Vec<(Vec<Rational>, Rational)> = Vec::new();
    let mut ineq_rows: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for c in p.constraints() {
        let (a, b, is_eq) = c.le_oriented();
        if is_eq {
            eq_rows.push((a, b));
        } else {
            ineq_rows.push((a, b));
        }
    }

    // Margin LP over (x, λ): maximize λ subject to a·x + λ ≤ b for every
    // inequality row, equality rows exact, 0 ≤ λ ≤ 1. Infeasible means the
    // polytope is empty; a positive optimum certifies that no inequality row
    // is forced; optimum zero means at least one row is tight everywhere.
    let mut margin_rows: Vec<LinConstraint> = Vec::new();
    for (a, b) in &ineq_rows {
        let mut c = a.clone();
        c.push(Rational::one());
        margin_rows.push(LinConstraint::new(c, ConstraintKind::Le, b.clone())?);
    }
    for (a, b) in &eq_rows {
        let mut c = a.clone();
        c.push(Rational::zero());
        margin_rows.push(LinConstraint::new(c, ConstraintKind::Eq, b.clone())?);
    }
    let mut lambda_row = vec![Rational::zero(); n + 1];
    lambda_row[n] = Rational::one();
    margin_rows.push(LinConstraint::new(
        lambda_row.clone(),
        ConstraintKind::Ge,
        Rational::zero(),
    )?);
    margin_rows.push(LinConstraint::new(
        lambda_row.clone(),
        ConstraintKind::Le,
        Rational::one(),
    )?);
    let objective = lambda_row;
    let margin = match maximize(&margin_rows, &objective)? {
        LpOutcome::Infeasible => return Err(Error::Empty),
        LpOutcome::Unbounded => unreachable!("margin objective is capped at 1"),
        LpOutcome::Optimal { value, .. } => value,
    };

    let mut forced: Vec<(Vec<Rational>, Rational)> = eq_rows;
    if margin.is_zero() {
        let all_rows: Vec<LinConstraint> = p.constraints().to_vec();
        for (a, b) in &ineq_rows {
            // a·x ≤ b on all of P; the row is forced iff the minimum of a·x
            // equals b as well.
            match minimize(&all_rows, a)? {
                LpOutcome::Infeasible => return Err(Error::Empty),
                LpOutcome::Unbounded => {}
                LpOutcome::Optimal { value, .. } => {
                    if value == *b {
                        forced.push((a.clone(), b.clone()));
                    }
                }
            }
        }
    }

    // Row-reduce to an independent basis of the hull equations.
    let mut rows: Vec<Vec<Rational>> = forced
        .into_iter()
        .map(|(mut a, b)| {
            a.push(b);
            a
        })
        .collect();
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    let mut pivot_cols: Vec<usize> = Vec::new();
    for col in 0..n {
        let Some(r) = rows.iter().position(|row| !row[col].is_zero()) else {
            continue;
        };
        let row = rows.swap_remove(r);
        for other in rows.iter_mut() {
            if !other[col].is_zero() {
                let f = &other[col] / &row[col];
                for (o, v) in other.iter_mut().zip(&row) {
                    *o -= &f * v;
                }
            }
        }
        for prev in basis.iter_mut() {
            if !prev[col].is_zero() {
                let f = &prev[col] / &row[col];
                for (o, v) in prev.iter_mut().zip(&row) {
                    *o -= &f * v;
                }
            }
        }
        basis.push(row);
        pivot_cols.push(col);
    }
    // Any leftover row must be all-zero with zero rhs (the system came from
    // a feasible polytope).
    debug_assert!(rows
        .iter()
        .all(|row| row.iter().all(Zero::is_zero) || row[..n].iter().any(|v| !v.is_zero())));

    let mut hull = Vec::with_capacity(basis.len());
    for row in basis {
        let (coeffs, rhs) = row.split_at(n);
        hull.push(LinConstraint::new(
            coeffs.to_vec(),
            ConstraintKind::Eq,
            rhs[0].clone(),
        )?);
    }
    Ok(hull)
}

/// An integral chart of the lattice points on an affine subspace:
/// x = origin + B·y is a bijection Z^m → (hull ∩ Z^n), with `forward`
/// inverting it via y = F·(x − origin).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeChart {
    ambient_dim: usize,
    origin: Vec<BigInt>,
    /// m columns of length n.
    basis: Vec<Vec<BigInt>>,
    /// m rows of length n.
    forward: Vec<Vec<BigInt>>,
}

/// Result of mapping an H-polytope through a chart.
#[derive(Debug, Clone)]
pub enum ChartImage {
    /// A constraint with no component along the chart fails identically.
    Empty,
    /// The chart is 0-dimensional and every constraint is satisfied: the
    /// origin is the unique candidate point.
    Origin,
    /// The full-dimensional image polytope in chart coordinates.
    Poly(HPolytope),
}

impl LatticeChart {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Dimension of the chart (the lattice rank of the hull's directions).
    pub fn intrinsic_dim(&self) -> usize {
        self.basis.len()
    }

    pub fn origin(&self) -> &[BigInt] {
        &self.origin
    }

    /// Chart coordinates y → ambient lattice point origin + B·y.
    pub fn to_ambient(&self, y: &[BigInt]) -> Vec<BigInt> {
        debug_assert_eq!(y.len(), self.basis.len());
        let mut x = self.origin.clone();
        for (col, yi) in self.basis.iter().zip(y) {
            if yi.is_zero() {
                continue;
            }
            for (xi, ci) in x.iter_mut().zip(col) {
                *xi += yi * ci;
            }
        }
        x
    }

    /// Ambient lattice point → chart coordinates, or None when x does not
    /// lie on the chart's affine lattice.
    pub fn to_chart(&self, x: &[BigInt]) -> Option<Vec<BigInt>> {
        if x.len() != self.ambient_dim {
            return None;
        }
        let diff: Vec<BigInt> = x.iter().zip(&self.origin).map(|(a, b)| a - b).collect();
        let y = mat_vec(&self.forward, &diff);
        if self.to_ambient(&y) == x { Some(y) } else { None }
    }

    /// The same chart re-anchored at a different lattice point of the hull.
    pub fn with_origin(&self, origin: &[BigInt]) -> Result<LatticeChart> {
        if self.to_chart(origin).is_none() {
            return Err(Error::InvalidArgument(
                "new origin is not a lattice point of the chart's affine hull".into(),
            ));
        }
        Ok(LatticeChart {
            ambient_dim: self.ambient_dim,
            origin: origin.to_vec(),
            basis: self.basis.clone(),
            forward: self.forward.clone(),
        })
    }

    /// Re-coordinatizes the chart by a unimodular change of chart
    /// coordinates: y = u·y' turns x = origin + B·y into
    /// x = origin + (B·u)·y'. `u_inv` must be the exact integer inverse of
    /// `u`; together they certify unimodularity.
    pub fn compose_unimodular(
        &self,
        u: &[Vec<BigInt>],
        u_inv: &[Vec<BigInt>],
    ) -> Result<LatticeChart> {
        let m = self.intrinsic_dim();
        let square = |mat: &[Vec<BigInt>]| mat.len() == m && mat.iter().all(|r| r.len() == m);
        if !square(u) || !square(u_inv) {
            return Err(Error::InvalidArgument(format!(
                "chart transform must be {m}x{m}"
            )));
        }
        for (i, u_row) in u.iter().enumerate() {
            let mut prod_row = vec![BigInt::zero(); m];
            for (uik, inv_row) in u_row.iter().zip(u_inv) {
                if uik.is_zero() {
                    continue;
                }
                for (cell, vkj) in prod_row.iter_mut().zip(inv_row) {
                    *cell += uik * vkj;
                }
            }
            for (j, cell) in prod_row.iter().enumerate() {
                let expect = if i == j { BigInt::one() } else { BigInt::zero() };
                if *cell != expect {
                    return Err(Error::InvalidArgument(
                        "chart transform and claimed inverse do not multiply to identity".into(),
                    ));
                }
            }
        }
        let basis: Vec<Vec<BigInt>> = (0..m)
            .map(|j| {
                let mut col = vec![BigInt::zero(); self.ambient_dim];
                for (i, old) in self.basis.iter().enumerate() {
                    if u[i][j].is_zero() {
                        continue;
                    }
                    for (slot, v) in col.iter_mut().zip(old) {
                        *slot += &u[i][j] * v;
                    }
                }
                col
            })
            .collect();
        let forward: Vec<Vec<BigInt>> = (0..m)
            .map(|i| {
                let mut row = vec![BigInt::zero(); self.ambient_dim];
                for (k, old) in self.forward.iter().enumerate() {
                    if u_inv[i][k].is_zero() {
                        continue;
                    }
                    for (slot, v) in row.iter_mut().zip(old) {
                        *slot += &u_inv[i][k] * v;
                    }
                }
                row
            })
            .collect();
        Ok(LatticeChart {
            ambient_dim: self.ambient_dim,
            origin: self.origin.clone(),
            basis,
            forward,
        })
    }

    /// Maps an H-polytope (living in the ambient space) into chart
    /// coordinates. Constraints with no component along the chart are
    /// resolved on the spot: hull rows disappear, trivially-true rows are
    /// dropped, violated rows make the image empty.
    pub fn image(&self, p: &HPolytope) -> Result<ChartImage> {
        debug_assert_eq!(p.ambient_dim(), self.ambient_dim);
        let m = self.intrinsic_dim();
        let origin_rat: Vec<Rational> = self
            .origin
            .iter()
            .map(|v| Rational::from_integer(v.clone()))
            .collect();
        let mut rows = Vec::new();
        for c in p.constraints() {
            let a = c.coeffs();
            let mapped: Vec<BigInt> = self
                .basis
                .iter()
                .map(|col| {
                    let mut acc = BigInt::zero();
                    for (ai, ci) in a.iter().zip(col) {
                        if !ai.is_zero() && !ci.is_zero() {
                            acc += ai * ci;
                        }
                    }
                    acc
                })
                .collect();
            let shift = c.eval(&origin_rat);
            let rhs = c.rhs() - shift;
            if mapped.iter().all(Zero::is_zero) {
                let ok = match c.kind() {
                    ConstraintKind::Le => rhs >= Rational::zero(),
                    ConstraintKind::Ge => rhs <= Rational::zero(),
                    ConstraintKind::Eq => rhs.is_zero(),
                };
                if !ok {
                    return Ok(ChartImage::Empty);
                }
                continue;
            }
            rows.push(LinConstraint::new(
                mapped
                    .into_iter()
                    .map(Rational::from_integer)
                    .collect(),
                c.kind(),
                rhs,
            )?);
        }
        if m == 0 {
            return Ok(ChartImage::Origin);
        }
        Ok(ChartImage::Poly(HPolytope::new(m, rows)?))
    }
}

/// Precomputed chart machinery for one affine hull, reusable across
/// dilations: the hull's integer equation system A·x = δ·c has a
/// δ-independent Smith normal form, so scanning dilations only repeats the
/// origin solve.
pub(crate) struct HullCharter {
    ambient_dim: usize,
    /// None when the hull is all of R^n (identity chart).
    system: Option<HullSystem>,
}

struct HullSystem {
    snf: Snf,
    /// w = U·c where A·x = c is the system at dilation 1.
    w: Vec<BigInt>,
}

impl HullCharter {
    /// Builds the charter from the affine hull of `p` (at dilation 1).
    pub fn new(p: &HPolytope) -> Result<Self> {
        let hull = affine_hull(p)?;
        Self::from_equalities(p.ambient_dim(), &hull)
    }

    pub fn from_equalities(n: usize, hull: &[LinConstraint]) -> Result<Self> {
        if hull.is_empty() {
            return Ok(HullCharter {
                ambient_dim: n,
                system: None,
            });
        }
        let mut a_rows: Vec<Vec<BigInt>> = Vec::with_capacity(hull.len());
        let mut c_vec: Vec<BigInt> = Vec::with_capacity(hull.len());
        for row in hull {
            debug_assert_eq!(row.kind(), ConstraintKind::Eq);
            let den = row.rhs().denom().clone();
            a_rows.push(row.coeffs().iter().map(|v| v * &den).collect());
            c_vec.push(row.rhs().numer().clone());
        }
        let snf = smith(&a_rows);
        let w = mat_vec(&snf.u, &c_vec);
        // Rows past the rank must be consistent; the hull of a nonempty
        // polytope always is.
        debug_assert!(w[snf.rank..].iter().all(Zero::is_zero));
        Ok(HullCharter {
            ambient_dim: n,
            system: Some(HullSystem { snf, w }),
        })
    }

    /// Chart of the hull scaled by δ ≥ 1 (the hull of δP when the charter
    /// was built from P). Returns None when the scaled hull carries no
    /// lattice points.
    pub fn chart(&self, delta: &BigInt) -> Option<LatticeChart> {
        let n = self.ambient_dim;
        let Some(sys) = &self.system else {
            let basis: Vec<Vec<BigInt>> = (0..n)
                .map(|i| {
                    let mut e = vec![BigInt::zero(); n];
                    e[i] = BigInt::one();
                    e
                })
                .collect();
            return Some(LatticeChart {
                ambient_dim: n,
                origin: vec![BigInt::zero(); n],
                basis: basis.clone(),
                forward: basis,
            });
        };
        let snf = &sys.snf;
        let mut z = vec![BigInt::zero(); n];
        for (zi, (wi, di)) in z
            .iter_mut()
            .zip(sys.w.iter().zip(&snf.diag))
            .take(snf.rank)
        {
            let yi = delta * wi;
            let (q, r) = yi.div_rem(di);
            if !r.is_zero() {
                return None;
            }
            *zi = q;
        }
        // origin = V·z; basis = columns rank..n of V; forward = rows rank..n
        // of V^{-1}.
        let origin = mat_vec(&snf.v, &z);
        let m = n - snf.rank;
        let mut basis = Vec::with_capacity(m);
        for j in snf.rank..n {
            basis.push((0..n).map(|i| snf.v[i][j].clone()).collect());
        }
        let forward: Vec<Vec<BigInt>> = snf.v_inv[snf.rank..].to_vec();
        Some(LatticeChart {
            ambient_dim: n,
            origin,
            basis,
            forward,
        })
    }
}

/// Integral chart of the lattice points on the affine hull of `p`.
/// Errors with `Empty` when `p` has no points at all and with
/// `NoLatticePoints` when the hull is a genuine affine subspace containing
/// no integer point.
pub fn lattice_chart(p: &HPolytope) -> Result<LatticeChart> {
    let charter = HullCharter::new(p)?;
    charter
        .chart(&BigInt::one())
        .ok_or(Error::NoLatticePoints)
}

/// Shared scan state for `find_delta`: one hull + one Smith normal form,
/// re-anchored per dilation.
pub(crate) fn chart_scan(p: &HPolytope) -> Result<HullCharter> {
    HullCharter::new(p)
}
