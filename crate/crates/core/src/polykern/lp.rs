//! Exact linear programming (dense two-phase simplex, Bland's rule).
//!
//! Variables are free; internally each coordinate is split into a difference
//! of two nonnegative variables. All pivoting is over arbitrary-precision
//! rationals, so results are exact and cycling is impossible under Bland's
//! rule.

use num_traits::{Signed, Zero};

use super::constraint::LinConstraint;
use super::rational::Rational;
use crate::{Error, Result};

/// Outcome of a linear program.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    /// The constraint system has no solution.
    Infeasible,
    /// The objective is unbounded over the feasible set.
    Unbounded,
    /// An optimal vertex and the optimal objective value.
    Optimal { value: Rational, point: Vec<Rational> },
}

/// Maximizes `objective · x` subject to the constraints.
pub fn maximize(rows: &[LinConstraint], objective: &[Rational]) -> Result<LpOutcome> {
    let n = objective.len();
    if n == 0 {
        return Err(Error::InvalidArgument("empty objective".into()));
    }
    for r in rows {
        if r.dim() != n {
            return Err(Error::InvalidArgument(format!(
                "constraint dimension {} does not match objective length {}",
                r.dim(),
                n
            )));
        }
    }
    Ok(simplex(rows, objective))
}

/// Minimizes `objective · x` subject to the constraints.
pub fn minimize(rows: &[LinConstraint], objective: &[Rational]) -> Result<LpOutcome> {
    let negated: Vec<Rational> = objective.iter().map(|c| -c).collect();
    Ok(match maximize(rows, &negated)? {
        LpOutcome::Optimal { value, point } => LpOutcome::Optimal {
            value: -value,
            point,
        },
        other => other,
    })
}

struct Tableau {
    /// Rows of the equality system, rhs in the last column.
    mat: Vec<Vec<Rational>>,
    /// Reduced-cost row; last entry is minus the current objective value.
    cost: Vec<Rational>,
    /// Basic column of each live row.
    basis: Vec<usize>,
    alive: Vec<bool>,
    total_cols: usize,
}

impl Tableau {
    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.mat[row][col].clone();
        debug_assert!(!p.is_zero());
        for v in self.mat[row].iter_mut() {
            *v /= &p;
        }
        let pivot_row = self.mat[row].clone();
        for i in 0..self.mat.len() {
            if i == row || !self.alive[i] {
                continue;
            }
            let f = self.mat[i][col].clone();
            if f.is_zero() {
                continue;
            }
            for (v, pv) in self.mat[i].iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        let f = self.cost[col].clone();
        if !f.is_zero() {
            for (v, pv) in self.cost.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &f * pv;
                }
            }
        }
        self.basis[row] = col;
    }

    /// Runs simplex iterations until optimality (Ok) or unboundedness (Err).
    /// Columns at or past `forbidden_from` never enter the basis.
    fn optimize(&mut self, forbidden_from: usize) -> std::result::Result<(), ()> {
        loop {
            // Bland: entering column is the smallest index with positive
            // reduced cost.
            let entering = (0..forbidden_from.min(self.total_cols))
                .find(|&j| self.cost[j].is_positive());
            let Some(e) = entering else {
                return Ok(());
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.mat.len() {
                if !self.alive[i] || !self.mat[i][e].is_positive() {
                    continue;
                }
                let ratio = &self.mat[i][self.total_cols] / &self.mat[i][e];
                let better = match &leave {
                    None => true,
                    Some((l, best)) => {
                        ratio < *best || (ratio == *best && self.basis[i] < self.basis[*l])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((l, _)) = leave else {
                return Err(());
            };
            self.pivot(l, e);
        }
    }

    fn objective_value(&self) -> Rational {
        -self.cost[self.total_cols].clone()
    }

    fn column_value(&self, col: usize) -> Rational {
        for (i, &b) in self.basis.iter().enumerate() {
            if self.alive[i] && b == col {
                return self.mat[i][self.total_cols].clone();
            }
        }
        Rational::zero()
    }
}

fn simplex(rows: &[LinConstraint], objective: &[Rational]) -> LpOutcome {
    let n = objective.len();
    let oriented: Vec<(Vec<Rational>, Rational, bool)> =
        rows.iter().map(|r| r.le_oriented()).collect();
    let n_ineq = oriented.iter().filter(|(_, _, eq)| !eq).count();
    let n_struct = 2 * n;
    let slack_start = n_struct;
    let art_start = slack_start + n_ineq;

    // First pass: decide which rows need an artificial column.
    // An inequality row with nonnegative rhs starts with its slack basic;
    // every other row gets an artificial.
    let mut needs_art = Vec::with_capacity(oriented.len());
    for (_, b, is_eq) in &oriented {
        needs_art.push(*is_eq || b.is_negative());
    }
    let n_art = needs_art.iter().filter(|&&x| x).count();
    let total_cols = art_start + n_art;

    let mut mat = Vec::with_capacity(oriented.len());
    let mut basis = Vec::with_capacity(oriented.len());
    let mut slack_idx = 0;
    let mut art_idx = 0;
    for ((a, b, is_eq), needs) in oriented.iter().zip(&needs_art) {
        let mut row = vec![Rational::zero(); total_cols + 1];
        let negate = b.is_negative();
        let sign = if negate { -1 } else { 1 };
        for (j, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = c * Rational::from_integer(sign.into());
            row[2 * j] = v.clone();
            row[2 * j + 1] = -v;
        }
        row[total_cols] = if negate { -b.clone() } else { b.clone() };
        if !is_eq {
            row[slack_start + slack_idx] = Rational::from_integer(sign.into());
            slack_idx += 1;
        }
        if *needs {
            row[art_start + art_idx] = Rational::from_integer(1.into());
            basis.push(art_start + art_idx);
            art_idx += 1;
        } else {
            // slack coefficient is +1 here by construction
            basis.push(slack_start + slack_idx - 1);
        }
        mat.push(row);
    }

    let alive = vec![true; mat.len()];
    let mut t = Tableau {
        mat,
        cost: vec![Rational::zero(); total_cols + 1],
        basis,
        alive,
        total_cols,
    };

    // Phase 1: maximize minus the sum of artificials. Reduced costs are the
    // raw costs priced out over the artificial basis, which amounts to adding
    // every artificial-basic row to the cost row.
    if n_art > 0 {
        for j in art_start..total_cols {
            t.cost[j] = -Rational::from_integer(1.into());
        }
        let rows_with_art: Vec<usize> = (0..t.mat.len()).filter(|&i| needs_art[i]).collect();
        for i in rows_with_art {
            let row = t.mat[i].clone();
            for (v, rv) in t.cost.iter_mut().zip(&row) {
                *v += rv;
            }
        }
        // Phase 1 cannot be unbounded: the objective is bounded above by 0.
        t.optimize(total_cols).expect("phase 1 is always bounded");
        if !t.objective_value().is_zero() {
            return LpOutcome::Infeasible;
        }
        // Drive artificial variables out of the basis; rows that admit no
        // pivot are redundant equations and are dropped.
        for i in 0..t.mat.len() {
            if t.basis[i] < art_start {
                continue;
            }
            let col = (0..art_start).find(|&j| !t.mat[i][j].is_zero());
            match col {
                Some(j) => t.pivot(i, j),
                None => t.alive[i] = false,
            }
        }
    }

    // Phase 2: the real objective over structural columns.
    let mut c = vec![Rational::zero(); total_cols + 1];
    for (j, v) in objective.iter().enumerate() {
        c[2 * j] = v.clone();
        c[2 * j + 1] = -v.clone();
    }
    t.cost = c.clone();
    for i in 0..t.mat.len() {
        if !t.alive[i] {
            continue;
        }
        let cb = c[t.basis[i]].clone();
        if cb.is_zero() {
            continue;
        }
        let row = t.mat[i].clone();
        for (v, rv) in t.cost.iter_mut().zip(&row) {
            if !rv.is_zero() {
                *v -= &cb * rv;
            }
        }
    }
    if t.optimize(art_start).is_err() {
        return LpOutcome::Unbounded;
    }

    let point: Vec<Rational> = (0..n)
        .map(|j| t.column_value(2 * j) - t.column_value(2 * j + 1))
        .collect();
    LpOutcome::Optimal {
        value: t.objective_value(),
        point,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polykern::constraint::ConstraintKind;
    use crate::polykern::rational::{rat, ratio};

    fn le(coeffs: &[i64], rhs: i64) -> LinConstraint {
        LinConstraint::from_ints(coeffs, ConstraintKind::Le, rhs).unwrap()
    }
    fn ge(coeffs: &[i64], rhs: i64) -> LinConstraint {
        LinConstraint::from_ints(coeffs, ConstraintKind::Ge, rhs).unwrap()
    }
    fn eq(coeffs: &[i64], rhs: i64) -> LinConstraint {
        LinConstraint::from_ints(coeffs, ConstraintKind::Eq, rhs).unwrap()
    }

    #[test]
    fn maximizes_over_square() {
        let rows = vec![ge(&[1, 0], 0), ge(&[0, 1], 0), le(&[1, 0], 1), le(&[0, 1], 1)];
        let out = maximize(&rows, &[rat(1), rat(1)]).unwrap();
        assert_eq!(
            out,
            LpOutcome::Optimal {
                value: rat(2),
                point: vec![rat(1), rat(1)]
            }
        );
    }

    #[test]
    fn minimizes_over_square() {
        let rows = vec![ge(&[1, 0], 0), ge(&[0, 1], 0), le(&[1, 0], 1), le(&[0, 1], 1)];
        let out = minimize(&rows, &[rat(1), rat(3)]).unwrap();
        match out {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, rat(0));
                assert_eq!(point, vec![rat(0), rat(0)]);
            }
            other => panic!("unexpected outcome {:?}", other),
        }
    }

    #[test]
    fn detects_infeasibility() {
        let rows = vec![le(&[1], -1), ge(&[1], 0)];
        assert_eq!(maximize(&rows, &[rat(1)]).unwrap(), LpOutcome::Infeasible);
    }

    #[test]
    fn detects_unboundedness() {
        let rows = vec![ge(&[1, 0], 0), ge(&[0, 1], 0)];
        assert_eq!(
            maximize(&rows, &[rat(1), rat(0)]).unwrap(),
            LpOutcome::Unbounded
        );
        // no constraints at all
        assert_eq!(maximize(&[], &[rat(1)]).unwrap(), LpOutcome::Unbounded);
    }

    #[test]
    fn handles_equalities() {
        let rows = vec![eq(&[1, 1], 1), ge(&[1, 0], 0), ge(&[0, 1], 0)];
        let out = maximize(&rows, &[rat(1), rat(0)]).unwrap();
        assert_eq!(
            out,
            LpOutcome::Optimal {
                value: rat(1),
                point: vec![rat(1), rat(0)]
            }
        );
    }

    #[test]
    fn exact_fractional_optimum() {
        let rows = vec![le(&[2, 3], 7), ge(&[1, 0], 0), ge(&[0, 1], 0)];
        let out = maximize(&rows, &[rat(1), rat(1)]).unwrap();
        assert_eq!(
            out,
            LpOutcome::Optimal {
                value: ratio(7, 2),
                point: vec![ratio(7, 2), rat(0)]
            }
        );
    }

    #[test]
    fn free_variables_go_negative() {
        let rows = vec![ge(&[1], -5)];
        let out = minimize(&rows, &[rat(1)]).unwrap();
        assert_eq!(
            out,
            LpOutcome::Optimal {
                value: rat(-5),
                point: vec![rat(-5)]
            }
        );
    }

    #[test]
    fn redundant_equalities_are_harmless() {
        let rows = vec![eq(&[1, 1], 2), eq(&[2, 2], 4), le(&[1, 0], 3), ge(&[0, 1], 0)];
        let out = maximize(&rows, &[rat(1), rat(-1)]).unwrap();
        match out {
            LpOutcome::Optimal { value, point } => {
                assert_eq!(value, rat(2));
                assert_eq!(point, vec![rat(2), rat(0)]);
            }
            other => panic!("unexpected outcome {:?}", other),
        }
    }
}
