//! Smith normal form over the integers with full transform tracking.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Smith normal form of an integer matrix A (r×c): U·A·V = D with U, V
/// unimodular, D diagonal with nonnegative entries satisfying d_i | d_{i+1}.
/// V^{-1} is tracked alongside V so kernel charts can invert the coordinate
/// change without a separate matrix inversion.
#[derive(Debug, Clone)]
pub struct Snf {
    pub diag: Vec<BigInt>,
    pub rank: usize,
    pub u: Vec<Vec<BigInt>>,
    pub v: Vec<Vec<BigInt>>,
    pub v_inv: Vec<Vec<BigInt>>,
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| {
            let mut row = vec![BigInt::zero(); n];
            row[i] = BigInt::one();
            row
        })
        .collect()
}

/// mat · vec for a dense integer matrix in row-major order.
pub(crate) fn mat_vec(mat: &[Vec<BigInt>], vec: &[BigInt]) -> Vec<BigInt> {
    mat.iter()
        .map(|row| {
            let mut acc = BigInt::zero();
            for (a, b) in row.iter().zip(vec) {
                if !a.is_zero() && !b.is_zero() {
                    acc += a * b;
                }
            }
            acc
        })
        .collect()
}

struct Work {
    m: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
    v_inv: Vec<Vec<BigInt>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.m.swap(i, j);
        self.u.swap(i, j);
    }

    /// row_i += q · row_j (on M and U)
    fn add_row(&mut self, i: usize, j: usize, q: &BigInt) {
        for k in 0..self.m[i].len() {
            let t = q * &self.m[j][k];
            self.m[i][k] += t;
        }
        for k in 0..self.u[i].len() {
            let t = q * &self.u[j][k];
            self.u[i][k] += t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.m[i].iter_mut() {
            *x = -std::mem::take(x);
        }
        for x in self.u[i].iter_mut() {
            *x = -std::mem::take(x);
        }
    }

    /// Columns i and j swap in M and V; V^{-1} swaps the corresponding rows.
    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in self.m.iter_mut() {
            row.swap(i, j);
        }
        for row in self.v.iter_mut() {
            row.swap(i, j);
        }
        self.v_inv.swap(i, j);
    }

    /// col_i += q · col_j on M and V; the inverse op on V^{-1} is
    /// row_j −= q · row_i.
    fn add_col(&mut self, i: usize, j: usize, q: &BigInt) {
        for row in self.m.iter_mut() {
            let t = q * &row[j];
            row[i] += t;
        }
        for row in self.v.iter_mut() {
            let t = q * &row[j];
            row[i] += t;
        }
        for k in 0..self.v_inv[j].len() {
            let t = q * &self.v_inv[i][k];
            self.v_inv[j][k] -= t;
        }
    }
}

/// Computes the Smith normal form. The input rows must all have equal
/// length; an empty matrix (no rows) is allowed.
pub fn smith(a: &[Vec<BigInt>]) -> Snf {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut w = Work {
        m: a.to_vec(),
        u: identity(rows),
        v: identity(cols),
        v_inv: identity(cols),
    };

    let mut p = 0;
    while p < rows.min(cols) {
        // Smallest-magnitude nonzero entry of the trailing submatrix becomes
        // the pivot; if the submatrix is zero we are done.
        let mut best: Option<(usize, usize)> = None;
        for i in p..rows {
            for j in p..cols {
                if w.m[i][j].is_zero() {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bi, bj)) => w.m[i][j].abs() < w.m[bi][bj].abs(),
                };
                if better {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else {
            break;
        };
        if bi != p {
            w.swap_rows(p, bi);
        }
        if bj != p {
            w.swap_cols(p, bj);
        }

        'reduce: loop {
            // Clear the pivot column. A nonzero remainder becomes the new,
            // strictly smaller pivot.
            for i in (p + 1)..rows {
                if w.m[i][p].is_zero() {
                    continue;
                }
                let q = -(&w.m[i][p] / &w.m[p][p]);
                if !q.is_zero() {
                    w.add_row(i, p, &q);
                }
                if !w.m[i][p].is_zero() {
                    w.swap_rows(p, i);
                    continue 'reduce;
                }
            }
            // Clear the pivot row.
            for j in (p + 1)..cols {
                if w.m[p][j].is_zero() {
                    continue;
                }
                let q = -(&w.m[p][j] / &w.m[p][p]);
                if !q.is_zero() {
                    w.add_col(j, p, &q);
                }
                if !w.m[p][j].is_zero() {
                    w.swap_cols(p, j);
                    continue 'reduce;
                }
            }
            // Divisibility: the pivot must divide the whole trailing block;
            // pulling an offending row into row p restarts the reduction with
            // a smaller eventual pivot.
            for i in (p + 1)..rows {
                for j in (p + 1)..cols {
                    if !(&w.m[i][j] % &w.m[p][p]).is_zero() {
                        w.add_row(p, i, &BigInt::one());
                        continue 'reduce;
                    }
                }
            }
            break;
        }

        if w.m[p][p].is_negative() {
            w.negate_row(p);
        }
        p += 1;
    }

    let rank = p;
    let diag: Vec<BigInt> = (0..rows.min(cols)).map(|i| w.m[i][i].clone()).collect();
    Snf {
        diag,
        rank,
        u: w.u,
        v: w.v,
        v_inv: w.v_inv,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn mat(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| bi(x)).collect())
            .collect()
    }

    fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
        let n = a.len();
        let k = b.len();
        let m = if k == 0 { 0 } else { b[0].len() };
        (0..n)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        let mut acc = BigInt::zero();
                        for l in 0..k {
                            acc += &a[i][l] * &b[l][j];
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }

    fn check_invariants(a: &[Vec<BigInt>]) -> Snf {
        let s = smith(a);
        let rows = a.len();
        let cols = a.first().map_or(0, Vec::len);
        // U·A·V is diagonal with the reported diagonal
        let uav = mat_mul(&mat_mul(&s.u, a), &s.v);
        assert_eq!(uav.len(), rows);
        for (i, row) in uav.iter().enumerate() {
            assert_eq!(row.len(), cols);
            for (j, cell) in row.iter().enumerate() {
                let expect = if i == j {
                    s.diag[i].clone()
                } else {
                    BigInt::zero()
                };
                assert_eq!(*cell, expect, "UAV not diagonal at ({i},{j})");
            }
        }
        // V · V^{-1} = I
        let vv = mat_mul(&s.v, &s.v_inv);
        for (i, row) in vv.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                let expect = if i == j { BigInt::one() } else { BigInt::zero() };
                assert_eq!(*cell, expect, "V·V^-1 not identity at ({i},{j})");
            }
        }
        // diagonal: nonneg, nonzero prefix of length rank, divisibility chain
        for i in 0..s.diag.len() {
            assert!(s.diag[i] >= BigInt::zero());
            assert_eq!(i < s.rank, !s.diag[i].is_zero());
        }
        for i in 1..s.rank {
            assert!((&s.diag[i] % &s.diag[i - 1]).is_zero(), "chain broken");
        }
        s
    }

    #[test]
    fn known_small_forms() {
        let s = check_invariants(&mat(&[&[2, 4], &[6, 8]]));
        assert_eq!(s.diag, vec![bi(2), bi(4)]);
        let s = check_invariants(&mat(&[&[1, 0], &[0, 1]]));
        assert_eq!(s.diag, vec![bi(1), bi(1)]);
        let s = check_invariants(&mat(&[&[0, 0], &[0, 0]]));
        assert_eq!(s.rank, 0);
        let s = check_invariants(&mat(&[&[6, 10, 15]]));
        assert_eq!(s.diag, vec![bi(1)]); // gcd(6,10,15) = 1
    }

    #[test]
    fn rectangular_and_negative_entries() {
        check_invariants(&mat(&[&[3, -6, 9], &[-2, 4, -8]]));
        check_invariants(&mat(&[&[5], &[7], &[-11]]));
        let s = check_invariants(&mat(&[&[2, 0], &[0, 3], &[0, 0]]));
        assert_eq!(s.diag, vec![bi(1), bi(6)]); // chain fixes 2,3 into 1,6
    }

    #[test]
    fn pseudo_random_matrices() {
        // simple LCG so the test is deterministic without extra deps
        let mut state: u64 = 0x9E3779B97F4A7C15;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 21) as i64 - 10
        };
        for rows in 1..=4usize {
            for cols in 1..=4usize {
                for _ in 0..8 {
                    let a: Vec<Vec<BigInt>> = (0..rows)
                        .map(|_| (0..cols).map(|_| bi(next())).collect())
                        .collect();
                    check_invariants(&a);
                }
            }
        }
    }
}
