//! The monomial side of the problem: t-spread generators of a fixed degree,
//! their exponent matrix and its rank (the Krull dimension of the toric
//! algebra they span), the n < dt parameter normalization, and the projected
//! generator polytope the geometric pipeline works on.

mod monomial;
mod params;

pub use monomial::{is_sorted_tuple, sort_pair, Monomial};
pub use params::SpreadParams;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::polykern::{ConstraintKind, HPolytope, LinConstraint};
use crate::{Error, Result};

/// All t-spread monomials of degree d in n variables, in descending
/// lexicographic order (equivalently: ascending order of support tuples).
pub fn generate(p: &SpreadParams) -> Vec<Monomial> {
    let (n, d, t) = (p.n(), p.d(), p.t());
    let mut out = Vec::new();
    let mut support = Vec::with_capacity(d as usize);
    fn rec(n: u32, d: u32, t: u32, support: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let level = support.len() as u32;
        if level == d {
            out.push(Monomial::from_support(n, support).expect("valid support"));
            return;
        }
        let lo = support.last().map_or(1, |&last| last + t);
        let hi = n - (d - level - 1) * t;
        for i in lo..=hi {
            support.push(i);
            rec(n, d, t, support, out);
            support.pop();
        }
    }
    rec(n, d, t, &mut support, &mut out);
    debug_assert_eq!(BigInt::from(out.len()), p.generator_count());
    out
}

/// Zero-one matrix whose rows are the exponent vectors of `generate(p)`,
/// in the same order.
pub fn exponent_matrix(p: &SpreadParams) -> Vec<Vec<u32>> {
    generate(p).iter().map(|m| m.exponents().to_vec()).collect()
}

/// Krull dimension of the algebra spanned by the generators: since all
/// generators share degree d, this is the rank of the exponent matrix over
/// the rationals.
pub fn krull_dimension(p: &SpreadParams) -> u32 {
    let m: Vec<Vec<BigInt>> = exponent_matrix(p)
        .into_iter()
        .map(|row| row.into_iter().map(BigInt::from).collect())
        .collect();
    rank(m)
}

/// Fraction-free Gaussian elimination (Bareiss): exact rank of an integer
/// matrix.
fn rank(mut m: Vec<Vec<BigInt>>) -> u32 {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut prev = BigInt::from(1);
    let mut r = 0usize;
    for c in 0..cols {
        let Some(pivot_row) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pivot_row);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                debug_assert!((&num % &prev).is_zero());
                m[i][j] = num / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r as u32
}

/// True iff the toric generators are algebraically independent, i.e. the
/// algebra they span is a polynomial ring: the generator count equals the
/// rank of the exponent matrix.
pub fn is_polynomial_ring(p: &SpreadParams) -> bool {
    p.generator_count() == BigInt::from(krull_dimension(p))
}

/// 1-based indices of the variables that occur in at least one generator.
/// For n ≥ dt (and all of d = 1) this is every variable; for n < dt the
/// gaps between consecutive index windows never occur, and renumbering the
/// survivors identifies the generators with those of `p.reduce()`.
pub fn kept_variables(p: &SpreadParams) -> Vec<u32> {
    let (n, d, t) = (p.n(), p.d(), p.t());
    if d < 2 || u64::from(n) >= u64::from(d) * u64::from(t) {
        return (1..=n).collect();
    }
    let mut dropped = vec![false; n as usize + 1];
    for l in 1..d {
        // variables strictly between window l's maximum n-(d-l)t and
        // window l+1's minimum lt+1
        for v in (n - (d - l) * t + 1)..=(l * t) {
            dropped[v as usize] = true;
        }
    }
    let kept: Vec<u32> = (1..=n).filter(|&v| !dropped[v as usize]).collect();
    debug_assert_eq!(kept.len() as u32, p.reduce().n());
    kept
}

/// The projected generator polytope P ⊂ R^{n−1}: the convex hull of the
/// generator exponent vectors with the last coordinate eliminated via
/// a_n = d − Σ a_i. Constraints: a_i ≥ 0; each window of t consecutive
/// coordinates sums to at most 1; the first n−t coordinates sum to at least
/// d−1; all n−1 coordinates sum to at most d (the eliminated coordinate's
/// nonnegativity).
pub fn build_polytope(p: &SpreadParams) -> Result<HPolytope> {
    let (n, d, t) = (p.n() as usize, p.d() as i64, p.t() as usize);
    if n < 2 {
        return Err(Error::InvalidArgument(
            "the projected polytope needs n >= 2".into(),
        ));
    }
    let dim = n - 1;
    let mut rows = Vec::new();
    for i in 0..dim {
        let mut coeffs = vec![0i64; dim];
        coeffs[i] = 1;
        rows.push(LinConstraint::from_ints(&coeffs, ConstraintKind::Ge, 0)?);
    }
    if n > t {
        for i in 0..=(n - t - 1) {
            let mut coeffs = vec![0i64; dim];
            for slot in coeffs.iter_mut().skip(i).take(t) {
                *slot = 1;
            }
            rows.push(LinConstraint::from_ints(&coeffs, ConstraintKind::Le, 1)?);
        }
        let mut lower = vec![0i64; dim];
        for slot in lower.iter_mut().take(n - t) {
            *slot = 1;
        }
        rows.push(LinConstraint::from_ints(&lower, ConstraintKind::Ge, d - 1)?);
    }
    rows.push(LinConstraint::from_ints(
        &vec![1i64; dim],
        ConstraintKind::Le,
        d,
    )?);
    HPolytope::new(dim, rows)
}

/// Maps a point from the projected polytope of `p.reduce()` back to the
/// projected coordinates of `p` itself: restore the eliminated coordinate
/// (the point sits at dilation `dilation`, so coordinates sum to
/// dilation·d), scatter onto the kept variables with zeros elsewhere, and
/// re-eliminate the last original coordinate.
pub fn lift_point(p: &SpreadParams, point: &[BigInt], dilation: u32) -> Result<Vec<BigInt>> {
    let q = p.reduce();
    if point.len() + 1 != q.n() as usize {
        return Err(Error::InvalidArgument(format!(
            "expected a point with {} coordinates, got {}",
            q.n() - 1,
            point.len()
        )));
    }
    let total = BigInt::from(u64::from(dilation) * u64::from(p.d()));
    let last = &total - point.iter().sum::<BigInt>();
    if last.is_negative() {
        return Err(Error::InvalidArgument(
            "point coordinates exceed the dilation budget".into(),
        ));
    }
    let mut full = vec![BigInt::zero(); p.n() as usize];
    let kept = kept_variables(p);
    for (slot, value) in kept
        .iter()
        .zip(point.iter().cloned().chain(std::iter::once(last)))
    {
        full[(slot - 1) as usize] = value;
    }
    full.pop();
    Ok(full)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::latgeom::lattice_points;

    fn params(n: u32, d: u32, t: u32) -> SpreadParams {
        SpreadParams::new(n, d, t).unwrap()
    }

    #[test]
    fn generators_in_descending_lex_order() {
        let gens = generate(&params(5, 2, 2));
        let supports: Vec<Vec<u32>> = gens.iter().map(|m| m.support()).collect();
        assert_eq!(
            supports,
            vec![
                vec![1, 3],
                vec![1, 4],
                vec![1, 5],
                vec![2, 4],
                vec![2, 5],
                vec![3, 5]
            ]
        );
        assert_eq!(gens[0].to_string(), "x1*x3");
        // descending lexicographic = strictly decreasing exponent vectors
        assert!(gens.windows(2).all(|w| w[0] > w[1]));
        assert!(gens.iter().all(|g| g.is_tspread(2) && g.degree() == 2));
    }

    #[test]
    fn single_generator_at_the_lower_boundary() {
        let gens = generate(&params(9, 3, 4));
        assert_eq!(gens.len(), 1);
        assert_eq!(gens[0].support(), vec![1, 5, 9]);
        assert_eq!(gens[0].to_string(), "x1*x5*x9");
    }

    #[test]
    fn generator_count_matches_exhaustive_filter() {
        for n in 1..=10u32 {
            for d in 1..=4u32 {
                for t in 1..=4u32 {
                    let Ok(p) = SpreadParams::new(n, d, t) else {
                        continue;
                    };
                    let fast = generate(&p).len();
                    // filter all squarefree supports directly
                    let mut slow = 0usize;
                    let mut stack = vec![Vec::<u32>::new()];
                    while let Some(s) = stack.pop() {
                        if s.len() == d as usize {
                            let m = Monomial::from_support(n, &s).unwrap();
                            if m.is_tspread(t) {
                                slow += 1;
                            }
                            continue;
                        }
                        let lo = s.last().map_or(1, |&v| v + 1);
                        for i in lo..=n {
                            let mut next = s.clone();
                            next.push(i);
                            stack.push(next);
                        }
                    }
                    assert_eq!(fast, slow, "{p}");
                    assert_eq!(BigInt::from(fast), p.generator_count(), "{p}");
                }
            }
        }
    }

    #[test]
    fn descending_lex_generators_of_two_past_boundary_are_sorted() {
        // n = (d-1)t+2 makes the full generator tuple pairwise sorted
        for (d, t) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
            let p = params((d - 1) * t + 2, d, t);
            assert!(is_sorted_tuple(&generate(&p)).unwrap(), "{p}");
        }
        // ... and one step further it no longer is
        assert!(!is_sorted_tuple(&generate(&params(7, 3, 2))).unwrap());
    }

    #[test]
    fn krull_dimension_values() {
        assert_eq!(krull_dimension(&params(10, 3, 2)), 10); // n >= dt+1
        assert_eq!(krull_dimension(&params(10, 5, 2)), 6); // n = dt: n-d+1
        assert_eq!(krull_dimension(&params(5, 2, 2)), 5);
        assert_eq!(krull_dimension(&params(8, 3, 2)), 8);
        assert_eq!(krull_dimension(&params(11, 3, 4)), 7); // via reduction to (9,3,3)
        assert_eq!(
            krull_dimension(&params(11, 3, 4)),
            krull_dimension(&params(11, 3, 4).reduce())
        );
    }

    #[test]
    fn polynomial_ring_boundary() {
        assert!(is_polynomial_ring(&params(5, 3, 2))); // (d-1)t+1
        assert!(is_polynomial_ring(&params(6, 3, 2))); // (d-1)t+2
        assert!(!is_polynomial_ring(&params(7, 3, 2)));
        assert!(!is_polynomial_ring(&params(8, 3, 2)));
        assert!(is_polynomial_ring(&params(4, 1, 1))); // d = 1 always
    }

    #[test]
    fn kept_variables_match_reduction() {
        assert_eq!(
            kept_variables(&params(11, 3, 4)),
            vec![1, 2, 3, 5, 6, 7, 9, 10, 11]
        );
        assert_eq!(kept_variables(&params(8, 3, 3)), vec![1, 2, 4, 5, 7, 8]);
        assert_eq!(kept_variables(&params(5, 2, 2)), vec![1, 2, 3, 4, 5]);
        // the kept variables are exactly the union of generator supports
        for (n, d, t) in [(11, 3, 4), (8, 3, 3), (14, 4, 4), (7, 2, 4)] {
            let p = params(n, d, t);
            let mut used = vec![false; n as usize + 1];
            for g in generate(&p) {
                for v in g.support() {
                    used[v as usize] = true;
                }
            }
            let expected: Vec<u32> = (1..=n).filter(|&v| used[v as usize]).collect();
            assert_eq!(kept_variables(&p), expected, "{p}");
        }
    }

    #[test]
    fn reduction_renumbers_generators_exactly() {
        for (n, d, t) in [(11, 3, 4), (8, 3, 3), (14, 4, 4)] {
            let p = params(n, d, t);
            let q = p.reduce();
            let kept = kept_variables(&p);
            let renumber: std::collections::HashMap<u32, u32> = kept
                .iter()
                .enumerate()
                .map(|(i, &v)| (v, i as u32 + 1))
                .collect();
            let relabeled: Vec<Monomial> = generate(&p)
                .iter()
                .map(|g| {
                    let s: Vec<u32> = g.support().iter().map(|v| renumber[v]).collect();
                    Monomial::from_support(q.n(), &s).unwrap()
                })
                .collect();
            assert_eq!(relabeled, generate(&q), "{p}");
        }
    }

    #[test]
    fn polytope_shape() {
        let p = build_polytope(&params(10, 3, 2)).unwrap();
        assert_eq!(p.ambient_dim(), 9);
        // 9 sign rows + 8 windows + lower sum + upper sum
        assert_eq!(p.constraints().len(), 19);
        let q = build_polytope(&params(8, 2, 3)).unwrap();
        assert_eq!(q.ambient_dim(), 7);
        // 7 sign rows + 5 windows + lower sum + upper sum
        assert_eq!(q.constraints().len(), 14);
    }

    #[test]
    fn polytope_lattice_points_are_the_projected_generators() {
        for (n, d, t) in [(5, 2, 2), (6, 3, 2), (8, 2, 3), (9, 3, 4), (5, 1, 2)] {
            let p = params(n, d, t);
            let poly = build_polytope(&p).unwrap();
            let pts = lattice_points(&poly, false).unwrap();
            let mut expected: Vec<Vec<BigInt>> = generate(&p)
                .iter()
                .map(|g| {
                    g.exponents()[..(n - 1) as usize]
                        .iter()
                        .map(|&e| BigInt::from(e))
                        .collect()
                })
                .collect();
            expected.sort();
            expected.dedup();
            assert_eq!(pts, expected, "{p}");
        }
    }

    #[test]
    fn lifting_restores_original_coordinates() {
        let p = params(11, 3, 4);
        let reduced_point: Vec<BigInt> =
            [3, 1, 1, 2, 1, 2, 1, 1].iter().map(|&v| BigInt::from(v)).collect();
        let lifted = lift_point(&p, &reduced_point, 5).unwrap();
        let expected: Vec<BigInt> = [3, 1, 1, 0, 2, 1, 2, 0, 1, 1]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(lifted, expected);
        // identity case: no reduction, lift keeps the point
        let q = params(5, 2, 2);
        let pt: Vec<BigInt> = [1, 0, 1, 0].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(lift_point(&q, &pt, 1).unwrap(), pt);
    }
}
