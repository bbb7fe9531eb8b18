//! Vertex and facet enumeration via the double description method.
//!
//! Both directions go through the homogenization cone { y : M y ≤ 0 }:
//! constraints are processed one at a time while a generator description
//! (lineality basis + extreme rays) is maintained, with combinatorial
//! adjacency tests on tight-row bitsets.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::constraint::{ConstraintKind, LinConstraint};
use super::hpolytope::HPolytope;
use super::rational::Rational;
use super::vpolytope::VPolytope;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(words: usize) -> Self {
        Bits(vec![0; words])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    /// Whether `other` is a subset of `self`.
    fn superset_of(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| b & !a == 0)
    }
}

struct Ray {
    v: Vec<BigInt>,
    zero: Bits,
}

fn dot_int(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let mut acc = BigInt::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

fn reduce_content(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        g = g.gcd(x);
    }
    if g > BigInt::one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// a·u − b·w, content-reduced.
fn lin_comb(a: &BigInt, u: &[BigInt], b: &BigInt, w: &[BigInt]) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = u
        .iter()
        .zip(w)
        .map(|(x, y)| a * x - b * y)
        .collect();
    reduce_content(&mut out);
    out
}

/// Extreme rays and a lineality basis of { y ∈ R^dim : row · y ≤ 0 for all
/// rows }. Rays are integral with content 1.
pub(crate) fn cone_rays(dim: usize, rows: &[Vec<BigInt>]) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let words = rows.len().div_ceil(64).max(1);
    let mut lin: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| {
            let mut e = vec![BigInt::zero(); dim];
            e[i] = BigInt::one();
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (idx, m) in rows.iter().enumerate() {
        if let Some(k) = lin.iter().position(|l| !dot_int(m, l).is_zero()) {
            // The constraint cuts the lineality space: peel one direction off
            // and project the rest (and all rays) onto the hyperplane m·y = 0.
            let l0 = lin.remove(k);
            let d0 = dot_int(m, &l0);
            for l in lin.iter_mut() {
                let dl = dot_int(m, l);
                if !dl.is_zero() {
                    *l = lin_comb(&d0, l, &dl, &l0);
                }
            }
            let d0_abs = d0.abs();
            let sgn: BigInt = if d0.is_negative() {
                -BigInt::one()
            } else {
                BigInt::one()
            };
            for r in rays.iter_mut() {
                let dr = dot_int(m, &r.v);
                if !dr.is_zero() {
                    r.v = lin_comb(&d0_abs, &r.v, &(&sgn * &dr), &l0);
                }
                r.zero.set(idx);
            }
            let mut v = if d0.is_positive() {
                l0.iter().map(|x| -x).collect::<Vec<_>>()
            } else {
                l0
            };
            reduce_content(&mut v);
            let mut zero = Bits::new(words);
            for j in 0..idx {
                zero.set(j);
            }
            rays.push(Ray { v, zero });
            continue;
        }

        let dots: Vec<BigInt> = rays.iter().map(|r| dot_int(m, &r.v)).collect();
        if !dots.iter().any(|d| d.is_positive()) {
            for (r, d) in rays.iter_mut().zip(&dots) {
                if d.is_zero() {
                    r.zero.set(idx);
                }
            }
            continue;
        }

        let pos: Vec<usize> = (0..rays.len()).filter(|&i| dots[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| dots[i].is_negative()).collect();
        let mut children: Vec<Ray> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zero.and(&rays[q].zero);
                let adjacent = rays.iter().enumerate().all(|(i, r)| {
                    i == p || i == q || !r.zero.superset_of(&common)
                });
                if !adjacent {
                    continue;
                }
                // dots[p] > 0 > dots[q]; the combination below is a positive
                // combination of the two parents lying on m·y = 0.
                let v = lin_comb(&dots[p], &rays[q].v, &dots[q], &rays[p].v);
                let mut zero = common;
                zero.set(idx);
                children.push(Ray { v, zero });
            }
        }
        let mut next: Vec<Ray> = Vec::new();
        for (i, r) in rays.into_iter().enumerate() {
            if dots[i].is_positive() {
                continue;
            }
            let mut r = r;
            if dots[i].is_zero() {
                r.zero.set(idx);
            }
            next.push(r);
        }
        next.extend(children);
        rays = next;
    }

    (rays.into_iter().map(|r| r.v).collect(), lin)
}

/// Integral homogenized row (−b, a) for a ≤-oriented constraint (a, b).
fn homogenized_row(a: &[Rational], b: &Rational) -> Vec<BigInt> {
    let den = b.denom().clone();
    let mut row = Vec::with_capacity(a.len() + 1);
    row.push(-b.numer().clone());
    for ai in a {
        debug_assert!(ai.is_integer());
        row.push(ai.numer() * &den);
    }
    row
}

/// Enumerates the vertices of a bounded H-polytope. Errors with `Empty` when
/// there are no points and `Unbounded` when a recession direction exists.
pub fn vertices(p: &HPolytope) -> Result<VPolytope> {
    let n = p.ambient_dim();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for c in p.constraints() {
        let (a, b, is_eq) = c.le_oriented();
        rows.push(homogenized_row(&a, &b));
        if is_eq {
            let neg_a: Vec<Rational> = a.iter().map(|x| -x).collect();
            rows.push(homogenized_row(&neg_a, &-b));
        }
    }
    let mut x0_row = vec![BigInt::zero(); n + 1];
    x0_row[0] = -BigInt::one();
    rows.push(x0_row);

    let (rays, lin) = cone_rays(n + 1, &rows);
    let mut verts: Vec<Vec<Rational>> = Vec::new();
    let mut recession = false;
    for r in rays {
        if r[0].is_positive() {
            let den = Rational::from_integer(r[0].clone());
            verts.push(
                r[1..]
                    .iter()
                    .map(|x| Rational::from_integer(x.clone()) / &den)
                    .collect(),
            );
        } else {
            recession = true;
        }
    }
    if verts.is_empty() {
        return Err(Error::Empty);
    }
    if recession || !lin.is_empty() {
        return Err(Error::Unbounded);
    }
    VPolytope::new(n, verts)
}

/// Converts a V-polytope to an H-description: hull equations (from the polar
/// cone's lineality) plus facet inequalities (from its extreme rays).
pub fn facets_of(vp: &VPolytope) -> Result<HPolytope> {
    if vp.is_empty() {
        return Err(Error::Empty);
    }
    let n = vp.ambient_dim();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for v in vp.vertices() {
        let mut den = BigInt::one();
        for c in v {
            den = den.lcm(c.denom());
        }
        let mut row = Vec::with_capacity(n + 1);
        row.push(den.clone());
        for c in v {
            row.push((c * Rational::from_integer(den.clone())).to_integer());
        }
        rows.push(row);
    }

    let (rays, lin) = cone_rays(n + 1, &rows);
    let mut cons: Vec<LinConstraint> = Vec::new();
    for l in lin {
        let coeffs: Vec<Rational> = l[1..]
            .iter()
            .map(|x| Rational::from_integer(x.clone()))
            .collect();
        let rhs = -Rational::from_integer(l[0].clone());
        cons.push(LinConstraint::new(coeffs, ConstraintKind::Eq, rhs)?);
    }
    for r in rays {
        if r[1..].iter().all(Zero::is_zero) {
            // the trivial homogenization ray (−1, 0, …, 0)
            continue;
        }
        let coeffs: Vec<Rational> = r[1..]
            .iter()
            .map(|x| Rational::from_integer(x.clone()))
            .collect();
        let rhs = -Rational::from_integer(r[0].clone());
        cons.push(LinConstraint::new(coeffs, ConstraintKind::Le, rhs)?);
    }
    HPolytope::new(n, cons)
}
