//! Small helpers around arbitrary-precision rationals.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational number used throughout the crate.
pub type Rational = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Rational p/q. Panics if q = 0.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Largest integer ≤ r.
pub fn floor_int(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

/// Smallest integer ≥ r.
pub fn ceil_int(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}

/// Largest integer strictly less than r.
pub fn strict_floor_int(r: &Rational) -> BigInt {
    if r.is_integer() {
        r.to_integer() - BigInt::one()
    } else {
        floor_int(r)
    }
}

/// Smallest integer strictly greater than r.
pub fn strict_ceil_int(r: &Rational) -> BigInt {
    if r.is_integer() {
        r.to_integer() + BigInt::one()
    } else {
        ceil_int(r)
    }
}

/// Dot product of two equal-length rational vectors.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// Least common multiple of the coefficient denominators; always positive.
pub fn denominator_lcm(values: &[Rational]) -> BigInt {
    let mut l = BigInt::one();
    for v in values {
        l = num_integer::lcm(l, v.denom().abs());
    }
    l
}
