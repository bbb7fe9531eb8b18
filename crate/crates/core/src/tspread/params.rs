//! Validated (n, d, t) parameter triples and the n < dt normalization.

use num_bigint::BigInt;
use num_traits::One;

use crate::{Error, Result};

/// A validated parameter triple: `n` variables, degree `d`, spread `t`.
///
/// Validity means n, d, t ≥ 1 and n > t(d−1), the exact condition for at
/// least one t-spread monomial of degree d to exist in n variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpreadParams {
    n: u32,
    d: u32,
    t: u32,
}

impl SpreadParams {
    /// Validates and wraps a parameter triple.
    pub fn new(n: u32, d: u32, t: u32) -> Result<Self> {
        if t == 0 {
            return Err(Error::SpreadOutOfScope);
        }
        if d == 0 {
            return Err(Error::InvalidArgument("requires d >= 1".into()));
        }
        if n == 0 {
            return Err(Error::InvalidArgument("requires n >= 1".into()));
        }
        if u64::from(n) <= u64::from(t) * u64::from(d - 1) {
            return Err(Error::InvalidArgument(format!(
                "requires n > t(d-1): n = {n} but t(d-1) = {}",
                u64::from(t) * u64::from(d - 1)
            )));
        }
        Ok(SpreadParams { n, d, t })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    /// Number of t-spread monomials of degree d in n variables:
    /// C(n − (d−1)(t−1), d).
    pub fn generator_count(&self) -> BigInt {
        let top = u64::from(self.n) - u64::from(self.d - 1) * u64::from(self.t - 1);
        binomial(top, u64::from(self.d))
    }

    /// Normalizes n < dt down to an equivalent triple on the variables that
    /// actually occur in some generator: t' = n − (d−1)t and n' = d·t'.
    /// Triples with n ≥ dt (and everything with d = 1) are fixed points, so
    /// the map is idempotent.
    pub fn reduce(&self) -> SpreadParams {
        if self.d < 2 || u64::from(self.n) >= u64::from(self.d) * u64::from(self.t) {
            return *self;
        }
        let t = self.n - (self.d - 1) * self.t;
        let n = self.d * t;
        debug_assert!(t >= 1 && n > (self.d - 1) * t);
        SpreadParams { n, d: self.d, t }
    }
}

impl std::fmt::Display for SpreadParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(n={}, d={}, t={})", self.n, self.d, self.t)
    }
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
