//! Canonical linear constraints.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::rational::{denominator_lcm, dot, Rational};
use crate::{Error, Result};

/// Relation of a linear constraint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConstraintKind {
    /// a·x ≤ b
    Le,
    /// a·x ≥ b
    Ge,
    /// a·x = b
    Eq,
}

impl ConstraintKind {
    fn flipped(self) -> Self {
        match self {
            ConstraintKind::Le => ConstraintKind::Ge,
            ConstraintKind::Ge => ConstraintKind::Le,
            ConstraintKind::Eq => ConstraintKind::Eq,
        }
    }
}

/// A linear constraint a·x ◇ b in canonical form: the coefficient vector is
/// integral with content 1 and its first nonzero entry is positive (the
/// relation is flipped when normalization negates the row). Two constraints
/// describe the same halfspace or hyperplane iff they compare equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinConstraint {
    coeffs: Vec<BigInt>,
    kind: ConstraintKind,
    rhs: Rational,
}

impl LinConstraint {
    /// Builds a constraint from rational data, canonicalizing it. Rejects the
    /// all-zero coefficient vector (a trivial or absurd relation, never a
    /// geometric one).
    pub fn new(coeffs: Vec<Rational>, kind: ConstraintKind, rhs: Rational) -> Result<Self> {
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::InvalidArgument(
                "constraint coefficients are all zero".into(),
            ));
        }
        let lcm = denominator_lcm(&coeffs);
        let mut int_coeffs: Vec<BigInt> = coeffs
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut content = BigInt::zero();
        for c in &int_coeffs {
            content = content.gcd(c);
        }
        // scale = lcm / content, applied to the rhs as well
        let mut rhs = rhs * Rational::new(lcm, content.clone());
        for c in &mut int_coeffs {
            *c /= &content;
        }
        let mut kind = kind;
        let leading_negative = int_coeffs
            .iter()
            .find(|c| !c.is_zero())
            .map(|c| c.is_negative())
            .unwrap_or(false);
        if leading_negative {
            for c in &mut int_coeffs {
                *c = -c.clone();
            }
            rhs = -rhs;
            kind = kind.flipped();
        }
        Ok(LinConstraint {
            coeffs: int_coeffs,
            kind,
            rhs,
        })
    }

    /// Convenience constructor from integer data.
    pub fn from_ints(coeffs: &[i64], kind: ConstraintKind, rhs: i64) -> Result<Self> {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
            kind,
            Rational::from_integer(BigInt::from(rhs)),
        )
    }

    /// Canonical integral coefficient vector.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficients as rationals (for LP objectives and arithmetic).
    pub fn coeffs_rational(&self) -> Vec<Rational> {
        self.coeffs
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect()
    }

    pub fn kind(&self) -> ConstraintKind {
        self.kind
    }

    pub fn rhs(&self) -> &Rational {
        &self.rhs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// Value of the linear form a·x.
    pub fn eval(&self, x: &[Rational]) -> Rational {
        dot(&self.coeffs_rational(), x)
    }

    /// Whether x satisfies the constraint; `strict` turns ≤/≥ into </> and
    /// leaves equalities exact.
    pub fn satisfied(&self, x: &[Rational], strict: bool) -> bool {
        let v = self.eval(x);
        match (self.kind, strict) {
            (ConstraintKind::Le, false) => v <= self.rhs,
            (ConstraintKind::Le, true) => v < self.rhs,
            (ConstraintKind::Ge, false) => v >= self.rhs,
            (ConstraintKind::Ge, true) => v > self.rhs,
            (ConstraintKind::Eq, _) => v == self.rhs,
        }
    }

    /// The same constraint for the polytope scaled by k > 0: a·x ◇ k·b.
    pub fn dilated(&self, k: &Rational) -> Self {
        LinConstraint {
            coeffs: self.coeffs.clone(),
            kind: self.kind,
            rhs: &self.rhs * k,
        }
    }

    /// The same constraint for the polytope translated by v: a·x ◇ b + a·v.
    pub fn translated(&self, v: &[Rational]) -> Self {
        let shift = dot(&self.coeffs_rational(), v);
        LinConstraint {
            coeffs: self.coeffs.clone(),
            kind: self.kind,
            rhs: &self.rhs + shift,
        }
    }

    /// The constraint as (coeffs, rhs) with the relation oriented as ≤.
    /// Equalities are returned unchanged with a flag.
    pub(crate) fn le_oriented(&self) -> (Vec<Rational>, Rational, bool) {
        match self.kind {
            ConstraintKind::Le => (self.coeffs_rational(), self.rhs.clone(), false),
            ConstraintKind::Ge => (
                self.coeffs_rational().iter().map(|c| -c).collect(),
                -self.rhs.clone(),
                false,
            ),
            ConstraintKind::Eq => (self.coeffs_rational(), self.rhs.clone(), true),
        }
    }
}

impl fmt::Display for LinConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if *c == BigInt::from(-1) {
                    write!(f, "-")?;
                } else if *c != BigInt::from(1) {
                    write!(f, "{} ", c)?;
                }
                first = false;
            } else if c.is_negative() {
                if *c == BigInt::from(-1) {
                    write!(f, " - ")?;
                } else {
                    write!(f, " - {} ", c.abs())?;
                }
            } else if *c == BigInt::from(1) {
                write!(f, " + ")?;
            } else {
                write!(f, " + {} ", c)?;
            }
            write!(f, "x{}", i + 1)?;
        }
        let rel = match self.kind {
            ConstraintKind::Le => "<=",
            ConstraintKind::Ge => ">=",
            ConstraintKind::Eq => "=",
        };
        write!(f, " {} {}", rel, self.rhs)
    }
}
