//! Monomials, the spread condition, and the pairwise sorting operator.

use crate::{Error, Result};

/// A monomial in n variables, stored as its exponent vector. The derived
/// ordering is lexicographic on exponent vectors with x1 weighted first,
/// so sorting a slice in reverse yields descending lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    /// Wraps an exponent vector (one entry per variable).
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::InvalidArgument(
                "a monomial needs at least one variable".into(),
            ));
        }
        Ok(Monomial { exponents })
    }

    /// Builds a squarefree monomial from 1-based, strictly increasing
    /// variable indices.
    pub fn from_support(n: u32, support: &[u32]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument(
                "a monomial needs at least one variable".into(),
            ));
        }
        let mut exponents = vec![0u32; n as usize];
        let mut prev = 0u32;
        for &i in support {
            if i <= prev || i > n {
                return Err(Error::InvalidArgument(format!(
                    "support must be strictly increasing within 1..={n}"
                )));
            }
            exponents[(i - 1) as usize] = 1;
            prev = i;
        }
        Ok(Monomial { exponents })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Number of variables of the ambient polynomial ring.
    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// 1-based indices of the variables that occur (no multiplicities).
    pub fn support(&self) -> Vec<u32> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i as u32 + 1)
            .collect()
    }

    /// 1-based variable indices with multiplicity, ascending — the merged
    /// sequence view used by the sorting operator.
    pub fn index_multiset(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.degree() as usize);
        for (i, &e) in self.exponents.iter().enumerate() {
            for _ in 0..e {
                out.push(i as u32 + 1);
            }
        }
        out
    }

    /// True iff the monomial is t-spread: squarefree with consecutive
    /// support indices at least t apart. Every monomial is 0-spread.
    pub fn is_tspread(&self, t: u32) -> bool {
        if t == 0 {
            return true;
        }
        if self.exponents.iter().any(|&e| e > 1) {
            return false;
        }
        self.support().windows(2).all(|w| w[1] - w[0] >= t)
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// The sorting operator on a pair of equal-degree monomials: merge both
/// index multisets into one ascending sequence i_1 ≤ … ≤ i_{2d} and split it
/// alternately, odd positions forming the first output and even positions
/// the second. Idempotent, and symmetric as an unordered pair.
pub fn sort_pair(u: &Monomial, v: &Monomial) -> Result<(Monomial, Monomial)> {
    if u.num_vars() != v.num_vars() {
        return Err(Error::InvalidArgument(
            "sorting needs monomials in the same variables".into(),
        ));
    }
    if u.degree() != v.degree() {
        return Err(Error::InvalidArgument(
            "sorting needs monomials of equal degree".into(),
        ));
    }
    let mut merged = u.index_multiset();
    merged.extend(v.index_multiset());
    merged.sort_unstable();
    let n = u.num_vars();
    let mut a = vec![0u32; n];
    let mut b = vec![0u32; n];
    for (pos, &idx) in merged.iter().enumerate() {
        let slot = (idx - 1) as usize;
        if pos % 2 == 0 {
            a[slot] += 1;
        } else {
            b[slot] += 1;
        }
    }
    Ok((Monomial { exponents: a }, Monomial { exponents: b }))
}

/// True iff every pair (earlier, later) in the slice is a fixed point of the
/// sorting operator.
pub fn is_sorted_tuple(ms: &[Monomial]) -> Result<bool> {
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            let (a, b) = sort_pair(&ms[i], &ms[j])?;
            if a != ms[i] || b != ms[j] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: u32, support: &[u32]) -> Monomial {
        Monomial::from_support(n, support).unwrap()
    }

    #[test]
    fn spread_condition() {
        assert!(m(7, &[1, 3, 7]).is_tspread(2));
        assert!(!m(7, &[1, 2]).is_tspread(2));
        assert!(m(7, &[4]).is_tspread(100));
        assert!(!Monomial::new(vec![2, 0, 1]).unwrap().is_tspread(1));
        assert!(Monomial::new(vec![2, 0, 1]).unwrap().is_tspread(0));
    }

    #[test]
    fn display_format() {
        assert_eq!(m(5, &[1, 3]).to_string(), "x1*x3");
        assert_eq!(
            Monomial::new(vec![2, 1, 0, 1]).unwrap().to_string(),
            "x1^2*x2*x4"
        );
    }

    #[test]
    fn sorting_fixed_point() {
        // (x1^2*x2*x3, x1*x2*x3^2) is already sorted
        let u = Monomial::new(vec![2, 1, 1]).unwrap();
        let v = Monomial::new(vec![1, 1, 2]).unwrap();
        assert_eq!(sort_pair(&u, &v).unwrap(), (u.clone(), v.clone()));
        // idempotence and unordered symmetry on an unsorted pair
        let a = m(8, &[1, 3, 8]);
        let b = m(8, &[2, 4, 7]);
        let (s1, s2) = sort_pair(&a, &b).unwrap();
        assert_eq!(s1, m(8, &[1, 3, 7]));
        assert_eq!(s2, m(8, &[2, 4, 8]));
        assert_eq!(sort_pair(&s1, &s2).unwrap(), (s1.clone(), s2.clone()));
        let (r1, r2) = sort_pair(&b, &a).unwrap();
        assert_eq!((r1, r2), (s1, s2));
        // (u, u) is always sorted
        assert_eq!(sort_pair(&a, &a).unwrap(), (a.clone(), a.clone()));
    }

    #[test]
    fn sorted_tuples() {
        assert!(is_sorted_tuple(&[m(5, &[1, 3])]).unwrap());
        assert!(!is_sorted_tuple(&[m(8, &[1, 3, 8]), m(8, &[2, 4, 7])]).unwrap());
        let mismatch = sort_pair(&m(3, &[1]), &m(3, &[1, 2]));
        assert!(matches!(mismatch, Err(Error::InvalidArgument(_))));
    }
}
