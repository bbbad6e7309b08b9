//! Monomials as exponent vectors.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A monomial `x^a` in a polynomial ring with a fixed number of variables.
///
/// Exponent arithmetic is checked: overflowing products panic instead of
/// wrapping.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Self { exps }
    }

    pub fn one(n: usize) -> Self {
        Self { exps: vec![0; n] }
    }

    /// The variable `x_{i+1}` (0-based index `i`).
    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Self { exps }
    }

    /// Squarefree monomial `x_F` on the given 0-based indices.
    pub fn squarefree(n: usize, vars: &[usize]) -> Self {
        let mut exps = vec![0; n];
        for &i in vars {
            exps[i] = 1;
        }
        Self { exps }
    }

    pub fn n(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn into_exps(self) -> Vec<u32> {
        self.exps
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps
            .iter()
            .try_fold(0u32, |acc, &e| acc.checked_add(e))
            .expect("monomial degree overflow")
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.n(), other.n());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.n(), other.n());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        }
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] = exps[i].checked_add(1).expect("exponent overflow");
        Monomial { exps }
    }

    /// `self^k`.
    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .map(|a| a.checked_mul(k).expect("exponent overflow"))
                .collect(),
        }
    }

    /// Exact quotient `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.n());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Monomial { exps })
    }

    /// `self / gcd(self, other)`: the generator of `(self) : (other)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    /// 0-based indices of the variables dividing the monomial.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.exps[i] > 0).collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Largest 0-based variable index dividing the monomial.
    pub fn max_var(&self) -> Option<usize> {
        (0..self.n()).rev().find(|&i| self.exps[i] > 0)
    }

    /// The part `u_A` of the monomial supported on the given variables.
    pub fn restrict_to(&self, vars: &[usize]) -> Monomial {
        let mut exps = vec![0; self.n()];
        for &i in vars {
            exps[i] = self.exps[i];
        }
        Monomial { exps }
    }

    /// Whether the exponent vector is componentwise `<= bound`.
    pub fn dominated_by(&self, bound: &[u32]) -> bool {
        self.exps.iter().zip(bound).all(|(a, b)| a <= b)
    }

    /// Lexicographic comparison, with `var_order[0]` the largest variable.
    pub fn lex_cmp(&self, other: &Monomial, var_order: &[usize]) -> Ordering {
        for &i in var_order {
            match self.exps[i].cmp(&other.exps[i]) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.n() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: self.n(),
            });
        }
        Ok(())
    }
}

/// Canonical order: ascending degree, then lexicographically descending with
/// `x1 > x2 > ... > xn`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn divisibility_and_quotients() {
        let a = m(&[1, 1, 0]);
        let b = m(&[2, 1, 3]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(b.div(&a), Some(m(&[1, 0, 3])));
        assert_eq!(a.div(&b), None);
        assert_eq!(a.colon(&m(&[0, 2, 0])), m(&[1, 0, 0]));
        assert_eq!(a.lcm(&m(&[0, 2, 1])), m(&[1, 2, 1]));
        assert_eq!(a.gcd(&m(&[0, 2, 1])), m(&[0, 1, 0]));
    }

    #[test]
    fn canonical_order_is_graded_then_lex() {
        let mut v = vec![m(&[0, 2]), m(&[1, 0]), m(&[1, 1]), m(&[2, 0])];
        v.sort();
        assert_eq!(v, vec![m(&[1, 0]), m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
    }

    #[test]
    fn display_uses_one_based_indices() {
        assert_eq!(m(&[2, 0, 1]).to_string(), "x1^2*x3");
        assert_eq!(m(&[0, 0]).to_string(), "1");
    }

    #[test]
    #[should_panic(expected = "exponent overflow")]
    fn overflow_traps() {
        let big = m(&[u32::MAX]);
        let _ = big.mul(&m(&[1]));
    }

    #[test]
    fn support_and_max() {
        let u = m(&[0, 3, 0, 1]);
        assert_eq!(u.support(), vec![1, 3]);
        assert_eq!(u.max_var(), Some(3));
        assert_eq!(m(&[0, 0]).max_var(), None);
        assert_eq!(u.restrict_to(&[1]), m(&[0, 3, 0, 0]));
    }
}
