//! Exact matrix rank: fraction-free (Bareiss) elimination over the integers,
//! which gives the rank over Q, and plain Gaussian elimination modulo a prime.

use crate::error::{Error, Result};

/// Coefficient field for homology computations: `0` for Q, or a prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Field(u32);

impl Field {
    pub const RATIONALS: Field = Field(0);

    /// `0` or a prime below `2^31`.
    pub fn new(characteristic: u32) -> Result<Self> {
        if characteristic == 0 || (characteristic < (1 << 31) && is_prime(characteristic)) {
            Ok(Field(characteristic))
        } else {
            Err(Error::InvalidArgument(format!(
                "field characteristic must be 0 or a prime below 2^31, got {characteristic}"
            )))
        }
    }

    pub fn characteristic(self) -> u32 {
        self.0
    }
}

impl Default for Field {
    fn default() -> Self {
        Field::RATIONALS
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Rank of a dense integer matrix (rows of equal length) over `field`.
pub fn rank(matrix: &[Vec<i64>], field: Field) -> Result<usize> {
    match field.0 {
        0 => rank_rational(matrix),
        p => Ok(rank_mod_p(matrix, p)),
    }
}

/// Bareiss elimination; every intermediate entry is a minor of the input, so
/// the division is exact. Overflow of `i128` is reported, never wrapped.
pub fn rank_rational(matrix: &[Vec<i64>]) -> Result<usize> {
    let rows = matrix.len();
    if rows == 0 {
        return Ok(0);
    }
    let cols = matrix[0].len();
    let mut m: Vec<Vec<i128>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let overflow = || Error::ResourceExhausted("integer overflow in exact rank computation".into());
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pivot) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pivot);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let a = m[r][c].checked_mul(m[i][j]).ok_or_else(overflow)?;
                let b = m[i][c].checked_mul(m[r][j]).ok_or_else(overflow)?;
                m[i][j] = a.checked_sub(b).ok_or_else(overflow)? / prev;
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        r += 1;
    }
    Ok(r)
}

pub fn rank_mod_p(matrix: &[Vec<i64>], p: u32) -> usize {
    let rows = matrix.len();
    if rows == 0 {
        return 0;
    }
    let p = p as u64;
    let cols = matrix[0].len();
    let mut m: Vec<Vec<u64>> = matrix
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let inverse = |a: u64| {
        // Fermat: a^(p-2)
        let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            exp >>= 1;
        }
        acc
    };
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pivot) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = inverse(m[r][c]);
        for i in r + 1..rows {
            if m[i][c] == 0 {
                continue;
            }
            let f = m[i][c] * inv % p;
            for j in c..cols {
                m[i][j] = (m[i][j] + p * p - f * m[r][j] % p) % p;
            }
        }
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_ranks() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]];
        assert_eq!(rank_rational(&m).unwrap(), 2);
        // modulo 2 the first and third rows agree
        assert_eq!(rank_mod_p(&m, 2), 1);
        assert_eq!(rank_mod_p(&m, 3), 2);
        // rank drops modulo 2
        let m = vec![vec![1, 1], vec![1, -1]];
        assert_eq!(rank_rational(&m).unwrap(), 2);
        assert_eq!(rank_mod_p(&m, 2), 1);
        assert_eq!(rank_rational(&[]).unwrap(), 0);
        assert_eq!(rank_rational(&[vec![0, 0]]).unwrap(), 0);
    }

    #[test]
    fn field_validation() {
        assert!(Field::new(0).is_ok());
        assert!(Field::new(7).is_ok());
        assert!(Field::new(4).is_err());
        assert!(Field::new(1).is_err());
    }

    /// Rank as the size of the largest nonzero minor, by brute force.
    fn rank_by_minors(m: &[Vec<i64>]) -> usize {
        fn det(m: &[Vec<i128>]) -> i128 {
            if m.is_empty() {
                return 1;
            }
            (0..m.len())
                .map(|j| {
                    let minor: Vec<Vec<i128>> = m[1..]
                        .iter()
                        .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                        .collect();
                    let s = if j % 2 == 0 { 1 } else { -1 };
                    s * m[0][j] * det(&minor)
                })
                .sum()
        }
        let (r, c) = (m.len(), m[0].len());
        for k in (1..=r.min(c)).rev() {
            for rs in 0u32..1 << r {
                if rs.count_ones() as usize != k {
                    continue;
                }
                for cs in 0u32..1 << c {
                    if cs.count_ones() as usize != k {
                        continue;
                    }
                    let sub: Vec<Vec<i128>> = (0..r)
                        .filter(|i| rs >> i & 1 == 1)
                        .map(|i| (0..c).filter(|j| cs >> j & 1 == 1).map(|j| m[i][j] as i128).collect())
                        .collect();
                    if det(&sub) != 0 {
                        return k;
                    }
                }
            }
        }
        0
    }

    proptest! {
        #[test]
        fn bareiss_matches_minors(m in proptest::collection::vec(proptest::collection::vec(-2i64..3, 4), 1..5)) {
            prop_assert_eq!(rank_rational(&m).unwrap(), rank_by_minors(&m));
            prop_assert!(rank_mod_p(&m, 3) <= rank_rational(&m).unwrap());
            prop_assert_eq!(rank_mod_p(&m, 1_000_003), rank_rational(&m).unwrap());
        }
    }
}
