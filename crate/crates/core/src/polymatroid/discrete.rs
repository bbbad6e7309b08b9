use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::polymatroid::exchange::check_polymatroidal;

/// A discrete polymatroid given by its bases together with a cage.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscretePolymatroid {
    n: usize,
    bases: Vec<Vec<u32>>,
    rank: u32,
    cage: Vec<u32>,
}

/// Wire form: `{"n":4, "bases":[[...]], "cage":[...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolymatroidJson {
    pub n: usize,
    pub bases: Vec<Vec<u32>>,
    pub cage: Vec<u32>,
}

fn modulus(v: &[u32]) -> u32 {
    v.iter().sum()
}

impl DiscretePolymatroid {
    /// Bases = exponent vectors of `G(I)`; default cage `deg(I)`.
    pub fn from_ideal(ideal: &MonomialIdeal, cage: Option<Vec<u32>>) -> Result<Self> {
        if !check_polymatroidal(ideal).holds() {
            return Err(Error::NotPolymatroidal);
        }
        let cage = match cage {
            Some(c) => c,
            None => ideal.bounding_multidegree()?,
        };
        Self::from_bases_unchecked(ideal.n(), ideal.exponents(), cage)
    }

    /// Skips the exchange check; bases are still required to share a modulus
    /// and to lie below the cage.
    pub fn from_bases_unchecked(n: usize, mut bases: Vec<Vec<u32>>, cage: Vec<u32>) -> Result<Self> {
        if bases.is_empty() {
            return Err(Error::InvalidArgument("a polymatroid needs at least one base".into()));
        }
        if cage.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: cage.len(),
            });
        }
        for b in &bases {
            if b.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: b.len(),
                });
            }
            if b.iter().zip(&cage).any(|(x, c)| x > c) {
                return Err(Error::InvalidArgument(format!(
                    "cage {cage:?} does not dominate base {b:?}"
                )));
            }
        }
        let rank = modulus(&bases[0]);
        if bases.iter().any(|b| modulus(b) != rank) {
            return Err(Error::InvalidArgument("bases have different moduli".into()));
        }
        bases.sort();
        bases.dedup();
        Ok(Self { n, bases, rank, cage })
    }

    pub fn from_json(json: &PolymatroidJson) -> Result<Self> {
        let ideal = MonomialIdeal::from_exponents(json.n, json.bases.clone())?;
        if ideal.num_gens() != json.bases.len() {
            return Err(Error::InvalidArgument("bases must form an antichain".into()));
        }
        Self::from_ideal(&ideal, Some(json.cage.clone()))
    }

    pub fn to_json(&self) -> PolymatroidJson {
        PolymatroidJson {
            n: self.n,
            bases: self.bases.clone(),
            cage: self.cage.clone(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bases(&self) -> &[Vec<u32>] {
        &self.bases
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn cage(&self) -> &[u32] {
        &self.cage
    }

    pub fn is_base(&self, u: &[u32]) -> bool {
        self.bases.binary_search_by(|b| b.as_slice().cmp(u)).is_ok()
    }

    /// The polymatroidal ideal generated by `x^u`, `u` a base.
    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_exponents(self.n, self.bases.clone()).expect("bases have length n")
    }

    /// Dual with respect to `cage` (or the stored cage): bases `c - u`.
    pub fn dual(&self, cage: Option<&[u32]>) -> Result<Self> {
        let c = cage.unwrap_or(&self.cage).to_vec();
        if c.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: c.len(),
            });
        }
        let mut bases = Vec::with_capacity(self.bases.len());
        for b in &self.bases {
            let mut d = Vec::with_capacity(self.n);
            for (x, cx) in b.iter().zip(&c) {
                d.push(cx.checked_sub(*x).ok_or_else(|| {
                    Error::InvalidArgument(format!("{c:?} is not a cage for base {b:?}"))
                })?);
            }
            bases.push(d);
        }
        let cage = c.clone();
        Self::from_bases_unchecked(self.n, bases, cage)
    }

    /// `ρ(A) = max_{u in B(P)} u(A)`, with `A` a bitmask over `[n]`.
    pub fn rank_of(&self, subset: u64) -> u32 {
        self.bases
            .iter()
            .map(|b| {
                (0..self.n)
                    .filter(|&i| subset >> i & 1 == 1)
                    .map(|i| b[i])
                    .sum::<u32>()
            })
            .max()
            .unwrap_or(0)
    }

    /// `P ∩ N^n`: every integer vector dominated by some base, sorted.
    pub fn lattice_points(&self) -> Vec<Vec<u32>> {
        let mut seen: HashSet<Vec<u32>> = self.bases.iter().cloned().collect();
        let mut stack: Vec<Vec<u32>> = self.bases.clone();
        while let Some(p) = stack.pop() {
            for i in 0..self.n {
                if p[i] > 0 {
                    let mut q = p.clone();
                    q[i] -= 1;
                    if !seen.contains(&q) {
                        seen.insert(q.clone());
                        stack.push(q);
                    }
                }
            }
        }
        let mut pts: Vec<Vec<u32>> = seen.into_iter().collect();
        pts.sort();
        pts
    }
}

/// `{y : y_1 + ... + y_n <= i, 0 <= y_s <= c_s}` as a discrete polymatroid;
/// its rank is `min(i, |c|)` and `c` is its cage.
pub fn box_polymatroid(c: &[u32], i: u32) -> Result<DiscretePolymatroid> {
    if c.iter().any(|&x| x == 0) {
        return Err(Error::InvalidArgument("box entries must be positive".into()));
    }
    if i == 0 {
        return Err(Error::InvalidArgument("truncation level must be positive".into()));
    }
    let rank = i.min(c.iter().sum());
    let ideal = crate::polymatroid::constructions::veronese(c, rank)?;
    DiscretePolymatroid::from_bases_unchecked(c.len(), ideal.exponents(), c.to_vec())
}
