//! The Möbius function of the lattice-point poset of a discrete polymatroid and
//! the homological-shift membership criterion built on it.
//!
//! The poset is `P ∩ N^n` ordered componentwise, with a maximum `1̂`
//! adjoined. With `μ_P(u) = -μ(u, 1̂)` the defining recursion
//! `μ(u, 1̂) = -Σ_{u < z <= 1̂} μ(z, 1̂)` becomes
//! `μ_P(u) = 1 - Σ_{z > u, z ∈ P} μ_P(z)`, so `μ_P = 1` on maximal points.
//! Points are stored densely in the box spanned by the componentwise maximum
//! of the bases, which `P` is contained in.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::polymatroid::discrete::DiscretePolymatroid;

/// Largest dense box (number of cells) a table may allocate by default.
pub const DEFAULT_BOX_BUDGET: usize = 8_000_000;

#[derive(Debug, Clone)]
pub struct MobiusTable {
    bound: Vec<u32>,
    strides: Vec<usize>,
    in_poset: Vec<bool>,
    mu: Vec<i128>,
    points: Vec<Vec<u32>>,
}

impl MobiusTable {
    pub fn new(p: &DiscretePolymatroid) -> Result<Self> {
        Self::with_budget(p, DEFAULT_BOX_BUDGET)
    }

    pub fn with_budget(p: &DiscretePolymatroid, max_cells: usize) -> Result<Self> {
        let n = p.n();
        let mut bound = vec![0u32; n];
        for b in p.bases() {
            for (x, &e) in bound.iter_mut().zip(b) {
                *x = (*x).max(e);
            }
        }
        let mut strides = vec![0usize; n];
        let mut cells: usize = 1;
        for i in (0..n).rev() {
            strides[i] = cells;
            cells = cells
                .checked_mul(bound[i] as usize + 1)
                .filter(|&c| c <= max_cells)
                .ok_or_else(|| {
                    Error::ResourceExhausted(format!(
                        "Möbius table box {bound:?} exceeds {max_cells} cells"
                    ))
                })?;
        }
        let mut table = MobiusTable {
            bound,
            strides,
            in_poset: vec![false; cells],
            mu: vec![0; cells],
            points: Vec::new(),
        };
        for b in p.bases() {
            let k = table.index(b);
            table.in_poset[k] = true;
        }
        // Down-closure: x ∈ P iff x is a base or some x + e_i ∈ P. Larger
        // indices come first, and x + e_i always has a larger index.
        for k in (0..cells).rev() {
            if table.in_poset[k] {
                continue;
            }
            let x = table.point(k);
            table.in_poset[k] =
                (0..n).any(|i| x[i] < table.bound[i] && table.in_poset[k + table.strides[i]]);
        }
        for k in (0..cells).rev() {
            if !table.in_poset[k] {
                continue;
            }
            let x = table.point(k);
            let mut above: i128 = 0;
            table.for_each_above(&x, |z| {
                if z != k && table.in_poset[z] {
                    above += table.mu[z];
                }
            });
            table.mu[k] = 1 - above;
        }
        table.points = (0..cells)
            .filter(|&k| table.in_poset[k])
            .map(|k| table.point(k))
            .collect();
        table.points.sort();
        Ok(table)
    }

    fn index(&self, x: &[u32]) -> usize {
        x.iter().zip(&self.strides).map(|(&e, &s)| e as usize * s).sum()
    }

    fn point(&self, mut k: usize) -> Vec<u32> {
        let mut x = vec![0u32; self.bound.len()];
        for (i, &s) in self.strides.iter().enumerate() {
            x[i] = (k / s) as u32;
            k %= s;
        }
        x
    }

    /// Visit the index of every box cell `z >= x`.
    fn for_each_above(&self, x: &[u32], mut f: impl FnMut(usize)) {
        let n = x.len();
        let mut z = x.to_vec();
        let mut k = self.index(x);
        loop {
            f(k);
            // mixed-radix increment over [x, bound], last coordinate fastest
            let mut i = n;
            loop {
                if i == 0 {
                    return;
                }
                i -= 1;
                if z[i] < self.bound[i] {
                    z[i] += 1;
                    k += self.strides[i];
                    break;
                }
                k -= (z[i] - x[i]) as usize * self.strides[i];
                z[i] = x[i];
            }
        }
    }

    /// The lattice points, sorted.
    pub fn points(&self) -> &[Vec<u32>] {
        &self.points
    }

    pub fn contains(&self, u: &[u32]) -> bool {
        u.len() == self.bound.len()
            && u.iter().zip(&self.bound).all(|(a, b)| a <= b)
            && self.in_poset[self.index(u)]
    }

    /// `μ_P(u)`, or `None` when `u` is not a lattice point of `P`.
    pub fn mu(&self, u: &[u32]) -> Option<i128> {
        self.contains(u).then(|| self.mu[self.index(u)])
    }

    /// `μ_P` at a vector that may have negative entries.
    pub fn mu_signed(&self, u: &[i64]) -> Option<i128> {
        let v: Option<Vec<u32>> = u.iter().map(|&x| u32::try_from(x).ok()).collect();
        self.mu(&v?)
    }

    /// `μ_P(0)`.
    pub fn mu_zero(&self) -> i128 {
        self.mu[0]
    }

    /// `μ(u, 1̂) = -μ_P(u)` on the poset with `1̂` adjoined.
    pub fn mu_to_top(&self, u: &[u32]) -> Option<i128> {
        self.mu(u).map(|m| -m)
    }
}

/// The membership criterion: for a polymatroidal ideal with polymatroid `P`,
/// cage `c`, base `u` and distinct indices `J`, `x_J x^u ∈ HS_{|J|}(I)` iff
/// `μ_{P^∨}(c - u - Σ_{j ∈ J} e_j) ≠ 0`, where `P^∨` is the dual w.r.t. `c`.
#[derive(Debug, Clone)]
pub struct CmsCriterion {
    polymatroid: DiscretePolymatroid,
    dual: MobiusTable,
    bases: HashSet<Vec<u32>>,
}

impl CmsCriterion {
    pub fn new(ideal: &MonomialIdeal, cage: Option<Vec<u32>>) -> Result<Self> {
        let polymatroid = DiscretePolymatroid::from_ideal(ideal, cage)?;
        let dual = MobiusTable::new(&polymatroid.dual(None)?)?;
        let bases = polymatroid.bases().iter().cloned().collect();
        Ok(Self {
            polymatroid,
            dual,
            bases,
        })
    }

    pub fn polymatroid(&self) -> &DiscretePolymatroid {
        &self.polymatroid
    }

    pub fn dual_table(&self) -> &MobiusTable {
        &self.dual
    }

    /// Is `x_J · u` in `HS_{|J|}(I)`? `J` holds distinct 0-based indices.
    pub fn membership(&self, u: &Monomial, j: &[usize]) -> Result<bool> {
        let n = self.polymatroid.n();
        u.check_len(n)?;
        if !self.bases.contains(u.exps()) {
            return Err(Error::InvalidArgument(format!("{u} is not a base")));
        }
        let mut seen = vec![false; n];
        for &x in j {
            if x >= n || seen[x] {
                return Err(Error::InvalidArgument(format!(
                    "index set {j:?} must hold distinct indices below {n}"
                )));
            }
            seen[x] = true;
        }
        let c = self.polymatroid.cage();
        let point: Vec<i64> = (0..n)
            .map(|s| c[s] as i64 - u.exp(s) as i64 - seen[s] as i64)
            .collect();
        Ok(self.dual.mu_signed(&point).is_some_and(|m| m != 0))
    }

    /// `HS_i(I)` assembled from the criterion over all bases and `i`-subsets.
    pub fn hs_ideal(&self, i: usize) -> MonomialIdeal {
        let n = self.polymatroid.n();
        let mut gens = Vec::new();
        if i <= n && n < 64 {
            for b in self.polymatroid.bases() {
                let u = Monomial::new(b.clone());
                for mask in 0u64..(1u64 << n) {
                    if mask.count_ones() as usize != i {
                        continue;
                    }
                    let j: Vec<usize> = (0..n).filter(|&s| mask >> s & 1 == 1).collect();
                    if self.membership(&u, &j).expect("valid base and index set") {
                        gens.push(u.mul(&Monomial::squarefree(n, &j)));
                    }
                }
            }
        }
        MonomialIdeal::from_gens_unchecked(n, gens)
    }
}

/// One-shot form of [`CmsCriterion::membership`].
pub fn cms_hs_membership(
    ideal: &MonomialIdeal,
    cage: Option<Vec<u32>>,
    u: &Monomial,
    j: &[usize],
) -> Result<bool> {
    CmsCriterion::new(ideal, cage)?.membership(u, j)
}
