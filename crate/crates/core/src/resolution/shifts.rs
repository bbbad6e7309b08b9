//! Homological shift ideals from a linear quotients order, and the two
//! closed forms for `HS_1`.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::polymatroid::is_polymatroidal;
use crate::resolution::linear_quotients::{linear_quotients, LinearQuotientsData};

/// `HS_i(I) = (x_F u : u ∈ G(I), F ⊆ set(u), |F| = i)`.
///
/// Requires a linear quotients order (lexicographic, else searched); never
/// falls back to homology. The zero ideal has all shifts zero.
pub fn hs(ideal: &MonomialIdeal, i: usize) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Ok(MonomialIdeal::zero(ideal.n()));
    }
    let lq = linear_quotients(ideal)?;
    if !lq.admits {
        return Err(Error::NoLinearQuotients);
    }
    Ok(hs_with(&lq, ideal.n(), i))
}

/// `HS_i` from explicit linear quotients data.
pub fn hs_with(lq: &LinearQuotientsData, n: usize, i: usize) -> MonomialIdeal {
    let mut gens = Vec::new();
    for (u, set) in lq.gens.iter().zip(&lq.sets) {
        for_each_subset(set, i, |f| gens.push(u.mul(&Monomial::squarefree(n, f))));
    }
    MonomialIdeal::from_gens_unchecked(n, gens)
}

/// Call `f` on each `k`-subset of `items`, in lexicographic order.
pub(crate) fn for_each_subset(items: &[usize], k: usize, mut f: impl FnMut(&[usize])) {
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for t in start..items.len() {
            if items.len() - t < k - cur.len() {
                break;
            }
            cur.push(items[t]);
            rec(items, k, t + 1, cur, f);
            cur.pop();
        }
    }
    if k <= items.len() {
        rec(items, k, 0, &mut Vec::with_capacity(k), &mut f);
    }
}

/// `(lcm(u, v) : u ≠ v ∈ G(I))`.
pub fn hs1_lcm(ideal: &MonomialIdeal) -> MonomialIdeal {
    let g = ideal.gens();
    let mut gens = Vec::new();
    for a in 0..g.len() {
        for b in a + 1..g.len() {
            gens.push(g[a].lcm(&g[b]));
        }
    }
    MonomialIdeal::from_gens_unchecked(ideal.n(), gens)
}

/// `(m I)^{<= deg(I)}`, valid as `HS_1(I)` for polymatroidal `I`.
pub fn hs1_polymatroidal(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if !is_polymatroidal(ideal) {
        return Err(Error::NotPolymatroidal);
    }
    if ideal.is_unit() {
        return Ok(MonomialIdeal::zero(ideal.n()));
    }
    ideal.mul_maximal().restriction(&ideal.bounding_multidegree()?)
}
