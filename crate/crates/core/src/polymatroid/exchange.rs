//! Exchange-axiom checks, evaluated as direct quantifier sweeps over pairs of
//! generators.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// A failing triple for the exchange property: `u_i > v_i`, yet no `j` with
/// `u_j < v_j` has `x_j (u / x_i)` among the generators. `i` is 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExchangeWitness {
    pub u: Monomial,
    pub v: Monomial,
    pub i: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PolymatroidCheck {
    Polymatroidal,
    /// The zero ideal is treated as not polymatroidal.
    ZeroIdeal,
    NotEquigenerated,
    ExchangeFails(ExchangeWitness),
}

impl PolymatroidCheck {
    pub fn holds(&self) -> bool {
        matches!(self, PolymatroidCheck::Polymatroidal)
    }
}

fn gen_set(ideal: &MonomialIdeal) -> HashSet<&[u32]> {
    ideal.gens().iter().map(|g| g.exps()).collect()
}

/// `x_j (u / x_i)` as an exponent vector; requires `u_i > 0`.
fn swap(u: &[u32], i: usize, j: usize) -> Vec<u32> {
    let mut w = u.to_vec();
    w[i] -= 1;
    w[j] += 1;
    w
}

pub fn check_polymatroidal(ideal: &MonomialIdeal) -> PolymatroidCheck {
    if ideal.is_zero() {
        return PolymatroidCheck::ZeroIdeal;
    }
    if !ideal.is_equigenerated() {
        return PolymatroidCheck::NotEquigenerated;
    }
    let set = gen_set(ideal);
    let n = ideal.n();
    for u in ideal.gens() {
        let ue = u.exps();
        for v in ideal.gens() {
            let ve = v.exps();
            for i in 0..n {
                if ue[i] <= ve[i] {
                    continue;
                }
                let ok = (0..n)
                    .filter(|&j| ue[j] < ve[j])
                    .any(|j| set.contains(swap(ue, i, j).as_slice()));
                if !ok {
                    return PolymatroidCheck::ExchangeFails(ExchangeWitness {
                        u: u.clone(),
                        v: v.clone(),
                        i,
                    });
                }
            }
        }
    }
    PolymatroidCheck::Polymatroidal
}

pub fn is_polymatroidal(ideal: &MonomialIdeal) -> bool {
    check_polymatroidal(ideal).holds()
}

/// Squarefree and polymatroidal.
pub fn is_matroidal(ideal: &MonomialIdeal) -> bool {
    ideal.is_squarefree() && is_polymatroidal(ideal)
}

pub fn check_symmetric_exchange(ideal: &MonomialIdeal) -> Result<bool> {
    if !ideal.is_equigenerated() {
        return Err(Error::NotEquigenerated);
    }
    let set = gen_set(ideal);
    let n = ideal.n();
    for u in ideal.gens() {
        let ue = u.exps();
        for v in ideal.gens() {
            let ve = v.exps();
            for i in (0..n).filter(|&i| ue[i] < ve[i]) {
                let ok = (0..n).filter(|&j| ue[j] > ve[j]).any(|j| {
                    set.contains(swap(ue, j, i).as_slice()) && set.contains(swap(ve, i, j).as_slice())
                });
                if !ok {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

pub fn check_strong_exchange(ideal: &MonomialIdeal) -> Result<bool> {
    if !ideal.is_equigenerated() {
        return Err(Error::NotEquigenerated);
    }
    let set = gen_set(ideal);
    let n = ideal.n();
    for u in ideal.gens() {
        let ue = u.exps();
        for v in ideal.gens() {
            let ve = v.exps();
            for i in (0..n).filter(|&i| ue[i] > ve[i]) {
                for j in (0..n).filter(|&j| ue[j] < ve[j]) {
                    if !set.contains(swap(ue, i, j).as_slice()) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Every graded component `I_<j>` is polymatroidal.
///
/// Components above the largest generator degree are `m`-multiples of the top
/// one, so checking `α(I) <= j <= maxdeg` suffices.
pub fn is_componentwise_polymatroidal(ideal: &MonomialIdeal) -> bool {
    let (Ok(lo), Ok(hi)) = (ideal.alpha(), ideal.max_degree()) else {
        return false;
    };
    (lo..=hi).all(|j| is_polymatroidal(&ideal.graded_component(j)))
}
