//! Associated primes of `S/I`, v-numbers, monomial localization and minimal
//! primes.
//!
//! Throughout, `Ass(I)` means `Ass(S/I)`. Witnesses are monomials `w` with
//! `(I : w)` a monomial prime. Since `(I : w) = (I : min(w, a))` for
//! `a = deg(I)`, the box `w <= deg(I)` contains a witness of minimal degree
//! for every associated prime, so the search below is exact.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Default cap on the number of box cells scanned by [`ass`].
pub const DEFAULT_WITNESS_BUDGET: usize = 20_000_000;

/// The prime generated by a set of variables (0-based, sorted).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialPrime {
    vars: Vec<usize>,
}

impl MonomialPrime {
    pub fn new(mut vars: Vec<usize>) -> Self {
        vars.sort_unstable();
        vars.dedup();
        Self { vars }
    }

    /// From 1-based variable indices.
    pub fn from_one_based(vars: &[usize]) -> Result<Self> {
        if vars.iter().any(|&v| v == 0) {
            return Err(Error::InvalidArgument("variable indices are 1-based".into()));
        }
        Ok(Self::new(vars.iter().map(|v| v - 1).collect()))
    }

    pub fn maximal(n: usize) -> Self {
        Self {
            vars: (0..n).collect(),
        }
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn height(&self) -> usize {
        self.vars.len()
    }

    pub fn is_maximal(&self, n: usize) -> bool {
        self.vars.len() == n
    }

    pub fn to_ideal(&self, n: usize) -> MonomialIdeal {
        MonomialIdeal::prime(n, &self.vars)
    }

    /// Sorted 1-based variable indices.
    pub fn one_based(&self) -> Vec<usize> {
        self.vars.iter().map(|v| v + 1).collect()
    }
}

impl Serialize for MonomialPrime {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_based().serialize(s)
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vars.iter().map(|v| format!("x{}", v + 1)).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Associated primes with a minimal-degree witness each (ties broken by the
/// canonical monomial order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssResult {
    witnesses: BTreeMap<MonomialPrime, Monomial>,
}

impl AssResult {
    pub fn primes(&self) -> impl Iterator<Item = &MonomialPrime> {
        self.witnesses.keys()
    }

    pub fn len(&self) -> usize {
        self.witnesses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn contains(&self, p: &MonomialPrime) -> bool {
        self.witnesses.contains_key(p)
    }

    pub fn witness(&self, p: &MonomialPrime) -> Option<&Monomial> {
        self.witnesses.get(p)
    }

    pub fn witnesses(&self) -> &BTreeMap<MonomialPrime, Monomial> {
        &self.witnesses
    }

    /// Every prime of `self` is a prime of `other`.
    pub fn is_subset(&self, other: &AssResult) -> bool {
        self.primes().all(|p| other.contains(p))
    }

    pub fn to_json(&self) -> Value {
        let list: Vec<Value> = self
            .witnesses
            .iter()
            .map(|(p, w)| json!({"prime": p, "witness": w.to_string()}))
            .collect();
        Value::Array(list)
    }
}

fn proper_nonzero(ideal: &MonomialIdeal, what: &'static str) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal(what));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal(what));
    }
    Ok(())
}

/// `(I : w)` if it is a monomial prime; requires `w ∉ I`.
pub fn colon_prime(ideal: &MonomialIdeal, w: &Monomial) -> Option<MonomialPrime> {
    let n = ideal.n();
    let vars: Vec<usize> = (0..n).filter(|&l| ideal.contains(&w.mul_var(l))).collect();
    let mut in_v = vec![false; n];
    for &l in &vars {
        in_v[l] = true;
    }
    let generated = ideal
        .gens()
        .iter()
        .all(|u| (0..n).any(|l| in_v[l] && u.exp(l) > w.exp(l)));
    (generated && !vars.is_empty()).then(|| MonomialPrime::new(vars))
}

pub fn ass(ideal: &MonomialIdeal) -> Result<AssResult> {
    ass_with_budget(ideal, DEFAULT_WITNESS_BUDGET)
}

/// Scan the box `w <= deg(I)` with a dense membership table.
///
/// For `w` in the box, `x^v ∈ I` iff `min(v, deg(I)) ∈ I`, so every query
/// stays inside the table: `V = {ℓ : x_ℓ w ∈ I}`, and `(I : w) = (x_V)` iff
/// the largest monomial avoiding `V`, clipped to the box, is not in `(I : w)`.
pub fn ass_with_budget(ideal: &MonomialIdeal, budget: usize) -> Result<AssResult> {
    proper_nonzero(ideal, "associated primes")?;
    let bound = ideal.bounding_multidegree()?;
    let n = bound.len();
    let mut strides = vec![0usize; n];
    let mut cells: usize = 1;
    for i in (0..n).rev() {
        strides[i] = cells;
        cells = cells
            .checked_mul(bound[i] as usize + 1)
            .filter(|&c| c <= budget)
            .ok_or_else(|| Error::ResourceExhausted(format!("witness box {bound:?} exceeds {budget} cells")))?;
    }
    let decode = |mut k: usize| {
        let mut e = vec![0u32; n];
        for i in 0..n {
            e[i] = (k / strides[i]) as u32;
            k %= strides[i];
        }
        e
    };
    let index = |e: &[u32]| e.iter().zip(&strides).map(|(&x, &s)| x as usize * s).sum::<usize>();
    // member[k]: the box point k lies in I (a generator, or x_i times a member)
    let mut member = vec![false; cells];
    for g in ideal.gens() {
        member[index(g.exps())] = true;
    }
    for k in 0..cells {
        if member[k] {
            continue;
        }
        let e = decode(k);
        member[k] = (0..n).any(|i| e[i] > 0 && member[k - strides[i]]);
    }
    let member = &member;
    let witnesses = (0..cells)
        .into_par_iter()
        .filter(|&k| !member[k])
        .filter_map(|k| {
            let e = decode(k);
            let vars: Vec<usize> = (0..n)
                .filter(|&l| e[l] < bound[l] && member[k + strides[l]])
                .collect();
            if vars.is_empty() {
                return None;
            }
            let mut avoid = bound.clone();
            for &l in &vars {
                avoid[l] = e[l];
            }
            (!member[index(&avoid)]).then(|| (MonomialPrime::new(vars), Monomial::new(e)))
        })
        .fold(BTreeMap::new, |mut acc: BTreeMap<MonomialPrime, Monomial>, (p, w)| {
            keep_least(&mut acc, p, w);
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (p, w) in b {
                keep_least(&mut a, p, w);
            }
            a
        });
    Ok(AssResult { witnesses })
}

fn keep_least(acc: &mut BTreeMap<MonomialPrime, Monomial>, p: MonomialPrime, w: Monomial) {
    match acc.get(&p) {
        Some(old) if *old <= w => {}
        _ => {
            acc.insert(p, w);
        }
    }
}

/// `v(I) = min_P v_P(I)`.
pub fn v_number(ideal: &MonomialIdeal) -> Result<u32> {
    let a = ass(ideal)?;
    Ok(a.witnesses.values().map(|w| w.degree()).min().expect("a proper ideal has associated primes"))
}

/// `v_P(I)`, the least degree of a witness for `P`.
pub fn v_p(ideal: &MonomialIdeal, p: &MonomialPrime) -> Result<u32> {
    ass(ideal)?
        .witness(p)
        .map(|w| w.degree())
        .ok_or_else(|| Error::InvalidArgument(format!("{p} is not associated")))
}

/// `I(P)`: substitute `x_i ↦ 1` for `x_i ∉ P`, keeping the ambient ring.
pub fn localize(ideal: &MonomialIdeal, p: &MonomialPrime) -> Result<MonomialIdeal> {
    if p.vars().iter().any(|&v| v >= ideal.n()) {
        return Err(Error::InvalidArgument(format!("{p} is out of range for n = {}", ideal.n())));
    }
    let gens = ideal.gens().iter().map(|g| g.restrict_to(p.vars())).collect();
    Ok(MonomialIdeal::from_gens_unchecked(ideal.n(), gens))
}

/// Minimal primes: the minimal transversals of the generator supports.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    proper_nonzero(ideal, "minimal primes")?;
    let n = ideal.n();
    if n > 24 {
        return Err(Error::InvalidArgument("minimal primes support at most 24 variables".into()));
    }
    let supports: Vec<u32> = ideal
        .gens()
        .iter()
        .map(|g| g.support().iter().fold(0u32, |m, &v| m | 1 << v))
        .collect();
    let mut masks: Vec<u32> = (0u32..1 << n).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let mut covers: Vec<u32> = Vec::new();
    for m in masks {
        if supports.iter().all(|s| s & m != 0) && !covers.iter().any(|c| c & m == *c) {
            covers.push(m);
        }
    }
    let mut out: Vec<MonomialPrime> = covers
        .into_iter()
        .map(|m| MonomialPrime::new((0..n).filter(|&v| m >> v & 1 == 1).collect()))
        .collect();
    out.sort();
    Ok(out)
}

pub fn height(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(minimal_primes(ideal)?
        .iter()
        .map(|p| p.height())
        .min()
        .expect("a proper ideal has minimal primes"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::box_monomials;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    fn prime(vars: &[usize]) -> MonomialPrime {
        MonomialPrime::from_one_based(vars).unwrap()
    }

    /// Oracle: compute `(I : w)` as an ideal and compare with primes.
    fn ass_oracle(i: &MonomialIdeal) -> Vec<MonomialPrime> {
        let mut out: Vec<MonomialPrime> = box_monomials(&i.bounding_multidegree().unwrap())
            .into_iter()
            .filter(|w| !i.contains(w))
            .filter_map(|w| {
                let c = i.colon_monomial(&w).unwrap();
                c.gens()
                    .iter()
                    .all(|g| g.degree() == 1)
                    .then(|| MonomialPrime::new(c.gens().iter().map(|g| g.support()[0]).collect()))
            })
            .collect();
        out.sort();
        out.dedup();
        out
    }

    #[test]
    fn basic_examples() {
        let a = ass(&ideal(2, &[&[1, 1]])).unwrap();
        assert_eq!(a.primes().cloned().collect::<Vec<_>>(), vec![prime(&[1]), prime(&[2])]);
        for k in 1..4 {
            let a = ass(&MonomialIdeal::maximal_power(3, k)).unwrap();
            assert_eq!(a.primes().cloned().collect::<Vec<_>>(), vec![MonomialPrime::maximal(3)]);
            assert_eq!(a.witness(&MonomialPrime::maximal(3)).unwrap().degree(), k - 1);
        }
        assert_eq!(v_number(&MonomialIdeal::maximal(3)).unwrap(), 0);
        assert!(ass(&MonomialIdeal::unit(2)).is_err());
        assert!(v_p(&ideal(2, &[&[1, 1]]), &MonomialPrime::maximal(2)).is_err());
    }

    #[test]
    fn embedded_prime_with_witness() {
        // (x1^2, x1 x2) = (x1) ∩ (x1^2, x2): Ass = {(x1), (x1, x2)}
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let a = ass(&i).unwrap();
        assert_eq!(a.len(), 2);
        let w = a.witness(&MonomialPrime::maximal(2)).unwrap();
        assert_eq!(w, &Monomial::new(vec![1, 0]));
        assert_eq!(i.colon_monomial(w).unwrap(), MonomialIdeal::maximal(2));
        assert_eq!(v_number(&i).unwrap(), 1);
    }

    #[test]
    fn matches_colon_oracle() {
        for i in [
            ideal(3, &[&[2, 1, 0], &[0, 1, 1], &[1, 0, 2]]),
            ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]),
            ideal(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 2, 0, 0], &[0, 1, 1, 1]]),
        ] {
            let a = ass(&i).unwrap();
            assert_eq!(a.primes().cloned().collect::<Vec<_>>(), ass_oracle(&i));
            for w in box_monomials(&i.bounding_multidegree().unwrap()) {
                if !i.contains(&w) {
                    if let Some(p) = colon_prime(&i, &w) {
                        assert!(a.witness(&p).unwrap().degree() <= w.degree());
                    }
                }
            }
            for (p, w) in a.witnesses() {
                assert!(!i.contains(w));
                assert_eq!(i.colon_monomial(w).unwrap(), p.to_ideal(i.n()));
            }
            let minimal = minimal_primes(&i).unwrap();
            assert!(minimal.iter().all(|p| a.contains(p)));
        }
    }

    #[test]
    fn localization() {
        let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
        assert_eq!(localize(&i, &MonomialPrime::maximal(3)).unwrap(), i);
        assert_eq!(localize(&i, &prime(&[1, 2])).unwrap(), ideal(3, &[&[0, 1, 0]]));
        assert!(localize(&i, &prime(&[1])).unwrap().is_unit());
    }

    #[test]
    fn minimal_primes_and_height() {
        assert_eq!(height(&MonomialIdeal::maximal_power(4, 3)).unwrap(), 4);
        assert_eq!(height(&ideal(2, &[&[1, 1]])).unwrap(), 1);
        // the edge ideal of a 4-cycle 1-2-3-4-1: covers {1,3}, {2,4}
        let c4 = ideal(4, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1], &[1, 0, 0, 1]]);
        assert_eq!(minimal_primes(&c4).unwrap(), vec![prime(&[1, 3]), prime(&[2, 4])]);
    }

    #[test]
    fn serialization() {
        let a = ass(&ideal(2, &[&[1, 1]])).unwrap();
        assert_eq!(
            a.to_json(),
            json!([{"prime": [1], "witness": "x2"}, {"prime": [2], "witness": "x1"}])
        );
        assert_eq!(prime(&[1, 5]).to_string(), "(x1,x5)");
    }
}
