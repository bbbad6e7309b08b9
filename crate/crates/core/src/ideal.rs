//! Monomial ideals stored by their minimal monomial generating set.
//!
//! Every constructor minimalizes, so two ideals are equal exactly when their
//! generator lists are equal. The zero ideal has no generators; the unit ideal
//! `(1)` has the single generator `1`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

/// Divisibility-minimal subset of `gens`, deduplicated and in canonical order.
pub fn minimalize(gens: Vec<Monomial>, n: usize) -> Result<MonomialIdeal> {
    for g in &gens {
        g.check_len(n)?;
    }
    Ok(MonomialIdeal::from_gens_unchecked(n, gens))
}

/// All monomials of degree `d` in `n` variables, in canonical order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos + 1 == n {
            cur[pos] = left;
            out.push(Monomial::new(cur.clone()));
            cur[pos] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            rec(n, pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    if n == 0 {
        return if d == 0 { vec![Monomial::one(0)] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(n, 0, d, &mut vec![0; n], &mut out);
    out
}

/// All exponent vectors componentwise `<= bound`.
pub fn box_monomials(bound: &[u32]) -> Vec<Monomial> {
    let mut out = vec![Monomial::new(vec![])];
    for &b in bound {
        let mut next = Vec::with_capacity(out.len() * (b as usize + 1));
        for m in &out {
            for e in 0..=b {
                let mut exps = m.exps().to_vec();
                exps.push(e);
                next.push(Monomial::new(exps));
            }
        }
        out = next;
    }
    out
}

impl MonomialIdeal {
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        minimalize(gens, n)
    }

    pub fn from_exponents(n: usize, exps: Vec<Vec<u32>>) -> Result<Self> {
        minimalize(exps.into_iter().map(Monomial::new).collect(), n)
    }

    pub(crate) fn from_gens_unchecked(n: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort();
        gens.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
        // Canonical order is degree-ascending and distinct monomials of equal
        // degree never divide each other, so only kept gens of strictly
        // smaller degree (kept[..lower]) can divide g.
        let mut lower = 0;
        let mut current = None;
        for g in gens {
            let d = g.degree();
            if current != Some(d) {
                current = Some(d);
                lower = kept.len();
            }
            if !kept[..lower].iter().any(|k| k.divides(&g)) {
                kept.push(g);
            }
        }
        Self { n, gens: kept }
    }

    pub fn zero(n: usize) -> Self {
        Self { n, gens: vec![] }
    }

    pub fn unit(n: usize) -> Self {
        Self {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    pub fn principal(u: Monomial) -> Self {
        Self {
            n: u.n(),
            gens: vec![u],
        }
    }

    /// The graded maximal ideal `(x1, ..., xn)`.
    pub fn maximal(n: usize) -> Self {
        Self::from_gens_unchecked(n, (0..n).map(|i| Monomial::var(n, i)).collect())
    }

    /// `m^k`.
    pub fn maximal_power(n: usize, k: u32) -> Self {
        Self::from_gens_unchecked(n, monomials_of_degree(n, k))
    }

    /// Monomial prime generated by the given 0-based variables.
    pub fn prime(n: usize, vars: &[usize]) -> Self {
        Self::from_gens_unchecked(n, vars.iter().map(|&i| Monomial::var(n, i)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Whether `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    fn check_same_n(&self, other: &MonomialIdeal) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_n(other)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Self::from_gens_unchecked(self.n, gens))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_n(other)?;
        let mut set = HashSet::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                set.insert(a.mul(b));
            }
        }
        Ok(Self::from_gens_unchecked(self.n, set.into_iter().collect()))
    }

    /// `I^k`; `I^0` is the unit ideal.
    pub fn power(&self, k: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.n);
        for _ in 0..k {
            acc = acc.product(self).expect("same ambient ring");
        }
        acc
    }

    /// `(u) · I`.
    pub fn mul_monomial(&self, u: &Monomial) -> Result<MonomialIdeal> {
        u.check_len(self.n)?;
        Ok(MonomialIdeal {
            n: self.n,
            gens: self.gens.iter().map(|g| g.mul(u)).collect(),
        }
        .renormalized())
    }

    /// `m · I`.
    pub fn mul_maximal(&self) -> MonomialIdeal {
        self.product(&MonomialIdeal::maximal(self.n))
            .expect("same ambient ring")
    }

    fn renormalized(self) -> MonomialIdeal {
        Self::from_gens_unchecked(self.n, self.gens)
    }

    /// `(I : f)`.
    pub fn colon_monomial(&self, f: &Monomial) -> Result<MonomialIdeal> {
        f.check_len(self.n)?;
        Ok(Self::from_gens_unchecked(
            self.n,
            self.gens.iter().map(|g| g.colon(f)).collect(),
        ))
    }

    /// `(A : B)`. Dividing by the zero ideal is rejected.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_n(other)?;
        if other.is_zero() {
            return Err(Error::ZeroIdeal("colon by the zero ideal"));
        }
        let mut acc: Option<MonomialIdeal> = None;
        for b in &other.gens {
            let c = self.colon_monomial(b)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        Ok(acc.expect("nonempty generator list"))
    }

    /// `(I : m)`.
    pub fn colon_maximal(&self) -> MonomialIdeal {
        self.colon_ideal(&MonomialIdeal::maximal(self.n))
            .expect("maximal ideal is nonzero")
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_n(other)?;
        let mut set = HashSet::new();
        for a in &self.gens {
            for b in &other.gens {
                set.insert(a.lcm(b));
            }
        }
        Ok(Self::from_gens_unchecked(self.n, set.into_iter().collect()))
    }

    /// `soc(I)`: generated by the monomials of `(I : m)` outside `I`.
    ///
    /// The zero ideal has zero socle; the socle of `(1)` is zero as well.
    pub fn socle(&self) -> MonomialIdeal {
        if self.is_zero() {
            return MonomialIdeal::zero(self.n);
        }
        let colon = self.colon_maximal();
        let gens = colon
            .gens
            .into_iter()
            .filter(|g| !self.contains(g))
            .collect();
        Self::from_gens_unchecked(self.n, gens)
    }

    /// `(I^sat, sat(I))`, iterating `J <- (J : m)` to the fixpoint.
    pub fn saturation(&self) -> (MonomialIdeal, usize) {
        let mut cur = self.clone();
        let mut steps = 0;
        loop {
            let next = cur.colon_maximal();
            if next == cur {
                return (cur, steps);
            }
            cur = next;
            steps += 1;
        }
    }

    /// `I_<j>`: the ideal generated by the degree-`j` monomials of `I`.
    pub fn graded_component(&self, j: u32) -> MonomialIdeal {
        let mut cache: HashMap<u32, Vec<Monomial>> = HashMap::new();
        let mut set = HashSet::new();
        for g in &self.gens {
            let d = g.degree();
            if d > j {
                continue;
            }
            let fill = cache
                .entry(j - d)
                .or_insert_with(|| monomials_of_degree(self.n, j - d));
            for m in fill.iter() {
                set.insert(g.mul(m));
            }
        }
        Self::from_gens_unchecked(self.n, set.into_iter().collect())
    }

    /// `I^{<=a}`: keep the generators dominated by `a`.
    pub fn restriction(&self, a: &[u32]) -> Result<MonomialIdeal> {
        if a.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: a.len(),
            });
        }
        Ok(MonomialIdeal {
            n: self.n,
            gens: self
                .gens
                .iter()
                .filter(|g| g.dominated_by(a))
                .cloned()
                .collect(),
        })
    }

    /// Bounding multidegree `deg(I)`.
    pub fn bounding_multidegree(&self) -> Result<Vec<u32>> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal("bounding multidegree"));
        }
        Ok(self.lcm_exponents())
    }

    fn lcm_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.n];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exps()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    /// Least common multiple of the generators.
    pub fn lcm(&self) -> Result<Monomial> {
        Ok(Monomial::new(self.bounding_multidegree()?))
    }

    /// `α(I)`: smallest generator degree.
    pub fn alpha(&self) -> Result<u32> {
        self.gens
            .first()
            .map(|g| g.degree())
            .ok_or(Error::ZeroIdeal("alpha"))
    }

    /// Largest generator degree.
    pub fn max_degree(&self) -> Result<u32> {
        self.gens
            .last()
            .map(|g| g.degree())
            .ok_or(Error::ZeroIdeal("max degree"))
    }

    pub fn is_equigenerated(&self) -> bool {
        match (self.gens.first(), self.gens.last()) {
            (Some(a), Some(b)) => a.degree() == b.degree(),
            _ => true,
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    /// Exponent vectors of the minimal generators.
    pub fn exponents(&self) -> Vec<Vec<u32>> {
        self.gens.iter().map(|g| g.exps().to_vec()).collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "0");
        }
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    fn five_variable() -> MonomialIdeal {
        ideal(
            5,
            &[
                &[1, 0, 1, 0, 0],
                &[1, 0, 0, 1, 0],
                &[1, 0, 0, 0, 1],
                &[0, 1, 1, 0, 0],
                &[0, 1, 0, 1, 0],
                &[0, 1, 0, 0, 1],
                &[0, 0, 1, 1, 0],
                &[0, 0, 1, 0, 1],
            ],
        )
    }

    #[test]
    fn minimalize_drops_multiples() {
        assert_eq!(ideal(2, &[&[1, 0], &[1, 1]]), ideal(2, &[&[1, 0]]));
        let anti = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
        assert_eq!(anti.num_gens(), 3);
    }

    #[test]
    fn minimalize_rejects_bad_lengths() {
        let err = minimalize(vec![Monomial::new(vec![1, 0]), Monomial::new(vec![1])], 2);
        assert!(matches!(err, Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn membership() {
        let i = ideal(2, &[&[1, 1]]);
        assert!(i.contains(&Monomial::new(vec![2, 1])));
        assert!(!i.contains(&Monomial::new(vec![2, 0])));
    }

    #[test]
    fn products_and_powers() {
        let m = MonomialIdeal::maximal(2);
        assert_eq!(m.product(&m).unwrap(), ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        assert_eq!(five_variable().power(1), five_variable());
        assert!(m.power(0).is_unit());
        let sq = five_variable().power(2);
        assert!(sq.gens().iter().all(|g| g.degree() == 4));
    }

    #[test]
    fn colon_examples() {
        let c = five_variable()
            .colon_monomial(&Monomial::var(5, 0))
            .unwrap();
        assert_eq!(c, MonomialIdeal::prime(5, &[2, 3, 4]));
        assert_eq!(five_variable().colon_monomial(&Monomial::one(5)).unwrap(), five_variable());
        for n in 1..5 {
            let m = MonomialIdeal::maximal(n);
            assert_eq!(MonomialIdeal::maximal_power(n, 2).colon_ideal(&m).unwrap(), m);
        }
        assert!(five_variable().colon_ideal(&MonomialIdeal::zero(5)).is_err());
    }

    #[test]
    fn intersections() {
        let a = MonomialIdeal::prime(2, &[0]);
        let b = MonomialIdeal::prime(2, &[1]);
        assert_eq!(a.intersect(&b).unwrap(), ideal(2, &[&[1, 1]]));
        assert_eq!(five_variable().intersect(&five_variable()).unwrap(), five_variable());
    }

    #[test]
    fn socle_examples() {
        let m2 = MonomialIdeal::maximal_power(2, 2);
        assert_eq!(m2.socle(), MonomialIdeal::maximal(2));
        let x1 = MonomialIdeal::maximal(1);
        assert!(x1.socle().is_unit());
        // (x1 x2) has positive depth: empty socle.
        assert!(ideal(2, &[&[1, 1]]).socle().is_zero());
    }

    #[test]
    fn saturation_examples() {
        for k in 1..4 {
            let (sat, steps) = MonomialIdeal::maximal_power(3, k).saturation();
            assert!(sat.is_unit());
            assert_eq!(steps, k as usize);
        }
        let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1]]);
        assert_eq!(i.saturation(), (i.clone(), 0));
        // x1 * m-primary part saturates to (x1).
        let j = ideal(2, &[&[2, 0], &[1, 1]]);
        assert_eq!(j.saturation(), (ideal(2, &[&[1, 0]]), 1));
    }

    #[test]
    fn graded_components() {
        let i = ideal(2, &[&[1, 0], &[0, 2]]);
        assert_eq!(i.graded_component(2), MonomialIdeal::maximal_power(2, 2));
        assert!(five_variable().graded_component(1).is_zero());
        assert_eq!(five_variable().graded_component(3), five_variable().mul_maximal());
    }

    #[test]
    fn restrictions() {
        let m2 = MonomialIdeal::maximal_power(2, 2);
        assert_eq!(m2.restriction(&[1, 2]).unwrap(), ideal(2, &[&[1, 1], &[0, 2]]));
        let d = five_variable().bounding_multidegree().unwrap();
        assert_eq!(d, vec![1, 1, 1, 1, 1]);
        assert_eq!(five_variable().restriction(&d).unwrap(), five_variable());
        assert!(five_variable().restriction(&[0; 5]).unwrap().is_zero());
    }

    #[test]
    fn degree_helpers() {
        assert_eq!(MonomialIdeal::maximal_power(3, 3).alpha().unwrap(), 3);
        assert!(MonomialIdeal::zero(3).alpha().is_err());
        assert!(MonomialIdeal::zero(3).bounding_multidegree().is_err());
        let k3 = five_variable().power(3);
        assert_eq!(k3.bounding_multidegree().unwrap(), vec![3; 5]);
    }
}
