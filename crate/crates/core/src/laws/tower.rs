//! Cached powers `I^k` and their homological shift ideals.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::primes::{ass, AssResult};
use crate::resolution::{betti, hs_with, linear_quotients, LinearQuotientsData};

/// Lazily computed `I^k`, linear quotients orders of `I^k`, `HS_i(I^k)` and
/// their associated primes.
pub struct Tower {
    base: MonomialIdeal,
    powers: Vec<MonomialIdeal>,
    quotients: HashMap<u32, LinearQuotientsData>,
    shifts: HashMap<(usize, u32), MonomialIdeal>,
    primes: HashMap<(usize, u32), AssResult>,
    bettis: HashMap<(usize, u32), Vec<u64>>,
}

impl Tower {
    pub fn new(base: MonomialIdeal) -> Self {
        let n = base.n();
        Self {
            powers: vec![MonomialIdeal::unit(n), base.clone()],
            base,
            quotients: HashMap::new(),
            shifts: HashMap::new(),
            primes: HashMap::new(),
            bettis: HashMap::new(),
        }
    }

    pub fn base(&self) -> &MonomialIdeal {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    /// `I^k` (`I^0` is the unit ideal).
    pub fn power(&mut self, k: u32) -> &MonomialIdeal {
        while self.powers.len() <= k as usize {
            let next = self
                .powers
                .last()
                .expect("non-empty")
                .product(&self.base)
                .expect("same ring");
            self.powers.push(next);
        }
        &self.powers[k as usize]
    }

    fn quotients(&mut self, k: u32) -> Result<&LinearQuotientsData> {
        if !self.quotients.contains_key(&k) {
            let lq = linear_quotients(&self.power(k).clone())?;
            if !lq.admits {
                return Err(Error::NoLinearQuotients);
            }
            self.quotients.insert(k, lq);
        }
        Ok(&self.quotients[&k])
    }

    /// `HS_i(I^k)` for `k >= 1`, via linear quotients of `I^k`.
    pub fn hs(&mut self, i: usize, k: u32) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::InvalidArgument("powers start at k = 1".into()));
        }
        if let Some(h) = self.shifts.get(&(i, k)) {
            return Ok(h.clone());
        }
        let h = if self.base.is_zero() {
            MonomialIdeal::zero(self.n())
        } else {
            let n = self.n();
            hs_with(self.quotients(k)?, n, i)
        };
        self.shifts.insert((i, k), h.clone());
        Ok(h)
    }

    /// `Ass(S / HS_i(I^k))`; `None` when the shift ideal is zero.
    pub fn ass(&mut self, i: usize, k: u32) -> Result<Option<AssResult>> {
        if let Some(a) = self.primes.get(&(i, k)) {
            return Ok(Some(a.clone()));
        }
        let h = self.hs(i, k)?;
        if h.is_zero() {
            return Ok(None);
        }
        let a = ass(&h)?;
        self.primes.insert((i, k), a.clone());
        Ok(Some(a))
    }

    /// Total Betti numbers of `HS_i(I^k)`; empty when the shift ideal is zero.
    pub fn betti(&mut self, i: usize, k: u32) -> Result<Vec<u64>> {
        if let Some(b) = self.bettis.get(&(i, k)) {
            return Ok(b.clone());
        }
        let h = self.hs(i, k)?;
        let b = if h.is_zero() { Vec::new() } else { betti(&h)? };
        self.bettis.insert((i, k), b.clone());
        Ok(b)
    }

    /// `depth S / HS_i(I^k)`, with the convention `n` for a zero shift ideal.
    pub fn depth(&mut self, i: usize, k: u32) -> Result<usize> {
        let b = self.betti(i, k)?;
        if b.is_empty() {
            return Ok(self.n());
        }
        Ok(self.n() - b.len())
    }
}
