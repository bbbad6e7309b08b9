//! Named families of polymatroidal (and componentwise polymatroidal) ideals.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// The ideal of Veronese type `I_{a,d}`: all `x^b` with `|b| = d`, `b <= a`.
pub fn veronese(a: &[u32], d: u32) -> Result<MonomialIdeal> {
    let total: u64 = a.iter().map(|&x| x as u64).sum();
    if total < d as u64 {
        return Err(Error::InvalidArgument(format!(
            "Veronese type needs sum(a) = {total} >= d = {d}"
        )));
    }
    let n = a.len();
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    // suffix[i] = sum of a[i..], to prune infeasible branches
    let mut suffix = vec![0u64; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + a[i] as u64;
    }
    fn rec(
        a: &[u32],
        suffix: &[u64],
        pos: usize,
        left: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Monomial>,
    ) {
        if pos == a.len() {
            if left == 0 {
                out.push(Monomial::new(cur.clone()));
            }
            return;
        }
        if suffix[pos] < left as u64 {
            return;
        }
        for e in 0..=a[pos].min(left) {
            cur[pos] = e;
            rec(a, suffix, pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    rec(a, &suffix, 0, d, &mut cur, &mut out);
    MonomialIdeal::new(n, out)
}

/// Principal Borel ideal `B(u)`: `x_{p1}...x_{pd}` with `p` nondecreasing and
/// `p_s <= j_s`, where `u = x_{j1}...x_{jd}`.
pub fn principal_borel(u: &Monomial) -> Result<MonomialIdeal> {
    if u.is_one() {
        return Err(Error::InvalidArgument("principal Borel ideal of 1".into()));
    }
    let n = u.n();
    let js: Vec<usize> = (0..n)
        .flat_map(|i| std::iter::repeat(i).take(u.exp(i) as usize))
        .collect();
    let mut out = Vec::new();
    fn rec(js: &[usize], s: usize, lo: usize, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if s == js.len() {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for p in lo..=js[s] {
            cur[p] += 1;
            rec(js, s + 1, p, cur, out);
            cur[p] -= 1;
        }
    }
    rec(&js, 0, 0, &mut vec![0; n], &mut out);
    MonomialIdeal::new(n, out)
}

/// `(u) · I_{a,d}`, the shape of every ideal with the strong exchange property.
pub fn strong_exchange_ideal(u: &Monomial, a: &[u32], d: u32) -> Result<MonomialIdeal> {
    if u.n() != a.len() {
        return Err(Error::DimensionMismatch {
            expected: a.len(),
            found: u.n(),
        });
    }
    veronese(a, d)?.mul_monomial(u)
}

/// Product of monomial primes, each given by its 0-based variables.
pub fn transversal_product(n: usize, primes: &[Vec<usize>]) -> Result<MonomialIdeal> {
    let mut acc = MonomialIdeal::unit(n);
    for p in primes {
        if p.is_empty() || p.iter().any(|&i| i >= n) {
            return Err(Error::InvalidArgument(format!("bad prime {p:?} for n = {n}")));
        }
        acc = acc.product(&MonomialIdeal::prime(n, p))?;
    }
    Ok(acc)
}

/// `P_1^{k_1} ∩ ... ∩ P_r^{k_r}` where `P_t` is generated by every variable
/// except `missing_t` (height `n - 1` primes, pairwise summing to `m`).
pub fn prime_power_intersection(n: usize, components: &[(usize, u32)]) -> Result<MonomialIdeal> {
    if components.is_empty() {
        return Err(Error::InvalidArgument("empty intersection".into()));
    }
    let mut seen = vec![false; n];
    let mut acc = MonomialIdeal::unit(n);
    for &(missing, k) in components {
        if missing >= n || seen[missing] || k == 0 {
            return Err(Error::InvalidArgument(format!(
                "bad component (missing {missing}, power {k}) for n = {n}"
            )));
        }
        seen[missing] = true;
        let vars: Vec<usize> = (0..n).filter(|&i| i != missing).collect();
        acc = acc.intersect(&MonomialIdeal::prime(n, &vars).power(k))?;
    }
    Ok(acc)
}
