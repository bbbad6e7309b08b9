//! Linear quotients orders and the sets `set(u_i)`.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Default node budget for [`search_linear_quotients`].
pub const DEFAULT_SEARCH_BUDGET: usize = 200_000;

/// An ordering `u_1, ..., u_m` of `G(I)` with the sets
/// `set(u_i) = {ℓ : x_ℓ ∈ (u_1, ..., u_{i-1}) : u_i}` (0-based indices).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearQuotientsData {
    /// Indices into `I.gens()`.
    pub order: Vec<usize>,
    /// Generators in order.
    pub gens: Vec<Monomial>,
    /// `sets[k]` belongs to `gens[k]`; meaningful only while `admits` holds
    /// (for a failed order it is filled up to the failing position).
    pub sets: Vec<Vec<usize>>,
    pub admits: bool,
    /// First position whose colon is not generated by variables.
    pub failure: Option<usize>,
}

/// Variables generating `(prefix) : u` if that colon is generated by
/// variables, otherwise `None`.
///
/// The colon is generated by the quotients `v / gcd(v, u)`; it is generated
/// by variables iff every quotient is divisible by a quotient of degree one.
pub fn colon_variables(prefix: &[&Monomial], u: &Monomial) -> Option<Vec<usize>> {
    let n = u.n();
    let mut linear = vec![false; n];
    let mut quotients = Vec::with_capacity(prefix.len());
    for v in prefix {
        let q = v.colon(u);
        if q.degree() == 1 {
            linear[q.support()[0]] = true;
        } else {
            quotients.push(q);
        }
    }
    for q in &quotients {
        if !q.exps().iter().enumerate().any(|(l, &e)| e > 0 && linear[l]) {
            return None;
        }
    }
    Some((0..n).filter(|&l| linear[l]).collect())
}

impl LinearQuotientsData {
    /// Evaluate a fixed ordering of `G(I)`.
    pub fn for_order(ideal: &MonomialIdeal, order: Vec<usize>) -> Result<Self> {
        let m = ideal.num_gens();
        let mut seen = vec![false; m];
        if order.len() != m || order.iter().any(|&k| k >= m || std::mem::replace(&mut seen[k], true)) {
            return Err(Error::InvalidArgument("order must be a permutation of the generators".into()));
        }
        let gens: Vec<Monomial> = order.iter().map(|&k| ideal.gens()[k].clone()).collect();
        let mut sets = Vec::with_capacity(m);
        let mut failure = None;
        for i in 0..m {
            let prefix: Vec<&Monomial> = gens[..i].iter().collect();
            match colon_variables(&prefix, &gens[i]) {
                Some(s) => sets.push(s),
                None => {
                    failure = Some(i);
                    break;
                }
            }
        }
        Ok(Self {
            order,
            gens,
            sets,
            admits: failure.is_none(),
            failure,
        })
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// `β_j = Σ_u C(|set(u)|, j)`, the size of the Eq.-(1) basis.
    pub fn betti_numbers(&self) -> Vec<u64> {
        let top = self.sets.iter().map(|s| s.len()).max().unwrap_or(0);
        let mut out = vec![0u64; if self.gens.is_empty() { 0 } else { top + 1 }];
        for s in &self.sets {
            let k = s.len() as u64;
            let mut c = 1u64;
            for (j, slot) in out.iter_mut().enumerate().take(s.len() + 1) {
                *slot += c;
                c = c * (k - j as u64) / (j as u64 + 1);
            }
        }
        out
    }
}

/// Generators sorted by degree, then lexicographically with the given
/// variable priority (default `x1 > ... > xn`), larger first. For
/// equigenerated ideals this is the plain lexicographic order.
pub fn lex_linear_quotients(ideal: &MonomialIdeal, var_order: Option<&[usize]>) -> Result<LinearQuotientsData> {
    let n = ideal.n();
    let default: Vec<usize> = (0..n).collect();
    let vo = var_order.unwrap_or(&default);
    let mut check = vo.to_vec();
    check.sort_unstable();
    if check != default {
        return Err(Error::InvalidArgument("variable order must be a permutation of 0..n".into()));
    }
    let g = ideal.gens();
    let mut order: Vec<usize> = (0..g.len()).collect();
    order.sort_by(|&a, &b| {
        g[a].degree()
            .cmp(&g[b].degree())
            .then_with(|| g[b].lex_cmp(&g[a], vo))
    });
    LinearQuotientsData::for_order(ideal, order)
}

/// Backtracking search over degree-nondecreasing orders (such an order
/// exists whenever any linear quotients order does). Whether a generator can
/// follow a prefix depends only on the prefix as a set, so dead prefix sets
/// are memoized. Exceeding `budget` search nodes is reported as
/// [`Error::ResourceExhausted`].
pub fn search_linear_quotients(ideal: &MonomialIdeal, budget: usize) -> Result<LinearQuotientsData> {
    let g = ideal.gens();
    let m = g.len();
    let lex = lex_linear_quotients(ideal, None)?;
    if lex.admits {
        return Ok(lex);
    }
    let words = m.div_ceil(64).max(1);
    let mut chosen = vec![0u64; words];
    let mut dead: HashSet<Vec<u64>> = HashSet::new();
    let mut order = Vec::with_capacity(m);
    let mut nodes = 0usize;
    // candidates are tried in the lexicographic preference of the lex order
    let pref: Vec<usize> = lex.order.clone();

    fn rec(
        g: &[Monomial],
        pref: &[usize],
        chosen: &mut Vec<u64>,
        order: &mut Vec<usize>,
        dead: &mut HashSet<Vec<u64>>,
        nodes: &mut usize,
        budget: usize,
    ) -> Result<bool> {
        if order.len() == g.len() {
            return Ok(true);
        }
        if dead.contains(chosen) {
            return Ok(false);
        }
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::ResourceExhausted(format!(
                "linear quotients search exceeded {budget} nodes"
            )));
        }
        let is_chosen = |c: &Vec<u64>, k: usize| c[k / 64] >> (k % 64) & 1 == 1;
        let min_deg = pref
            .iter()
            .filter(|&&k| !is_chosen(chosen, k))
            .map(|&k| g[k].degree())
            .min()
            .expect("some generator remains");
        let prefix: Vec<&Monomial> = order.iter().map(|&k| &g[k]).collect();
        let candidates: Vec<usize> = pref
            .iter()
            .copied()
            .filter(|&k| !is_chosen(chosen, k) && g[k].degree() == min_deg)
            .filter(|&k| colon_variables(&prefix, &g[k]).is_some())
            .collect();
        for k in candidates {
            chosen[k / 64] |= 1 << (k % 64);
            order.push(k);
            if rec(g, pref, chosen, order, dead, nodes, budget)? {
                return Ok(true);
            }
            order.pop();
            chosen[k / 64] &= !(1 << (k % 64));
        }
        dead.insert(chosen.clone());
        Ok(false)
    }

    if m > 0 && rec(g, &pref, &mut chosen, &mut order, &mut dead, &mut nodes, budget)? {
        return LinearQuotientsData::for_order(ideal, order);
    }
    Ok(LinearQuotientsData {
        admits: false,
        ..lex
    })
}

/// Find any linear quotients order: lexicographic first, then search.
pub fn linear_quotients(ideal: &MonomialIdeal) -> Result<LinearQuotientsData> {
    let lex = lex_linear_quotients(ideal, None)?;
    if lex.admits {
        return Ok(lex);
    }
    search_linear_quotients(ideal, DEFAULT_SEARCH_BUDGET)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polymatroid::{is_polymatroidal, principal_borel, veronese};

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    /// Oracle: compute the prefix colon as an ideal and read off variables.
    fn colon_oracle(prefix: &[Monomial], u: &Monomial) -> Option<Vec<usize>> {
        let n = u.n();
        let c = MonomialIdeal::new(n, prefix.to_vec()).unwrap().colon_monomial(u).unwrap();
        if c.gens().iter().all(|g| g.degree() == 1) {
            let mut v: Vec<usize> = c.gens().iter().map(|g| g.support()[0]).collect();
            v.sort();
            Some(v)
        } else {
            None
        }
    }

    #[test]
    fn maximal_ideal_sets() {
        let lq = lex_linear_quotients(&MonomialIdeal::maximal(4), None).unwrap();
        assert!(lq.admits);
        for (k, s) in lq.sets.iter().enumerate() {
            assert_eq!(s, &(0..k).collect::<Vec<_>>());
        }
        assert_eq!(lq.betti_numbers(), vec![4, 6, 4, 1]);
    }

    #[test]
    fn disjoint_edges_fail() {
        let i = ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        let lq = lex_linear_quotients(&i, None).unwrap();
        assert!(!lq.admits);
        assert_eq!(lq.failure, Some(1));
        assert!(!search_linear_quotients(&i, 1000).unwrap().admits);
    }

    #[test]
    fn pure_squares_have_no_order() {
        let i = ideal(3, &[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2]]);
        assert!(!search_linear_quotients(&i, 1000).unwrap().admits);
        // exhaustive over all six orders
        for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            assert!(!LinearQuotientsData::for_order(&i, perm.to_vec()).unwrap().admits);
        }
    }

    #[test]
    fn borel_sets_are_initial_intervals() {
        for u in [vec![0, 1, 1], vec![1, 0, 2], vec![0, 1, 0, 2]] {
            let b = principal_borel(&Monomial::new(u)).unwrap();
            let lq = lex_linear_quotients(&b, None).unwrap();
            assert!(lq.admits);
            for (v, s) in lq.gens.iter().zip(&lq.sets) {
                let max = v.max_var().unwrap();
                assert_eq!(s, &(0..max).collect::<Vec<_>>(), "at {v}");
            }
        }
    }

    #[test]
    fn search_finds_nonlex_orders() {
        let i = ideal(3, &[&[1, 0, 0], &[0, 2, 0], &[0, 1, 1]]);
        let lq = search_linear_quotients(&i, 1000).unwrap();
        assert!(lq.admits);
        let degs: Vec<u32> = lq.gens.iter().map(|g| g.degree()).collect();
        assert!(degs.windows(2).all(|w| w[0] <= w[1]));
        // the path x1x2, x2x3, x3x4 has linear quotients, but not in every order
        let p = ideal(4, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1]]);
        assert!(linear_quotients(&p).unwrap().admits);
        assert!(!LinearQuotientsData::for_order(&p, vec![0, 2, 1]).unwrap().admits);
    }

    #[test]
    fn sets_match_colon_oracle_on_polymatroids() {
        for (a, d) in [(vec![2, 1, 2], 3), (vec![1, 1, 1, 1], 2), (vec![3, 2, 1, 1], 4)] {
            let v = veronese(&a, d).unwrap();
            assert!(is_polymatroidal(&v));
            let lq = lex_linear_quotients(&v, None).unwrap();
            assert!(lq.admits);
            for k in 0..lq.len() {
                assert_eq!(colon_oracle(&lq.gens[..k], &lq.gens[k]), Some(lq.sets[k].clone()));
            }
            assert!(lq.sets[0].is_empty());
        }
    }
}
