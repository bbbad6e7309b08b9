//! Multigraded Betti numbers from upper Koszul simplicial complexes:
//! `dim Tor_i(K, I)_a = dim H̃_{i-1}(K^a; K)` where
//! `K^a = {F ⊆ supp(a) : x^{a - F} ∈ I}`. Only multidegrees in the lcm
//! lattice of `G(I)` can carry homology, so those are the candidates.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::resolution::linalg::{rank, Field};

/// Default cap on the number of lcm-lattice candidates.
pub const DEFAULT_CANDIDATE_BUDGET: usize = 250_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultigradedBetti {
    n: usize,
    field: Field,
    entries: BTreeMap<(usize, Vec<u32>), u64>,
}

impl MultigradedBetti {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// `(i, a) ↦ dim Tor_i(K, I)_a`, nonzero entries only.
    pub fn entries(&self) -> &BTreeMap<(usize, Vec<u32>), u64> {
        &self.entries
    }

    pub fn get(&self, i: usize, a: &[u32]) -> u64 {
        self.entries.get(&(i, a.to_vec())).copied().unwrap_or(0)
    }

    /// Total Betti numbers `β_0, β_1, ...` up to the projective dimension.
    pub fn totals(&self) -> Vec<u64> {
        let mut out: Vec<u64> = Vec::new();
        for ((i, _), &d) in &self.entries {
            if out.len() <= *i {
                out.resize(i + 1, 0);
            }
            out[*i] += d;
        }
        out
    }

    /// `(i, j) ↦ β_{i,j}` with `j` the total degree.
    pub fn graded(&self) -> BTreeMap<(usize, u32), u64> {
        let mut out = BTreeMap::new();
        for ((i, a), &d) in &self.entries {
            *out.entry((*i, a.iter().sum())).or_insert(0) += d;
        }
        out
    }

    /// The ideal generated by the `x^a` with `Tor_i(K, I)_a ≠ 0`.
    pub fn hs_ideal(&self, i: usize) -> MonomialIdeal {
        let gens = self
            .entries
            .keys()
            .filter(|(k, _)| *k == i)
            .map(|(_, a)| Monomial::new(a.clone()))
            .collect();
        MonomialIdeal::from_gens_unchecked(self.n, gens)
    }

    /// Every `β_{i,j}` sits at `j = α + i`.
    pub fn is_linear(&self) -> bool {
        let Some(alpha) = self.graded().keys().filter(|(i, _)| *i == 0).map(|&(_, j)| j).min() else {
            return false;
        };
        self.graded().keys().all(|&(i, j)| j == alpha + i as u32)
    }

    /// Castelnuovo–Mumford regularity of `I`: `max_{i,j} (j - i)`.
    pub fn regularity(&self) -> Option<u32> {
        self.graded().keys().map(|&(i, j)| j - i as u32).max()
    }

    /// `{"char": 0, "table": {"i,a1,...,an": dim}}`.
    pub fn to_json(&self) -> Value {
        let table: BTreeMap<String, u64> = self
            .entries
            .iter()
            .map(|((i, a), &d)| {
                let mut key = i.to_string();
                for e in a {
                    key.push(',');
                    key.push_str(&e.to_string());
                }
                (key, d)
            })
            .collect();
        json!({"char": self.field.characteristic(), "table": table})
    }

    /// Betti table in the usual layout: column `i`, row `j`, entry
    /// `β_{i, i + j}`.
    pub fn to_text(&self) -> String {
        let graded = self.graded();
        let totals = self.totals();
        if totals.is_empty() {
            return "(zero ideal)\n".into();
        }
        let rows: Vec<u32> = {
            let mut r: Vec<u32> = graded.keys().map(|&(i, j)| j - i as u32).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let width = totals.iter().map(|t| t.to_string().len()).max().unwrap_or(1).max(2) + 1;
        let label = rows.iter().map(|r| r.to_string().len() + 1).max().unwrap_or(2).max(6);
        let mut out = format!("{:>label$}", "");
        for i in 0..totals.len() {
            out.push_str(&format!("{i:>width$}"));
        }
        out.push('\n');
        out.push_str(&format!("{:>label$}", "total:"));
        for t in &totals {
            out.push_str(&format!("{t:>width$}"));
        }
        out.push('\n');
        for r in rows {
            out.push_str(&format!("{:>label$}", format!("{r}:")));
            for i in 0..totals.len() {
                match graded.get(&(i, r + i as u32)) {
                    Some(d) => out.push_str(&format!("{d:>width$}")),
                    None => out.push_str(&format!("{:>width$}", ".")),
                }
            }
            out.push('\n');
        }
        out
    }
}

/// Joins of nonempty subsets of `G(I)`.
pub fn lcm_lattice(ideal: &MonomialIdeal, budget: usize) -> Result<Vec<Vec<u32>>> {
    let mut lattice: HashSet<Vec<u32>> = HashSet::new();
    for g in ideal.gens() {
        let mut new: Vec<Vec<u32>> = lattice
            .iter()
            .map(|l| l.iter().zip(g.exps()).map(|(a, b)| *a.max(b)).collect())
            .collect();
        new.push(g.exps().to_vec());
        lattice.extend(new);
        if lattice.len() > budget {
            return Err(Error::ResourceExhausted(format!(
                "lcm lattice exceeds {budget} elements"
            )));
        }
    }
    let mut out: Vec<Vec<u32>> = lattice.into_iter().collect();
    out.sort();
    Ok(out)
}

/// `(i, dim Tor_i(K, I)_a)` for the nonzero homological degrees at `a`.
pub fn tor_at(ideal: &MonomialIdeal, field: Field, a: &[u32]) -> Result<Vec<(usize, u64)>> {
    let supp: Vec<usize> = (0..a.len()).filter(|&s| a[s] > 0).collect();
    let v = supp.len();
    let mut shifted = a.to_vec();
    // faces[size] = bitmasks over supp of faces with that many vertices
    let mut faces: Vec<Vec<u32>> = vec![Vec::new(); v + 1];
    for mask in 0u32..(1u32 << v) {
        for (t, &s) in supp.iter().enumerate() {
            shifted[s] = a[s] - (mask >> t & 1);
        }
        if ideal.contains(&Monomial::new(shifted.clone())) {
            faces[mask.count_ones() as usize].push(mask);
        }
    }
    if faces[0].is_empty() {
        return Ok(Vec::new());
    }
    // ranks[k] = rank of ∂ from faces of size k to faces of size k - 1
    let mut ranks = vec![0usize; v + 2];
    for k in 1..=v {
        if faces[k].is_empty() || faces[k - 1].is_empty() {
            continue;
        }
        let index: BTreeMap<u32, usize> = faces[k - 1].iter().enumerate().map(|(r, &m)| (m, r)).collect();
        let mut matrix = vec![vec![0i64; faces[k].len()]; faces[k - 1].len()];
        for (c, &f) in faces[k].iter().enumerate() {
            let mut sign = 1i64;
            for t in 0..v {
                if f >> t & 1 == 1 {
                    matrix[index[&(f & !(1 << t))]][c] = sign;
                    sign = -sign;
                }
            }
        }
        ranks[k] = rank(&matrix, field)?;
    }
    let mut out = Vec::new();
    for k in 0..=v {
        // reduced homology in dimension k - 1, i.e. Tor_k
        let h = faces[k].len() - ranks[k] - ranks[k + 1];
        if h > 0 {
            out.push((k, h as u64));
        }
    }
    Ok(out)
}

pub fn koszul_tor(ideal: &MonomialIdeal, field: Field) -> Result<MultigradedBetti> {
    koszul_tor_with_budget(ideal, field, DEFAULT_CANDIDATE_BUDGET)
}

pub fn koszul_tor_with_budget(ideal: &MonomialIdeal, field: Field, budget: usize) -> Result<MultigradedBetti> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("Betti numbers"));
    }
    if ideal.n() > 30 {
        return Err(Error::InvalidArgument("at most 30 variables are supported".into()));
    }
    let candidates = lcm_lattice(ideal, budget)?;
    let per: Vec<Vec<(usize, u64)>> = candidates
        .par_iter()
        .map(|a| tor_at(ideal, field, a))
        .collect::<Result<_>>()?;
    let mut entries = BTreeMap::new();
    for (a, tors) in candidates.into_iter().zip(per) {
        for (i, d) in tors {
            entries.insert((i, a.clone()), d);
        }
    }
    Ok(MultigradedBetti {
        n: ideal.n(),
        field,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::box_monomials;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    #[test]
    fn maximal_ideal_is_koszul() {
        let b = koszul_tor(&MonomialIdeal::maximal(3), Field::RATIONALS).unwrap();
        assert_eq!(b.totals(), vec![3, 3, 1]);
        assert!(b.entries().keys().all(|(_, a)| a.iter().all(|&e| e <= 1)));
        assert!(b.is_linear());
        assert_eq!(b.regularity(), Some(1));
    }

    #[test]
    fn tor0_is_the_generators() {
        let i = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 1, 2]]);
        let b = koszul_tor(&i, Field::RATIONALS).unwrap();
        assert_eq!(b.hs_ideal(0), i);
        assert!(b.entries().iter().filter(|((k, _), _)| *k == 0).all(|(_, &d)| d == 1));
    }

    #[test]
    fn complete_intersection_of_squares() {
        // (x1^2, x2^2): Koszul resolution, shift x1^2 x2^2 in degree 1
        let b = koszul_tor(&ideal(2, &[&[2, 0], &[0, 2]]), Field::RATIONALS).unwrap();
        assert_eq!(b.totals(), vec![2, 1]);
        assert_eq!(b.get(1, &[2, 2]), 1);
        assert!(!b.is_linear());
        assert_eq!(b.regularity(), Some(3));
    }

    #[test]
    fn support_lies_in_the_lcm_lattice() {
        let cases = [
            ideal(3, &[&[2, 1, 0], &[0, 1, 1], &[1, 0, 2]]),
            ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]),
            ideal(2, &[&[3, 0], &[1, 1], &[0, 2]]),
        ];
        for i in cases {
            let b = koszul_tor(&i, Field::RATIONALS).unwrap();
            let lcm = i.bounding_multidegree().unwrap();
            let mut from_box = BTreeMap::new();
            for a in box_monomials(&lcm) {
                for (k, d) in tor_at(&i, Field::RATIONALS, a.exps()).unwrap() {
                    from_box.insert((k, a.exps().to_vec()), d);
                }
            }
            assert_eq!(&from_box, b.entries());
        }
    }

    #[test]
    fn triangle_edge_ideal_over_two_fields() {
        let t = ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        let q = koszul_tor(&t, Field::RATIONALS).unwrap();
        let two = koszul_tor(&t, Field::new(2).unwrap()).unwrap();
        assert_eq!(q.entries(), two.entries());
        assert_eq!(q.totals(), vec![3, 2]);
    }

    #[test]
    fn json_and_text() {
        let b = koszul_tor(&MonomialIdeal::maximal(2), Field::RATIONALS).unwrap();
        assert_eq!(
            b.to_json(),
            json!({"char": 0, "table": {"0,0,1": 1, "0,1,0": 1, "1,1,1": 1}})
        );
        let text = b.to_text();
        assert!(text.contains("total:"));
        assert!(text.contains("1:"));
    }

    #[test]
    fn zero_ideal_and_budget() {
        assert!(koszul_tor(&MonomialIdeal::zero(2), Field::RATIONALS).is_err());
        let m = MonomialIdeal::maximal(6);
        assert!(matches!(
            koszul_tor_with_budget(&m, Field::RATIONALS, 10),
            Err(Error::ResourceExhausted(_))
        ));
    }
}
