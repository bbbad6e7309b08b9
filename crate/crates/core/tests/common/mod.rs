//! Independent brute-force oracles over plain exponent vectors.
//!
//! Nothing here calls into the library's algorithms: membership is a dense
//! table over a box, Tor comes from the reduced homology of upper Koszul
//! complexes computed with a private mod-p rank, and associated primes come
//! from a witness sweep over the box.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet};

use polyshift::MonomialIdeal;

pub type Exp = Vec<u32>;

pub fn exps(i: &MonomialIdeal) -> Vec<Exp> {
    i.exponents()
}

pub fn degree(a: &[u32]) -> u32 {
    a.iter().sum()
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn lcm(a: &[u32], b: &[u32]) -> Exp {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn lcm_all(n: usize, gens: &[Exp]) -> Exp {
    gens.iter().fold(vec![0; n], |acc, g| lcm(&acc, g))
}

/// Minimal elements under divisibility, as a sorted set.
pub fn minimalize(gens: &[Exp]) -> BTreeSet<Exp> {
    let mut sorted: Vec<&Exp> = gens.iter().collect();
    sorted.sort_by_key(|g| degree(g));
    sorted.dedup();
    let mut out: Vec<&Exp> = Vec::new();
    for g in sorted {
        if !out.iter().any(|h| divides(h, g)) {
            out.push(g);
        }
    }
    out.into_iter().cloned().collect()
}

pub fn gens_set(i: &MonomialIdeal) -> BTreeSet<Exp> {
    exps(i).into_iter().collect()
}

pub fn product(a: &[Exp], b: &[Exp]) -> BTreeSet<Exp> {
    let mut all = HashSet::new();
    for u in a {
        for v in b {
            all.insert(u.iter().zip(v).map(|(x, y)| x + y).collect::<Exp>());
        }
    }
    minimalize(&all.into_iter().collect::<Vec<_>>())
}

/// `I^k` with `I^0 = (1)`.
pub fn power(n: usize, gens: &[Exp], k: u32) -> BTreeSet<Exp> {
    let mut acc: BTreeSet<Exp> = [vec![0; n]].into_iter().collect();
    for _ in 0..k {
        acc = product(&acc.into_iter().collect::<Vec<_>>(), gens);
    }
    acc
}

/// Dense membership table over the box `0 <= a <= bound`; queries beyond the
/// bound are clamped, which is exact once the bound dominates `lcm G(I)`.
pub struct Table {
    pub bound: Exp,
    strides: Vec<usize>,
    cells: Vec<bool>,
}

impl Table {
    pub fn new(gens: &[Exp], bound: &[u32]) -> Self {
        let n = bound.len();
        let mut strides = vec![1usize; n];
        for i in (0..n.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * (bound[i + 1] as usize + 1);
        }
        let size = if n == 0 { 1 } else { strides[0] * (bound[0] as usize + 1) };
        let mut cells = vec![false; size];
        for g in gens {
            if divides(g, bound) {
                let idx: usize = g.iter().zip(&strides).map(|(e, s)| *e as usize * s).sum();
                cells[idx] = true;
            }
        }
        // index order is lexicographic, so every predecessor is visited first
        let mut point = vec![0u32; n];
        for idx in 0..size {
            if !cells[idx] {
                cells[idx] = (0..n).any(|j| point[j] > 0 && cells[idx - strides[j]]);
            }
            for j in (0..n).rev() {
                if point[j] < bound[j] {
                    point[j] += 1;
                    break;
                }
                point[j] = 0;
            }
        }
        Self {
            bound: bound.to_vec(),
            strides,
            cells,
        }
    }

    /// Table for `gens` over the box bounded by `lcm G`.
    pub fn of(n: usize, gens: &[Exp]) -> Self {
        Self::new(gens, &lcm_all(n, gens))
    }

    pub fn contains(&self, a: &[u32]) -> bool {
        let idx: usize = a
            .iter()
            .zip(&self.bound)
            .zip(&self.strides)
            .map(|((e, b), s)| *e.min(b) as usize * s)
            .sum();
        self.cells[idx]
    }

    pub fn contains_signed(&self, a: &[i64]) -> bool {
        if a.iter().any(|&e| e < 0) {
            return false;
        }
        let v: Exp = a.iter().map(|&e| e as u32).collect();
        self.contains(&v)
    }

    pub fn points(&self) -> BoxIter {
        BoxIter::new(&self.bound)
    }
}

/// Lexicographic iteration over `0 <= a <= bound`.
pub struct BoxIter {
    bound: Exp,
    next: Option<Exp>,
}

impl BoxIter {
    pub fn new(bound: &[u32]) -> Self {
        Self {
            bound: bound.to_vec(),
            next: Some(vec![0; bound.len()]),
        }
    }
}

impl Iterator for BoxIter {
    type Item = Exp;

    fn next(&mut self) -> Option<Exp> {
        let cur = self.next.take()?;
        let mut nxt = cur.clone();
        let mut carried = true;
        for j in (0..nxt.len()).rev() {
            if nxt[j] < self.bound[j] {
                nxt[j] += 1;
                carried = false;
                break;
            }
            nxt[j] = 0;
        }
        if !carried {
            self.next = Some(nxt);
        }
        Some(cur)
    }
}

pub fn box_size(bound: &[u32]) -> u64 {
    bound.iter().map(|b| *b as u64 + 1).product()
}

/// Two monomial ideals are equal iff they agree on a box bounding both
/// generating sets; here simply compare minimal generating sets.
pub fn same_ideal(a: &[Exp], b: &[Exp]) -> bool {
    minimalize(a) == minimalize(b)
}

const P: i64 = 2_147_483_647;

fn inverse(a: i64) -> i64 {
    let (mut result, mut base, mut e) = (1i64, a.rem_euclid(P), P - 2);
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % P;
        }
        base = base * base % P;
        e >>= 1;
    }
    result
}

/// Rank over F_p with p = 2^31 - 1. Upper Koszul complexes here live on at
/// most five vertices, where simplicial homology is torsion free, so this
/// equals the rank over Q.
pub fn rank(mut m: Vec<Vec<i64>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c].rem_euclid(P) != 0) else {
            continue;
        };
        m.swap(r, p);
        let inv = inverse(m[r][c]);
        for i in 0..rows {
            if i != r && m[i][c].rem_euclid(P) != 0 {
                let f = m[i][c].rem_euclid(P) * inv % P;
                for j in c..cols {
                    m[i][j] = (m[i][j] - f * m[r][j]).rem_euclid(P);
                }
            }
        }
        r += 1;
    }
    r
}

/// `dim Tor_i(K, I)_a = dim H~_{i-1}(K^a)` where the upper Koszul complex is
/// `K^a = { F ⊆ supp a : x^{a - F} ∈ I }`. Returns `(i, dim)` for nonzero dims.
pub fn tor_at(table: &Table, a: &[u32]) -> Vec<(usize, u64)> {
    if !table.contains(a) {
        return Vec::new();
    }
    let support: Vec<usize> = (0..a.len()).filter(|&j| a[j] > 0).collect();
    let s = support.len();
    let face_in = |mask: usize| {
        let mut b = a.to_vec();
        for (t, &v) in support.iter().enumerate() {
            if mask >> t & 1 == 1 {
                b[v] -= 1;
            }
        }
        table.contains(&b)
    };
    let full = (1usize << s) - 1;
    if face_in(full) {
        return Vec::new(); // a cone over any vertex: acyclic
    }
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); s + 1];
    for mask in 0..=full {
        if face_in(mask) {
            by_size[mask.count_ones() as usize].push(mask);
        }
    }
    // rank of the boundary from faces of size d to faces of size d - 1
    let boundary_rank = |d: usize| -> usize {
        if d == 0 || by_size[d].is_empty() || by_size[d - 1].is_empty() {
            return 0;
        }
        let index: BTreeMap<usize, usize> = by_size[d - 1].iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut rows = Vec::new();
        for &f in &by_size[d] {
            let mut row = vec![0i64; by_size[d - 1].len()];
            let mut sign = 1i64;
            for t in 0..s {
                if f >> t & 1 == 1 {
                    if let Some(&col) = index.get(&(f & !(1 << t))) {
                        row[col] = sign;
                    }
                    sign = -sign;
                }
            }
            rows.push(row);
        }
        rank(rows)
    };
    let ranks: Vec<usize> = (0..=s + 1).map(|d| if d <= s { boundary_rank(d) } else { 0 }).collect();
    let mut out = Vec::new();
    for i in 0..=s {
        // faces of size i are the (i-1)-dimensional chains
        let dim = by_size[i].len() as i64 - ranks[i] as i64 - ranks[i + 1] as i64;
        if dim > 0 {
            out.push((i, dim as u64));
        }
    }
    out
}

/// Multigraded Betti numbers over the box `≤ lcm G(I)`.
pub fn betti_table(n: usize, gens: &[Exp]) -> BTreeMap<(usize, Exp), u64> {
    let table = Table::of(n, gens);
    let mut out = BTreeMap::new();
    for a in table.points() {
        for (i, d) in tor_at(&table, &a) {
            out.insert((i, a.clone()), d);
        }
    }
    out
}

/// Homological shift ideals `HS_0..HS_{n-1}` as minimal generating sets.
pub fn shift_ideals(n: usize, gens: &[Exp]) -> Vec<BTreeSet<Exp>> {
    let mut raw: Vec<Vec<Exp>> = vec![Vec::new(); n];
    for ((i, a), _) in betti_table(n, gens) {
        raw[i].push(a);
    }
    raw.iter().map(|r| minimalize(r)).collect()
}

pub fn betti_totals(n: usize, gens: &[Exp]) -> Vec<u64> {
    let mut totals = vec![0u64; n];
    for ((i, _), d) in betti_table(n, gens) {
        totals[i] += d;
    }
    while totals.last() == Some(&0) {
        totals.pop();
    }
    totals
}

/// `max |a| - i` over nonzero multigraded Betti numbers.
pub fn regularity(n: usize, gens: &[Exp]) -> Option<u32> {
    betti_table(n, gens).keys().map(|(i, a)| degree(a) - *i as u32).max()
}

/// `depth S/I = n - pd(I) - 1`; `n` for the zero ideal.
pub fn depth_quotient(n: usize, gens: &[Exp]) -> usize {
    if gens.is_empty() {
        return n;
    }
    let pd = betti_totals(n, gens).len() - 1;
    n - pd - 1
}

/// Associated primes of `S/I` (0-based variable sets) with the least degree
/// of a monomial witness `w` such that `(I : w)` is the prime.
pub fn ass(n: usize, gens: &[Exp]) -> BTreeMap<Vec<usize>, u32> {
    let table = Table::of(n, gens);
    let cap = table.bound.clone();
    let mut out: BTreeMap<Vec<usize>, u32> = BTreeMap::new();
    for w in table.points() {
        if table.contains(&w) {
            continue;
        }
        let prime: Vec<usize> = (0..n)
            .filter(|&j| {
                let mut x = w.clone();
                x[j] += 1;
                table.contains(&x)
            })
            .collect();
        // (I : w) is generated by the variables of `prime` iff no monomial
        // outside those variables lies in (I : w)
        let mut far = w.clone();
        for j in 0..n {
            if !prime.contains(&j) {
                far[j] = cap[j];
            }
        }
        if !table.contains(&far) {
            let d = degree(&w);
            out.entry(prime).and_modify(|e| *e = (*e).min(d)).or_insert(d);
        }
    }
    out
}

pub fn v_number(n: usize, gens: &[Exp]) -> Option<u32> {
    ass(n, gens).values().copied().min()
}

pub fn is_polymatroidal(gens: &[Exp]) -> bool {
    let Some(first) = gens.first() else {
        return false;
    };
    let d = degree(first);
    if gens.iter().any(|g| degree(g) != d) {
        return false;
    }
    let set: HashSet<&Exp> = gens.iter().collect();
    let n = first.len();
    for u in gens {
        for v in gens {
            for i in 0..n {
                if u[i] > v[i] {
                    let ok = (0..n).filter(|&j| u[j] < v[j]).any(|j| {
                        let mut w = u.clone();
                        w[i] -= 1;
                        w[j] += 1;
                        set.contains(&w)
                    });
                    if !ok {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// All degree-`d` monomials in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Exp> {
    if n == 0 {
        return if d == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for e in (0..=d).rev() {
        for mut rest in monomials_of_degree(n - 1, d - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

/// Generators of the component ideal `I_<j>`: every degree-`j` monomial of `I`.
pub fn component(n: usize, gens: &[Exp], j: u32) -> Vec<Exp> {
    monomials_of_degree(n, j)
        .into_iter()
        .filter(|m| gens.iter().any(|g| divides(g, m)))
        .collect()
}

/// Every component `I_<j>` for `α <= j <= maxdeg` is polymatroidal (higher
/// components are `m`-multiples of the top one).
pub fn is_componentwise_polymatroidal(n: usize, gens: &[Exp]) -> bool {
    let (Some(lo), Some(hi)) = (gens.iter().map(|g| degree(g)).min(), gens.iter().map(|g| degree(g)).max()) else {
        return false;
    };
    (lo..=hi).all(|j| is_polymatroidal(&component(n, gens, j)))
}

/// `(J : m)` membership sweep: generators of `(J : m)` that are not in `J`.
pub fn socle(n: usize, gens: &[Exp]) -> BTreeSet<Exp> {
    let table = Table::of(n, gens);
    let mut out = Vec::new();
    for w in table.points() {
        if table.contains(&w) {
            continue;
        }
        let inside = (0..n).all(|j| {
            let mut x = w.clone();
            x[j] += 1;
            table.contains(&x)
        });
        if inside {
            out.push(w);
        }
    }
    minimalize(&out)
}

/// `HS_1` membership for any monomial ideal: `g ∈ HS_1(I)` iff at least two
/// minimal generators of `I` divide `g` (the ideal of pairwise lcms).
pub fn in_hs1(gens: &[Exp], g: &[u32]) -> bool {
    gens.iter().filter(|u| divides(u, g)).take(2).count() == 2
}

pub fn mul(a: &[u32], b: &[u32]) -> Exp {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}
