//! The closed form for `set(u)` on powers of complete multipartite edge
//! ideals under the lexicographic order.

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// `set(u)` (0-based) for `u ∈ G(I(G)^k)`, `G` complete multipartite with
/// consecutive parts of the given sizes.
///
/// With `max(u)` in part `d`: if an earlier part `d'` carries degree `k` in
/// `u`, the set is `[1, p-1] ∪ [t_{d'} + 1, max(u) - 1]` where `p` is the
/// largest variable of `u` in part `d'` and `t_{d'}` the last vertex of that
/// part; otherwise it is `[1, max(u) - 1]` (1-based intervals).
pub fn set_u_multipartite(sizes: &[usize], k: u32, u: &Monomial) -> Result<Vec<usize>> {
    if sizes.is_empty() || sizes.iter().any(|&s| s == 0) {
        return Err(Error::NotCompleteMultipartite);
    }
    let n: usize = sizes.iter().sum();
    u.check_len(n)?;
    if u.degree() != 2 * k || k == 0 {
        return Err(Error::InvalidArgument(format!("{u} is not a generator of a {k}-th power")));
    }
    // ends[d] = t_d (1-based last vertex of part d)
    let ends: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &s| {
            *acc += s;
            Some(*acc)
        })
        .collect();
    let part_of = |v: usize| ends.iter().position(|&t| v < t).expect("vertex in range");
    let max = u.max_var().expect("nonconstant");
    let d = part_of(max);
    let part_degree = |p: usize| -> u32 {
        let start = if p == 0 { 0 } else { ends[p - 1] };
        (start..ends[p]).map(|v| u.exp(v)).sum()
    };
    let earlier = (0..d).find(|&dp| part_degree(dp) == k);
    Ok(match earlier {
        Some(dp) => {
            let start = if dp == 0 { 0 } else { ends[dp - 1] };
            let p = (start..ends[dp]).rev().find(|&v| u.exp(v) > 0).expect("part has degree k");
            // [1, p-1] ∪ [t_{d'}+1, max(u)-1], translated to 0-based indices
            (0..p).chain(ends[dp]..max).collect()
        }
        None => (0..max).collect(),
    })
}
