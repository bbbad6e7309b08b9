//! Laws about homological shift ideals of the powers `I^k`.

use serde_json::{json, Value};

use super::tower::Tower;
use super::verdict::{ideal_json, mismatch, run_law, Outcome};
use super::{index_range, instance, require_kmax, require_polymatroidal, LawId, LawParams, Status};
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::polymatroid::{check_polymatroidal, PolymatroidCheck};
use crate::primes::{v_number, AssResult, MonomialPrime};
use crate::resolution::{has_linear_resolution, hs1_lcm, hs1_polymatroidal, reg_linear};
use crate::LawVerdict;

/// Default upper end of the homological index range for conjectural laws.
const MAX_INDEX: usize = 4;

fn exchange_payload(check: &PolymatroidCheck) -> Value {
    match check {
        PolymatroidCheck::Polymatroidal => json!("polymatroidal"),
        PolymatroidCheck::ZeroIdeal => json!("zero ideal"),
        PolymatroidCheck::NotEquigenerated => json!("not equigenerated"),
        PolymatroidCheck::ExchangeFails(w) => json!({
            "exchange_fails": {"u": w.u.to_string(), "v": w.v.to_string(), "i": w.i + 1}
        }),
    }
}

fn primes_json(a: &AssResult) -> Value {
    Value::Array(a.primes().map(|p| json!(p.one_based())).collect())
}

/// Primes of `a` missing from `b`.
fn missing(a: &AssResult, b: &AssResult) -> Vec<MonomialPrime> {
    a.primes().filter(|p| !b.contains(p)).cloned().collect()
}

fn primes_list(ps: &[MonomialPrime]) -> Value {
    Value::Array(ps.iter().map(|p| json!(p.one_based())).collect())
}

fn setup(law: LawId, ideal: &MonomialIdeal, params: &LawParams, min_kmax: u32) -> Result<Value> {
    require_polymatroidal(ideal)?;
    require_kmax(params, min_kmax)?;
    Ok(instance(law, ideal, Some(params)))
}

/// `HS_i(I^k)` is polymatroidal (or zero) for every checked `i` and
/// `k <= kmax`.
pub fn cms(ideal: &MonomialIdeal, params: &LawParams) -> Result<LawVerdict> {
    let inst = setup(LawId::Cms, ideal, params, 1)?;
    let indices = index_range(params, ideal.n(), 0, usize::MAX)?;
    run_law(LawId::Cms.as_str(), inst, |run| {
        let mut t = Tower::new(ideal.clone());
        let mut nonzero = 0u64;
        for k in 1..=params.kmax {
            for &i in &indices {
                let h = t.hs(i, k)?;
                run.checks += 1;
                if h.is_zero() {
                    continue;
                }
                nonzero += 1;
                let c = check_polymatroidal(&h);
                if !c.holds() {
                    return Ok(Outcome::Fail(json!({
                        "i": i, "k": k, "hs": ideal_json(&h), "reason": exchange_payload(&c)
                    })));
                }
            }
        }
        run.note("nonzero_shift_ideals", json!(nonzero));
        Ok(Outcome::Pass(if nonzero == 0 { Status::Vacuous } else { Status::Holds }))
    })
}

/// `HS_1(I^{k+1}) = I · HS_1(I^k)` for `1 <= k < kmax`.
pub fn hs1_product(ideal: &MonomialIdeal, params: &LawParams) -> Result<LawVerdict> {
    let inst = setup(LawId::Hs1Product, ideal, params, 2)?;
    run_law(LawId::Hs1Product.as_str(), inst, |run| {
        let mut t = Tower::new(ideal.clone());
        for k in 1..params.kmax {
            let left = t.hs(1, k + 1)?;
            let right = ideal.product(&t.hs(1, k)?)?;
            run.checks += 1;
            if left != right {
                return Ok(Outcome::Fail(mismatch(
                    "HS_1(I^(k+1)) = I*HS_1(I^k)",
                    json!({"k": k}),
                    &left,
                    &right,
                )));
            }
        }
        Ok(Outcome::Pass(Status::Holds))
    })
}

/// `HS_1(I^k) = (m I^k)^{<= k deg(I)}` for `k <= kmax`, also compared with the
/// pairwise-lcm description of `HS_1`.
pub fn hs1_polym(ideal: &MonomialIdeal, params: &LawParams) -> Result<LawVerdict> {
    let inst = setup(LawId::Hs1Polym, ideal, params, 1)?;
    run_law(LawId::Hs1Polym.as_str(), inst, |run| {
        let mut t = Tower::new(ideal.clone());
        for k in 1..=params.kmax {
            let h = t.hs(1, k)?;
            let pk = t.power(k).clone();
            let restricted = hs1_polymatroidal(&pk)?;
            run.checks += 2;
            if h != restricted {
                return Ok(Outcome::Fail(mismatch(
                    "HS_1(I^k) = (m I^k)^(<= k deg I)",
                    json!({"k": k}),
                    &h,
                    &restricted,
                )));
            }
            let lcms = hs1_lcm(&pk);
            if h != lcms {
                return Ok(Outcome::Fail(mismatch(
                    "HS_1(I^k) = (lcm pairs of G(I^k))",
                    json!({"k": k}),
                    &h,
                    &lcms,
                )));
            }
        }
        Ok(Outcome::Pass(Status::Holds))
    })
}

/// Degreewise generation: `HS_i(I^{k+1}) = I · HS_i(I^k)` for
/// `k_from <= k < kmax` (default `k_from = i`). Also records, per index, for
/// which `k` the identity holds from `k = 1`.
///
/// Starting below `k = i` can fail even for strong-exchange ideals:
/// `I = (x1x2, x1x3, x2x3)` has `HS_2(I) = 0` but `HS_2(I^2) = (x1^2 x2^2 x3^2)`.
pub fn gen_deg(ideal: &MonomialIdeal, params: &LawParams) -> Result<LawVerdict> {
    let inst = setup(LawId::GenDeg, ideal, params, 2)?;
    let indices = index_range(params, ideal.n(), 1, MAX_INDEX)?;
    run_law(LawId::GenDeg.as_str(), inst, |run| {
        let mut t = Tower::new(ideal.clone());
        let mut per_index = serde_json::Map::new();
        let mut theorem_only = true;
        for &i in &indices {
            let from = params.k_from.unwrap_or(i as u32).max(1);
            if i >= 2 {
                theorem_only = false;
            }
            let mut observed = Vec::new();
            for k in 1..params.kmax {
                let left = t.hs(i, k + 1)?;
                let right = ideal.product(&t.hs(i, k)?)?;
                run.checks += 1;
                observed.push(left == right);
                if k >= from && left != right {
                    return Ok(Outcome::Fail(mismatch(
                        "HS_i(I^(k+1)) = I*HS_i(I^k)",
                        json!({"i": i, "k": k, "k_from": from}),
                        &left,
                        &right,
                    )));
                }
            }
            per_index.insert(i.to_string(), json!(observed));
        }
        run.note("identity_by_k", Value::Object(per_index));
        // i = 1 is a theorem; for larger indices only a finite range is checked.
        Ok(Outcome::Pass(if theorem_only && params.k_from.is_none() {
            Status::Holds
        } else {
            Status::HoldsInRange
        }))
    })
}

/// `HS_i(I^{k+1}) : I = HS_i(I^k)`, the integral-closure route
/// `I^{k+1} J : I = I^k J` with `J = HS_i(I^i)`, and the consequence that
/// the colon identity at `k` forces `Ass HS_i(I^k) ⊆ Ass HS_i(I^{k+1})`.
///
/// The colon identity is asserted for every `k >= 1` when `i <= 1` and for
/// `k >= i` otherwise (default of `k_from`); the other two parts are
/// unconditional.
pub fn strong_persistence(ideal: &MonomialIdeal, params: &LawParams) -> Result<LawVerdict> {
    let inst = setup(LawId::StrongPersistence, ideal, params, 2)?;
    let indices = index_range(params, ideal.n(), 1, MAX_INDEX)?;
    run_law(LawId::StrongPersistence.as_str(), inst, |run| {
        let mut t = Tower::new(ideal.clone());
        let mut conjectural = false;
        let mut colon_by_index = serde_json::Map::new();
        for &i in &indices {
            let from = params.k_from.unwrap_or(if i <= 1 { 1 } else { i as u32 }).max(1);
            if i >= 2 {
                conjectural = true;
            }
            let mut observed = Vec::new();
            for k in 1..params.kmax {
                let upper = t.hs(i, k + 1)?;
                let lower = t.hs(i, k)?;
                let colon = upper.colon_ideal(ideal)?;
                run.checks += 1;
                let holds = colon == lower;
                observed.push(holds);
                if k >= from && !holds {
                    return Ok(Outcome::Fail(mismatch(
                        "HS_i(I^(k+1)) : I = HS_i(I^k)",
                        json!({"i": i, "k": k, "k_from": from}),
                        &colon,
                        &lower,
                    )));
                }
                if holds && !lower.is_zero() {
                    let a = t.ass(i, k)?.expect("nonzero");
                    let b = t.ass(i, k + 1)?.expect("colon of zero is the unit ideal");
                    run.checks += 1;
                    let lost = missing(&a, &b);
                    if !lost.is_empty() {
                        return Ok(Outcome::Fail(json!({
                            "identity": "colon identity at k implies Ass inclusion",
                            "at": {"i": i, "k": k},
                            "lost_primes": primes_list(&lost),
                            "ass_k": primes_json(&a),
                            "ass_k_plus_1": primes_json(&b),
                        })));
                    }
                }
            }
            colon_by_index.insert(i.to_string(), json!(observed));

            // integral closure route, unconditional for polymatroidal I
            if i as u32 <= params.kmax {
                let j = if i == 0 { MonomialIdeal::unit(ideal.n()) } else { t.hs(i, i as u32)? };
                for k in 0..params.kmax.saturating_sub(i as u32) {
                    let ikj = t.power(k).product(&j)?;
                    let left = t.power(k + 1).product(&j)?.colon_ideal(ideal)?;
                    run.checks += 1;
                    if left != ikj {
                        return Ok(Outcome::Fail(mismatch(
                            "I^(k+1) J : I = I^k J with J = HS_i(I^i)",
                            json!({"i": i, "k": k}),
                            &left,
                            &ikj,
                        )));
                    }
                }
            }
        }
        run.note("colon_identity_by_k", Value::Object(colon_by_index));
        Ok(Outcome::Pass(if conjectural || params.k_from.is_some() {
            Status::HoldsInRange
        } else {
            Status::Holds
        }))
    })
}

/// `Ass HS_i(I^k) ⊆ Ass HS_i(I^{k+1})` for `k_from <= k < kmax` (default
/// `k_from = i`), together with the monotonicity of `m`-membership and its
/// agreement with `depth S / HS_i(I^k) = 0`. Records whether the chain holds
/// from `k = 1` and where it first breaks.
pub fn ass_chain(ideal: &MonomialIdeal, params: &LawParams) -> Result<LawVerdict> {
    let inst = setup(LawId::AssChain, ideal, params, 1)?;
    let indices = index_range(params, ideal.n(), 1, MAX_INDEX)?;
    let n = ideal.n();
    let m = MonomialPrime::maximal(n);
    run_law(LawId::AssChain.as_str(), inst, |run| {
        let mut t = Tower::new(ideal.clone());
        let mut conjectural = false;
        let mut report = serde_json::Map::new();
        for &i in &indices {
            let from = params.k_from.unwrap_or(i as u32).max(1);
            if i >= 2 || from > 1 {
                conjectural = true;
            }
            let mut chain = Vec::new();
            for k in 1..=params.kmax {
                let a = t.ass(i, k)?;
                run.checks += 1;
                if let Some(a) = &a {
                    let depth0 = t.depth(i, k)? == 0;
                    if a.contains(&m) != depth0 {
                        return Ok(Outcome::Fail(json!({
                            "identity": "m in Ass(S/HS_i(I^k)) iff depth S/HS_i(I^k) = 0",
                            "at": {"i": i, "k": k},
                            "ass": primes_json(a),
                            "depth_zero": depth0,
                        })));
                    }
                }
                chain.push(a);
            }
            let mut first_break = None;
            for k in 1..params.kmax {
                let (Some(a), Some(b)) = (&chain[k as usize - 1], &chain[k as usize]) else {
                    continue;
                };
                let lost = missing(a, b);
                if lost.is_empty() {
                    continue;
                }
                if first_break.is_none() {
                    first_break = Some(k);
                }
                if lost.contains(&m) {
                    return Ok(Outcome::Fail(json!({
                        "identity": "m in Ass HS_i(I^k) implies m in Ass HS_i(I^(k+1))",
                        "at": {"i": i, "k": k},
                        "ass_k": primes_json(a),
                        "ass_k_plus_1": primes_json(b),
                    })));
                }
                if k >= from {
                    return Ok(Outcome::Fail(json!({
                        "identity": "Ass HS_i(I^k) in Ass HS_i(I^(k+1))",
                        "at": {"i": i, "k": k, "k_from": from},
                        "lost_primes": primes_list(&lost),
                        "ass_k": primes_json(a),
                        "ass_k_plus_1": primes_json(b),
                    })));
                }
            }
            let listed: Vec<Value> = chain
                .iter()
                .map(|a| a.as_ref().map(primes_json).unwrap_or(Value::Null))
                .collect();
            report.insert(
                i.to_string(),
                json!({
                    "ass_by_k": listed,
                    "chain_from_k1": first_break.is_none(),
                    "first_break": first_break,
                }),
            );
        }
        run.note("chains", Value::Object(report));
        Ok(Outcome::Pass(if conjectural { Status::HoldsInRange } else { Status::Holds }))
    })
}

/// `β_j(HS_i(I^k)) <= β_j(HS_i(I^{k+1}))` for all `j`, plus the proof route
/// `β_j(u HS_i(I^k)) = β_j(HS_i(I^k))` and `u HS_i(I^k) ⊆ HS_i(I^{k+1})`
/// for a generator `u` of `I`.
pub fn betti_monotone(ideal: &MonomialIdeal, params: &LawParams) -> Result<LawVerdict> {
    let inst = setup(LawId::BettiMonotone, ideal, params, 2)?;
    let indices = index_range(params, ideal.n(), 0, usize::MAX)?;
    let u: Monomial = ideal.gens()[0].clone();
    run_law(LawId::BettiMonotone.as_str(), inst, |run| {
        let mut t = Tower::new(ideal.clone());
        let mut compared = 0u64;
        for &i in &indices {
            for k in 1..params.kmax {
                let lo = t.betti(i, k)?;
                let hi = t.betti(i, k + 1)?;
                run.checks += 1;
                if lo.is_empty() {
                    continue;
                }
                compared += 1;
                let at = |v: &[u64], j: usize| v.get(j).copied().unwrap_or(0);
                if let Some(j) = (0..lo.len().max(hi.len())).find(|&j| at(&lo, j) > at(&hi, j)) {
                    return Ok(Outcome::Fail(json!({
                        "identity": "beta_j(HS_i(I^k)) <= beta_j(HS_i(I^(k+1)))",
                        "at": {"i": i, "k": k, "j": j},
                        "betti_k": lo,
                        "betti_k_plus_1": hi,
                    })));
                }
                let h = t.hs(i, k)?;
                let uh = h.mul_monomial(&u)?;
                let next = t.hs(i, k + 1)?;
                let shifted = crate::resolution::betti(&uh)?;
                run.checks += 2;
                if shifted != lo || !next.contains_ideal(&uh) {
                    return Ok(Outcome::Fail(json!({
                        "identity": "beta(u HS_i(I^k)) = beta(HS_i(I^k)) and u HS_i(I^k) in HS_i(I^(k+1))",
                        "at": {"i": i, "k": k, "u": u.to_string()},
                        "betti_k": lo,
                        "betti_shifted": shifted,
                        "contained": next.contains_ideal(&uh),
                    })));
                }
            }
        }
        Ok(Outcome::Pass(if compared == 0 { Status::Vacuous } else { Status::Holds }))
    })
}

/// `depth S/HS_i(I^k) >= depth S/HS_i(I^{k+1})`, zero shift ideals having
/// depth `n`.
pub fn depth_nonincreasing(ideal: &MonomialIdeal, params: &LawParams) -> Result<LawVerdict> {
    let inst = setup(LawId::DepthNonincreasing, ideal, params, 2)?;
    let indices = index_range(params, ideal.n(), 0, usize::MAX)?;
    run_law(LawId::DepthNonincreasing.as_str(), inst, |run| {
        let mut t = Tower::new(ideal.clone());
        let mut profile = serde_json::Map::new();
        for &i in &indices {
            let mut depths = Vec::new();
            for k in 1..=params.kmax {
                depths.push(t.depth(i, k)?);
                run.checks += 1;
            }
            if let Some(k) = (1..depths.len()).find(|&k| depths[k - 1] < depths[k]) {
                return Ok(Outcome::Fail(json!({
                    "identity": "depth S/HS_i(I^k) >= depth S/HS_i(I^(k+1))",
                    "at": {"i": i, "k": k},
                    "depths": depths,
                })));
            }
            profile.insert(i.to_string(), json!(depths));
        }
        run.note("depth_by_k", Value::Object(profile));
        Ok(Outcome::Pass(Status::Holds))
    })
}

/// `reg HS_i(I^k) = α(I) k + i` and `v(HS_i(I^k)) = α(I) k + i - 1` whenever
/// `HS_i(I^k) ≠ 0`, for `k <= kmax`.
pub fn reg_v(ideal: &MonomialIdeal, params: &LawParams) -> Result<LawVerdict> {
    let inst = setup(LawId::RegV, ideal, params, 1)?;
    let indices = index_range(params, ideal.n(), 0, usize::MAX)?;
    let alpha = ideal.alpha()?;
    run_law(LawId::RegV.as_str(), inst, |run| {
        let mut t = Tower::new(ideal.clone());
        let mut nonzero = 0u64;
        for &i in &indices {
            for k in 1..=params.kmax {
                let h = t.hs(i, k)?;
                if h.is_zero() {
                    continue;
                }
                nonzero += 1;
                let expected = alpha * k + i as u32;
                run.checks += 2;
                if !has_linear_resolution(&h)? {
                    return Ok(Outcome::Fail(json!({
                        "identity": "HS_i(I^k) has a linear resolution",
                        "at": {"i": i, "k": k},
                        "hs": ideal_json(&h),
                    })));
                }
                let reg = reg_linear(&h)?;
                let v = v_number(&h)?;
                if reg != expected || v + 1 != expected {
                    return Ok(Outcome::Fail(json!({
                        "identity": "reg HS_i(I^k) = v(HS_i(I^k)) + 1 = alpha(I) k + i",
                        "at": {"i": i, "k": k},
                        "reg": reg,
                        "v": v,
                        "expected_reg": expected,
                        "hs": ideal_json(&h),
                    })));
                }
            }
        }
        Ok(Outcome::Pass(if nonzero == 0 { Status::Vacuous } else { Status::Holds }))
    })
}

/// Records, per index, the least `k` such that the Ass sets, the depth, and
/// the product identity `HS_i(I^{j+1}) = I HS_i(I^j)` are all constant for
/// `k <= j < kmax`. Never fails: eventual stabilization is not decidable
/// from finitely many powers.
pub fn stabilization_observe(ideal: &MonomialIdeal, params: &LawParams) -> Result<LawVerdict> {
    let inst = setup(LawId::StabilizationObserve, ideal, params, 2)?;
    let indices = index_range(params, ideal.n(), 1, MAX_INDEX)?;
    run_law(LawId::StabilizationObserve.as_str(), inst, |run| {
        let mut t = Tower::new(ideal.clone());
        let mut out = serde_json::Map::new();
        for &i in &indices {
            let mut stable = Vec::new();
            for k in 1..params.kmax {
                let same_ass = t.ass(i, k)? == t.ass(i, k + 1)?;
                let same_depth = t.depth(i, k)? == t.depth(i, k + 1)?;
                let product = t.hs(i, k + 1)? == ideal.product(&t.hs(i, k)?)?;
                run.checks += 3;
                stable.push(json!({"ass": same_ass, "depth": same_depth, "product": product}));
            }
            let all = |key: &str| -> Option<u32> {
                let flags: Vec<bool> = stable.iter().map(|s| s[key].as_bool().unwrap_or(false)).collect();
                first_stable(&flags)
            };
            let joint: Vec<bool> = stable
                .iter()
                .map(|s| ["ass", "depth", "product"].iter().all(|k| s[*k].as_bool().unwrap_or(false)))
                .collect();
            out.insert(
                i.to_string(),
                json!({
                    "ass_stable_from": all("ass"),
                    "depth_stable_from": all("depth"),
                    "product_stable_from": all("product"),
                    "all_stable_from": first_stable(&joint),
                }),
            );
        }
        run.note("stabilization", Value::Object(out));
        Ok(Outcome::Pass(Status::Observed))
    })
}

/// Least `k` (1-based) with `flags[k-1..]` all true, if any.
fn first_stable(flags: &[bool]) -> Option<u32> {
    let tail = flags.iter().rev().take_while(|&&f| f).count();
    (tail > 0).then(|| (flags.len() - tail + 1) as u32)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_ideal;
    use crate::polymatroid::{principal_borel, veronese};

    fn five_variable() -> MonomialIdeal {
        parse_ideal("x1*x3, x1*x4, x1*x5, x2*x3, x2*x4, x2*x5, x3*x4, x3*x5", Some(5)).unwrap()
    }

    #[test]
    fn first_stable_index() {
        assert_eq!(first_stable(&[false, true, true]), Some(2));
        assert_eq!(first_stable(&[true, true]), Some(1));
        assert_eq!(first_stable(&[true, false]), None);
        assert_eq!(first_stable(&[]), None);
    }

    #[test]
    fn example_chain_breaks_at_first_power_only() {
        let v = ass_chain(&five_variable(), &LawParams::default().with_i(2)).unwrap();
        assert_eq!(v.status, Status::HoldsInRange);
        let c = &v.data["chains"]["2"];
        assert_eq!(c["chain_from_k1"], json!(false));
        assert_eq!(c["first_break"], json!(1));
        assert!(c["ass_by_k"][0].as_array().unwrap().contains(&json!([1, 5])));
        assert!(!c["ass_by_k"][1].as_array().unwrap().contains(&json!([1, 5])));
    }

    #[test]
    fn chain_conjecture_refuted_when_started_early() {
        let v = ass_chain(&five_variable(), &LawParams::default().with_i(2).with_k_from(1)).unwrap();
        assert_eq!(v.status, Status::Fails);
        assert!(!v.holds);
        assert!(super::super::reverify(&v).unwrap());
    }

    #[test]
    fn maximal_ideal_two_variables() {
        let m = MonomialIdeal::maximal(2);
        let p = LawParams::default().with_kmax(3);
        for law in [hs1_product, hs1_polym, cms, betti_monotone, reg_v, depth_nonincreasing] {
            assert!(law(&m, &p).unwrap().holds);
        }
    }

    #[test]
    fn principal_ideal_is_vacuous_for_shifts() {
        let u = MonomialIdeal::principal(Monomial::new(vec![1, 2, 0]));
        let p = LawParams::default().with_kmax(3).with_i(1);
        assert_eq!(reg_v(&u, &p).unwrap().status, Status::Vacuous);
        assert_eq!(betti_monotone(&u, &p).unwrap().status, Status::Vacuous);
        assert_eq!(hs1_product(&u, &p).unwrap().status, Status::Holds);
    }

    #[test]
    fn borel_generation_from_first_power() {
        let b = principal_borel(&Monomial::new(vec![1, 1, 1])).unwrap();
        let v = gen_deg(&b, &LawParams::default().with_k_from(1)).unwrap();
        assert_eq!(v.status, Status::HoldsInRange);
    }

    #[test]
    fn strong_exchange_generation_below_index() {
        let i = veronese(&[1, 1, 1], 2).unwrap();
        let p = LawParams::default().with_i(2).with_kmax(4);
        assert_eq!(gen_deg(&i, &p).unwrap().status, Status::HoldsInRange);
        let v = gen_deg(&i, &p.clone().with_k_from(1)).unwrap();
        assert_eq!(v.status, Status::Fails);
        let w = v.witness.unwrap();
        assert_eq!(w["at"], json!({"i": 2, "k": 1, "k_from": 1}));
        assert_eq!(w["difference"], json!({"in_left_only": "x1^2*x2^2*x3^2"}));
    }

    #[test]
    fn persistence_on_veronese() {
        let i = veronese(&[2, 1, 1], 2).unwrap();
        let v = strong_persistence(&i, &LawParams::default().with_kmax(3)).unwrap();
        assert!(v.holds, "{:?}", v.witness);
        assert_eq!(v.status, Status::HoldsInRange);
        let v1 = strong_persistence(&i, &LawParams::default().with_i(1).with_kmax(3)).unwrap();
        assert_eq!(v1.status, Status::Holds);
    }

    #[test]
    fn rejects_non_polymatroidal_input() {
        let i = MonomialIdeal::from_exponents(2, vec![vec![2, 0], vec![0, 2]]).unwrap();
        assert!(cms(&i, &LawParams::default()).is_err());
    }

    #[test]
    fn stabilization_is_observational() {
        let v = stabilization_observe(&five_variable(), &LawParams::default().with_kmax(3).with_i(2)).unwrap();
        assert_eq!(v.status, Status::Observed);
        assert!(v.data["stabilization"]["2"].get("all_stable_from").is_some());
    }
}
