//! Laws about a single ideal: socles, linear resolutions, componentwise
//! polymatroidality and localizations.

use serde_json::{json, Value};

use super::verdict::{ideal_json, mismatch, run_law, Outcome};
use super::{instance, LawId, Status};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::polymatroid::{check_polymatroidal, is_componentwise_polymatroidal, is_polymatroidal};
use crate::primes::{height, localize, MonomialPrime};
use crate::resolution::{has_linear_resolution, hs, hs1_lcm, koszul_tor, Field};
use crate::LawVerdict;

fn proper_nonzero(ideal: &MonomialIdeal, what: &'static str) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal(what));
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal(what));
    }
    Ok(())
}

/// For `I` with a linear resolution: if `m I` is polymatroidal then
/// `soc(m I) = I` and `I` is polymatroidal; if `m I` is not polymatroidal,
/// neither is `I`.
pub fn m_times_i(ideal: &MonomialIdeal) -> Result<LawVerdict> {
    proper_nonzero(ideal, "mI law")?;
    let inst = instance(LawId::MI, ideal, None);
    run_law(LawId::MI.as_str(), inst, |run| {
        let linear = has_linear_resolution(ideal)?;
        run.checks += 1;
        run.note("linear_resolution", json!(linear));
        if !linear {
            return Ok(Outcome::Pass(Status::Vacuous));
        }
        let mi = ideal.mul_maximal();
        let mi_polym = is_polymatroidal(&mi);
        let i_polym = is_polymatroidal(ideal);
        run.checks += 2;
        run.note("m_times_i_polymatroidal", json!(mi_polym));
        if mi_polym {
            let soc = mi.socle();
            run.checks += 1;
            if soc != *ideal {
                return Ok(Outcome::Fail(mismatch("soc(mI) = I", Value::Null, &soc, ideal)));
            }
            if !i_polym {
                return Ok(Outcome::Fail(json!({
                    "identity": "mI polymatroidal implies I polymatroidal",
                    "m_times_i": ideal_json(&mi),
                })));
            }
        } else if i_polym {
            return Ok(Outcome::Fail(json!({
                "identity": "I polymatroidal implies mI polymatroidal",
                "m_times_i": ideal_json(&mi),
            })));
        }
        Ok(Outcome::Pass(Status::Holds))
    })
}

/// For `I` with a linear resolution: `HS_{n-1}(I) = x_1...x_n soc(I)`.
pub fn hsn1_socle(ideal: &MonomialIdeal) -> Result<LawVerdict> {
    proper_nonzero(ideal, "top shift law")?;
    let inst = instance(LawId::Hsn1Socle, ideal, None);
    let n = ideal.n();
    run_law(LawId::Hsn1Socle.as_str(), inst, |run| {
        let linear = has_linear_resolution(ideal)?;
        run.checks += 1;
        run.note("linear_resolution", json!(linear));
        if !linear {
            return Ok(Outcome::Pass(Status::Vacuous));
        }
        let top = match hs(ideal, n - 1) {
            Ok(h) => h,
            Err(Error::NoLinearQuotients) => {
                run.note("shift_source", json!("koszul"));
                koszul_tor(ideal, Field::RATIONALS)?.hs_ideal(n - 1)
            }
            Err(e) => return Err(e),
        };
        let all = Monomial::new(vec![1; n]);
        let right = ideal.socle().mul_monomial(&all)?;
        run.checks += 1;
        if top != right {
            return Ok(Outcome::Fail(mismatch(
                "HS_(n-1)(I) = x1...xn soc(I)",
                Value::Null,
                &top,
                &right,
            )));
        }
        run.note("top_shift_zero", json!(top.is_zero()));
        Ok(Outcome::Pass(Status::Holds))
    })
}

/// For componentwise polymatroidal `I`: `HS_1(I)`, `(I : m)` and `I^sat` are
/// componentwise polymatroidal.
///
/// The `HS_1` part is not true in general. `I = (x1x2, x3, x4)` is
/// componentwise polymatroidal, but `HS_1(I) = (x3x4, x1x2x3, x1x2x4)` has a
/// degree-3 component failing the exchange property at `u = x3^2 x4`,
/// `v = x1x2x3`, `i = 4`. All three parts are evaluated; the witness names
/// the first failing part, its first non-polymatroidal degree and the
/// exchange triple.
pub fn componentwise(ideal: &MonomialIdeal) -> Result<LawVerdict> {
    proper_nonzero(ideal, "componentwise law")?;
    let inst = instance(LawId::Componentwise, ideal, None);
    run_law(LawId::Componentwise.as_str(), inst, |run| {
        run.checks += 1;
        if !is_componentwise_polymatroidal(ideal) {
            run.note("componentwise_polymatroidal", json!(false));
            return Ok(Outcome::Pass(Status::Vacuous));
        }
        let shift = hs1_lcm(ideal);
        let colon = ideal.colon_maximal();
        let (sat, steps) = ideal.saturation();
        run.note("saturation_steps", json!(steps));
        let mut parts = serde_json::Map::new();
        let mut first = None;
        for (name, j) in [("HS_1(I)", &shift), ("(I : m)", &colon), ("I^sat", &sat)] {
            run.checks += 1;
            let bad = if j.is_zero() { None } else { first_bad_component(j)? };
            parts.insert(name.to_string(), json!(bad.is_none()));
            if let Some((degree, check)) = bad {
                first.get_or_insert_with(|| {
                    json!({
                        "identity": format!("{name} is componentwise polymatroidal"),
                        "ideal": ideal_json(j),
                        "degree": degree,
                        "component_check": check,
                    })
                });
            }
        }
        run.note("parts", Value::Object(parts));
        match first {
            Some(w) => Ok(Outcome::Fail(w)),
            None => Ok(Outcome::Pass(Status::Holds)),
        }
    })
}

/// First degree whose component is not polymatroidal, with the reason.
fn first_bad_component(j: &MonomialIdeal) -> Result<Option<(u32, Value)>> {
    for d in j.alpha()?..=j.max_degree()? {
        let check = check_polymatroidal(&j.graded_component(d));
        if !check.holds() {
            return Ok(Some((d, serde_json::to_value(&check).expect("serializable"))));
        }
    }
    Ok(None)
}

/// For componentwise polymatroidal `I`: `HS_1(I)_<j> = HS_1(I_<j-1>)` for
/// `α(I) <= j <= maxdeg(I) + 1`.
///
/// This is not true in general: lcms of generators of a component need not
/// be lcms of generators of `I`. For `I = (x2,x3)^2 ∩ (x1,x3) ∩ (x1,x2)^3`
/// the monomial `x1^2 x2^3 = lcm(x1^2 x2^2, x1 x2^3)` lies in `HS_1(I_<4>)`
/// but not in `HS_1(I)`. Failures are reported like any other
/// counterexample; the checker records every failing `j`.
pub fn hs_cp_identity(ideal: &MonomialIdeal) -> Result<LawVerdict> {
    proper_nonzero(ideal, "componentwise identity")?;
    let inst = instance(LawId::HsCpIdentity, ideal, None);
    run_law(LawId::HsCpIdentity.as_str(), inst, |run| {
        run.checks += 1;
        if !is_componentwise_polymatroidal(ideal) {
            run.note("componentwise_polymatroidal", json!(false));
            return Ok(Outcome::Pass(Status::Vacuous));
        }
        let shift = hs1_lcm(ideal);
        let lo = ideal.alpha()?;
        let hi = ideal.max_degree()? + 1;
        let mut first = None;
        let mut failing = Vec::new();
        for j in lo..=hi {
            let left = shift.graded_component(j);
            let below = if j == 0 { MonomialIdeal::zero(ideal.n()) } else { ideal.graded_component(j - 1) };
            let right = hs1_lcm(&below);
            run.checks += 1;
            if left != right {
                failing.push(j);
                first.get_or_insert_with(|| (j, left, right));
            }
        }
        run.note("failing_degrees", json!(failing));
        if let Some((j, left, right)) = first {
            return Ok(Outcome::Fail(mismatch(
                "HS_1(I)_<j> = HS_1(I_<j-1>)",
                json!({"j": j}),
                &left,
                &right,
            )));
        }
        Ok(Outcome::Pass(Status::Holds))
    })
}

/// Localizations `I(P)` over all nonzero monomial primes `P`: polymatroidal
/// `I` has every `I(P)` with a linear resolution, and when `height I = n - 1`
/// the converse holds. Outside height `n - 1` the converse is only recorded.
pub fn intersection_localization(ideal: &MonomialIdeal) -> Result<LawVerdict> {
    proper_nonzero(ideal, "localization law")?;
    let n = ideal.n();
    if n > 16 {
        return Err(Error::InvalidArgument("localization sweep supports n <= 16".into()));
    }
    let inst = instance(LawId::IntersectionLocalization, ideal, None);
    run_law(LawId::IntersectionLocalization.as_str(), inst, |run| {
        let polym = is_polymatroidal(ideal);
        let h = height(ideal)?;
        let mut non_linear: Option<(MonomialPrime, MonomialIdeal)> = None;
        for mask in 1u32..(1 << n) {
            let p = MonomialPrime::new((0..n).filter(|&v| mask >> v & 1 == 1).collect());
            let local = localize(ideal, &p)?;
            run.checks += 1;
            if local.is_unit() {
                continue;
            }
            if !has_linear_resolution(&local)? {
                non_linear = Some((p, local));
                break;
            }
        }
        run.note("polymatroidal", json!(polym));
        run.note("height", json!(h));
        run.note("all_localizations_linear", json!(non_linear.is_none()));
        if let Some((p, local)) = &non_linear {
            run.note("non_linear_prime", json!(p.one_based()));
            if polym {
                return Ok(Outcome::Fail(json!({
                    "identity": "I polymatroidal implies I(P) has a linear resolution",
                    "prime": p.one_based(),
                    "localization": ideal_json(local),
                })));
            }
        } else if !polym {
            if h + 1 == n {
                return Ok(Outcome::Fail(json!({
                    "identity": "height n-1 and all I(P) linear implies I polymatroidal",
                    "height": h,
                })));
            }
            run.note("converse_fails_off_height_n_minus_1", json!(true));
        }
        Ok(Outcome::Pass(if polym || h + 1 == n { Status::Holds } else { Status::Vacuous }))
    })
}
