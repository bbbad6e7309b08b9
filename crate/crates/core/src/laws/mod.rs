//! Checkers for identities about homological shift ideals of polymatroidal
//! ideals and their powers.
//!
//! Every checker produces a [`LawVerdict`]. Statements that are theorems
//! report `Holds`; conjectural statements checked over finitely many powers
//! report `HoldsInRange`; any failure carries a counterexample payload that
//! can be re-checked from the recorded instance.

mod examples;
mod power_laws;
mod structure_laws;
mod tower;
mod verdict;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::format::IdealJson;
use crate::ideal::MonomialIdeal;

pub use examples::{
    five_variable_example, five_variable_ideal, mobius_lemma, multipartite_matroidal, oracle_triangle,
    veronese_example, FIVE_VARIABLE_EXAMPLE,
};
pub use power_laws::{
    ass_chain, betti_monotone, cms, depth_nonincreasing, gen_deg, hs1_polym, hs1_product, reg_v,
    stabilization_observe, strong_persistence,
};
pub use structure_laws::{intersection_localization, componentwise, hs_cp_identity, hsn1_socle, m_times_i};
pub use tower::Tower;
pub use verdict::{Cost, LawVerdict, Status};

/// Laws that take a single ideal as their instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LawId {
    Cms,
    Hs1Product,
    Hs1Polym,
    GenDeg,
    StrongPersistence,
    AssChain,
    BettiMonotone,
    DepthNonincreasing,
    RegV,
    #[serde(rename = "mI")]
    MI,
    Hsn1Socle,
    Componentwise,
    HsCpIdentity,
    IntersectionLocalization,
    StabilizationObserve,
    OracleTriangle,
}

impl LawId {
    pub const ALL: [LawId; 16] = [
        LawId::Cms,
        LawId::Hs1Product,
        LawId::Hs1Polym,
        LawId::GenDeg,
        LawId::StrongPersistence,
        LawId::AssChain,
        LawId::BettiMonotone,
        LawId::DepthNonincreasing,
        LawId::RegV,
        LawId::MI,
        LawId::Hsn1Socle,
        LawId::Componentwise,
        LawId::HsCpIdentity,
        LawId::IntersectionLocalization,
        LawId::StabilizationObserve,
        LawId::OracleTriangle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LawId::Cms => "cms",
            LawId::Hs1Product => "hs1-product",
            LawId::Hs1Polym => "hs1-polym",
            LawId::GenDeg => "gen-deg",
            LawId::StrongPersistence => "strong-persistence",
            LawId::AssChain => "ass-chain",
            LawId::BettiMonotone => "betti-monotone",
            LawId::DepthNonincreasing => "depth-nonincreasing",
            LawId::RegV => "reg-v",
            LawId::MI => "mI",
            LawId::Hsn1Socle => "hsn1-socle",
            LawId::Componentwise => "componentwise",
            LawId::HsCpIdentity => "hs-cp-identity",
            LawId::IntersectionLocalization => "intersection-localization",
            LawId::StabilizationObserve => "stabilization-observe",
            LawId::OracleTriangle => "oracle-triangle",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown law '{s}'")))
    }

    /// Laws whose hypothesis is that the ideal is polymatroidal.
    pub fn needs_polymatroidal(self) -> bool {
        !matches!(
            self,
            LawId::MI
                | LawId::Hsn1Socle
                | LawId::Componentwise
                | LawId::HsCpIdentity
                | LawId::IntersectionLocalization
        )
    }
}

impl std::fmt::Display for LawId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Parameters shared by the power-based laws.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawParams {
    /// Restrict to one homological index; `None` checks every index in the
    /// law's default range.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    /// Largest power formed. Identities relating `k` and `k + 1` are checked
    /// for `1 <= k < kmax`; statements about a single power for `k <= kmax`.
    pub kmax: u32,
    /// First power for range-restricted laws (default depends on the law).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_from: Option<u32>,
}

impl Default for LawParams {
    fn default() -> Self {
        Self {
            i: None,
            kmax: 4,
            k_from: None,
        }
    }
}

impl LawParams {
    pub fn with_i(mut self, i: usize) -> Self {
        self.i = Some(i);
        self
    }

    pub fn with_kmax(mut self, kmax: u32) -> Self {
        self.kmax = kmax;
        self
    }

    pub fn with_k_from(mut self, k: u32) -> Self {
        self.k_from = Some(k);
        self
    }
}

/// Run `law` on `ideal`.
pub fn check(law: LawId, ideal: &MonomialIdeal, params: &LawParams) -> Result<LawVerdict> {
    match law {
        LawId::Cms => cms(ideal, params),
        LawId::Hs1Product => hs1_product(ideal, params),
        LawId::Hs1Polym => hs1_polym(ideal, params),
        LawId::GenDeg => gen_deg(ideal, params),
        LawId::StrongPersistence => strong_persistence(ideal, params),
        LawId::AssChain => ass_chain(ideal, params),
        LawId::BettiMonotone => betti_monotone(ideal, params),
        LawId::DepthNonincreasing => depth_nonincreasing(ideal, params),
        LawId::RegV => reg_v(ideal, params),
        LawId::MI => m_times_i(ideal),
        LawId::Hsn1Socle => hsn1_socle(ideal),
        LawId::Componentwise => componentwise(ideal),
        LawId::HsCpIdentity => hs_cp_identity(ideal),
        LawId::IntersectionLocalization => intersection_localization(ideal),
        LawId::StabilizationObserve => stabilization_observe(ideal, params),
        LawId::OracleTriangle => oracle_triangle(ideal),
    }
}

/// Recorded form of an instance, sufficient to re-run the law.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub law: LawId,
    pub ideal: IdealJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<LawParams>,
}

impl Instance {
    pub fn from_value(v: &Value) -> Result<Self> {
        serde_json::from_value(v.clone()).map_err(|e| Error::InvalidArgument(format!("bad instance: {e}")))
    }

    pub fn rerun(&self) -> Result<LawVerdict> {
        let ideal = self.ideal.to_ideal()?;
        check(self.law, &ideal, &self.params.clone().unwrap_or_default())
    }
}

/// Re-run the law recorded in a failing verdict and confirm it fails again
/// with the same counterexample.
pub fn reverify(verdict: &LawVerdict) -> Result<bool> {
    let again = Instance::from_value(&verdict.instance)?.rerun()?;
    Ok(again.status == Status::Fails && again.witness == verdict.witness)
}

pub(crate) fn instance(law: LawId, ideal: &MonomialIdeal, params: Option<&LawParams>) -> Value {
    json!(Instance {
        law,
        ideal: IdealJson::from(ideal),
        params: params.cloned(),
    })
}

pub(crate) fn require_polymatroidal(ideal: &MonomialIdeal) -> Result<()> {
    if crate::polymatroid::is_polymatroidal(ideal) {
        Ok(())
    } else {
        Err(Error::NotPolymatroidal)
    }
}

/// Homological indices to check: the requested one, or `lo..n` capped at `hi`.
pub(crate) fn index_range(params: &LawParams, n: usize, lo: usize, hi: usize) -> Result<Vec<usize>> {
    match params.i {
        Some(i) if i >= n => Err(Error::InvalidArgument(format!(
            "homological index {i} must be below n = {n}"
        ))),
        Some(i) => Ok(vec![i]),
        None => Ok((lo..n.min(hi.saturating_add(1))).collect()),
    }
}

pub(crate) fn require_kmax(params: &LawParams, min: u32) -> Result<()> {
    if params.kmax < min {
        Err(Error::InvalidArgument(format!("kmax must be at least {min}")))
    } else {
        Ok(())
    }
}
