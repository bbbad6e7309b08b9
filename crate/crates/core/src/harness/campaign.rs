//! Seeded fuzz campaigns over instance families and laws.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::recipe::{build, generate, FamilyKind, FamilyParams, InstanceRecipe, Size};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::laws::{check, Instance, LawId, LawParams, LawVerdict, Status};
use crate::polymatroid::is_polymatroidal;

/// Environment variable capping the worker pool.
pub const THREADS_ENV: &str = "POLYSHIFT_THREADS";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub families: Vec<FamilyKind>,
    /// Instances per family.
    pub count: usize,
    pub seed: u64,
    pub laws: Vec<LawId>,
    pub size: Size,
    /// Largest power formed by power-based laws.
    pub kmax: u32,
    /// Restrict power-based laws to one homological index.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    /// Largest allowed number of generators of `I^kmax`; bigger instances
    /// get resource-exhausted verdicts for power-based laws.
    pub budget: usize,
    /// Keep every verdict in the report, not only counterexamples.
    #[serde(default)]
    pub keep_verdicts: bool,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        Self {
            families: FamilyKind::RANDOM.to_vec(),
            count: 20,
            seed: 0,
            laws: LawId::ALL.to_vec(),
            size: Size::default(),
            kmax: 3,
            i: None,
            budget: 2000,
            keep_verdicts: false,
        }
    }
}

/// Verdict counts per `(law, family)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub holds: u64,
    pub holds_in_range: u64,
    pub fails: u64,
    pub resource_exhausted: u64,
    pub observed: u64,
    pub vacuous: u64,
    /// Instances outside the law's hypothesis (not run).
    pub skipped: u64,
    /// Unexpected errors raised by the checker.
    pub errors: u64,
}

impl Tally {
    fn add(&mut self, status: Status) {
        match status {
            Status::Holds => self.holds += 1,
            Status::HoldsInRange => self.holds_in_range += 1,
            Status::Fails => self.fails += 1,
            Status::ResourceExhausted => self.resource_exhausted += 1,
            Status::Observed => self.observed += 1,
            Status::Vacuous => self.vacuous += 1,
        }
    }

    pub fn total_run(&self) -> u64 {
        self.holds + self.holds_in_range + self.fails + self.resource_exhausted + self.observed + self.vacuous
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TallyRow {
    pub law: LawId,
    pub family: FamilyKind,
    #[serde(flatten)]
    pub tally: Tally,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TimingRow {
    pub law: LawId,
    pub family: FamilyKind,
    pub max_ms: u64,
    pub total_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub family: FamilyKind,
    pub index: usize,
    pub seed: u64,
    pub params: FamilyParams,
    pub law: LawId,
    pub instance: Value,
    pub witness: Value,
    /// The failure concerns an open (or known-false) statement rather than a
    /// theorem.
    pub conjectural: bool,
    /// Re-running the law from `instance` alone reproduced the failure.
    pub reverified: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorRow {
    pub family: FamilyKind,
    pub index: usize,
    pub law: LawId,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictRecord {
    pub family: FamilyKind,
    pub index: usize,
    pub verdict: LawVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Environment {
    pub version: String,
    pub os: String,
    pub arch: String,
    pub threads: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub config: CampaignConfig,
    pub instances: usize,
    pub tallies: Vec<TallyRow>,
    pub counterexamples: Vec<Counterexample>,
    pub errors: Vec<ErrorRow>,
    pub timings: Vec<TimingRow>,
    pub environment: Environment,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<VerdictRecord>,
}

/// Seed of instance `index` of `family` in a campaign seeded with `seed`.
pub fn instance_seed(seed: u64, family: FamilyKind, index: usize) -> u64 {
    let tag = FamilyKind::ALL.iter().position(|f| *f == family).expect("listed") as u64;
    splitmix(seed ^ splitmix((tag << 40) ^ index as u64))
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Law parameters used by campaigns for an instance of `family`.
pub fn law_params(config: &CampaignConfig, law: LawId, family: FamilyKind) -> LawParams {
    let mut p = LawParams {
        i: config.i,
        kmax: config.kmax,
        k_from: None,
    };
    if law == LawId::GenDeg && family.generation_from_first_power() {
        p.k_from = Some(1);
    }
    p
}

fn uses_powers(law: LawId) -> bool {
    law.needs_polymatroidal() && law != LawId::OracleTriangle
}

/// Does a failure of `law` with this witness refute an open statement (or
/// the known-false component identity) rather than a theorem?
pub fn is_conjectural(law: LawId, family: FamilyKind, witness: &Value) -> bool {
    let i = witness["at"]["i"].as_u64().unwrap_or(0);
    let identity = witness["identity"].as_str().unwrap_or("");
    let open = i >= 2 && !family.generation_settled();
    match law {
        LawId::GenDeg => open,
        LawId::StrongPersistence => open && identity.starts_with("HS_i(I^(k+1)) : I"),
        LawId::AssChain => open && identity == "Ass HS_i(I^k) in Ass HS_i(I^(k+1))",
        LawId::HsCpIdentity => true,
        _ => false,
    }
}

struct Outcome {
    family: FamilyKind,
    index: usize,
    seed: u64,
    params: FamilyParams,
    results: Vec<(LawId, std::result::Result<Option<LawVerdict>, String>)>,
}

fn exhausted(law: LawId, ideal: &MonomialIdeal, params: &LawParams, reason: String) -> LawVerdict {
    LawVerdict {
        law_id: law.as_str().to_string(),
        instance: serde_json::to_value(Instance {
            law,
            ideal: ideal.into(),
            params: Some(params.clone()),
        })
        .expect("serializable"),
        status: Status::ResourceExhausted,
        holds: true,
        witness: Some(serde_json::json!({ "reason": reason })),
        data: Value::Null,
        cost: crate::laws::Cost {
            elapsed_ms: 0,
            checks: 0,
        },
    }
}

fn run_instance(config: &CampaignConfig, family: FamilyKind, index: usize) -> std::result::Result<Outcome, String> {
    let seed = instance_seed(config.seed, family, index);
    let generated = generate(&InstanceRecipe {
        family,
        seed,
        size: config.size,
    })
    .map_err(|e| e.to_string())?;
    let ideal = generated.ideal;
    let polym = is_polymatroidal(&ideal);
    let big_power = if config.laws.iter().any(|l| uses_powers(*l)) && polym {
        let gens = ideal.power(config.kmax).num_gens();
        (gens > config.budget).then_some(gens)
    } else {
        None
    };
    let mut results = Vec::new();
    for &law in &config.laws {
        let params = law_params(config, law, family);
        if law.needs_polymatroidal() && !polym {
            results.push((law, Ok(None)));
            continue;
        }
        if let (Some(gens), true) = (big_power, uses_powers(law)) {
            let reason = format!("I^{} has {gens} generators (budget {})", config.kmax, config.budget);
            results.push((law, Ok(Some(exhausted(law, &ideal, &params, reason)))));
            continue;
        }
        let r = match check(law, &ideal, &params) {
            Ok(v) => Ok(Some(v)),
            Err(Error::ZeroIdeal(_)) | Err(Error::UnitIdeal(_)) => Ok(None),
            Err(e) => Err(e.to_string()),
        };
        results.push((law, r));
    }
    Ok(Outcome {
        family,
        index,
        seed,
        params: generated.params,
        results,
    })
}

fn thread_count() -> usize {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&t| t > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

/// Run a campaign. Instances are fanned out over a worker pool (capped by
/// `POLYSHIFT_THREADS`); the report is assembled in instance order and every
/// counterexample is re-verified sequentially from its recorded instance.
pub fn fuzz(config: &CampaignConfig) -> Result<CampaignReport> {
    if config.budget == 0 {
        return Err(Error::InvalidArgument("budget must be positive".into()));
    }
    if config.kmax < 2 {
        return Err(Error::InvalidArgument("kmax must be at least 2".into()));
    }
    if config.families.contains(&FamilyKind::Explicit) {
        return Err(Error::InvalidArgument("campaigns sample families; explicit instances go through verify".into()));
    }
    let threads = thread_count();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
    let jobs: Vec<(FamilyKind, usize)> = config
        .families
        .iter()
        .flat_map(|&f| (0..config.count).map(move |i| (f, i)))
        .collect();
    let outcomes: Vec<std::result::Result<Outcome, (FamilyKind, usize, String)>> = pool.install(|| {
        jobs.par_iter()
            .map(|&(f, i)| run_instance(config, f, i).map_err(|e| (f, i, e)))
            .collect()
    });

    let mut tallies: BTreeMap<(LawId, FamilyKind), Tally> = BTreeMap::new();
    let mut timings: BTreeMap<(LawId, FamilyKind), (u64, u64)> = BTreeMap::new();
    let mut counterexamples = Vec::new();
    let mut errors = Vec::new();
    let mut verdicts = Vec::new();
    for outcome in outcomes {
        let o = match outcome {
            Ok(o) => o,
            Err((family, index, message)) => {
                for &law in &config.laws {
                    tallies.entry((law, family)).or_default().errors += 1;
                    errors.push(ErrorRow {
                        family,
                        index,
                        law,
                        message: message.clone(),
                    });
                }
                continue;
            }
        };
        for (law, r) in o.results {
            let key = (law, o.family);
            let tally = tallies.entry(key).or_default();
            match r {
                Ok(None) => tally.skipped += 1,
                Err(message) => {
                    tally.errors += 1;
                    errors.push(ErrorRow {
                        family: o.family,
                        index: o.index,
                        law,
                        message,
                    });
                }
                Ok(Some(v)) => {
                    tally.add(v.status);
                    let t = timings.entry(key).or_insert((0, 0));
                    t.0 = t.0.max(v.cost.elapsed_ms);
                    t.1 += v.cost.elapsed_ms;
                    if v.status == Status::Fails {
                        let witness = v.witness.clone().unwrap_or(Value::Null);
                        counterexamples.push(Counterexample {
                            family: o.family,
                            index: o.index,
                            seed: o.seed,
                            params: o.params.clone(),
                            law,
                            instance: v.instance.clone(),
                            conjectural: is_conjectural(law, o.family, &witness),
                            witness,
                            reverified: false,
                        });
                    }
                    if config.keep_verdicts {
                        verdicts.push(VerdictRecord {
                            family: o.family,
                            index: o.index,
                            verdict: v,
                        });
                    }
                }
            }
        }
    }
    for c in &mut counterexamples {
        c.reverified = reverify_counterexample(c).unwrap_or(false);
    }
    Ok(CampaignReport {
        config: config.clone(),
        instances: jobs.len(),
        tallies: tallies
            .into_iter()
            .map(|((law, family), tally)| TallyRow { law, family, tally })
            .collect(),
        counterexamples,
        errors,
        timings: timings
            .into_iter()
            .map(|((law, family), (max_ms, total_ms))| TimingRow {
                law,
                family,
                max_ms,
                total_ms,
            })
            .collect(),
        environment: Environment {
            version: env!("CARGO_PKG_VERSION").to_string(),
            os: std::env::consts::OS.to_string(),
            arch: std::env::consts::ARCH.to_string(),
            threads,
        },
        verdicts,
    })
}

/// Rebuild the ideal from the family parameters, check it matches the
/// recorded instance, and re-run the law from the recorded instance alone.
pub fn reverify_counterexample(c: &Counterexample) -> Result<bool> {
    let recorded = Instance::from_value(&c.instance)?;
    if build(&c.params)? != recorded.ideal.to_ideal()? {
        return Ok(false);
    }
    let again = recorded.rerun()?;
    Ok(again.status == Status::Fails && again.witness.as_ref() == Some(&c.witness))
}

impl CampaignReport {
    /// The parts of the report that must be identical across replays:
    /// config, tallies, counterexamples and errors (timings excluded).
    pub fn reproducible_json(&self) -> String {
        serde_json::to_string_pretty(&serde_json::json!({
            "config": self.config,
            "instances": self.instances,
            "tallies": self.tallies,
            "counterexamples": self.counterexamples,
            "errors": self.errors,
        }))
        .expect("serializable")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// Failures of theorem-status statements (should be zero).
    pub fn theorem_failures(&self) -> Vec<&Counterexample> {
        self.counterexamples.iter().filter(|c| !c.conjectural).collect()
    }

    pub fn conjecture_counterexamples(&self) -> Vec<&Counterexample> {
        self.counterexamples.iter().filter(|c| c.conjectural).collect()
    }

    pub fn all_reverified(&self) -> bool {
        self.counterexamples.iter().all(|c| c.reverified)
    }

    pub fn total(&self) -> Tally {
        let mut t = Tally::default();
        for r in &self.tallies {
            t.holds += r.tally.holds;
            t.holds_in_range += r.tally.holds_in_range;
            t.fails += r.tally.fails;
            t.resource_exhausted += r.tally.resource_exhausted;
            t.observed += r.tally.observed;
            t.vacuous += r.tally.vacuous;
            t.skipped += r.tally.skipped;
            t.errors += r.tally.errors;
        }
        t
    }

    fn timing(&self, law: LawId, family: FamilyKind) -> u64 {
        self.timings
            .iter()
            .find(|t| t.law == law && t.family == family)
            .map_or(0, |t| t.max_ms)
    }

    const COLUMNS: [&'static str; 11] = [
        "law",
        "family",
        "holds",
        "holds-in-range",
        "fails",
        "resource-exhausted",
        "observed",
        "vacuous",
        "skipped",
        "errors",
        "worst-ms",
    ];

    fn rows(&self) -> Vec<Vec<String>> {
        self.tallies
            .iter()
            .map(|r| {
                let t = &r.tally;
                vec![
                    r.law.to_string(),
                    r.family.to_string(),
                    t.holds.to_string(),
                    t.holds_in_range.to_string(),
                    t.fails.to_string(),
                    t.resource_exhausted.to_string(),
                    t.observed.to_string(),
                    t.vacuous.to_string(),
                    t.skipped.to_string(),
                    t.errors.to_string(),
                    self.timing(r.law, r.family).to_string(),
                ]
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = Self::COLUMNS.join(",");
        out.push('\n');
        for row in self.rows() {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let c = &self.config;
        let _ = writeln!(out, "# Campaign report\n");
        let _ = writeln!(
            out,
            "seed {} · {} instances · kmax {} · n ≤ {} · degree ≤ {} · budget {} · {} threads\n",
            c.seed, self.instances, c.kmax, c.size.n_max, c.size.deg_max, c.budget, self.environment.threads
        );
        let _ = writeln!(out, "| {} |", Self::COLUMNS.join(" | "));
        let _ = writeln!(out, "|{}|", vec!["---"; Self::COLUMNS.len()].join("|"));
        for row in self.rows() {
            let _ = writeln!(out, "| {} |", row.join(" | "));
        }
        let theorem = self.theorem_failures().len();
        let conj = self.conjecture_counterexamples().len();
        let _ = writeln!(
            out,
            "\n{} counterexamples ({} to theorem-status statements, {} to open statements), all re-verified: {}",
            self.counterexamples.len(),
            theorem,
            conj,
            self.all_reverified()
        );
        for ce in &self.counterexamples {
            let _ = writeln!(
                out,
                "\n- `{}` on {} #{} (seed {}): {}",
                ce.law,
                ce.family,
                ce.index,
                ce.seed,
                serde_json::to_string(&ce.witness).expect("serializable")
            );
        }
        if !self.errors.is_empty() {
            let _ = writeln!(out, "\n{} checker errors:", self.errors.len());
            for e in &self.errors {
                let _ = writeln!(out, "- `{}` on {} #{}: {}", e.law, e.family, e.index, e.message);
            }
        }
        out
    }
}
