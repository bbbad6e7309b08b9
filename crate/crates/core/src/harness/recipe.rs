//! Instance families and seeded generation.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::IdealJson;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::polymatroid::{
    prime_power_intersection, is_componentwise_polymatroidal, is_matroidal, is_polymatroidal, principal_borel,
    strong_exchange_ideal, transversal_product, veronese, SimpleGraph,
};

/// Instance families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    Veronese,
    Borel,
    MultipartiteEdge,
    TransversalProduct,
    StrongExchange,
    IntersectionBh,
    RandomRestriction,
    Explicit,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 8] = [
        FamilyKind::Veronese,
        FamilyKind::Borel,
        FamilyKind::MultipartiteEdge,
        FamilyKind::TransversalProduct,
        FamilyKind::StrongExchange,
        FamilyKind::IntersectionBh,
        FamilyKind::RandomRestriction,
        FamilyKind::Explicit,
    ];

    /// Families that can be sampled from a seed.
    pub const RANDOM: [FamilyKind; 7] = [
        FamilyKind::Veronese,
        FamilyKind::Borel,
        FamilyKind::MultipartiteEdge,
        FamilyKind::TransversalProduct,
        FamilyKind::StrongExchange,
        FamilyKind::IntersectionBh,
        FamilyKind::RandomRestriction,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::Veronese => "veronese",
            FamilyKind::Borel => "borel",
            FamilyKind::MultipartiteEdge => "multipartite-edge",
            FamilyKind::TransversalProduct => "transversal-product",
            FamilyKind::StrongExchange => "strong-exchange",
            FamilyKind::IntersectionBh => "intersection-bh",
            FamilyKind::RandomRestriction => "random-restriction",
            FamilyKind::Explicit => "explicit",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown family '{s}'")))
    }

    /// Every instance of the family is polymatroidal.
    pub fn is_polymatroidal_family(self) -> bool {
        !matches!(self, FamilyKind::IntersectionBh | FamilyKind::Explicit)
    }

    /// First power from which `HS_i(I^{k+1}) = I HS_i(I^k)` is known to hold
    /// for every `i`, if the family is one of the settled ones.
    pub fn generation_from_first_power(self) -> bool {
        matches!(self, FamilyKind::Borel | FamilyKind::StrongExchange | FamilyKind::Veronese)
    }

    /// Families where degreewise generation is settled (for `k >= 1` or
    /// `k >= i`).
    pub fn generation_settled(self) -> bool {
        self.generation_from_first_power() || self == FamilyKind::MultipartiteEdge
    }
}

impl std::fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Concrete family parameters; vertex and variable indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilyParams {
    /// `I_{a,d}`.
    Veronese { a: Vec<u32>, d: u32 },
    /// `B(u)`.
    Borel { u: Vec<u32> },
    /// Edge ideal of the complete multipartite graph with interval parts.
    MultipartiteEdge { parts: Vec<usize> },
    /// Product of the monomial primes on the listed variables.
    TransversalProduct { n: usize, primes: Vec<Vec<usize>> },
    /// `(x^u) I_{a,d}`.
    StrongExchange { u: Vec<u32>, a: Vec<u32>, d: u32 },
    /// `∩ P_t^{k_t}` with `P_t` generated by all variables but `missing_t`.
    IntersectionBh { n: usize, components: Vec<(usize, u32)> },
    /// `J^{<=bound}` for a polymatroidal `J`.
    RandomRestriction { base: Box<FamilyParams>, bound: Vec<u32> },
    Explicit { ideal: IdealJson },
}

impl FamilyParams {
    pub fn kind(&self) -> FamilyKind {
        match self {
            FamilyParams::Veronese { .. } => FamilyKind::Veronese,
            FamilyParams::Borel { .. } => FamilyKind::Borel,
            FamilyParams::MultipartiteEdge { .. } => FamilyKind::MultipartiteEdge,
            FamilyParams::TransversalProduct { .. } => FamilyKind::TransversalProduct,
            FamilyParams::StrongExchange { .. } => FamilyKind::StrongExchange,
            FamilyParams::IntersectionBh { .. } => FamilyKind::IntersectionBh,
            FamilyParams::RandomRestriction { .. } => FamilyKind::RandomRestriction,
            FamilyParams::Explicit { .. } => FamilyKind::Explicit,
        }
    }
}

fn zero_based(vars: &[usize], n: usize) -> Result<Vec<usize>> {
    vars.iter()
        .map(|&v| {
            if v == 0 || v > n {
                Err(Error::InvalidArgument(format!("variable index {v} out of range 1..={n}")))
            } else {
                Ok(v - 1)
            }
        })
        .collect()
}

/// Build the ideal described by `params` and run the family's defining check.
pub fn build(params: &FamilyParams) -> Result<MonomialIdeal> {
    let ideal = match params {
        FamilyParams::Veronese { a, d } => veronese(a, *d)?,
        FamilyParams::Borel { u } => principal_borel(&Monomial::new(u.clone()))?,
        FamilyParams::MultipartiteEdge { parts } => {
            if parts.len() < 2 {
                return Err(Error::InvalidArgument("a multipartite graph needs two parts".into()));
            }
            SimpleGraph::complete_multipartite(parts)?.edge_ideal()
        }
        FamilyParams::TransversalProduct { n, primes } => {
            let ps: Vec<Vec<usize>> = primes.iter().map(|p| zero_based(p, *n)).collect::<Result<_>>()?;
            transversal_product(*n, &ps)?
        }
        FamilyParams::StrongExchange { u, a, d } => strong_exchange_ideal(&Monomial::new(u.clone()), a, *d)?,
        FamilyParams::IntersectionBh { n, components } => {
            let cs: Vec<(usize, u32)> = components
                .iter()
                .map(|&(m, k)| Ok((zero_based(&[m], *n)?[0], k)))
                .collect::<Result<_>>()?;
            prime_power_intersection(*n, &cs)?
        }
        FamilyParams::RandomRestriction { base, bound } => {
            if matches!(**base, FamilyParams::IntersectionBh { .. } | FamilyParams::Explicit { .. }) {
                return Err(Error::InvalidArgument("restrictions need a polymatroidal base family".into()));
            }
            build(base)?.restriction(bound)?
        }
        FamilyParams::Explicit { ideal } => ideal.to_ideal()?,
    };
    let ok = match params.kind() {
        FamilyKind::MultipartiteEdge => is_matroidal(&ideal),
        FamilyKind::IntersectionBh => is_componentwise_polymatroidal(&ideal),
        FamilyKind::Explicit => true,
        _ => is_polymatroidal(&ideal),
    };
    if !ok {
        return Err(Error::InvalidArgument(format!(
            "generated {} instance fails its defining check (is the restriction empty?)",
            params.kind()
        )));
    }
    Ok(ideal)
}

/// Size bounds for sampled instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Size {
    pub n_min: usize,
    pub n_max: usize,
    pub deg_max: u32,
    pub max_gens: usize,
}

impl Default for Size {
    fn default() -> Self {
        Self {
            n_min: 2,
            n_max: 5,
            deg_max: 3,
            max_gens: 40,
        }
    }
}

impl Size {
    pub fn new(n_max: usize, deg_max: u32, max_gens: usize) -> Self {
        Self {
            n_min: 2,
            n_max,
            deg_max,
            max_gens,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n_min < 2 || self.n_max < self.n_min || self.n_max > 12 {
            return Err(Error::InvalidArgument("need 2 <= n_min <= n_max <= 12".into()));
        }
        if self.deg_max == 0 || self.max_gens == 0 {
            return Err(Error::InvalidArgument("degree and generator bounds must be positive".into()));
        }
        Ok(())
    }
}

/// A family, a seed and size bounds; the same recipe always yields the same
/// parameters and the same ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRecipe {
    pub family: FamilyKind,
    pub seed: u64,
    #[serde(default)]
    pub size: Size,
}

/// A generated instance with the parameters that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedInstance {
    pub params: FamilyParams,
    pub ideal: MonomialIdeal,
}

/// Sample parameters for `recipe` and build the ideal. Parameter draws that
/// exceed `max_gens` are redrawn (deterministically); after 64 attempts the
/// smallest draw seen is used.
pub fn generate(recipe: &InstanceRecipe) -> Result<GeneratedInstance> {
    recipe.size.validate()?;
    if recipe.family == FamilyKind::Explicit {
        return Err(Error::InvalidArgument("explicit instances are given, not sampled".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(recipe.seed);
    let mut best: Option<GeneratedInstance> = None;
    for _ in 0..64 {
        let params = sample(recipe.family, &recipe.size, &mut rng);
        let ideal = match build(&params) {
            Ok(i) => i,
            Err(_) => continue,
        };
        if ideal.num_gens() <= recipe.size.max_gens {
            return Ok(GeneratedInstance { params, ideal });
        }
        if best.as_ref().is_none_or(|b| ideal.num_gens() < b.ideal.num_gens()) {
            best = Some(GeneratedInstance { params, ideal });
        }
    }
    best.ok_or_else(|| Error::InvalidArgument(format!("could not sample a {} instance", recipe.family)))
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize, lo: u32, hi: u32) -> Vec<u32> {
    (0..n).map(|_| rng.gen_range(lo..=hi)).collect()
}

/// A monomial with `1 <= deg <= deg_max`.
fn random_monomial(rng: &mut ChaCha8Rng, n: usize, deg_max: u32) -> Vec<u32> {
    let d = rng.gen_range(1..=deg_max);
    let mut u = vec![0; n];
    for _ in 0..d {
        u[rng.gen_range(0..n)] += 1;
    }
    u
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    loop {
        let s: Vec<usize> = (1..=n).filter(|_| rng.gen_bool(0.5)).collect();
        if !s.is_empty() {
            return s;
        }
    }
}

fn sample(family: FamilyKind, size: &Size, rng: &mut ChaCha8Rng) -> FamilyParams {
    let n = rng.gen_range(size.n_min..=size.n_max);
    match family {
        FamilyKind::Veronese => {
            let a = random_vector(rng, n, 1, size.deg_max);
            let cap = a.iter().sum::<u32>().min(size.deg_max);
            FamilyParams::Veronese { a, d: rng.gen_range(1..=cap) }
        }
        FamilyKind::Borel => FamilyParams::Borel {
            u: random_monomial(rng, n, size.deg_max),
        },
        FamilyKind::MultipartiteEdge => {
            // random composition of n into at least two parts
            let mut cuts: Vec<usize> = (1..n).filter(|_| rng.gen_bool(0.5)).collect();
            if cuts.is_empty() {
                cuts.push(rng.gen_range(1..n));
            }
            let mut parts = Vec::new();
            let mut prev = 0;
            for c in cuts.into_iter().chain(std::iter::once(n)) {
                parts.push(c - prev);
                prev = c;
            }
            FamilyParams::MultipartiteEdge { parts }
        }
        FamilyKind::TransversalProduct => {
            let r = rng.gen_range(1..=size.deg_max);
            FamilyParams::TransversalProduct {
                n,
                primes: (0..r).map(|_| random_subset(rng, n)).collect(),
            }
        }
        FamilyKind::StrongExchange => {
            let mut u = vec![0; n];
            if rng.gen_bool(0.5) {
                u[rng.gen_range(0..n)] = 1;
            }
            let budget = size.deg_max.saturating_sub(u.iter().sum()).max(1);
            let a = random_vector(rng, n, 1, budget);
            let cap = a.iter().sum::<u32>().min(budget);
            FamilyParams::StrongExchange { u, a, d: rng.gen_range(1..=cap) }
        }
        FamilyKind::IntersectionBh => {
            let n = n.min(4);
            let mut missing: Vec<usize> = (1..=n).collect();
            missing.shuffle(rng);
            let r = rng.gen_range(1..=n);
            let components = missing[..r]
                .iter()
                .map(|&m| (m, rng.gen_range(1..=size.deg_max)))
                .collect();
            FamilyParams::IntersectionBh { n, components }
        }
        FamilyKind::RandomRestriction => {
            let base = if rng.gen_bool(0.5) {
                sample(FamilyKind::Veronese, size, rng)
            } else {
                sample(FamilyKind::TransversalProduct, size, rng)
            };
            let ideal = build(&base).expect("base families always build");
            let gens = ideal.gens();
            let g = &gens[rng.gen_range(0..gens.len())];
            let deg = ideal.bounding_multidegree().expect("nonzero");
            // a bound between a generator and deg(J) keeps the restriction nonempty
            let bound = g
                .exps()
                .iter()
                .zip(&deg)
                .map(|(&lo, &hi)| rng.gen_range(lo..=hi))
                .collect();
            FamilyParams::RandomRestriction {
                base: Box::new(base),
                bound,
            }
        }
        FamilyKind::Explicit => unreachable!("explicit instances are not sampled"),
    }
}
