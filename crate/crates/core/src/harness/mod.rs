//! Instance generation and seeded fuzz campaigns.

mod campaign;
mod recipe;

pub use campaign::{
    fuzz, instance_seed, is_conjectural, law_params, reverify_counterexample, CampaignConfig, CampaignReport,
    Counterexample, Environment, ErrorRow, Tally, TallyRow, TimingRow, VerdictRecord, THREADS_ENV,
};
pub use recipe::{build, generate, FamilyKind, FamilyParams, GeneratedInstance, InstanceRecipe, Size};
