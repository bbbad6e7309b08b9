//! Discrete polymatroids, exchange checks, named constructions, and the
//! Möbius function criterion for homological shift membership.

pub mod constructions;
pub mod discrete;
pub mod exchange;
pub mod graph;
pub mod mobius;

pub use constructions::{prime_power_intersection, principal_borel, strong_exchange_ideal, transversal_product, veronese};
pub use discrete::{box_polymatroid, DiscretePolymatroid, PolymatroidJson};
pub use exchange::{
    check_polymatroidal, check_strong_exchange, check_symmetric_exchange, is_componentwise_polymatroidal,
    is_matroidal, is_polymatroidal, ExchangeWitness, PolymatroidCheck,
};
pub use graph::{GraphJson, SimpleGraph};
pub use mobius::{cms_hs_membership, CmsCriterion, MobiusTable};
