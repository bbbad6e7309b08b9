//! Linear quotients, homological shift ideals, the Koszul homology oracle,
//! and invariants derived from Betti numbers.

pub mod invariants;
pub mod koszul;
pub mod linalg;
pub mod linear_quotients;
pub mod multipartite;
pub mod shifts;

pub use invariants::{betti, depth_quotient, has_linear_resolution, pd, reg_koszul, reg_linear};
pub use koszul::{koszul_tor, koszul_tor_with_budget, lcm_lattice, tor_at, MultigradedBetti};
pub use linalg::Field;
pub use linear_quotients::{
    colon_variables, lex_linear_quotients, linear_quotients, search_linear_quotients, LinearQuotientsData,
};
pub use multipartite::set_u_multipartite;
pub use shifts::{hs, hs1_lcm, hs1_polymatroidal, hs_with};
