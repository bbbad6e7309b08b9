//! Exact computations with monomial ideals and discrete polymatroids:
//! homological shift ideals of powers, Betti numbers, associated primes, and
//! checkers for identities relating them.

pub mod error;
pub mod format;
pub mod harness;
pub mod ideal;
pub mod laws;
pub mod monomial;
pub mod polymatroid;
pub mod primes;
pub mod resolution;

pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use laws::LawVerdict;
pub use monomial::Monomial;
