//! Betti numbers, projective dimension, depth and regularity.
//!
//! Linear quotients data is used when an order exists (Betti numbers are the
//! Eq.-(1) basis counts); otherwise the Koszul homology oracle is used.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::resolution::koszul::koszul_tor;
use crate::resolution::linalg::Field;
use crate::resolution::linear_quotients::linear_quotients;

fn require_proper(ideal: &MonomialIdeal, what: &'static str) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal(what));
    }
    Ok(())
}

/// Total Betti numbers `β_0(I), ..., β_pd(I)`.
pub fn betti(ideal: &MonomialIdeal) -> Result<Vec<u64>> {
    require_proper(ideal, "Betti numbers")?;
    match linear_quotients(ideal) {
        Ok(lq) if lq.admits => Ok(lq.betti_numbers()),
        _ => Ok(koszul_tor(ideal, Field::RATIONALS)?.totals()),
    }
}

/// Projective dimension of `I`.
pub fn pd(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(betti(ideal)?.len() - 1)
}

/// `depth S/I = n - pd(I) - 1` (Auslander–Buchsbaum).
pub fn depth_quotient(ideal: &MonomialIdeal) -> Result<usize> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("depth of S/I"));
    }
    Ok(ideal.n() - pd(ideal)? - 1)
}

/// Equigenerated with linear quotients (sufficient), else decided by the
/// Koszul oracle.
pub fn has_linear_resolution(ideal: &MonomialIdeal) -> Result<bool> {
    require_proper(ideal, "linear resolution")?;
    if !ideal.is_equigenerated() {
        return Ok(false);
    }
    if matches!(linear_quotients(ideal), Ok(lq) if lq.admits) {
        return Ok(true);
    }
    Ok(koszul_tor(ideal, Field::RATIONALS)?.is_linear())
}

/// `reg(I) = α(I)` for an ideal certified to have a linear resolution.
pub fn reg_linear(ideal: &MonomialIdeal) -> Result<u32> {
    if !has_linear_resolution(ideal)? {
        return Err(Error::InvalidArgument(
            "regularity is only reported for ideals with a linear resolution".into(),
        ));
    }
    ideal.alpha()
}

/// Regularity of an arbitrary ideal from the full graded Betti table.
pub fn reg_koszul(ideal: &MonomialIdeal, field: Field) -> Result<u32> {
    Ok(koszul_tor(ideal, field)?
        .regularity()
        .expect("nonzero ideal has Tor_0"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polymatroid::veronese;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    #[test]
    fn maximal_ideal() {
        let m = MonomialIdeal::maximal(3);
        assert_eq!(betti(&m).unwrap(), vec![3, 3, 1]);
        assert_eq!(pd(&m).unwrap(), 2);
        assert_eq!(depth_quotient(&m).unwrap(), 0);
        assert_eq!(reg_linear(&m).unwrap(), 1);
    }

    #[test]
    fn fallback_to_homology() {
        let i = ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]);
        assert_eq!(betti(&i).unwrap(), vec![2, 1]);
        assert_eq!(depth_quotient(&i).unwrap(), 2);
        assert!(!has_linear_resolution(&i).unwrap());
        assert!(reg_linear(&i).is_err());
        assert_eq!(reg_koszul(&i, Field::RATIONALS).unwrap(), 3);
    }

    #[test]
    fn linear_quotient_counts_match_homology() {
        for i in [
            veronese(&[2, 1, 2], 3).unwrap(),
            ideal(4, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1]]),
            ideal(3, &[&[1, 0, 0], &[0, 2, 0], &[0, 1, 1]]),
        ] {
            assert_eq!(betti(&i).unwrap(), koszul_tor(&i, Field::RATIONALS).unwrap().totals());
        }
    }

    #[test]
    fn conventions() {
        assert!(betti(&MonomialIdeal::zero(2)).is_err());
        assert!(depth_quotient(&MonomialIdeal::unit(2)).is_err());
        assert_eq!(depth_quotient(&ideal(2, &[&[1, 0]])).unwrap(), 1);
    }
}
