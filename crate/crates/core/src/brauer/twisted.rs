use crate::error::{Error, Result};
use crate::finab::{image_cokernel, FinAbGroup};
use crate::rootdata::{DynkinType, Family, GroupSpec, Mode};

use super::ev::ev;

fn twisted_spec(factors: &[DynkinType], delta: &[i64]) -> Result<GroupSpec> {
    GroupSpec::new(factors.to_vec(), vec![], delta.to_vec(), 3, Mode::TwistedSc, false)
}

/// Brauer group of the regularly stable twisted moduli space of `G̃ = ∏ factors`.
pub(crate) fn twisted_brauer(factors: &[DynkinType], delta: &[i64]) -> Result<FinAbGroup> {
    Ok(image_cokernel(&ev(&twisted_spec(factors, delta)?)?)?.1)
}

/// `Br(M^δ_C(G̃)^rs)` for simply connected `G̃` of type `t`, `δ ∈ Z_{G̃}` in canonical coordinates.
pub fn br_twisted_sc(t: DynkinType, delta: &[i64]) -> Result<FinAbGroup> {
    twisted_brauer(&[t], delta)
}

/// Smallest power of the generator of `Pic(M^δ_C(G̃))` that descends to the
/// regularly stable moduli space: the order of the image of the evaluation map.
pub fn min_descending_power(t: DynkinType, delta: &[i64]) -> Result<i64> {
    let (image, _) = image_cokernel(&ev(&twisted_spec(&[t], delta)?)?)?;
    Ok(image.order_u64().expect("image of a map into a center dual is small") as i64)
}

/// Whether the twisted semistable `Sp(2n)` moduli space (`δ` the nontrivial central element)
/// is locally factorial.
pub fn sp_local_factoriality(n: usize) -> Result<bool> {
    if n < 3 {
        return Err(Error::InvalidRank { family: Family::C, rank: n });
    }
    let t = DynkinType::new(Family::C, n)?;
    Ok(min_descending_power(t, &[1])? == 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> DynkinType {
        s.parse().unwrap()
    }

    #[test]
    fn sp_powers() {
        assert_eq!(min_descending_power(ty("C3"), &[1]).unwrap(), 2);
        assert_eq!(min_descending_power(ty("C4"), &[1]).unwrap(), 1);
        assert!(br_twisted_sc(ty("C5"), &[1]).unwrap().is_trivial());
        assert_eq!(br_twisted_sc(ty("C6"), &[1]).unwrap().invariant_factors(), &[2]);
    }

    #[test]
    fn local_factoriality() {
        assert!(sp_local_factoriality(3).unwrap());
        assert!(!sp_local_factoriality(4).unwrap());
        assert!(sp_local_factoriality(5).unwrap());
        assert!(sp_local_factoriality(2).is_err());
    }

    #[test]
    fn spin_clauses() {
        // odd n
        assert_eq!(br_twisted_sc(ty("B5"), &[1]).unwrap().invariant_factors(), &[2]);
        assert_eq!(min_descending_power(ty("B5"), &[1]).unwrap(), 1);
        // n = 4l+2
        assert!(br_twisted_sc(ty("D5"), &[1]).unwrap().is_trivial());
        assert_eq!(min_descending_power(ty("D5"), &[3]).unwrap(), 4);
        assert_eq!(br_twisted_sc(ty("D5"), &[2]).unwrap().invariant_factors(), &[2]);
        assert_eq!(min_descending_power(ty("D5"), &[2]).unwrap(), 2);
        // n = 4l
        for d in [[1, 0], [0, 1], [1, 1]] {
            assert_eq!(br_twisted_sc(ty("D6"), &d).unwrap().invariant_factors(), &[2]);
            assert_eq!(min_descending_power(ty("D6"), &d).unwrap(), 2);
        }
        assert_eq!(br_twisted_sc(ty("D6"), &[0, 0]).unwrap().invariant_factors(), &[2, 2]);
    }
}
