//! Numeric shadows of finite-factor inclusions: coupling constants of matrix
//! algebras, Jones indices as ratios of coupling constants, and free-group
//! indices from the Nielsen-Schreier formula.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::scalar::Rational;

/// A positive coupling constant `dim_M H`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactorDims(Rational);

impl FactorDims {
    pub fn new(module_dim: Rational) -> Result<Self> {
        if module_dim.is_positive() {
            Ok(FactorDims(module_dim))
        } else {
            Err(Error::NonPositive)
        }
    }

    pub fn module_dim(&self) -> &Rational {
        &self.0
    }

    /// `[self : sub] = dim sub / dim self`, both acting on the same space.
    pub fn index_of(&self, sub: &FactorDims) -> Rational {
        &sub.0 / &self.0
    }
}

/// Coupling constant of `M_n(C) ⊗ 1` on `C^n ⊗ C^k`, which is `k/n`.
pub fn matrix_coupling(n: u64, k: u64) -> Result<Rational> {
    if n == 0 || k == 0 {
        return Err(Error::ZeroSize);
    }
    Ok(Rational::new(BigInt::from(k), BigInt::from(n)))
}

/// Jones index `[M : N] = dim N / dim M` from the coupling constants of the
/// subfactor `N` and the ambient factor `M` on a common Hilbert space.
pub fn jones_index(dim_sub: &Rational, dim_ambient: &Rational) -> Result<Rational> {
    let sub = FactorDims::new(dim_sub.clone())?;
    Ok(FactorDims::new(dim_ambient.clone())?.index_of(&sub))
}

/// The index `e` of `F_sub` in `F_ambient`, where `sub = 1 + e(ambient - 1)`.
pub fn free_group_index(ambient_rank: u64, sub_rank: u64) -> Result<u64> {
    if ambient_rank < 2 || sub_rank < 2 {
        return Err(Error::RankTooSmall);
    }
    let (num, den) = (sub_rank - 1, ambient_rank - 1);
    if num % den != 0 {
        return Err(Error::NotFiniteIndex {
            ambient: ambient_rank,
            sub: sub_rank,
        });
    }
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    #[test]
    fn matrix_examples() {
        assert_eq!(matrix_coupling(2, 3), Ok(rat(3, 2)));
        assert_eq!(matrix_coupling(7, 7), Ok(int(1)));
        assert_eq!(matrix_coupling(3, 1), Ok(rat(1, 3)));
        assert_eq!(matrix_coupling(0, 3), Err(Error::ZeroSize));
        assert_eq!(matrix_coupling(2, 0), Err(Error::ZeroSize));
    }

    #[test]
    fn index_nine() {
        // M_2 ⊗ 1 and M_2 ⊗ M_3 on C^2 ⊗ C^3; the latter is M_6 on C^6
        let sub = matrix_coupling(2, 3).unwrap();
        let ambient = matrix_coupling(6, 1).unwrap();
        assert_eq!(ambient, rat(1, 6));
        assert_eq!(jones_index(&sub, &ambient), Ok(int(9)));
    }

    #[test]
    fn jones_index_cases() {
        assert_eq!(jones_index(&rat(5, 7), &rat(5, 7)), Ok(int(1)));
        // [RF_2 : RF_5] from dims 2m and m/2 at m = 1
        assert_eq!(jones_index(&int(2), &rat(1, 2)), Ok(int(4)));
        assert_eq!(jones_index(&int(0), &int(1)), Err(Error::NonPositive));
        assert_eq!(jones_index(&int(1), &int(-2)), Err(Error::NonPositive));
    }

    #[test]
    fn nielsen_schreier() {
        assert_eq!(free_group_index(2, 5), Ok(4));
        assert_eq!(free_group_index(3, 5), Ok(2));
        assert_eq!(free_group_index(2, 3), Ok(2));
        assert_eq!(
            free_group_index(3, 6),
            Err(Error::NotFiniteIndex { ambient: 3, sub: 6 })
        );
        assert_eq!(free_group_index(1, 5), Err(Error::RankTooSmall));
    }

    #[test]
    fn radulescu_exponent() {
        for n in [2u64, 3] {
            for k in [1u64, 2, 3] {
                assert_eq!(free_group_index(n, (n - 1) * k * k + 1), Ok(k * k));
            }
        }
    }
}
