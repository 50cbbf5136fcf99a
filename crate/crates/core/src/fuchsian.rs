//! Lattices in PSL(2,R): signatures, Gauss-Bonnet covolumes, cusp-form
//! dimensions and the von Neumann dimension of the group algebra acting on a
//! discrete series representation `D_m`.
//!
//! Measures follow `y^-2 dx dy` on the upper half plane, under which the
//! formal dimension of `D_m` is `m/(4π)`. The discrete series `D_m` occurs in
//! `L^2(Γ\G)` with multiplicity `dim S_{m+1}(Γ)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::scalar::{int, PiRational, Rational};

/// Default upper bound for [`minimal_discrete_series_weight`].
pub const DEFAULT_SCAN_CAP: i64 = 1_000_000;

/// `(g; m_1, ..., m_l; h)`: genus, elliptic orders and number of cusps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FuchsianSignature {
    genus: u32,
    elliptic_orders: Vec<u32>,
    cusps: u32,
}

impl FuchsianSignature {
    /// Builds a signature, rejecting elliptic orders below 2 and signatures
    /// whose Gauss-Bonnet area is not positive.
    pub fn new(genus: u32, elliptic_orders: Vec<u32>, cusps: u32) -> Result<Self> {
        if let Some(bad) = elliptic_orders.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidSignature(format!(
                "elliptic order {bad} is below 2"
            )));
        }
        let sig = FuchsianSignature {
            genus,
            elliptic_orders,
            cusps,
        };
        if !sig.euler_term().is_positive() {
            return Err(Error::NonHyperbolic(sig.to_string()));
        }
        Ok(sig)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn elliptic_orders(&self) -> &[u32] {
        &self.elliptic_orders
    }

    pub fn cusps(&self) -> u32 {
        self.cusps
    }

    /// `2g - 2 + Σ (1 - 1/m_j) + h`, the area divided by `2π`.
    pub fn euler_term(&self) -> Rational {
        let elliptic: Rational = self
            .elliptic_orders
            .iter()
            .map(|&m| Rational::one() - Rational::new(BigInt::one(), BigInt::from(m)))
            .sum();
        int(2 * i64::from(self.genus) - 2 + i64::from(self.cusps)) + elliptic
    }

    /// Rank of the fundamental group when it is free (no elliptic elements,
    /// at least one cusp).
    pub fn free_rank(&self) -> Option<u32> {
        (self.elliptic_orders.is_empty() && self.cusps > 0).then(|| 2 * self.genus + self.cusps - 1)
    }
}

impl fmt::Display for FuchsianSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.genus)?;
        if self.elliptic_orders.is_empty() {
            f.write_str("-")?;
        } else {
            let orders: Vec<String> = self.elliptic_orders.iter().map(u32::to_string).collect();
            f.write_str(&orders.join(","))?;
        }
        write!(f, ";{}", self.cusps)
    }
}

impl FromStr for FuchsianSignature {
    type Err = Error;

    /// Parses `g;m1,m2,...;h`, with `-` standing for no elliptic points.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidSignature(format!("{s:?}: {why}"));
        let parts: Vec<&str> = s.split(';').map(str::trim).collect();
        let [genus, orders, cusps] = parts[..] else {
            return Err(bad("expected three ';'-separated fields"));
        };
        let genus = genus
            .parse()
            .map_err(|_| bad("genus is not a non-negative integer"))?;
        let cusps = cusps
            .parse()
            .map_err(|_| bad("cusp count is not a non-negative integer"))?;
        let elliptic_orders = if orders == "-" || orders.is_empty() {
            Vec::new()
        } else {
            orders
                .split(',')
                .map(|m| {
                    m.trim()
                        .parse()
                        .map_err(|_| bad("elliptic order is not an integer"))
                })
                .collect::<Result<Vec<u32>>>()?
        };
        FuchsianSignature::new(genus, elliptic_orders, cusps)
    }
}

/// Whether lattices live in PSL(2,R) (only odd `m` descend) or SL(2,R).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum GroupMode {
    #[default]
    Psl2R,
    Sl2R,
}

/// `2π (2g - 2 + Σ (1 - 1/m_j) + h)`.
pub fn covolume(sig: &FuchsianSignature) -> PiRational {
    PiRational::times_pi(sig.euler_term() * int(2))
}

/// Dimension of the space of weight-`weight` cusp forms, for even weight.
///
/// The cusp term uses the cusp count `h`.
pub fn cusp_form_dim(sig: &FuchsianSignature, weight: i64) -> Result<u64> {
    if weight % 2 != 0 {
        return Err(Error::OddWeight(weight));
    }
    let dim = match weight {
        w if w < 0 => 0,
        0 => u64::from(sig.cusps == 0),
        2 => u64::from(sig.genus),
        w => {
            let half = i128::from(w / 2);
            let g = i128::from(sig.genus);
            let h = i128::from(sig.cusps);
            let elliptic: i128 = sig
                .elliptic_orders
                .iter()
                .map(|&e| {
                    let e = i128::from(e);
                    // floor(half * (1 - 1/e)); the numerator is non-negative
                    half * (e - 1) / e
                })
                .sum();
            let total = (i128::from(w) - 1) * (g - 1) + elliptic + (half - 1) * h;
            u64::try_from(total)
                .expect("cusp form dimension is non-negative for hyperbolic signatures")
        }
    };
    Ok(dim)
}

fn check_m(m: i64, mode: GroupMode) -> Result<()> {
    if m < 1 {
        return Err(Error::NonPositiveWeight(m));
    }
    if mode == GroupMode::Psl2R && m % 2 == 0 {
        return Err(Error::ParityViolation(m));
    }
    Ok(())
}

/// Multiplicity of `D_m` in `L^2(Γ\G)`, equal to `dim S_{m+1}(Γ)`.
pub fn discrete_series_multiplicity(
    sig: &FuchsianSignature,
    m: i64,
    mode: GroupMode,
) -> Result<u64> {
    check_m(m, mode)?;
    cusp_form_dim(sig, m + 1)
}

/// `d_m = m/(4π)`.
pub fn formal_dimension_psl(m: i64, mode: GroupMode) -> Result<PiRational> {
    check_m(m, mode)?;
    Ok(PiRational::over_pi(Rational::new(
        BigInt::from(m),
        BigInt::from(4),
    )))
}

/// `dim_{RΓ} D_m = d_m · vol(Γ\G)`.
pub fn vn_dimension(sig: &FuchsianSignature, m: i64, mode: GroupMode) -> Result<Rational> {
    formal_dimension_psl(m, mode)?
        .mul(&covolume(sig))?
        .to_rational()
}

/// Smallest `m` (odd, so that `m + 1` is an even weight) for which `D_m`
/// occurs in `L^2(Γ\G)`.
///
/// Scans `m = 1, 3, 5, ...` up to `cap`.
pub fn minimal_discrete_series_weight(sig: &FuchsianSignature, cap: i64) -> Result<i64> {
    let mut m = 1;
    while m <= cap {
        if cusp_form_dim(sig, m + 1)? > 0 {
            return Ok(m);
        }
        m += 2;
    }
    Err(Error::ScanCapExceeded(cap))
}

/// The von Neumann dimension of `RΓ_2` acting on the copy of `D_m` inside
/// `L^2(Γ_1\G)`. It agrees with the dimension on `D_m ⊂ L^2(G)` and so never
/// depends on `Γ_1`, but it only exists when `D_m` occurs for `Γ_1`.
pub fn two_lattice_vn_dimension(
    sig1: &FuchsianSignature,
    sig2: &FuchsianSignature,
    m: i64,
) -> Result<Rational> {
    if discrete_series_multiplicity(sig1, m, GroupMode::Psl2R)? == 0 {
        let minimal = minimal_discrete_series_weight(sig1, DEFAULT_SCAN_CAP)?;
        return Err(Error::NoOccurrence { m, minimal });
    }
    vn_dimension(sig2, m, GroupMode::Psl2R)
}

/// Names accepted by [`catalog`] besides the Hecke family `H<q>`.
pub const CONGRUENCE_GROUPS: [&str; 3] = ["Gamma0(4)", "Gamma0(4)capGamma(2)", "Gamma(4)"];

/// Signatures of the Hecke groups `H<q>` (`q >= 3`) and a chain of free
/// congruence subgroups of `PSL(2,Z)`.
pub fn catalog(name: &str) -> Result<FuchsianSignature> {
    let sig = match name {
        "Gamma0(4)" => FuchsianSignature::new(0, vec![], 3),
        "Gamma0(4)capGamma(2)" => FuchsianSignature::new(0, vec![], 4),
        "Gamma(4)" => FuchsianSignature::new(0, vec![], 6),
        _ => {
            let q: u32 = name
                .strip_prefix('H')
                .and_then(|q| q.parse().ok())
                .filter(|&q| q >= 3)
                .ok_or_else(|| Error::UnknownGroup(name.to_string()))?;
            FuchsianSignature::new(0, vec![2, q], 1)
        }
    };
    Ok(sig.expect("catalog signatures are hyperbolic"))
}

/// Ratio of covolumes `vol(sub)/vol(ambient)`, which is the subgroup index
/// when `sub` really is a subgroup.
pub fn covolume_ratio(ambient: &FuchsianSignature, sub: &FuchsianSignature) -> Rational {
    sub.euler_term() / ambient.euler_term()
}

/// True when `r` is a positive integer.
pub fn is_positive_integer(r: &Rational) -> bool {
    r.is_integer() && r.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn sig(s: &str) -> FuchsianSignature {
        s.parse().unwrap()
    }

    #[test]
    fn covolumes_from_the_tables() {
        assert_eq!(covolume(&sig("0;2,3;1")), PiRational::times_pi(rat(1, 3)));
        assert_eq!(covolume(&sig("0;-;3")), PiRational::times_pi(int(2)));
        assert_eq!(covolume(&sig("0;-;4")), PiRational::times_pi(int(4)));
        assert_eq!(covolume(&sig("0;-;6")), PiRational::times_pi(int(8)));
    }

    #[test]
    fn non_hyperbolic_rejected() {
        assert!(matches!(
            "1;-;0".parse::<FuchsianSignature>(),
            Err(Error::NonHyperbolic(_))
        ));
        assert!(matches!(
            "0;2,2;1".parse::<FuchsianSignature>(),
            Err(Error::NonHyperbolic(_))
        ));
        assert!(matches!(
            "0;-;2".parse::<FuchsianSignature>(),
            Err(Error::NonHyperbolic(_))
        ));
        assert!(matches!(
            FuchsianSignature::new(2, vec![1], 0),
            Err(Error::InvalidSignature(_))
        ));
    }

    #[test]
    fn parse_and_display() {
        for s in ["0;2,3;1", "0;-;3", "2;-;0", "1;2,2,5;0"] {
            assert_eq!(sig(s).to_string(), s);
        }
        assert_eq!(sig(" 0 ; 2, 3 ; 1 ").to_string(), "0;2,3;1");
        assert!(matches!(
            "0;2,3".parse::<FuchsianSignature>(),
            Err(Error::InvalidSignature(_))
        ));
        assert!(matches!(
            "a;-;3".parse::<FuchsianSignature>(),
            Err(Error::InvalidSignature(_))
        ));
        assert!(matches!(
            "0;x;3".parse::<FuchsianSignature>(),
            Err(Error::InvalidSignature(_))
        ));
    }

    #[test]
    fn cusp_form_dimensions() {
        let modular = sig("0;2,3;1");
        // -11 + (3 + 4) + 5
        assert_eq!(cusp_form_dim(&modular, 12), Ok(1));
        for k in [4, 6, 8, 10] {
            assert_eq!(cusp_form_dim(&modular, k), Ok(0), "weight {k}");
        }
        let g04 = sig("0;-;3");
        assert_eq!(cusp_form_dim(&g04, 6), Ok(1));
        assert_eq!(cusp_form_dim(&g04, 4), Ok(0));
        assert_eq!(cusp_form_dim(&g04, 2), Ok(0));
        assert_eq!(cusp_form_dim(&g04, 0), Ok(0));
        assert_eq!(cusp_form_dim(&g04, -4), Ok(0));
        assert_eq!(cusp_form_dim(&g04, 3), Err(Error::OddWeight(3)));
        assert_eq!(cusp_form_dim(&sig("2;-;0"), 0), Ok(1));
        assert_eq!(cusp_form_dim(&sig("2;-;0"), 2), Ok(2));
    }

    #[test]
    fn multiplicities() {
        assert_eq!(
            discrete_series_multiplicity(&sig("0;-;3"), 5, GroupMode::Psl2R),
            Ok(1)
        );
        assert_eq!(
            discrete_series_multiplicity(&sig("0;2,3;1"), 11, GroupMode::Psl2R),
            Ok(1)
        );
        assert_eq!(
            discrete_series_multiplicity(&sig("0;-;3"), 1, GroupMode::Psl2R),
            Ok(0)
        );
        assert_eq!(
            discrete_series_multiplicity(&sig("0;-;3"), 4, GroupMode::Psl2R),
            Err(Error::ParityViolation(4))
        );
        assert_eq!(
            discrete_series_multiplicity(&sig("0;-;3"), 4, GroupMode::Sl2R),
            Err(Error::OddWeight(5))
        );
    }

    #[test]
    fn formal_dimensions() {
        assert_eq!(
            formal_dimension_psl(1, GroupMode::Psl2R),
            Ok(PiRational::over_pi(rat(1, 4)))
        );
        assert_eq!(
            formal_dimension_psl(5, GroupMode::Psl2R),
            Ok(PiRational::over_pi(rat(5, 4)))
        );
        assert_eq!(
            formal_dimension_psl(2, GroupMode::Psl2R),
            Err(Error::ParityViolation(2))
        );
        assert_eq!(
            formal_dimension_psl(2, GroupMode::Sl2R),
            Ok(PiRational::over_pi(rat(1, 2)))
        );
        assert_eq!(
            formal_dimension_psl(0, GroupMode::Sl2R),
            Err(Error::NonPositiveWeight(0))
        );
        assert_eq!(
            formal_dimension_psl(-3, GroupMode::Psl2R),
            Err(Error::NonPositiveWeight(-3))
        );
    }

    #[test]
    fn von_neumann_dimensions() {
        let psl = GroupMode::Psl2R;
        assert_eq!(vn_dimension(&sig("0;-;3"), 5, psl), Ok(rat(5, 2)));
        assert_eq!(vn_dimension(&sig("0;-;4"), 3, psl), Ok(int(3)));
        assert_eq!(vn_dimension(&sig("0;-;6"), 3, psl), Ok(int(6)));
        assert_eq!(vn_dimension(&sig("2;-;0"), 3, psl), Ok(int(3)));
        assert_eq!(vn_dimension(&sig("2;-;0"), 4, GroupMode::Sl2R), Ok(int(4)));
    }

    #[test]
    fn minimal_weights() {
        assert_eq!(
            minimal_discrete_series_weight(&sig("0;-;3"), DEFAULT_SCAN_CAP),
            Ok(5)
        );
        assert_eq!(
            minimal_discrete_series_weight(&sig("0;2,3;1"), DEFAULT_SCAN_CAP),
            Ok(11)
        );
        assert_eq!(
            minimal_discrete_series_weight(&sig("2;-;0"), DEFAULT_SCAN_CAP),
            Ok(1)
        );
        assert_eq!(
            minimal_discrete_series_weight(&sig("0;2,3;1"), 9),
            Err(Error::ScanCapExceeded(9))
        );
    }

    #[test]
    fn two_lattices() {
        assert_eq!(
            two_lattice_vn_dimension(&sig("0;2,3;1"), &sig("0;-;3"), 11),
            Ok(rat(11, 2))
        );
        assert_eq!(
            two_lattice_vn_dimension(&sig("0;-;3"), &sig("0;-;3"), 5),
            Ok(rat(5, 2))
        );
        assert_eq!(
            two_lattice_vn_dimension(&sig("0;-;3"), &sig("0;-;6"), 3),
            Err(Error::NoOccurrence { m: 3, minimal: 5 })
        );
    }

    #[test]
    fn catalog_entries() {
        assert_eq!(catalog("H3").unwrap(), sig("0;2,3;1"));
        assert_eq!(catalog("H7").unwrap(), sig("0;2,7;1"));
        assert_eq!(catalog("Gamma0(4)").unwrap(), sig("0;-;3"));
        assert_eq!(catalog("Gamma0(4)capGamma(2)").unwrap(), sig("0;-;4"));
        assert_eq!(catalog("Gamma(4)").unwrap(), sig("0;-;6"));
        for bad in ["H2", "H", "Hx", "Gamma0(5)", ""] {
            assert_eq!(catalog(bad), Err(Error::UnknownGroup(bad.to_string())));
        }
    }

    #[test]
    fn free_ranks() {
        assert_eq!(sig("0;-;3").free_rank(), Some(2));
        assert_eq!(sig("0;-;6").free_rank(), Some(5));
        assert_eq!(sig("0;2,3;1").free_rank(), None);
        assert_eq!(sig("2;-;0").free_rank(), None);
    }

    #[test]
    fn covolumes_scale_with_index() {
        let chain: Vec<_> = CONGRUENCE_GROUPS
            .iter()
            .map(|n| catalog(n).unwrap())
            .collect();
        assert_eq!(covolume_ratio(&chain[0], &chain[1]), int(2));
        assert_eq!(covolume_ratio(&chain[1], &chain[2]), int(2));
        assert_eq!(covolume_ratio(&chain[0], &chain[2]), int(4));
    }
}
