//! Haar normalizations on `PGL(2,F)`, formal dimensions of the Steinberg and
//! depth-zero cuspidal representations, Ihara's free lattices and their
//! covolumes, and the resulting von Neumann dimensions.
//!
//! Formal dimensions scale inversely with the measure, so the product with a
//! covolume is independent of the normalization.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use super::weyl::weyl_closed_form;
use crate::error::{Error, Result};
use crate::finite_field::{finite_rep_dims, group_orders, PrimePower};
use crate::scalar::{int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HaarNormalization {
    /// `vol(I·Z/Z) = 1`.
    IwahoriOne,
    /// `vol(K·Z/Z) = 1`.
    KOne,
    /// `vol(K·Z/Z) = q+1`.
    KQPlusOne,
    /// `vol(K·Z/Z) = (q-1)/2`, the normalization giving Steinberg degree 1.
    KHalfQMinusOne,
}

impl HaarNormalization {
    pub const ALL: [HaarNormalization; 4] = [
        HaarNormalization::IwahoriOne,
        HaarNormalization::KOne,
        HaarNormalization::KQPlusOne,
        HaarNormalization::KHalfQMinusOne,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            HaarNormalization::IwahoriOne => "iwahori1",
            HaarNormalization::KOne => "k1",
            HaarNormalization::KQPlusOne => "kq1",
            HaarNormalization::KHalfQMinusOne => "khalf",
        }
    }
}

impl fmt::Display for HaarNormalization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for HaarNormalization {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        HaarNormalization::ALL
            .into_iter()
            .find(|n| n.name() == s)
            .ok_or_else(|| {
                Error::Parse(format!(
                    "unknown normalization {s:?}; use iwahori1, k1, kq1 or khalf"
                ))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HaarVolumes {
    pub vol_iz: Rational,
    pub vol_kz: Rational,
}

/// Volumes of `I·Z/Z` and `K·Z/Z`; the Iwahori subgroup has index `q+1` in `K`.
pub fn haar_volumes(q: &PrimePower, norm: HaarNormalization) -> HaarVolumes {
    let index = Rational::from_integer(BigInt::from(group_orders(q).borel_index));
    let qi = q.q() as i64;
    let vol_kz = match norm {
        HaarNormalization::IwahoriOne => index.clone(),
        HaarNormalization::KOne => Rational::one(),
        HaarNormalization::KQPlusOne => int(qi + 1),
        HaarNormalization::KHalfQMinusOne => Rational::new(BigInt::from(qi - 1), BigInt::from(2)),
    };
    HaarVolumes {
        vol_iz: &vol_kz / index,
        vol_kz,
    }
}

/// Formal dimension of the Steinberg representation: the reciprocal of the
/// Weyl length series when `vol(I·Z/Z) = 1`, rescaled by `1/vol(I·Z/Z)`.
pub fn steinberg_formal_dim(q: &PrimePower, norm: HaarNormalization) -> Rational {
    let iwahori_one = weyl_closed_form(q).recip();
    iwahori_one / haar_volumes(q, norm).vol_iz
}

/// `dim π_θ / vol(Z K/Z)` with `dim π_θ = q-1`.
pub fn depth_zero_formal_dim(q: &PrimePower, norm: HaarNormalization) -> Rational {
    let dim = Rational::from_integer(BigInt::from(finite_rep_dims(q).cuspidal_dim));
    dim / haar_volumes(q, norm).vol_kz
}

/// `(1/n) Π_{k=1}^{n-1} (q^k - 1)`, the Steinberg degree of `GL(n,F)` times
/// `vol(K·Z/Z)`.
pub fn steinberg_degree_product(q: &PrimePower, n: u32) -> Rational {
    let q = BigInt::from(q.q());
    let product: BigInt = (1..n).map(|k| q.pow(k) - 1).product();
    Rational::new(product, BigInt::from(n))
}

/// A free lattice `Γ ≅ F_n` in `PGL(2,F)` with `h = |Γ\G/K|` double cosets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PadicLattice {
    q: PrimePower,
    rank: u64,
    double_cosets: u64,
}

impl PadicLattice {
    pub fn q(&self) -> &PrimePower {
        &self.q
    }

    pub fn rank(&self) -> u64 {
        self.rank
    }

    pub fn double_cosets(&self) -> u64 {
        self.double_cosets
    }
}

/// A cocompact free lattice of rank `n` exists only when
/// `h = 2(n-1)/(q-1)` is a positive integer.
pub fn ihara_lattice(q: &PrimePower, n: u64) -> Result<PadicLattice> {
    let no = Error::NoSuchLattice { q: q.q(), n };
    if n < 2 {
        return Err(no);
    }
    let twice = 2 * (n - 1);
    if !twice.is_multiple_of(q.q() - 1) {
        return Err(no);
    }
    Ok(PadicLattice {
        q: *q,
        rank: n,
        double_cosets: twice / (q.q() - 1),
    })
}

/// `vol(PGL(2,F)/Γ) = h · vol(K·Z/Z)`.
pub fn lattice_covolume(q: &PrimePower, n: u64, norm: HaarNormalization) -> Result<Rational> {
    let lattice = ihara_lattice(q, n)?;
    Ok(haar_volumes(q, norm).vol_kz * int(lattice.double_cosets as i64))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RepKind {
    Steinberg,
    DepthZeroCuspidal,
}

impl RepKind {
    pub fn formal_dim(&self, q: &PrimePower, norm: HaarNormalization) -> Rational {
        match self {
            RepKind::Steinberg => steinberg_formal_dim(q, norm),
            RepKind::DepthZeroCuspidal => depth_zero_formal_dim(q, norm),
        }
    }
}

impl FromStr for RepKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "steinberg" => Ok(RepKind::Steinberg),
            "cuspidal" => Ok(RepKind::DepthZeroCuspidal),
            _ => Err(Error::Parse(format!(
                "unknown representation {s:?}; use steinberg or cuspidal"
            ))),
        }
    }
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepKind::Steinberg => "steinberg",
            RepKind::DepthZeroCuspidal => "cuspidal",
        })
    }
}

/// `d_π · vol(PGL(2,F)/Γ)` for a rank-`n` free lattice.
pub fn vn_dimension_padic(
    q: &PrimePower,
    n: u64,
    rep: RepKind,
    norm: HaarNormalization,
) -> Result<Rational> {
    Ok(rep.formal_dim(q, norm) * lattice_covolume(q, n, norm)?)
}
