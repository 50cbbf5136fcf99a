//! p-adic valuations of rationals and small facts about local fields.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::finite_field::is_prime;
use crate::scalar::Rational;

/// `v_p(r)`, with `+∞` for zero ordered above every integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn finite(&self) -> Option<i64> {
        match *self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl Ord for Valuation {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Valuation::Infinite, Valuation::Infinite) => Ordering::Equal,
            (Valuation::Infinite, _) => Ordering::Greater,
            (_, Valuation::Infinite) => Ordering::Less,
            (Valuation::Finite(a), Valuation::Finite(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Valuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::ops::Add for Valuation {
    type Output = Valuation;

    fn add(self, rhs: Valuation) -> Valuation {
        match (self, rhs) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn multiplicity(n: &BigInt, p: &BigInt) -> i64 {
    let mut n = n.abs();
    let mut k = 0;
    loop {
        let (quot, rem) = n.div_rem(p);
        if !rem.is_zero() {
            return k;
        }
        n = quot;
        k += 1;
    }
}

/// Writes `r = p^v (a/b)` with `p ∤ ab` and returns `v`.
pub fn padic_valuation(r: &Rational, p: u64) -> Result<Valuation> {
    check_prime(p)?;
    if r.is_zero() {
        return Ok(Valuation::Infinite);
    }
    let p = BigInt::from(p);
    Ok(Valuation::Finite(
        multiplicity(r.numer(), &p) - multiplicity(r.denom(), &p),
    ))
}

/// `|r|_p = p^{-v_p(r)}`, and `|0|_p = 0`.
pub fn padic_abs(r: &Rational, p: u64) -> Result<Rational> {
    match padic_valuation(r, p)? {
        Valuation::Infinite => Ok(Rational::zero()),
        Valuation::Finite(v) => {
            let power = BigInt::from(p).pow(v.unsigned_abs() as u32);
            Ok(if v >= 0 {
                Rational::new(BigInt::one(), power)
            } else {
                Rational::from_integer(power)
            })
        }
    }
}

/// Checks `|r + s|_p <= max(|r|_p, |s|_p)`.
pub fn ultrametric_check(r: &Rational, s: &Rational, p: u64) -> Result<bool> {
    let sum = padic_abs(&(r + s), p)?;
    let bound = padic_abs(r, p)?.max(padic_abs(s, p)?);
    Ok(sum <= bound)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelArithmetic {
    /// Level of `χ ∘ N_{E/F}` for a level-`n` character `χ` of `F^×`.
    pub composed_level: i64,
    /// `k` with `Tr_{E/F}(p_E^{1+n}) = p_F^k`.
    pub trace_ideal_exponent: i64,
}

/// Levels across a quadratic extension with ramification index `e`.
pub fn extension_level_arithmetic(n: i64, e: u32) -> Result<LevelArithmetic> {
    if !(1..=2).contains(&e) {
        return Err(Error::BadRamification(e));
    }
    if n < 1 {
        return Err(Error::LevelOutOfRange(n));
    }
    let e = i64::from(e);
    Ok(LevelArithmetic {
        composed_level: e * n,
        trace_ideal_exponent: 1 + Integer::div_floor(&n, &e),
    })
}

/// Number of quadratic extensions of `Q_p`: 3 for odd `p`, 7 for `p = 2`.
pub fn quadratic_extension_count(p: u64) -> Result<u32> {
    check_prime(p)?;
    Ok(if p == 2 { 7 } else { 3 })
}
