//! Formal degrees of discrete series of `GL(2, Q_p)` read off through the
//! Jacquet-Langlands correspondence, with the Steinberg degree normalized to 1.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::finite_field::PrimePower;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum JLClass {
    GeneralizedSpecial,
    /// Unramified `E/Q_p`, conductor `j >= 1`.
    UnramifiedCuspidal(u64),
    /// Ramified `E/Q_p`, even conductor `j >= 2`.
    RamifiedCuspidal(u64),
}

impl JLClass {
    pub fn new_unramified(j: u64) -> Result<Self> {
        if j == 0 {
            return Err(Error::InvalidConductor);
        }
        Ok(JLClass::UnramifiedCuspidal(j))
    }

    pub fn new_ramified(j: u64) -> Result<Self> {
        if j == 0 {
            return Err(Error::InvalidConductor);
        }
        if !j.is_multiple_of(2) {
            return Err(Error::OddRamifiedConductor(j));
        }
        Ok(JLClass::RamifiedCuspidal(j))
    }

    pub fn conductor(&self) -> Option<u64> {
        match *self {
            JLClass::GeneralizedSpecial => None,
            JLClass::UnramifiedCuspidal(j) | JLClass::RamifiedCuspidal(j) => Some(j),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            JLClass::GeneralizedSpecial => "special",
            JLClass::UnramifiedCuspidal(_) => "unram",
            JLClass::RamifiedCuspidal(_) => "ram",
        }
    }
}

impl fmt::Display for JLClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.conductor() {
            None => f.write_str(self.kind()),
            Some(j) => write!(f, "{}:j={j}", self.kind()),
        }
    }
}

impl FromStr for JLClass {
    type Err = Error;

    /// `special`, `unram:j=<n>` or `ram:j=<n>`.
    fn from_str(s: &str) -> Result<Self> {
        if s == "special" {
            return Ok(JLClass::GeneralizedSpecial);
        }
        let bad = || {
            Error::Parse(format!(
                "bad class {s:?}; use special, unram:j=<n> or ram:j=<n>"
            ))
        };
        let (kind, j) = s.split_once(":j=").ok_or_else(bad)?;
        let j: u64 = j.parse().map_err(|_| bad())?;
        match kind {
            "unram" => JLClass::new_unramified(j),
            "ram" => JLClass::new_ramified(j),
            _ => Err(bad()),
        }
    }
}

/// `1`, `2p^{j-1}` or `(p+1)p^{(j-2)/2}`.
pub fn jl_formal_dim(p: &PrimePower, cls: JLClass) -> Result<BigUint> {
    if !p.is_prime() {
        return Err(Error::NotPrimeField(p.q()));
    }
    let p = BigUint::from(p.p());
    let dim = match cls {
        JLClass::GeneralizedSpecial => BigUint::from(1u32),
        JLClass::UnramifiedCuspidal(j) => {
            if j == 0 {
                return Err(Error::InvalidConductor);
            }
            p.pow((j - 1) as u32) * 2u32
        }
        JLClass::RamifiedCuspidal(j) => {
            if j == 0 {
                return Err(Error::InvalidConductor);
            }
            if j % 2 != 0 {
                return Err(Error::OddRamifiedConductor(j));
            }
            (&p + 1u32) * p.pow(((j - 2) / 2) as u32)
        }
    };
    Ok(dim)
}
