use std::fmt;
use std::str::FromStr;

use super::field::{GaloisField, QuadraticExtension};
use super::{PrimePower, ENUMERATION_GUARD};
use crate::error::{Error, Result};

/// The character `θ_a` of the cyclic group `F_{q^2}^×` sending a fixed
/// generator to `exp(2πi a/(q^2-1))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CharacterIndex {
    a: u64,
    modulus: u64,
}

impl CharacterIndex {
    pub fn new(q: &PrimePower, a: u64) -> Result<Self> {
        let modulus = q.q() * q.q() - 1;
        if a >= modulus {
            return Err(Error::CharacterOutOfRange { index: a, modulus });
        }
        Ok(CharacterIndex { a, modulus })
    }

    pub fn index(&self) -> u64 {
        self.a
    }
}

/// A character `ν` of `F_q^×`, given by its index `b` modulo `q-1` relative
/// to the generator `g^{q+1}` induced from the generator `g` of `F_{q^2}^×`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NuIndex {
    Trivial,
    /// The unique character of order 2.
    Sign,
    Index(u64),
}

impl NuIndex {
    /// Residue of the index modulo `q-1`.
    pub fn resolve(&self, q: &PrimePower) -> Result<u64> {
        let modulus = q.q() - 1;
        match *self {
            NuIndex::Trivial => Ok(0),
            NuIndex::Sign => Ok(modulus / 2),
            NuIndex::Index(b) if b < modulus => Ok(b),
            NuIndex::Index(b) => Err(Error::CharacterOutOfRange { index: b, modulus }),
        }
    }
}

impl FromStr for NuIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trivial" => Ok(NuIndex::Trivial),
            "sign" => Ok(NuIndex::Sign),
            _ => s.parse().map(NuIndex::Index).map_err(|_| {
                Error::Parse(format!(
                    "bad character {s:?}; use trivial, sign or an index"
                ))
            }),
        }
    }
}

impl fmt::Display for NuIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NuIndex::Trivial => f.write_str("trivial"),
            NuIndex::Sign => f.write_str("sign"),
            NuIndex::Index(b) => write!(f, "{b}"),
        }
    }
}

/// `θ^q ≠ θ`, i.e. `q a ≢ a (mod q^2-1)`.
pub fn is_regular(q: &PrimePower, chi: &CharacterIndex) -> bool {
    (q.q() * chi.a) % chi.modulus != chi.a
}

/// Number of regular characters of `F_{q^2}^×` restricting to `ν` on
/// `F_q^×`: `q-1` if `ν^{(q-1)/2}` is trivial, `q+1` otherwise.
pub fn count_regular_characters(q: &PrimePower, nu: NuIndex) -> Result<u64> {
    let b = nu.resolve(q)?;
    let order = q.q() - 1;
    let squared_trivial = (b * (order / 2)).is_multiple_of(order);
    Ok(if squared_trivial {
        q.q() - 1
    } else {
        q.q() + 1
    })
}

/// Exhaustive count backing [`count_regular_characters`].
///
/// Builds `F_{q^2}` explicitly, takes discrete logarithms of `F_q^×` with
/// respect to a generator, and compares `θ_a` with `ν` element by element.
/// Regularity is tested as `θ^q ≠ θ` on every group element.
pub fn brute_force_regular_characters(q: &PrimePower, nu: NuIndex) -> Result<u64> {
    if q.q() > ENUMERATION_GUARD {
        return Err(Error::TooLarge {
            q: q.q(),
            guard: ENUMERATION_GUARD,
        });
    }
    let b = nu.resolve(q)?;
    let ext = QuadraticExtension::new(GaloisField::new(q));
    let group = ext.order() - 1;
    let generator = ext.generator();

    // discrete logs of the base field's units
    let mut base_logs = Vec::new();
    let mut power = 1;
    for k in 0..group {
        if ext.is_in_base(power) {
            base_logs.push(k);
        }
        power = ext.mul(power, generator);
    }
    assert_eq!(base_logs.len() as u64, q.q() - 1, "F_q^× has q-1 elements");
    assert!(
        base_logs.iter().all(|k| k % (q.q() + 1) == 0),
        "F_q^× is generated by g^(q+1)"
    );

    let count = (0..group)
        .filter(|&a| (0..group).any(|k| (a * k * q.q()) % group != (a * k) % group))
        .filter(|&a| {
            base_logs.iter().all(|&k| {
                let j = k / (q.q() + 1);
                (a * k) % group == (b * j * (q.q() + 1)) % group
            })
        })
        .count();
    Ok(count as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(q: u64) -> PrimePower {
        PrimePower::new(q).unwrap()
    }

    #[test]
    fn regularity() {
        let q3 = pp(3);
        let chi = |a| CharacterIndex::new(&q3, a).unwrap();
        assert!(!is_regular(&q3, &chi(0)));
        assert!(is_regular(&q3, &chi(1)));
        assert!(!is_regular(&q3, &chi(4)));
        assert_eq!(
            CharacterIndex::new(&q3, 8),
            Err(Error::CharacterOutOfRange {
                index: 8,
                modulus: 8
            })
        );
    }

    #[test]
    fn closed_form_counts() {
        assert_eq!(count_regular_characters(&pp(3), NuIndex::Trivial), Ok(2));
        assert_eq!(count_regular_characters(&pp(3), NuIndex::Sign), Ok(4));
        assert_eq!(count_regular_characters(&pp(5), NuIndex::Trivial), Ok(4));
        assert_eq!(
            count_regular_characters(&pp(5), NuIndex::Index(4)),
            Err(Error::CharacterOutOfRange {
                index: 4,
                modulus: 4
            })
        );
    }

    #[test]
    fn brute_force_counts() {
        assert_eq!(
            brute_force_regular_characters(&pp(3), NuIndex::Trivial),
            Ok(2)
        );
        assert_eq!(brute_force_regular_characters(&pp(3), NuIndex::Sign), Ok(4));
        assert_eq!(
            brute_force_regular_characters(&pp(5), NuIndex::Trivial),
            Ok(4)
        );
        assert!(matches!(
            brute_force_regular_characters(&pp(11), NuIndex::Trivial),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn regular_sets_at_three() {
        let q3 = pp(3);
        let regular: Vec<u64> = (0..8)
            .filter(|&a| is_regular(&q3, &CharacterIndex::new(&q3, a).unwrap()))
            .collect();
        assert_eq!(regular, vec![1, 2, 3, 5, 6, 7]);
    }

    #[test]
    fn nu_parsing() {
        assert_eq!("trivial".parse(), Ok(NuIndex::Trivial));
        assert_eq!("sign".parse(), Ok(NuIndex::Sign));
        assert_eq!("3".parse(), Ok(NuIndex::Index(3)));
        assert!("x".parse::<NuIndex>().is_err());
    }
}
