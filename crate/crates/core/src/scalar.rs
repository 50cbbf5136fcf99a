//! Exact scalars of the form `r * pi^e` with `r` rational and `e` in `-1..=1`.
//!
//! Every covolume, formal dimension and von Neumann dimension in this crate is
//! one of these. Rationals are arbitrary precision and always stored reduced.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Reduced arbitrary-precision fraction with positive denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for building a small rational constant.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

const MIN_EXP: i32 = -1;
const MAX_EXP: i32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PiRational {
    coeff: Rational,
    pi_exp: i8,
}

impl PiRational {
    pub fn new(coeff: Rational, pi_exp: i32) -> Result<Self> {
        if !(MIN_EXP..=MAX_EXP).contains(&pi_exp) {
            return Err(Error::ExponentOverflow(pi_exp));
        }
        let pi_exp = if coeff.is_zero() { 0 } else { pi_exp as i8 };
        Ok(PiRational { coeff, pi_exp })
    }

    pub fn rational(coeff: Rational) -> Self {
        PiRational { coeff, pi_exp: 0 }
    }

    /// `coeff * pi`.
    pub fn times_pi(coeff: Rational) -> Self {
        Self::new(coeff, 1).expect("exponent 1 is in range")
    }

    /// `coeff / pi`.
    pub fn over_pi(coeff: Rational) -> Self {
        Self::new(coeff, -1).expect("exponent -1 is in range")
    }

    pub fn zero() -> Self {
        Self::rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn pi_exp(&self) -> i8 {
        self.pi_exp
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// The rational value when no power of pi is present.
    pub fn to_rational(&self) -> Result<Rational> {
        if self.pi_exp == 0 {
            Ok(self.coeff.clone())
        } else {
            Err(Error::NotRational(self.pi_exp))
        }
    }

    pub fn mul(&self, other: &PiRational) -> Result<PiRational> {
        let coeff = &self.coeff * &other.coeff;
        if coeff.is_zero() {
            return Ok(Self::zero());
        }
        Self::new(coeff, i32::from(self.pi_exp) + i32::from(other.pi_exp))
    }

    pub fn recip(&self) -> Result<PiRational> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.coeff.recip(), -i32::from(self.pi_exp))
    }

    pub fn div(&self, other: &PiRational) -> Result<PiRational> {
        self.mul(&other.recip()?)
    }

    /// Multiplies the coefficient by a rational, leaving the pi exponent alone.
    pub fn scale(&self, factor: &Rational) -> PiRational {
        let coeff = &self.coeff * factor;
        if coeff.is_zero() {
            Self::zero()
        } else {
            PiRational {
                coeff,
                pi_exp: self.pi_exp,
            }
        }
    }

    /// Orders two values exactly. Only like powers of pi are comparable.
    pub fn compare(&self, other: &PiRational) -> Result<Ordering> {
        // zero is canonicalised to exponent 0, but it still sits below every
        // positive multiple of pi and above every negative one
        if self.is_zero() || other.is_zero() || self.pi_exp == other.pi_exp {
            return Ok(self.coeff.cmp(&other.coeff));
        }
        Err(Error::IncomparableExponents {
            left: self.pi_exp,
            right: other.pi_exp,
        })
    }

    /// Renders with ASCII `*pi` instead of `·π`.
    pub fn to_ascii(&self) -> String {
        self.render("*", "pi")
    }

    fn render(&self, dot: &str, pi: &str) -> String {
        let num = self.coeff.numer();
        let den = self.coeff.denom();
        let sign = if num.is_negative() { "-" } else { "" };
        let num = num.abs();
        match self.pi_exp {
            0 => self.coeff.to_string(),
            1 => match (num.is_one(), den.is_one()) {
                (true, true) => format!("{sign}{pi}"),
                (false, true) => format!("{sign}{num}{dot}{pi}"),
                _ => format!("{sign}{num}/{den}{dot}{pi}"),
            },
            _ => {
                if den.is_one() {
                    format!("{sign}{num}/{pi}")
                } else {
                    format!("{sign}{num}/({den}{dot}{pi})")
                }
            }
        }
    }
}

impl From<Rational> for PiRational {
    fn from(r: Rational) -> Self {
        Self::rational(r)
    }
}

impl fmt::Display for PiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("·", "π"))
    }
}

fn json_int(n: &BigInt) -> serde_json::Number {
    serde_json::Number::from_str(&n.to_string()).expect("integers are valid JSON numbers")
}

impl Serialize for PiRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("PiRational", 3)?;
        s.serialize_field("num", &json_int(self.coeff.numer()))?;
        s.serialize_field("den", &json_int(self.coeff.denom()))?;
        s.serialize_field("pi_exp", &self.pi_exp)?;
        s.end()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPiRational {
    num: serde_json::Number,
    den: serde_json::Number,
    pi_exp: i32,
}

impl<'de> Deserialize<'de> for PiRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawPiRational::deserialize(deserializer)?;
        let parse = |n: &serde_json::Number| {
            BigInt::from_str(&n.to_string())
                .map_err(|_| de::Error::custom(format!("{n} is not an integer")))
        };
        let num = parse(&raw.num)?;
        let den = parse(&raw.den)?;
        if !den.is_positive() {
            return Err(de::Error::custom("den must be positive"));
        }
        PiRational::new(Rational::new(num, den), raw.pi_exp).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discrete_series_times_covolume() {
        let d5 = PiRational::over_pi(rat(5, 4));
        let vol = PiRational::times_pi(int(2));
        assert_eq!(d5.mul(&vol).unwrap(), PiRational::rational(rat(5, 2)));
    }

    #[test]
    fn identity_and_hand_product() {
        let x = PiRational::over_pi(rat(7, 12));
        assert_eq!(x.mul(&PiRational::one()).unwrap(), x);
        let a = PiRational::over_pi(rat(3, 4));
        let b = PiRational::times_pi(rat(1, 3));
        assert_eq!(a.mul(&b).unwrap(), PiRational::rational(rat(1, 4)));
    }

    #[test]
    fn exponent_overflow() {
        let pi = PiRational::times_pi(int(1));
        assert_eq!(pi.mul(&pi), Err(Error::ExponentOverflow(2)));
        let zero = PiRational::zero();
        assert_eq!(pi.mul(&zero).unwrap(), zero);
        assert_eq!(PiRational::new(int(1), 3), Err(Error::ExponentOverflow(3)));
    }

    #[test]
    fn zero_is_canonical() {
        let z = PiRational::new(int(0), 1).unwrap();
        assert_eq!(z.pi_exp(), 0);
        assert_eq!(z, PiRational::zero());
    }

    #[test]
    fn compare_like_terms() {
        let two_pi = PiRational::times_pi(int(2));
        let four_pi = PiRational::times_pi(int(4));
        assert_eq!(two_pi.compare(&four_pi), Ok(Ordering::Less));
        let q = PiRational::rational(rat(1, 4));
        assert_eq!(q.compare(&q.clone()), Ok(Ordering::Equal));
        let pi = PiRational::times_pi(int(1));
        assert_eq!(
            pi.compare(&PiRational::rational(int(2))),
            Err(Error::IncomparableExponents { left: 1, right: 0 })
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(PiRational::times_pi(rat(1, 3)).to_string(), "1/3·π");
        assert_eq!(PiRational::times_pi(int(2)).to_string(), "2·π");
        assert_eq!(PiRational::times_pi(int(1)).to_string(), "π");
        assert_eq!(PiRational::over_pi(rat(5, 4)).to_string(), "5/(4·π)");
        assert_eq!(PiRational::over_pi(int(3)).to_string(), "3/π");
        assert_eq!(PiRational::rational(rat(-5, 2)).to_string(), "-5/2");
        assert_eq!(PiRational::over_pi(rat(1, 4)).to_ascii(), "1/(4*pi)");
        assert_eq!(PiRational::times_pi(rat(-3, 5)).to_ascii(), "-3/5*pi");
    }

    #[test]
    fn json_shape() {
        let v = PiRational::rational(rat(5, 2));
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            r#"{"num":5,"den":2,"pi_exp":0}"#
        );
        let big = PiRational::over_pi(Rational::new(BigInt::from(1), BigInt::from(3).pow(60)));
        let s = serde_json::to_string(&big).unwrap();
        assert_eq!(serde_json::from_str::<PiRational>(&s).unwrap(), big);
    }

    #[test]
    fn json_rejects_bad_input() {
        assert!(serde_json::from_str::<PiRational>(r#"{"num":1,"den":0,"pi_exp":0}"#).is_err());
        assert!(serde_json::from_str::<PiRational>(r#"{"num":1,"den":2,"pi_exp":2}"#).is_err());
        assert!(serde_json::from_str::<PiRational>(r#"{"num":1.5,"den":2,"pi_exp":0}"#).is_err());
        // unreduced input is reduced on the way in
        let v: PiRational = serde_json::from_str(r#"{"num":4,"den":8,"pi_exp":1}"#).unwrap();
        assert_eq!(v, PiRational::times_pi(rat(1, 2)));
    }
}
