//! Finite structure over `F_q`, `q` odd: group orders of `GL(2, F_q)` and its
//! Borel subgroup, characters of `F_{q^2}^×`, and the dimensions of the
//! principal series, cuspidal and Steinberg representations.
//!
//! Every closed form here has a brute-force counterpart that enumerates an
//! explicit model of the field.

mod characters;
pub mod field;

pub use characters::{
    brute_force_regular_characters, count_regular_characters, is_regular, CharacterIndex, NuIndex,
};

use std::fmt;

use crate::error::{Error, Result};
use field::{GaloisField, QuadraticExtension};

/// Largest `q` the exhaustive scans accept.
pub const ENUMERATION_GUARD: u64 = 9;

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// `q = p^f` with `p` an odd prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimePower {
    p: u64,
    f: u32,
    q: u64,
}

impl PrimePower {
    pub fn new(q: u64) -> Result<Self> {
        let p = (2..=q)
            .find(|d| q.is_multiple_of(*d))
            .ok_or(Error::NotPrimePower(q))?;
        let mut rest = q;
        let mut f = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            f += 1;
        }
        if rest != 1 {
            return Err(Error::NotPrimePower(q));
        }
        if p == 2 {
            return Err(Error::EvenResidue(q));
        }
        Ok(PrimePower { p, f, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_prime(&self) -> bool {
        self.f == 1
    }

    fn guard(&self, guard: u64) -> Result<()> {
        if self.q > guard {
            Err(Error::TooLarge { q: self.q, guard })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.q)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupOrders {
    pub gl2_order: u64,
    pub borel_order: u64,
    pub borel_index: u64,
}

/// `|GL(2,F_q)| = (q^2-1)(q^2-q)`, `|B_q| = q(q-1)^2`, index `q+1`.
pub fn group_orders(q: &PrimePower) -> GroupOrders {
    let q = q.q();
    let gl2_order = (q * q - 1) * (q * q - q);
    let borel_order = q * (q - 1) * (q - 1);
    GroupOrders {
        gl2_order,
        borel_order,
        borel_index: gl2_order / borel_order,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountedOrders {
    pub counted_order: u64,
    pub counted_borel: u64,
}

/// Counts invertible and invertible upper-triangular 2×2 matrices over
/// `F_q` by testing the determinant of all `q^4` matrices.
pub fn enumerate_gl2(q: &PrimePower, guard: u64) -> Result<CountedOrders> {
    q.guard(guard)?;
    let f = GaloisField::new(q);
    let mut counted = CountedOrders {
        counted_order: 0,
        counted_borel: 0,
    };
    for a in f.elements() {
        for b in f.elements() {
            for c in f.elements() {
                for d in f.elements() {
                    if f.sub(f.mul(a, d), f.mul(b, c)) != 0 {
                        counted.counted_order += 1;
                        if c == 0 {
                            counted.counted_borel += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(counted)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormTraceFacts {
    pub norm_surjective: bool,
    pub trace_surjective: bool,
    pub norm_kernel_size: u64,
    /// Number of distinct `x / x^q`, `x ∈ F_{q^2}^×`.
    pub hilbert90_image_size: u64,
}

/// Enumerates `F_{q^2}` to check surjectivity of norm and trace onto `F_q`
/// and to size the kernel of the norm.
pub fn norm_trace_facts(q: &PrimePower) -> Result<NormTraceFacts> {
    q.guard(ENUMERATION_GUARD)?;
    let ext = QuadraticExtension::new(GaloisField::new(q));
    let size = q.q() as usize;
    let mut norms = vec![false; size];
    let mut traces = vec![false; size];
    let mut kernel = 0;
    let mut quotients = vec![false; ext.order() as usize];
    for z in ext.elements() {
        let t = ext.trace(z);
        assert!(ext.is_in_base(t), "trace must land in F_q");
        traces[t as usize] = true;
        if z == 0 {
            continue;
        }
        let n = ext.norm(z);
        assert!(ext.is_in_base(n), "norm must land in F_q");
        norms[n as usize] = true;
        if n == 1 {
            kernel += 1;
        }
        quotients[ext.mul(z, ext.inv(ext.conjugate(z))) as usize] = true;
    }
    Ok(NormTraceFacts {
        norm_surjective: norms[1..].iter().all(|&hit| hit) && !norms[0],
        trace_surjective: traces.iter().all(|&hit| hit),
        norm_kernel_size: kernel,
        hilbert90_image_size: quotients.iter().filter(|&&hit| hit).count() as u64,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FiniteRepDims {
    pub principal_series_dim: u64,
    pub cuspidal_dim: u64,
    pub steinberg_dim: u64,
}

/// `Ind_B^G 1` has dimension `q+1` and splits as trivial plus Steinberg;
/// cuspidal representations have dimension `q-1`.
pub fn finite_rep_dims(q: &PrimePower) -> FiniteRepDims {
    let orders = group_orders(q);
    let principal_series_dim = orders.borel_index;
    FiniteRepDims {
        principal_series_dim,
        cuspidal_dim: q.q() - 1,
        steinberg_dim: principal_series_dim - 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(q: u64) -> PrimePower {
        PrimePower::new(q).unwrap()
    }

    #[test]
    fn prime_powers() {
        assert_eq!((pp(9).p(), pp(9).f()), (3, 2));
        assert_eq!((pp(7).p(), pp(7).f()), (7, 1));
        assert_eq!(PrimePower::new(2), Err(Error::EvenResidue(2)));
        assert_eq!(PrimePower::new(8), Err(Error::EvenResidue(8)));
        assert_eq!(PrimePower::new(15), Err(Error::NotPrimePower(15)));
        assert_eq!(PrimePower::new(1), Err(Error::NotPrimePower(1)));
        assert_eq!(PrimePower::new(0), Err(Error::NotPrimePower(0)));
    }

    #[test]
    fn closed_form_orders() {
        assert_eq!(
            group_orders(&pp(3)),
            GroupOrders {
                gl2_order: 48,
                borel_order: 12,
                borel_index: 4
            }
        );
        assert_eq!(
            group_orders(&pp(5)),
            GroupOrders {
                gl2_order: 480,
                borel_order: 80,
                borel_index: 6
            }
        );
    }

    #[test]
    fn counted_orders() {
        assert_eq!(
            enumerate_gl2(&pp(3), ENUMERATION_GUARD),
            Ok(CountedOrders {
                counted_order: 48,
                counted_borel: 12
            })
        );
        assert_eq!(
            enumerate_gl2(&pp(5), ENUMERATION_GUARD)
                .unwrap()
                .counted_order,
            480
        );
        assert_eq!(
            enumerate_gl2(&pp(11), ENUMERATION_GUARD),
            Err(Error::TooLarge { q: 11, guard: 9 })
        );
    }

    #[test]
    fn norm_and_trace() {
        for (q, kernel) in [(3, 4), (5, 6), (9, 10)] {
            let facts = norm_trace_facts(&pp(q)).unwrap();
            assert!(facts.norm_surjective);
            assert!(facts.trace_surjective);
            assert_eq!(facts.norm_kernel_size, kernel);
            assert_eq!(facts.hilbert90_image_size, kernel);
        }
        assert!(matches!(
            norm_trace_facts(&pp(11)),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn representation_dimensions() {
        let dims = |q| {
            let d = finite_rep_dims(&pp(q));
            (d.principal_series_dim, d.cuspidal_dim, d.steinberg_dim)
        };
        assert_eq!(dims(3), (4, 2, 3));
        assert_eq!(dims(5), (6, 4, 5));
        assert_eq!(dims(7), (8, 6, 7));
    }
}
