//! Explicit polynomial-quotient models of `F_q` and `F_{q^2}`.
//!
//! Used only by the brute-force oracles. `F_q = F_p[t]/(irreducible of degree
//! f)` and `F_{q^2} = F_q[y]/(y^2 + b y + c)`, where each modulus is the
//! lexicographically smallest monic irreducible polynomial.

use super::PrimePower;

/// `F_q` with elements encoded as integers `0..q` whose base-`p` digits are
/// the polynomial coefficients, constant term first.
#[derive(Debug, Clone)]
pub struct GaloisField {
    p: u64,
    degree: u32,
    q: u64,
    /// Low-order coefficients of the monic modulus (length `degree`).
    modulus: Vec<u64>,
}

impl GaloisField {
    pub fn new(q: &PrimePower) -> Self {
        let (p, degree) = (q.p(), q.f());
        let modulus = if degree == 1 {
            vec![0]
        } else {
            smallest_irreducible(p, degree as usize)
        };
        GaloisField {
            p,
            degree,
            q: q.q(),
            modulus,
        }
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Coefficients of the modulus below the leading term, constant first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.q
    }

    fn digits(&self, mut x: u64) -> Vec<u64> {
        (0..self.degree)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    fn encode(&self, digits: &[u64]) -> u64 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let (a, b) = (self.digits(a), self.digits(b));
        let sum: Vec<u64> = a.iter().zip(&b).map(|(x, y)| (x + y) % self.p).collect();
        self.encode(&sum)
    }

    pub fn neg(&self, a: u64) -> u64 {
        let neg: Vec<u64> = self
            .digits(a)
            .iter()
            .map(|x| (self.p - x) % self.p)
            .collect();
        self.encode(&neg)
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let p = self.p;
        let n = self.degree as usize;
        let (a, b) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * n];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        // t^n = -(modulus[0] + modulus[1] t + ...)
        for top in (n..2 * n).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (k, m) in self.modulus.iter().enumerate() {
                let idx = top - n + k;
                prod[idx] = (prod[idx] + (p - c) * m) % p;
            }
        }
        prod.truncate(n);
        self.encode(&prod)
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn has_root(&self, b: u64, c: u64) -> bool {
        self.elements()
            .any(|x| self.add(self.add(self.mul(x, x), self.mul(b, x)), c) == 0)
    }
}

/// Evaluates whether the monic polynomial with low coefficients `low` has a
/// monic factor of degree `d` over `F_p`, by trial division.
fn has_factor_of_degree(p: u64, low: &[u64], d: usize) -> bool {
    let count = p.pow(d as u32);
    (0..count).any(|code| {
        let mut divisor: Vec<u64> = (0..d).map(|i| (code / p.pow(i as u32)) % p).collect();
        divisor.push(1);
        let mut rem: Vec<u64> = low.to_vec();
        rem.push(1);
        for top in (d..rem.len()).rev() {
            let c = rem[top];
            if c == 0 {
                continue;
            }
            for (k, dk) in divisor.iter().enumerate() {
                let idx = top - d + k;
                rem[idx] = (rem[idx] + (p - c) * dk) % p;
            }
        }
        rem[..d].iter().all(|&x| x == 0)
    })
}

/// Smallest monic irreducible polynomial of the given degree over `F_p`,
/// ordered lexicographically from the highest non-leading coefficient down.
fn smallest_irreducible(p: u64, degree: usize) -> Vec<u64> {
    let count = p.pow(degree as u32);
    (0..count)
        .map(|code| {
            // most significant digit of `code` is the t^{degree-1} coefficient
            (0..degree)
                .map(|i| (code / p.pow(i as u32)) % p)
                .collect::<Vec<u64>>()
        })
        .find(|low| (1..=degree / 2).all(|d| !has_factor_of_degree(p, low, d)))
        .expect("irreducible polynomials exist in every degree")
}

/// `F_{q^2} = F_q[y]/(y^2 + b y + c)`; elements are `a0 + a1 y`, encoded as
/// `a0 + q * a1`.
#[derive(Debug, Clone)]
pub struct QuadraticExtension {
    base: GaloisField,
    b: u64,
    c: u64,
}

impl QuadraticExtension {
    pub fn new(base: GaloisField) -> Self {
        let q = base.order();
        let (b, c) = (0..q)
            .flat_map(|b| (0..q).map(move |c| (b, c)))
            .find(|&(b, c)| !base.has_root(b, c))
            .expect("an irreducible quadratic exists over every finite field");
        QuadraticExtension { base, b, c }
    }

    pub fn base(&self) -> &GaloisField {
        &self.base
    }

    /// `(b, c)` of the modulus `y^2 + b y + c`.
    pub fn modulus(&self) -> (u64, u64) {
        (self.b, self.c)
    }

    pub fn order(&self) -> u64 {
        self.base.order() * self.base.order()
    }

    pub fn elements(&self) -> impl Iterator<Item = u64> {
        0..self.order()
    }

    pub fn split(&self, z: u64) -> (u64, u64) {
        (z % self.base.order(), z / self.base.order())
    }

    pub fn join(&self, a0: u64, a1: u64) -> u64 {
        a0 + self.base.order() * a1
    }

    pub fn is_in_base(&self, z: u64) -> bool {
        self.split(z).1 == 0
    }

    pub fn add(&self, x: u64, y: u64) -> u64 {
        let f = &self.base;
        let ((x0, x1), (y0, y1)) = (self.split(x), self.split(y));
        self.join(f.add(x0, y0), f.add(x1, y1))
    }

    pub fn mul(&self, x: u64, y: u64) -> u64 {
        let f = &self.base;
        let ((x0, x1), (y0, y1)) = (self.split(x), self.split(y));
        let hi = f.mul(x1, y1);
        // y^2 = -b y - c
        let lo = f.sub(f.mul(x0, y0), f.mul(self.c, hi));
        let mid = f.sub(f.add(f.mul(x0, y1), f.mul(x1, y0)), f.mul(self.b, hi));
        self.join(lo, mid)
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, z: u64) -> u64 {
        self.pow(z, self.order() - 2)
    }

    /// The Galois conjugate `z^q`.
    pub fn conjugate(&self, z: u64) -> u64 {
        self.pow(z, self.base.order())
    }

    pub fn norm(&self, z: u64) -> u64 {
        self.mul(z, self.conjugate(z))
    }

    pub fn trace(&self, z: u64) -> u64 {
        self.add(z, self.conjugate(z))
    }

    pub fn multiplicative_order(&self, z: u64) -> u64 {
        let mut acc = z;
        let mut n = 1;
        while acc != 1 {
            acc = self.mul(acc, z);
            n += 1;
        }
        n
    }

    /// Smallest (by encoding) generator of the cyclic group `F_{q^2}^×`.
    pub fn generator(&self) -> u64 {
        let target = self.order() - 1;
        (1..self.order())
            .find(|&z| self.multiplicative_order(z) == target)
            .expect("the multiplicative group of a finite field is cyclic")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(q: u64) -> GaloisField {
        GaloisField::new(&PrimePower::new(q).unwrap())
    }

    #[test]
    fn nine_elements_as_f3_mod_t2_plus_1() {
        let f9 = field(9);
        assert_eq!(f9.modulus(), &[1, 0]);
        // t * t = -1 = 2
        assert_eq!(f9.mul(3, 3), 2);
        for x in 1..9 {
            assert_eq!(f9.pow(x, 8), 1);
        }
    }

    #[test]
    fn field_axioms_small() {
        for q in [3, 5, 7, 9, 25, 27] {
            let f = field(q);
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.pow(a, q - 1), 1, "q={q} a={a}");
                }
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                }
            }
        }
    }

    #[test]
    fn quadratic_modulus_choice() {
        let f3 = QuadraticExtension::new(field(3));
        assert_eq!(f3.modulus(), (0, 1));
        let f5 = QuadraticExtension::new(field(5));
        // -2 and -3 are non-squares mod 5; x^2 + 2 is first
        assert_eq!(f5.modulus(), (0, 2));
    }

    #[test]
    fn extension_is_a_field() {
        for q in [3, 5, 9] {
            let ext = QuadraticExtension::new(field(q));
            for z in 1..ext.order() {
                assert_eq!(ext.mul(z, ext.inv(z)), 1);
            }
            let g = ext.generator();
            assert_eq!(ext.multiplicative_order(g), q * q - 1);
        }
    }
}
