//! The infinite dihedral group `W_0 = <w, w' | w^2 = w'^2 = 1>` and the
//! length series `2 Σ_{x ∈ W_0} q^{-l(x)}` that controls square-integrability
//! of the Steinberg representation.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::finite_field::PrimePower;
use crate::scalar::{int, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeylLetter {
    W,
    WPrime,
}

impl WeylLetter {
    pub fn other(self) -> WeylLetter {
        match self {
            WeylLetter::W => WeylLetter::WPrime,
            WeylLetter::WPrime => WeylLetter::W,
        }
    }
}

impl fmt::Display for WeylLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeylLetter::W => "w",
            WeylLetter::WPrime => "w'",
        })
    }
}

/// An alternating word in `w, w'`; its letter count is its length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedWeylWord {
    letters: Vec<WeylLetter>,
}

impl ReducedWeylWord {
    pub fn identity() -> Self {
        ReducedWeylWord {
            letters: Vec::new(),
        }
    }

    /// The alternating word of the given length starting with `first`.
    pub fn alternating(first: WeylLetter, length: usize) -> Self {
        let letters = std::iter::successors(Some(first), |l| Some(l.other()))
            .take(length)
            .collect();
        ReducedWeylWord { letters }
    }

    /// Cancels adjacent equal letters until the word is reduced.
    pub fn reduce(word: &[WeylLetter]) -> Self {
        let mut letters: Vec<WeylLetter> = Vec::with_capacity(word.len());
        for &l in word {
            if letters.last() == Some(&l) {
                letters.pop();
            } else {
                letters.push(l);
            }
        }
        ReducedWeylWord { letters }
    }

    pub fn letters(&self) -> &[WeylLetter] {
        &self.letters
    }

    pub fn length(&self) -> usize {
        self.letters.len()
    }
}

impl fmt::Display for ReducedWeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// All elements of `W_0` of length at most `max_length`, by length, `w` first.
pub fn weyl_enumerate(max_length: usize) -> Vec<ReducedWeylWord> {
    let mut words = vec![ReducedWeylWord::identity()];
    for len in 1..=max_length {
        words.push(ReducedWeylWord::alternating(WeylLetter::W, len));
        words.push(ReducedWeylWord::alternating(WeylLetter::WPrime, len));
    }
    words
}

/// `2 Σ_{l(x) <= L} q^{-l(x)} = 2(1 + 2 Σ_{k=1}^{L} q^{-k})`.
pub fn weyl_partial_sum(q: &PrimePower, max_length: usize) -> Rational {
    let q = BigInt::from(q.q());
    let mut term = Rational::one();
    let mut sum = Rational::one();
    for _ in 0..max_length {
        term /= &q;
        sum += &term * int(2);
    }
    sum * int(2)
}

/// The full series `2(q+1)/(q-1)`.
pub fn weyl_closed_form(q: &PrimePower) -> Rational {
    let q = q.q() as i64;
    int(2) * Rational::new(BigInt::from(q + 1), BigInt::from(q - 1))
}
