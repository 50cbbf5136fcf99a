//! Independent oracles shared by the integration suites. Nothing here calls
//! the code path it is used to check.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashSet};
use std::path::PathBuf;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use vndim::fuchsian::FuchsianSignature;

pub fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("reading {}: {e}", path.display()))
}

/// Runs the CLI in-process and returns (exit code, stdout, stderr).
pub fn cli(args: &[&str]) -> (u8, String, String) {
    let out = vndim::cli::run(std::iter::once("vndim").chain(args.iter().copied()));
    (out.code, out.stdout, out.stderr)
}

/// Length histogram of the infinite dihedral group, by expanding every
/// string over two involutions up to length `max_len`, cancelling `xx`, and
/// deduplicating.
pub fn free_product_histogram(max_len: usize) -> BTreeMap<usize, usize> {
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut frontier: Vec<Vec<u8>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * 2);
        for s in &frontier {
            for letter in [0u8, 1] {
                let mut t = s.clone();
                t.push(letter);
                next.push(t);
            }
        }
        for s in &frontier {
            seen.insert(cancel(s));
        }
        frontier = next;
    }
    for s in &frontier {
        seen.insert(cancel(s));
    }
    let mut hist = BTreeMap::new();
    for w in seen {
        *hist.entry(w.len()).or_insert(0) += 1;
    }
    hist
}

fn cancel(s: &[u8]) -> Vec<u8> {
    let mut out: Vec<u8> = Vec::new();
    for &c in s {
        if out.last() == Some(&c) {
            out.pop();
        } else {
            out.push(c);
        }
    }
    out
}

/// Number of monomials of total weight `k` in generators of the given weights.
pub fn monomial_count(k: i64, weights: &[i64]) -> u64 {
    match weights.split_first() {
        None => u64::from(k == 0),
        Some((&w, rest)) => (0..=k / w).map(|a| monomial_count(k - a * w, rest)).sum(),
    }
}

/// dim S_k(SL(2,Z)) from M_* = C[E4, E6] and one cusp.
pub fn classical_level_one_cusp_dim(k: i64) -> u64 {
    if k < 4 || k % 2 != 0 {
        return 0;
    }
    monomial_count(k, &[4, 6]).saturating_sub(1)
}

/// dim S_k(Γ0(4)) from M_* = C[f, g] with two weight-2 generators and three cusps.
pub fn classical_gamma0_4_cusp_dim(k: i64) -> u64 {
    if k < 4 || k % 2 != 0 {
        return 0;
    }
    monomial_count(k, &[2, 2]) - 3
}

pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(big(n), big(d))
}

/// Random hyperbolic signature with small genus, a few elliptic points and
/// a few cusps.
pub fn random_signature(rng: &mut impl Rng) -> FuchsianSignature {
    loop {
        let genus = rng.random_range(0..4);
        let count = rng.random_range(0..5);
        let orders = (0..count).map(|_| rng.random_range(2..12)).collect();
        let cusps = rng.random_range(0..5);
        if let Ok(sig) = FuchsianSignature::new(genus, orders, cusps) {
            return sig;
        }
    }
}

pub fn random_positive_rational(rng: &mut impl Rng) -> BigRational {
    frac(rng.random_range(1..10_000), rng.random_range(1..10_000))
}

pub fn random_rational(rng: &mut impl Rng) -> BigRational {
    let num: i64 = rng.random_range(-1_000_000..1_000_000);
    let den: i64 = rng.random_range(1..1_000_000);
    frac(num, den)
}
