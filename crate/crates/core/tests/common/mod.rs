//! Seeded random inputs shared by the integration suites.

#![allow(dead_code)]

use involutive::{Coefficient, Monomial, MonomialOrder, Polynomial};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_monomial(rng: &mut ChaCha8Rng, nvars: usize, max_degree: u32) -> Monomial {
    let degree = rng.gen_range(0..=max_degree);
    let mut exps = vec![0u32; nvars];
    for _ in 0..degree {
        exps[rng.gen_range(0..nvars)] += 1;
    }
    Monomial::new(exps)
}

/// Nonzero integer in `[-bound, bound]`.
pub fn random_coefficient(rng: &mut ChaCha8Rng, bound: i64) -> Coefficient {
    loop {
        let c = rng.gen_range(-bound..=bound);
        if c != 0 {
            return Coefficient::from_integer(BigInt::from(c));
        }
    }
}

pub fn random_polynomial(
    rng: &mut ChaCha8Rng,
    nvars: usize,
    order: MonomialOrder,
    max_degree: u32,
    max_terms: usize,
    coeff_bound: i64,
) -> Polynomial {
    let terms = rng.gen_range(1..=max_terms);
    let terms: Vec<(Coefficient, Monomial)> = (0..terms)
        .map(|_| {
            (
                random_coefficient(rng, coeff_bound),
                random_monomial(rng, nvars, max_degree),
            )
        })
        .collect();
    Polynomial::from_terms(nvars, order, terms)
}

/// A generating set with at least one nonzero member.
pub fn random_generators(
    rng: &mut ChaCha8Rng,
    nvars: usize,
    order: MonomialOrder,
    max_generators: usize,
    max_degree: u32,
    coeff_bound: i64,
) -> Vec<Polynomial> {
    loop {
        let count = rng.gen_range(1..=max_generators);
        let set: Vec<Polynomial> = (0..count)
            .map(|_| random_polynomial(rng, nvars, order, max_degree, 3, coeff_bound))
            .collect();
        if set.iter().any(|f| !f.is_zero()) {
            return set;
        }
    }
}

pub fn random_order(rng: &mut ChaCha8Rng) -> MonomialOrder {
    *MonomialOrder::ALL.choose(rng).expect("orders")
}

/// Random monomial set of size `1..=max_size`, duplicates removed.
pub fn random_monomial_set(
    rng: &mut ChaCha8Rng,
    nvars: usize,
    max_size: usize,
    max_degree: u32,
) -> Vec<Monomial> {
    let size = rng.gen_range(1..=max_size);
    let mut out: Vec<Monomial> = Vec::new();
    for _ in 0..size {
        let m = random_monomial(rng, nvars, max_degree);
        if !out.contains(&m) {
            out.push(m);
        }
    }
    out
}

/// A second generating set of the same ideal: each new member is a random
/// rational combination of the old ones, through a unit lower-triangular
/// matrix composed with a permutation, so the combination is invertible.
pub fn recombine(rng: &mut ChaCha8Rng, set: &[Polynomial]) -> Vec<Polynomial> {
    let mut perm: Vec<usize> = (0..set.len()).collect();
    perm.shuffle(rng);
    let mut out = Vec::with_capacity(set.len());
    for (row, &p) in perm.iter().enumerate() {
        let scale = Coefficient::new(
            BigInt::from(rng.gen_range(1..=4) * if rng.gen_bool(0.5) { 1 } else { -1 }),
            BigInt::from(rng.gen_range(1..=3)),
        );
        let mut f = set[p].scale(&scale);
        for &q in &perm[..row] {
            let c = Coefficient::new(
                BigInt::from(rng.gen_range(-3..=3)),
                BigInt::from(rng.gen_range(1..=2)),
            );
            let shift = Monomial::one(set[q].nvars());
            f = &f + &set[q].mul_term(&c, &shift);
        }
        out.push(f);
    }
    out
}

/// Probe polynomial for normal-form comparisons.
pub fn probe(rng: &mut ChaCha8Rng, nvars: usize, order: MonomialOrder) -> Polynomial {
    random_polynomial(rng, nvars, order, 5, 5, 9)
}
