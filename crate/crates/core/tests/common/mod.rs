//! Shared helpers for the integration suites: seeded random objects and naive
//! reference implementations kept structurally independent of the production
//! paths they check.

#![allow(dead_code)]

use num_complex::Complex64 as C64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dwf_core::{Dimension, DoubledFunction, Operator};

pub fn dim(d: usize) -> Dimension {
    Dimension::new(d).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_complex(rng: &mut ChaCha8Rng) -> C64 {
    C64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5)
}

pub fn random_grid(d: Dimension, rng: &mut ChaCha8Rng) -> DoubledFunction {
    DoubledFunction::from_fn(d, |_, _| random_complex(rng))
}

pub fn random_operator(d: Dimension, rng: &mut ChaCha8Rng) -> Operator {
    Operator::from_fn(d, |_, _| random_complex(rng))
}

/// Random density matrix ρ = G G† / Tr[G G†] from a Ginibre sample G.
pub fn random_density(d: Dimension, rng: &mut ChaCha8Rng) -> Operator {
    let g = random_operator(d, rng);
    let gram = g.matmul(&g.dagger());
    let trace = gram.trace().re;
    gram.scaled(C64::new(1.0 / trace, 0.0))
}

/// Tr[A† B] written as explicit index loops.
pub fn naive_hs_inner(a: &Operator, b: &Operator) -> C64 {
    let n = a.side();
    let mut acc = C64::new(0.0, 0.0);
    for r in 0..n {
        for c in 0..n {
            acc += a.get(r, c).conj() * b.get(r, c);
        }
    }
    acc
}

/// Momentum eigenstate |p_j⟩ = (1/√d) Σ_k ω_d^{j·k} |k⟩ as a column vector.
pub fn momentum_state(d: Dimension, j: i64) -> Vec<C64> {
    let n = d.get();
    let norm = 1.0 / (n as f64).sqrt();
    (0..n)
        .map(|k| {
            let angle = std::f64::consts::TAU * ((j * k as i64).rem_euclid(n as i64) as f64)
                / n as f64;
            C64::from_polar(norm, angle)
        })
        .collect()
}

/// |v⟩⟨v| for a (not necessarily normalized) vector v.
pub fn projector_onto(d: Dimension, v: &[C64]) -> Operator {
    let norm_sq: f64 = v.iter().map(|z| z.norm_sqr()).sum();
    Operator::from_fn(d, |r, c| v[r] * v[c].conj() / norm_sq)
}
