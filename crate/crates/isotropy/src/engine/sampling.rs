//! Seeded draws of small exact entries. Every sampler takes the generator by
//! reference so a single seed reproduces a whole run.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use crate::exact::{rank, ExactMatrix, GaussianRational as S};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Real part p/q with |p| ≤ 3, q ∈ {1, 2}; the imaginary part is zero half the
/// time so most samples stay real.
pub fn scalar(rng: &mut impl Rng) -> S {
    let re = S::ratio(rng.gen_range(-3..=3), rng.gen_range(1..=2));
    if rng.gen_bool(0.5) {
        re
    } else {
        &re + &(&S::i() * &S::ratio(rng.gen_range(-2..=2), rng.gen_range(1..=2)))
    }
}

pub fn integer(rng: &mut impl Rng) -> S {
    S::int(rng.gen_range(-2..=2))
}

pub fn matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> ExactMatrix {
    ExactMatrix::from_fn(rows, cols, |_, _| scalar(rng))
}

/// M^T = (−1)^k M
pub fn parity_matrix(rng: &mut impl Rng, n: usize, k: i64) -> ExactMatrix {
    let skew = k.rem_euclid(2) == 1;
    let mut m = ExactMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            if i == j {
                if !skew {
                    m[(i, i)] = scalar(rng);
                }
                continue;
            }
            let v = scalar(rng);
            m[(j, i)] = if skew { -&v } else { v.clone() };
            m[(i, j)] = v;
        }
    }
    m
}

pub fn nonsingular(rng: &mut impl Rng, n: usize) -> ExactMatrix {
    loop {
        let m = matrix(rng, n, n);
        if rank(&m) == n {
            return m;
        }
    }
}

/// A nonsingular matrix of the given parity; skew ones need even size.
pub fn nonsingular_parity(rng: &mut impl Rng, n: usize, k: i64) -> ExactMatrix {
    assert!(k.rem_euclid(2) == 0 || n % 2 == 0, "odd skew matrices are singular");
    loop {
        let m = parity_matrix(rng, n, k);
        if rank(&m) == n {
            return m;
        }
    }
}
