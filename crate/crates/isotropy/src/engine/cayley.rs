//! Exact samplers for the base groups {Q : Q^T B Q = B} and the real
//! admissibility test via Sylvester's law of inertia.

use num_traits::Signed;
use rand::Rng;

use crate::error::{Error, Result};
use crate::exact::{inverse, ExactMatrix, GaussianRational as S};

use super::forms::AlternatingFormPair;
use super::sampling;

/// Q = (I − W)(I + W)^{-1} for W with W^T B = −B W.
pub fn cayley_automorphism(b: &ExactMatrix, w: &ExactMatrix) -> Result<ExactMatrix> {
    if !b.is_square() || !w.is_square() || b.rows() != w.rows() {
        return Err(Error::Dimension("B and W must be square of one size".into()));
    }
    if !(&(&w.transpose() * b) + &(b * w)).is_zero() {
        return Err(Error::Structure("W is not B-skew".into()));
    }
    let i = ExactMatrix::identity(b.rows());
    let inv = inverse(&(&i + w)).map_err(|_| Error::Singular("I + W".into()))?;
    Ok(&(&i - w) * &inv)
}

/// I − 2 v v^T B / (v^T B v); a B-isometry of determinant −1 when B is symmetric.
pub fn reflection(b: &ExactMatrix, v: &ExactMatrix) -> Result<ExactMatrix> {
    let q = (&(&v.transpose() * b) * v)[(0, 0)].clone();
    if q.is_zero() {
        return Err(Error::Singular("isotropic reflection vector".into()));
    }
    let t = (&(v * &v.transpose()) * b).scale(&(&S::int(-2) / &q));
    Ok(&ExactMatrix::identity(b.rows()) + &t)
}

/// W = B^{-1} S with S skew when B is symmetric and symmetric when B is skew.
pub fn random_b_skew(rng: &mut impl Rng, b: &ExactMatrix) -> Result<ExactMatrix> {
    let k = if b.is_symmetric() { 1 } else if b.is_skew() { 0 } else {
        return Err(Error::Parity("B must be symmetric or skew".into()));
    };
    let binv = inverse(b).map_err(|_| Error::Singular("B".into()))?;
    Ok(&binv * &sampling::parity_matrix(rng, b.rows(), k))
}

/// A seeded element of the isometry group of B: a Cayley transform, composed
/// half the time with a reflection when B is symmetric so both components of
/// the orthogonal group are reached.
pub fn random_automorphism(rng: &mut impl Rng, b: &ExactMatrix) -> Result<ExactMatrix> {
    let q = loop {
        let w = random_b_skew(rng, b)?;
        match cayley_automorphism(b, &w) {
            Ok(q) => break q,
            Err(Error::Singular(_)) => continue,
            Err(e) => return Err(e),
        }
    };
    if b.is_symmetric() && rng.gen_bool(0.5) {
        loop {
            let v = sampling::matrix(rng, b.rows(), 1);
            if let Ok(r) = reflection(b, &v) {
                return Ok(&q * &r);
            }
        }
    }
    Ok(q)
}

/// (positive, negative, zero) counts of a real symmetric matrix, by
/// congruence elimination.
pub fn signature(m: &ExactMatrix) -> Result<(usize, usize, usize)> {
    if !m.is_square() || !m.is_symmetric() || !m.is_real() {
        return Err(Error::Structure("signature needs a real symmetric matrix".into()));
    }
    let n = m.rows();
    let mut a = m.clone();
    let (mut pos, mut neg) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while let Some(&i) = active.first() {
        if a[(i, i)].is_zero() {
            let Some(&j) = active.iter().find(|&&j| !a[(i, j)].is_zero()) else {
                active.remove(0);
                continue;
            };
            if !a[(j, j)].is_zero() {
                active.retain(|&x| x != j);
                active.insert(0, j);
            } else {
                // a_jj = 0, so adding row/col j to row/col i makes a_ii = 2a_ij.
                for k in 0..n {
                    let v = &a[(i, k)] + &a[(j, k)];
                    a[(i, k)] = v;
                }
                for k in 0..n {
                    let v = &a[(k, i)] + &a[(k, j)];
                    a[(k, i)] = v;
                }
            }
            continue;
        }
        let p = a[(i, i)].clone();
        if p.re.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        active.remove(0);
        for &k in &active {
            let f = &a[(k, i)] / &p;
            if f.is_zero() {
                continue;
            }
            for &l in &active {
                let v = &a[(k, l)] - &(&f * &a[(i, l)]);
                a[(k, l)] = v;
            }
            a[(k, i)] = S::zero();
            a[(i, k)] = S::zero();
        }
    }
    Ok((pos, neg, n - pos - neg))
}

/// Real solvability of C_0 = A_0^T B_0 A_0 class by class: equal inertia for
/// symmetric B_0^r; skew classes impose nothing beyond nonsingularity.
pub fn real_admissibility(forms: &AlternatingFormPair) -> Result<bool> {
    for r in 0..forms.alpha.len() {
        let (b, c) = (&forms.b[r][0], &forms.cc[r][0]);
        if !b.is_real() || !c.is_real() {
            return Err(Error::Structure(format!("class {r} has non-real data")));
        }
        if b.is_symmetric() && signature(b)? != signature(c)? {
            return Ok(false);
        }
    }
    Ok(true)
}
