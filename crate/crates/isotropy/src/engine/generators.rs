//! Unipotent generators of the solution group of 𝒞 = ℬ = 𝓕𝒳^T𝓕ℬ𝒳 for
//! diagonal ℬ = ⊕_r T_a(B_r, 0, …, 0): the diagonal family 𝒲 built from
//! parity-constrained Z_j, and the off-diagonal family coupling classes p < t
//! through one coefficient F, with Catalan-type corrections on the diagonal.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::commutant::BlockToeplitzMatrix;
use crate::error::{Error, Result};
use crate::exact::{inverse, ExactMatrix, GaussianRational as S};
use crate::normal_form::target_block;
use crate::shape::ShapeSpec;

use super::forms::{coefficient_parity, AlternatingFormPair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(k: usize) -> Self {
        if k % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

pub fn catalan_number(n: u32) -> BigInt {
    // C(n) = binom(2n, n) / (n + 1), built incrementally: C(k+1) = C(k)·2(2k+1)/(k+2).
    let mut c = BigInt::one();
    for k in 0..n {
        c = c * BigInt::from(2 * (2 * k + 1)) / BigInt::from(k + 2);
    }
    c
}

fn pow2(e: u32) -> BigInt {
    BigInt::one() << e
}

/// Closed form of the Catalan-type coefficients a_n. The odd sequence is
/// a_{2m+1} = (−1)^m C(m) / 2^{4m+3}, a_{2m} = 0 for m ≥ 1; both start at −½.
pub fn catalan_coefficient(n: u32, parity: Parity) -> BigRational {
    match parity {
        Parity::Even => BigRational::new(-catalan_number(n), pow2(2 * n + 1)),
        Parity::Odd if n == 0 => BigRational::new(BigInt::from(-1), BigInt::from(2)),
        Parity::Odd if n % 2 == 0 => BigRational::zero(),
        Parity::Odd => {
            let m = (n - 1) / 2;
            let v = BigRational::new(catalan_number(m), pow2(4 * m + 3));
            if m % 2 == 0 {
                v
            } else {
                -v
            }
        }
    }
}

/// a_0 = −½, a_n = ½(−1)^{δ+1} Σ_{j<n} (−1)^{jδ} a_j a_{n−1−j}, with δ the
/// parity of α_p − α_t.
pub fn catalan_recursive(n_max: u32, parity: Parity) -> Vec<BigRational> {
    let delta_odd = parity == Parity::Odd;
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let mut a = vec![-half.clone()];
    for n in 1..=n_max as usize {
        let mut sum = BigRational::zero();
        for j in 0..n {
            let t = &a[j] * &a[n - 1 - j];
            if delta_odd && j % 2 == 1 {
                sum -= t;
            } else {
                sum += t;
            }
        }
        let v = &half * sum;
        a.push(if delta_odd { v } else { -v });
    }
    a
}

fn diagonal_b(forms: &AlternatingFormPair, r: usize) -> Result<&ExactMatrix> {
    if !forms.is_diagonal() {
        return Err(Error::Structure("generators need 𝒞 = ℬ with only B_0 nonzero".into()));
    }
    forms
        .b
        .get(r)
        .map(|l| &l[0])
        .ok_or_else(|| Error::Dimension(format!("no class {r}")))
}

/// 𝒲 with block r = T(I, W_1, …, W_{α_r−1}),
/// W_j = B_r^{-1}(Z_j − ½ Σ_{k=1}^{j−1} (−1)^k W_k^T B_r W_{j−k}),
/// and the identity elsewhere.
pub fn diagonal_unipotent(
    forms: &AlternatingFormPair,
    r: usize,
    z: &[ExactMatrix],
) -> Result<BlockToeplitzMatrix> {
    let b = diagonal_b(forms, r)?;
    let (a, m) = (forms.alpha[r], forms.mu[r]);
    if z.len() != a - 1 {
        return Err(Error::Dimension(format!("class {r} takes {} Z matrices", a - 1)));
    }
    for (k, zj) in z.iter().enumerate() {
        if zj.rows() != m || zj.cols() != m {
            return Err(Error::Dimension(format!("Z_{} must be {m}x{m}", k + 1)));
        }
        if !zj.has_parity(coefficient_parity(forms.c, a, k + 1) + 1) {
            return Err(Error::Parity(format!("Z_{} has the wrong symmetry", k + 1)));
        }
    }
    let binv = inverse(b)?;
    let half = S::ratio(1, 2);
    let mut w: Vec<ExactMatrix> = vec![ExactMatrix::identity(m)];
    for j in 1..a {
        let mut corr = ExactMatrix::zeros(m, m);
        for k in 1..j {
            let t = &(&w[k].transpose() * b) * &w[j - k];
            corr = if k % 2 == 0 { &corr + &t } else { &corr - &t };
        }
        w.push(&binv * &(&z[j - 1] - &corr.scale(&half)));
    }
    let mut x = BlockToeplitzMatrix::identity(&forms.shape());
    for (j, wj) in w.into_iter().enumerate().skip(1) {
        x.set_coeff(r, r, j, wj)?;
    }
    Ok(x)
}

/// The off-diagonal generator for classes p < t and shift k: coefficient k of
/// block (t, p) is F, coefficient k of block (p, t) is (−1)^{k+1} B_p^{-1} F^T B_t,
/// and with L = 2k + α_p − α_t the diagonal blocks carry, for n ≥ 1,
///   V^p_{nL} = (−1)^{kn} a_{n−1} B_p^{-1} (F^T B_t F B_p^{-1})^n B_p,
///   V^t_{nL} = (−1)^{kn} a_{n−1} B_t^{-1} (B_t F B_p^{-1} F^T)^n B_t,
/// with a_n the even Catalan coefficients.
pub fn offdiagonal_unipotent(
    forms: &AlternatingFormPair,
    p: usize,
    t: usize,
    k: usize,
    f: &ExactMatrix,
) -> Result<BlockToeplitzMatrix> {
    let bp = diagonal_b(forms, p)?;
    let bt = diagonal_b(forms, t)?;
    if p >= t {
        return Err(Error::Dimension(format!("need p < t, got p={p}, t={t}")));
    }
    let (ap, at) = (forms.alpha[p], forms.alpha[t]);
    if k >= at {
        return Err(Error::Dimension(format!("shift {k} must be below α_t = {at}")));
    }
    if f.rows() != forms.mu[t] || f.cols() != forms.mu[p] {
        return Err(Error::Dimension(format!(
            "F must be {}x{}",
            forms.mu[t], forms.mu[p]
        )));
    }
    let bpi = inverse(bp)?;
    let bti = inverse(bt)?;
    let ft = f.transpose();
    let mut x = BlockToeplitzMatrix::identity(&forms.shape());
    x.set_coeff(t, p, k, f.clone())?;
    let pt = (&(&bpi * &ft) * bt).scale_int(if k % 2 == 1 { 1 } else { -1 });
    x.set_coeff(p, t, k, pt)?;
    let step = 2 * k + ap - at;
    let gp = &(&(&ft * bt) * f) * &bpi;
    let gt = &(&(bt * f) * &bpi) * &ft;
    let (mut pow_p, mut pow_t) = (gp.clone(), gt.clone());
    let mut n = 1;
    while n * step < ap {
        let sgn = if (k * n) % 2 == 0 { 1 } else { -1 };
        let a = &S::real(catalan_coefficient(n as u32 - 1, Parity::Even)) * &S::int(sgn);
        x.set_coeff(p, p, n * step, (&(&bpi * &pow_p) * bp).scale(&a))?;
        if n * step < at {
            x.set_coeff(t, t, n * step, (&(&bti * &pow_t) * bt).scale(&a))?;
        }
        pow_p = &pow_p * &gp;
        pow_t = &pow_t * &gt;
        n += 1;
    }
    Ok(x)
}

/// ℬ = 𝒞 with B_0^r the target blocks of the shape.
pub fn target_forms(spec: &ShapeSpec) -> Result<AlternatingFormPair> {
    spec.validate()?;
    let b: Vec<ExactMatrix> = (0..spec.n_blocks()).map(|r| target_block(spec, r)).collect();
    AlternatingFormPair::diagonal(spec.c, &spec.alpha, &b)
}

pub fn generator_diagonal_unipotent(
    spec: &ShapeSpec,
    r: usize,
    z: &[ExactMatrix],
) -> Result<BlockToeplitzMatrix> {
    diagonal_unipotent(&target_forms(spec)?, r, z)
}

pub fn generator_offdiagonal(
    spec: &ShapeSpec,
    p: usize,
    t: usize,
    k: usize,
    f: &ExactMatrix,
) -> Result<BlockToeplitzMatrix> {
    offdiagonal_unipotent(&target_forms(spec)?, p, t, k, f)
}

/// Basis of {Z : Z^T = (−1)^k Z} of size m.
pub fn parity_basis(m: usize, k: i64) -> Vec<ExactMatrix> {
    let skew = k.rem_euclid(2) == 1;
    let mut out = Vec::new();
    for i in 0..m {
        for j in i..m {
            if skew && i == j {
                continue;
            }
            let mut z = ExactMatrix::zeros(m, m);
            z[(i, j)] = S::one();
            if i != j {
                z[(j, i)] = if skew { S::int(-1) } else { S::one() };
            }
            out.push(z);
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GeneratorLabel {
    /// Z_j^r set to the given basis element, all other Z zero.
    Diagonal { r: usize, j: usize, index: usize },
    /// F = the (a, b) matrix unit.
    Offdiagonal { p: usize, t: usize, k: usize, a: usize, b: usize },
    /// ±λ case: coefficient j of block (r, s) of 𝒳 set to the (a, b) matrix unit.
    Coordinate { r: usize, s: usize, j: usize, a: usize, b: usize },
}

/// One generator per basis direction of the unipotent part.
pub fn unipotent_generators(
    forms: &AlternatingFormPair,
) -> Result<Vec<(GeneratorLabel, BlockToeplitzMatrix)>> {
    let mut out = Vec::new();
    let nb = forms.alpha.len();
    for r in 0..nb {
        let (a, m) = (forms.alpha[r], forms.mu[r]);
        for j in 1..a {
            for (index, zb) in parity_basis(m, coefficient_parity(forms.c, a, j) + 1)
                .into_iter()
                .enumerate()
            {
                let mut z = vec![ExactMatrix::zeros(m, m); a - 1];
                z[j - 1] = zb;
                out.push((GeneratorLabel::Diagonal { r, j, index }, diagonal_unipotent(forms, r, &z)?));
            }
        }
    }
    for p in 0..nb {
        for t in p + 1..nb {
            for k in 0..forms.alpha[t] {
                for a in 0..forms.mu[t] {
                    for b in 0..forms.mu[p] {
                        let mut f = ExactMatrix::zeros(forms.mu[t], forms.mu[p]);
                        f[(a, b)] = S::one();
                        out.push((
                            GeneratorLabel::Offdiagonal { p, t, k, a, b },
                            offdiagonal_unipotent(forms, p, t, k, &f)?,
                        ));
                    }
                }
            }
        }
    }
    Ok(out)
}
