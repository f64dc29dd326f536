//! Closed-form dimensions. Half-integers show up inside the nilpotent formula,
//! so it is carried doubled.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::shape::{CaseTag, ShapeSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionVariants {
    /// Σ_r(½α_rμ_r² + Σ_{s>r}α_sμ_rμ_s) + (−1)^c Σ_{α_r odd} ½μ_r, doubled.
    pub signed_twice: i64,
    /// The same with an unconditional minus on the odd-α term, doubled.
    pub minus_variant_twice: i64,
}

impl DimensionVariants {
    pub fn signed(&self) -> i64 {
        self.signed_twice / 2
    }

    pub fn minus_variant(&self) -> i64 {
        self.minus_variant_twice / 2
    }

    pub fn agree(&self) -> bool {
        self.signed_twice == self.minus_variant_twice
    }
}

fn quadratic_twice(alpha: &[usize], mu: &[usize]) -> i64 {
    let mut total = 0i64;
    for r in 0..alpha.len() {
        let (ar, mr) = (alpha[r] as i64, mu[r] as i64);
        total += ar * mr * mr;
        for s in r + 1..alpha.len() {
            total += 2 * alpha[s] as i64 * mr * mu[s] as i64;
        }
    }
    total
}

pub fn nilpotent_dimension_variants(spec: &ShapeSpec) -> Result<DimensionVariants> {
    spec.validate()?;
    if spec.case() != CaseTag::Nilpotent {
        return Err(Error::Shape("nilpotent dimension asked for a nonzero eigenvalue".into()));
    }
    let mu = spec.mu();
    let q = quadratic_twice(&spec.alpha, &mu);
    let odd: i64 = spec
        .alpha
        .iter()
        .zip(&mu)
        .filter(|(a, _)| *a % 2 == 1)
        .map(|(_, &m)| m as i64)
        .sum();
    let sign = if spec.c == 2 { 1 } else { -1 };
    Ok(DimensionVariants {
        signed_twice: q + sign * odd,
        minus_variant_twice: q - odd,
    })
}

/// Σ_r m_r(α_r m_r + 2 Σ_{s>r} α_s m_s), which is the doubled quadratic part over m.
pub fn nonzero_dimension(spec: &ShapeSpec) -> Result<usize> {
    spec.validate()?;
    if spec.case() != CaseTag::NonzeroPair {
        return Err(Error::Shape("nonzero-eigenvalue dimension needs λ ≠ 0".into()));
    }
    Ok(quadratic_twice(&spec.alpha, &spec.m) as usize)
}

/// The closed form returned for a spec. For nilpotent specs this is the
/// (−1)^c variant; the brute-force sweep confirms it and rejects the
/// unconditional-minus variant for c = 2.
pub fn centralizer_dimension(spec: &ShapeSpec) -> Result<usize> {
    match spec.case() {
        CaseTag::Nilpotent => Ok(nilpotent_dimension_variants(spec)?.signed() as usize),
        CaseTag::NonzeroPair => nonzero_dimension(spec),
        CaseTag::Mixed => Err(Error::Shape("a single spec cannot be mixed".into())),
    }
}

fn sym(m: usize) -> usize {
    m * (m + 1) / 2
}

fn skew(m: usize) -> usize {
    m * (m.saturating_sub(1)) / 2
}

/// Count of free parameters of the solver for 𝒞 = ℬ (below-diagonal blocks,
/// the isometry group of each B_0^r, and the Z_j^r), done independently of
/// the closed forms.
pub fn parameter_count(c: u8, alpha: &[usize], mu: &[usize]) -> usize {
    let mut total = 0;
    for r in 0..alpha.len() {
        let m = mu[r];
        for s in 0..r {
            total += alpha[r].min(alpha[s]) * m * mu[s];
        }
        // B_0^r symmetric for α_r + c even: orthogonal group, else symplectic.
        total += if (alpha[r] + c as usize) % 2 == 0 { skew(m) } else { sym(m) };
        for j in 1..alpha[r] {
            // Z_j symmetric when α_r − j + c + 1 is even.
            total += if (alpha[r] + c as usize + 1 - j) % 2 == 0 { sym(m) } else { skew(m) };
        }
    }
    total
}
