use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::GaussianRational;

/// Combinatorial input: the Jordan structure (α, m) of one eigenvalue class,
/// the form type c (1: symmetric H, 2: skew H), and either the sign ε of the
/// nilpotent case or the eigenvalue λ ≠ 0 of a ±λ pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShapeSpec {
    pub c: u8,
    pub alpha: Vec<usize>,
    pub m: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<i8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<GaussianRational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseTag {
    Nilpotent,
    NonzeroPair,
    Mixed,
}

impl ShapeSpec {
    pub fn nilpotent(c: u8, alpha: &[usize], m: &[usize], epsilon: i8) -> Self {
        ShapeSpec {
            c,
            alpha: alpha.to_vec(),
            m: m.to_vec(),
            epsilon: Some(epsilon),
            lambda: None,
        }
    }

    pub fn nonzero(c: u8, alpha: &[usize], m: &[usize], lambda: GaussianRational) -> Self {
        ShapeSpec {
            c,
            alpha: alpha.to_vec(),
            m: m.to_vec(),
            epsilon: None,
            lambda: Some(lambda),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.c != 1 && self.c != 2 {
            return Err(Error::Shape(format!("c must be 1 or 2, got {}", self.c)));
        }
        if self.alpha.is_empty() {
            return Err(Error::Shape("alpha is empty".into()));
        }
        if self.alpha.len() != self.m.len() {
            return Err(Error::Shape("alpha and m differ in length".into()));
        }
        if self.alpha.iter().any(|&a| a == 0) || self.m.iter().any(|&m| m == 0) {
            return Err(Error::Shape("alpha and m entries must be positive".into()));
        }
        if self.alpha.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Shape("alpha must be strictly decreasing".into()));
        }
        match (&self.epsilon, &self.lambda) {
            (Some(e), None) if *e == 1 || *e == -1 => Ok(()),
            (Some(e), None) => Err(Error::Shape(format!("epsilon must be ±1, got {e}"))),
            (None, Some(l)) if !l.is_zero() => Ok(()),
            (None, Some(_)) => Err(Error::Shape("lambda = 0 belongs to the nilpotent case".into())),
            (Some(_), Some(_)) => Err(Error::Shape("give either epsilon or lambda, not both".into())),
            (None, None) => Err(Error::Shape("one of epsilon or lambda is required".into())),
        }
    }

    pub fn case(&self) -> CaseTag {
        if self.lambda.is_some() {
            CaseTag::NonzeroPair
        } else {
            CaseTag::Nilpotent
        }
    }

    pub fn n_blocks(&self) -> usize {
        self.alpha.len()
    }

    /// Whether block class r is a ±pair of Jordan blocks (c + α_r odd).
    pub fn is_paired(&self, r: usize) -> bool {
        (self.c as usize + self.alpha[r]) % 2 == 1
    }

    /// Multiplicities of the Jordan blocks of 𝒥(A) in the nilpotent case.
    pub fn mu(&self) -> Vec<usize> {
        (0..self.n_blocks())
            .map(|r| if self.is_paired(r) { 2 * self.m[r] } else { self.m[r] })
            .collect()
    }

    pub fn n(&self) -> usize {
        match self.case() {
            CaseTag::NonzeroPair => 2 * self.alpha.iter().zip(&self.m).map(|(a, m)| a * m).sum::<usize>(),
            _ => self.alpha.iter().zip(self.mu()).map(|(a, u)| a * u).sum(),
        }
    }
}
