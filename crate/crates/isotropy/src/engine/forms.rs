use serde::{Deserialize, Serialize};

use crate::commutant::{BlockToeplitzMatrix, CommutantShape};
use crate::error::{Error, Result};
use crate::exact::{exchange, rank, toeplitz_alternating, ExactMatrix};

/// The pair (ℬ, 𝒞) of block-diagonal alternating Toeplitz forms on 𝕋^{α,μ}:
/// ℬ = ⊕_r T_a(B_0^r, …, B_{α_r−1}^r), likewise 𝒞.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlternatingFormPair {
    pub c: u8,
    pub alpha: Vec<usize>,
    pub mu: Vec<usize>,
    pub b: Vec<Vec<ExactMatrix>>,
    #[serde(rename = "C")]
    pub cc: Vec<Vec<ExactMatrix>>,
}

/// Parity exponent of coefficient j in class r: B_j^T = (−1)^{α_r−j+c} B_j.
pub fn coefficient_parity(c: u8, alpha: usize, j: usize) -> i64 {
    alpha as i64 - j as i64 + c as i64
}

impl AlternatingFormPair {
    pub fn new(
        c: u8,
        alpha: &[usize],
        b: Vec<Vec<ExactMatrix>>,
        cc: Vec<Vec<ExactMatrix>>,
    ) -> Result<Self> {
        let mu = b
            .iter()
            .map(|list| list.first().map(|m| m.rows()).unwrap_or(0))
            .collect();
        let f = AlternatingFormPair {
            c,
            alpha: alpha.to_vec(),
            mu,
            b,
            cc,
        };
        f.validate()?;
        Ok(f)
    }

    /// 𝒞 = ℬ with B_0^r = b_r and all higher coefficients zero.
    pub fn diagonal(c: u8, alpha: &[usize], b_r: &[ExactMatrix]) -> Result<Self> {
        let b: Vec<Vec<ExactMatrix>> = alpha
            .iter()
            .zip(b_r)
            .map(|(&a, b0)| {
                let mut v = vec![b0.clone()];
                v.extend(std::iter::repeat_n(ExactMatrix::zeros(b0.rows(), b0.cols()), a - 1));
                v
            })
            .collect();
        if alpha.len() != b_r.len() {
            return Err(Error::Dimension("one B_r per block class".into()));
        }
        Self::new(c, alpha, b.clone(), b)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.alpha.len();
        if n == 0 || self.b.len() != n || self.cc.len() != n || self.mu.len() != n {
            return Err(Error::Dimension("form data does not match alpha".into()));
        }
        for r in 0..n {
            let (a, m) = (self.alpha[r], self.mu[r]);
            if m == 0 {
                return Err(Error::Dimension(format!("empty class {r}")));
            }
            for (name, list) in [("B", &self.b[r]), ("C", &self.cc[r])] {
                if list.len() != a {
                    return Err(Error::Dimension(format!("{name}^{r} needs {a} coefficients")));
                }
                for (j, m_j) in list.iter().enumerate() {
                    if m_j.rows() != m || m_j.cols() != m {
                        return Err(Error::Dimension(format!("{name}_{j}^{r} must be {m}x{m}")));
                    }
                    if !m_j.has_parity(coefficient_parity(self.c, a, j)) {
                        return Err(Error::Parity(format!("{name}_{j}^{r} has the wrong symmetry")));
                    }
                }
                if rank(&list[0]) < m {
                    return Err(Error::Singular(format!("{name}_0^{r}")));
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> CommutantShape {
        CommutantShape::new(&self.alpha, &self.mu).expect("validated")
    }

    pub fn is_diagonal(&self) -> bool {
        self.b == self.cc && self.b.iter().all(|l| l.iter().skip(1).all(ExactMatrix::is_zero))
    }

    pub fn b_dense(&self) -> ExactMatrix {
        dense(&self.b)
    }

    pub fn c_dense(&self) -> ExactMatrix {
        dense(&self.cc)
    }

    /// 𝓕 = ⊕_r E_{α_r}(I_{μ_r})
    pub fn exchange_dense(&self) -> ExactMatrix {
        let parts: Vec<ExactMatrix> = self
            .alpha
            .iter()
            .zip(&self.mu)
            .map(|(&a, &m)| exchange(a, m))
            .collect();
        ExactMatrix::direct_sum_all(&parts)
    }

    /// 𝒞 − 𝓕 𝒳^T 𝓕 ℬ 𝒳
    pub fn residual(&self, x: &BlockToeplitzMatrix) -> ExactMatrix {
        let f = self.exchange_dense();
        let xd = x.to_dense();
        let prod = &(&(&(&f * &xd.transpose()) * &f) * &self.b_dense()) * &xd;
        &self.c_dense() - &prod
    }
}

fn dense(coeffs: &[Vec<ExactMatrix>]) -> ExactMatrix {
    let parts: Vec<ExactMatrix> = coeffs
        .iter()
        .map(|l| toeplitz_alternating(l).expect("uniform blocks"))
        .collect();
    ExactMatrix::direct_sum_all(&parts)
}

/// The algorithm's free choices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreeParameterSet {
    /// For every r > s (0-based, listed in (r, s) order), A_0^{rs}, …, A_{b_rs−1}^{rs}.
    pub below: Vec<((usize, usize), Vec<ExactMatrix>)>,
    /// A_0^{rr} with C_0^r = (A_0^{rr})^T B_0^r A_0^{rr}.
    pub base: Vec<ExactMatrix>,
    /// Z_1^r, …, Z_{α_r−1}^r with (Z_j^r)^T = (−1)^{α_r−j+c+1} Z_j^r.
    pub z: Vec<Vec<ExactMatrix>>,
}

impl FreeParameterSet {
    /// Identity base, zero everything else.
    pub fn trivial(shape: &CommutantShape) -> Self {
        let n = shape.n_blocks();
        let mut below = Vec::new();
        for r in 0..n {
            for s in 0..r {
                below.push((
                    (r, s),
                    vec![ExactMatrix::zeros(shape.mu[r], shape.mu[s]); shape.b(r, s)],
                ));
            }
        }
        FreeParameterSet {
            below,
            base: shape.mu.iter().map(|&m| ExactMatrix::identity(m)).collect(),
            z: (0..n)
                .map(|r| vec![ExactMatrix::zeros(shape.mu[r], shape.mu[r]); shape.alpha[r] - 1])
                .collect(),
        }
    }

    pub fn validate(&self, forms: &AlternatingFormPair) -> Result<()> {
        let shape = forms.shape();
        let n = shape.n_blocks();
        if self.base.len() != n || self.z.len() != n {
            return Err(Error::Dimension("parameter lists do not match the shape".into()));
        }
        let expected: Vec<(usize, usize)> = (0..n).flat_map(|r| (0..r).map(move |s| (r, s))).collect();
        let got: Vec<(usize, usize)> = self.below.iter().map(|(k, _)| *k).collect();
        if expected != got {
            return Err(Error::Dimension("below-diagonal blocks must be listed in (r, s) order".into()));
        }
        for ((r, s), list) in &self.below {
            if list.len() != shape.b(*r, *s)
                || list.iter().any(|m| m.rows() != shape.mu[*r] || m.cols() != shape.mu[*s])
            {
                return Err(Error::Dimension(format!("below-diagonal block ({r},{s}) has the wrong size")));
            }
        }
        for r in 0..n {
            let a0 = &self.base[r];
            if a0.rows() != shape.mu[r] || a0.cols() != shape.mu[r] {
                return Err(Error::Dimension(format!("A_0^{r} has the wrong size")));
            }
            let lhs = &(&a0.transpose() * &forms.b[r][0]) * a0;
            if lhs != forms.cc[r][0] {
                return Err(Error::Structure(format!(
                    "base equation C_0 = A_0^T B_0 A_0 fails in class {r}"
                )));
            }
            if self.z[r].len() != shape.alpha[r] - 1 {
                return Err(Error::Dimension(format!("class {r} needs {} Z matrices", shape.alpha[r] - 1)));
            }
            for (k, z) in self.z[r].iter().enumerate() {
                let j = k + 1;
                if z.rows() != shape.mu[r] || z.cols() != shape.mu[r] {
                    return Err(Error::Dimension(format!("Z_{j}^{r} has the wrong size")));
                }
                if !z.has_parity(coefficient_parity(forms.c, shape.alpha[r], j) + 1) {
                    return Err(Error::Parity(format!("Z_{j}^{r} has the wrong symmetry")));
                }
            }
        }
        Ok(())
    }
}
