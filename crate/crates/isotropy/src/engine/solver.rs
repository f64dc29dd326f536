//! Recursive solution of 𝒞 = 𝓕𝒳^T𝓕ℬ𝒳 for 𝒳 ∈ 𝕋^{α,μ}.
//!
//! Writing Φ_u^{ks} = Σ_t B_{u−t}^k A_t^{ks} and
//! Ψ_n^{krs} = Σ_i (−1)^i (A_i^{kr})^T Φ_{n−i}^{ks}, the first-row coefficient j
//! of block (r, s) of 𝓕𝒳^T𝓕ℬ𝒳 is
//!
//!   Σ_k (−1)^{e_kr} Ψ^{krs}_{j + d_rs − d_ks − e_kr},   e_kr = max(0, α_k − α_r),
//!
//! with Ψ of negative index equal to zero. The k = r term is ξ, the k > r terms
//! form Ξ and the k < r terms form Λ. Each unknown A_j^{rs} (r ≤ s) enters only
//! through ξ, linearly via (A_0^{rr})^T B_0^r A_j^{rs}, which is what the
//! recursion inverts.

use std::collections::BTreeMap;

use crate::commutant::BlockToeplitzMatrix;
use crate::error::{Error, Result};
use crate::exact::{inverse, ExactMatrix, GaussianRational};

use super::forms::{AlternatingFormPair, FreeParameterSet};

/// The ξ/Ξ/Λ split of one recursion step, kept for inspection.
#[derive(Clone, Debug)]
pub struct StepRecord {
    pub xi: ExactMatrix,
    pub big_xi: ExactMatrix,
    pub lambda: ExactMatrix,
}

impl StepRecord {
    /// D = ξ + Ξ + Λ
    pub fn d(&self) -> ExactMatrix {
        &(&self.xi + &self.big_xi) + &self.lambda
    }
}

pub struct CongruenceSolverState<'a> {
    pub forms: &'a AlternatingFormPair,
    pub x: BlockToeplitzMatrix,
    /// Keyed by (j, r, p) with s = r + p.
    pub steps: BTreeMap<(usize, usize, usize), StepRecord>,
}

impl<'a> CongruenceSolverState<'a> {
    pub fn new(forms: &'a AlternatingFormPair, x: BlockToeplitzMatrix) -> Self {
        CongruenceSolverState {
            forms,
            x,
            steps: BTreeMap::new(),
        }
    }

    /// Φ_u^{ks}
    pub fn phi(&self, k: usize, s: usize, u: usize) -> ExactMatrix {
        let sh = self.x.shape();
        let mut acc = ExactMatrix::zeros(sh.mu[k], sh.mu[s]);
        let bk = &self.forms.b[k];
        for t in 0..=u.min(sh.b(k, s) - 1) {
            let q = u - t;
            if q >= bk.len() || bk[q].is_zero() {
                continue;
            }
            let a = self.x.coeff(k, s, t);
            if a.is_zero() {
                continue;
            }
            acc = &acc + &(&bk[q] * a);
        }
        acc
    }

    /// Ψ_n^{krs}, zero for n < 0.
    pub fn psi(&self, k: usize, r: usize, s: usize, n: i64) -> ExactMatrix {
        let sh = self.x.shape();
        let mut acc = ExactMatrix::zeros(sh.mu[r], sh.mu[s]);
        if n < 0 {
            return acc;
        }
        let n = n as usize;
        for i in 0..=n.min(sh.b(k, r) - 1) {
            let a = self.x.coeff(k, r, i);
            if a.is_zero() {
                continue;
            }
            let f = self.phi(k, s, n - i);
            if f.is_zero() {
                continue;
            }
            let term = &a.transpose() * &f;
            acc = if i % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    fn index(&self, k: usize, r: usize, s: usize, j: usize) -> (i64, bool) {
        let sh = self.x.shape();
        let (ar, ak) = (sh.alpha[r] as i64, sh.alpha[k] as i64);
        let e_kr = (ak - ar).max(0);
        let n = j as i64 + sh.d(r, s) as i64 - sh.d(k, s) as i64 - e_kr;
        (n, e_kr % 2 == 1)
    }

    /// Term k of the first-row coefficient j of block (r, s).
    pub fn term(&self, k: usize, r: usize, s: usize, j: usize) -> ExactMatrix {
        let (n, negate) = self.index(k, r, s, j);
        let p = self.psi(k, r, s, n);
        if negate {
            -&p
        } else {
            p
        }
    }

    pub fn split(&self, r: usize, s: usize, j: usize) -> StepRecord {
        let sh = self.x.shape();
        let zero = ExactMatrix::zeros(sh.mu[r], sh.mu[s]);
        let (mut big_xi, mut lambda) = (zero.clone(), zero);
        for k in 0..sh.n_blocks() {
            if k > r {
                big_xi = &big_xi + &self.term(k, r, s, j);
            } else if k < r {
                lambda = &lambda + &self.term(k, r, s, j);
            }
        }
        StepRecord {
            xi: self.term(r, r, s, j),
            big_xi,
            lambda,
        }
    }

    /// Coefficient j of block (r, s) of 𝓕𝒳^T𝓕ℬ𝒳 for the current 𝒳.
    pub fn product_coefficient(&self, r: usize, s: usize, j: usize) -> ExactMatrix {
        self.split(r, s, j).d()
    }
}

pub fn solve_structured_congruence(
    forms: &AlternatingFormPair,
    params: &FreeParameterSet,
) -> Result<BlockToeplitzMatrix> {
    Ok(solve_with_state(forms, params)?.x)
}

pub fn solve_with_state<'a>(
    forms: &'a AlternatingFormPair,
    params: &FreeParameterSet,
) -> Result<CongruenceSolverState<'a>> {
    forms.validate()?;
    params.validate(forms)?;
    let shape = forms.shape();
    let nb = shape.n_blocks();
    let mut x = BlockToeplitzMatrix::zero(&shape);
    for ((r, s), list) in &params.below {
        for (j, m) in list.iter().enumerate() {
            x.set_coeff(*r, *s, j, m.clone())?;
        }
    }
    for r in 0..nb {
        x.set_coeff(r, r, 0, params.base[r].clone())?;
    }
    // A_0^{rr} (C_0^r)^{-1} = ((A_0^{rr})^T B_0^r)^{-1}
    let pre: Vec<ExactMatrix> = (0..nb)
        .map(|r| {
            inverse(&forms.cc[r][0])
                .map(|ci| &params.base[r] * &ci)
                .map_err(|_| Error::Singular(format!("C_0^{r}")))
        })
        .collect::<Result<_>>()?;
    let half = GaussianRational::ratio(1, 2);
    let mut st = CongruenceSolverState::new(forms, x);
    let alpha1 = shape.alpha.iter().copied().max().unwrap_or(0);
    for j in 0..alpha1 {
        for r in 0..nb {
            if j == 0 || j >= shape.alpha[r] {
                continue;
            }
            let rec = st.split(r, r, j);
            let rhs = &forms.cc[r][j] - &rec.d();
            let y = &params.z[r][j - 1] + &rhs.scale(&half);
            let a = &pre[r] * &y;
            st.x.set_coeff(r, r, j, a)?;
            st.steps.insert((j, r, 0), rec);
        }
        for p in 1..nb {
            for r in 0..nb - p {
                let s = r + p;
                if j >= shape.b(r, s) {
                    continue;
                }
                let rec = st.split(r, s, j);
                let a = -&(&pre[r] * &rec.d());
                st.x.set_coeff(r, s, j, a)?;
                st.steps.insert((j, r, p), rec);
            }
        }
    }
    Ok(st)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::GaussianRational as S;

    #[test]
    fn one_by_one_orthogonal() {
        let f = AlternatingFormPair::diagonal(1, &[1], &[ExactMatrix::identity(1)]).unwrap();
        let mut p = FreeParameterSet::trivial(&f.shape());
        for sign in [1, -1] {
            p.base[0] = ExactMatrix::from_ints(&[&[sign]]);
            let x = solve_structured_congruence(&f, &p).unwrap();
            assert_eq!(x.coeff(0, 0, 0), &ExactMatrix::from_ints(&[&[sign]]));
        }
    }

    #[test]
    fn product_coefficients_match_dense_product() {
        // Any 𝒳 in the shape: the Ψ formula must agree with the dense product.
        let b0 = ExactMatrix::from_ints(&[&[0, 1], &[-1, 0]]);
        let f = AlternatingFormPair::diagonal(2, &[3, 1], &[b0.clone(), b0]).unwrap();
        let shape = f.shape();
        let mut x = BlockToeplitzMatrix::zero(&shape);
        let mut v = 1;
        for r in 0..2 {
            for s in 0..2 {
                for j in 0..shape.b(r, s) {
                    let m = ExactMatrix::from_fn(shape.mu[r], shape.mu[s], |a, b| {
                        v += 1;
                        S::int(((v * 7 + a as i64 * 3 + b as i64) % 5) - 2)
                    });
                    x.set_coeff(r, s, j, m).unwrap();
                }
            }
        }
        let st = CongruenceSolverState::new(&f, x.clone());
        let prod = &f.c_dense() - &f.residual(&x);
        let off = shape.offsets();
        for r in 0..2 {
            for s in 0..2 {
                for j in 0..shape.b(r, s) {
                    let col = off[s] + (j + shape.d(r, s)) * shape.mu[s];
                    let want = prod.block(off[r], col, shape.mu[r], shape.mu[s]);
                    assert_eq!(st.product_coefficient(r, s, j), want, "block ({r},{s}) j={j}");
                }
            }
        }
    }

    fn random_problem(seed: u64, c: u8, alpha: &[usize], mu: &[usize]) -> (AlternatingFormPair, FreeParameterSet) {
        use crate::engine::forms::coefficient_parity;
        use crate::engine::sampling as smp;
        let mut g = smp::rng(seed);
        let (mut b, mut cc, mut base, mut z) = (vec![], vec![], vec![], vec![]);
        for (&a, &m) in alpha.iter().zip(mu) {
            let b0 = smp::nonsingular_parity(&mut g, m, coefficient_parity(c, a, 0));
            let a0 = smp::nonsingular(&mut g, m);
            let c0 = &(&a0.transpose() * &b0) * &a0;
            let mut bl = vec![b0];
            let mut cl = vec![c0];
            for j in 1..a {
                bl.push(smp::parity_matrix(&mut g, m, coefficient_parity(c, a, j)));
                cl.push(smp::parity_matrix(&mut g, m, coefficient_parity(c, a, j)));
            }
            b.push(bl);
            cc.push(cl);
            base.push(a0);
            z.push((1..a).map(|j| smp::parity_matrix(&mut g, m, coefficient_parity(c, a, j) + 1)).collect());
        }
        let forms = AlternatingFormPair::new(c, alpha, b, cc).unwrap();
        let shape = forms.shape();
        let mut below = vec![];
        for r in 0..alpha.len() {
            for s in 0..r {
                below.push(((r, s), (0..shape.b(r, s)).map(|_| smp::matrix(&mut g, mu[r], mu[s])).collect()));
            }
        }
        (forms, FreeParameterSet { below, base, z })
    }

    #[test]
    fn residual_vanishes_on_random_data() {
        for (seed, c, alpha, mu) in [
            (1, 2, vec![3, 1], vec![2, 2]),
            (2, 1, vec![3, 2, 1], vec![1, 2, 1]),
            (3, 2, vec![4, 2], vec![2, 1]),
            (4, 1, vec![2, 1], vec![2, 1]),
        ] {
            let (f, p) = random_problem(seed, c, &alpha, &mu);
            let st = solve_with_state(&f, &p).unwrap();
            assert!(f.residual(&st.x).is_zero(), "alpha={alpha:?} c={c}");
            // Ψ-symmetry on the solved matrix
            let sh = st.x.shape().clone();
            for k in 0..sh.n_blocks() {
                for r in 0..sh.n_blocks() {
                    for s in 0..sh.n_blocks() {
                        for n in 0..sh.alpha[k] as i64 {
                            let lhs = st.psi(k, r, s, n).transpose();
                            let rhs = st.psi(k, s, r, n).scale_int(if (sh.alpha[k] as i64 - n + c as i64) % 2 == 0 { 1 } else { -1 });
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }
}
