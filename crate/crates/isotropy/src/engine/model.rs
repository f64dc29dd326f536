//! Centralizer models: the conjugator Ψ, the structured group it conjugates
//! to, and seeded samplers that map free parameters to group elements
//! Q = Ψ^{-1} 𝒴 Ψ.

use rand::Rng;
use serde::Serialize;

use crate::commutant::{BlockToeplitzMatrix, CommutantShape};
use crate::error::{Error, Result};
use crate::exact::{inverse, ExactMatrix, GaussianRational as S};
use crate::normal_form::{
    build_mixed_normal_form, bundle, check_mixed_parts, psi_conjugator_nilpotent,
    psi_conjugator_nonzero, NormalFormBundle,
};
use crate::shape::{CaseTag, ShapeSpec};

use super::cayley::random_automorphism;
use super::dimension::centralizer_dimension;
use super::forms::{coefficient_parity, AlternatingFormPair, FreeParameterSet};
use super::generators::{
    diagonal_unipotent, offdiagonal_unipotent, target_forms, unipotent_generators, GeneratorLabel,
};
use super::sampling;
use super::solver::solve_structured_congruence;

#[derive(Clone, Debug)]
pub struct CentralizerModel {
    pub case: CaseTag,
    pub specs: Vec<ShapeSpec>,
    pub bundle: NormalFormBundle,
    pub psi: ExactMatrix,
    psi_inv: ExactMatrix,
    /// ℬ = 𝒞 for the nilpotent case.
    pub forms: Option<AlternatingFormPair>,
    /// 𝕋^{α,μ} shape of the structured group (𝕋^{α,m} for a ±λ pair).
    pub shape: Option<CommutantShape>,
    pub dimension: usize,
    /// Constituents of a mixed model, in block order.
    pub parts: Vec<CentralizerModel>,
}

/// What a sample was drawn from, enough to redraw it exactly.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "case", rename_all = "kebab-case")]
pub enum SampleParams {
    Nilpotent { params: FreeParameterSet },
    NonzeroPair { x: BlockToeplitzMatrix },
    Mixed { parts: Vec<SampleParams> },
}

#[derive(Clone, Debug, Serialize)]
pub struct Sample {
    #[serde(rename = "Q")]
    pub q: ExactMatrix,
    pub params: SampleParams,
}

pub fn build_centralizer_nilpotent(spec: &ShapeSpec) -> Result<CentralizerModel> {
    spec.validate()?;
    if spec.case() != CaseTag::Nilpotent {
        return Err(Error::Shape("nilpotent model needs epsilon and no lambda".into()));
    }
    let psi = psi_conjugator_nilpotent(spec)?;
    let forms = target_forms(spec)?;
    Ok(CentralizerModel {
        case: CaseTag::Nilpotent,
        specs: vec![spec.clone()],
        bundle: bundle(spec)?,
        psi_inv: inverse(&psi)?,
        psi,
        shape: Some(forms.shape()),
        forms: Some(forms),
        dimension: centralizer_dimension(spec)?,
        parts: vec![],
    })
}

pub fn build_centralizer_nonzero(spec: &ShapeSpec) -> Result<CentralizerModel> {
    spec.validate()?;
    if spec.case() != CaseTag::NonzeroPair {
        return Err(Error::Shape("nonzero-pair model needs lambda ≠ 0".into()));
    }
    let psi = psi_conjugator_nonzero(spec)?;
    Ok(CentralizerModel {
        case: CaseTag::NonzeroPair,
        specs: vec![spec.clone()],
        bundle: bundle(spec)?,
        psi_inv: inverse(&psi)?,
        psi,
        forms: None,
        shape: Some(CommutantShape::new(&spec.alpha, &spec.m)?),
        dimension: centralizer_dimension(spec)?,
        parts: vec![],
    })
}

pub fn build_centralizer(spec: &ShapeSpec) -> Result<CentralizerModel> {
    match spec.case() {
        CaseTag::NonzeroPair => build_centralizer_nonzero(spec),
        _ => build_centralizer_nilpotent(spec),
    }
}

/// Direct sum of models with pairwise distinct eigenvalue classes.
pub fn assemble_mixed(models: Vec<CentralizerModel>) -> Result<CentralizerModel> {
    if models.len() == 1 {
        return Ok(models.into_iter().next().expect("one"));
    }
    let specs: Vec<ShapeSpec> = models.iter().flat_map(|m| m.specs.clone()).collect();
    check_mixed_parts(&specs)?;
    let psi = ExactMatrix::direct_sum_all(models.iter().map(|m| &m.psi));
    let psi_inv = ExactMatrix::direct_sum_all(models.iter().map(|m| &m.psi_inv));
    Ok(CentralizerModel {
        case: CaseTag::Mixed,
        bundle: build_mixed_normal_form(&specs)?,
        specs,
        psi,
        psi_inv,
        forms: None,
        shape: None,
        dimension: models.iter().map(|m| m.dimension).sum(),
        parts: models,
    })
}

pub fn build_mixed(parts: &[ShapeSpec]) -> Result<CentralizerModel> {
    check_mixed_parts(parts)?;
    assemble_mixed(parts.iter().map(build_centralizer).collect::<Result<_>>()?)
}

impl CentralizerModel {
    pub fn n(&self) -> usize {
        self.psi.rows()
    }

    pub fn c(&self) -> u8 {
        self.specs[0].c
    }

    fn forms(&self) -> &AlternatingFormPair {
        self.forms.as_ref().expect("nilpotent model carries forms")
    }

    fn shape(&self) -> &CommutantShape {
        self.shape.as_ref().expect("single-class model carries a shape")
    }

    /// Draw free parameters: A_0^{rr} from the isometry group of B_r, the rest
    /// unconstrained or parity-constrained as required.
    pub fn sample_params(&self, rng: &mut impl Rng) -> Result<SampleParams> {
        match self.case {
            CaseTag::Nilpotent => {
                let forms = self.forms();
                let sh = self.shape();
                let mut p = FreeParameterSet::trivial(sh);
                for (key, list) in p.below.iter_mut() {
                    for m in list.iter_mut() {
                        *m = sampling::matrix(rng, sh.mu[key.0], sh.mu[key.1]);
                    }
                }
                for r in 0..sh.n_blocks() {
                    p.base[r] = random_automorphism(rng, &forms.b[r][0])?;
                    let a = sh.alpha[r];
                    for j in 1..a {
                        p.z[r][j - 1] =
                            sampling::parity_matrix(rng, sh.mu[r], coefficient_parity(forms.c, a, j) + 1);
                    }
                }
                Ok(SampleParams::Nilpotent { params: p })
            }
            CaseTag::NonzeroPair => {
                let sh = self.shape();
                let mut x = BlockToeplitzMatrix::zero(sh);
                for r in 0..sh.n_blocks() {
                    for s in 0..sh.n_blocks() {
                        for j in 0..sh.b(r, s) {
                            let m = if r == s && j == 0 {
                                sampling::nonsingular(rng, sh.mu[r])
                            } else {
                                sampling::matrix(rng, sh.mu[r], sh.mu[s])
                            };
                            x.set_coeff(r, s, j, m)?;
                        }
                    }
                }
                Ok(SampleParams::NonzeroPair { x })
            }
            CaseTag::Mixed => Ok(SampleParams::Mixed {
                parts: self
                    .parts
                    .iter()
                    .map(|m| m.sample_params(rng))
                    .collect::<Result<_>>()?,
            }),
        }
    }

    /// The element of the structured group: 𝒴 for the nilpotent case,
    /// 𝒳 ⊕ (𝒳^{-1})^T for a ±λ pair, the direct sum for mixed models.
    pub fn structured(&self, params: &SampleParams) -> Result<ExactMatrix> {
        match (self.case, params) {
            (CaseTag::Nilpotent, SampleParams::Nilpotent { params }) => {
                Ok(solve_structured_congruence(self.forms(), params)?.to_dense())
            }
            (CaseTag::NonzeroPair, SampleParams::NonzeroPair { x }) => {
                if x.shape() != self.shape() {
                    return Err(Error::Dimension("parameter shape differs from the model".into()));
                }
                let xd = x.to_dense();
                let dual = inverse(&xd)?.transpose();
                Ok(xd.direct_sum(&dual))
            }
            (CaseTag::Mixed, SampleParams::Mixed { parts }) if parts.len() == self.parts.len() => {
                let blocks = self
                    .parts
                    .iter()
                    .zip(parts)
                    .map(|(m, p)| m.structured(p))
                    .collect::<Result<Vec<_>>>()?;
                Ok(ExactMatrix::direct_sum_all(&blocks))
            }
            _ => Err(Error::Shape("parameters do not match the model".into())),
        }
    }

    /// Q = Ψ^{-1} 𝒴 Ψ
    pub fn conjugate(&self, y: &ExactMatrix) -> ExactMatrix {
        &(&self.psi_inv * y) * &self.psi
    }

    pub fn realize(&self, params: &SampleParams) -> Result<ExactMatrix> {
        Ok(self.conjugate(&self.structured(params)?))
    }

    pub fn sample(&self, rng: &mut impl Rng) -> Result<Sample> {
        let params = self.sample_params(rng)?;
        Ok(Sample {
            q: self.realize(&params)?,
            params,
        })
    }

    pub fn samples(&self, seed: u64, count: usize) -> Result<Vec<Sample>> {
        let mut g = sampling::rng(seed);
        (0..count).map(|_| self.sample(&mut g)).collect()
    }

    /// An element of the reductive part: only the A_0^{rr} are drawn.
    pub fn reductive_element(&self, rng: &mut impl Rng) -> Result<ExactMatrix> {
        let params = self.sample_params(rng)?;
        self.realize(&strip(params, Part::Reductive))
    }

    /// An element of the unipotent radical, written as a product of the
    /// diagonal and off-diagonal generators in the nilpotent case.
    pub fn unipotent_element(&self, rng: &mut impl Rng) -> Result<ExactMatrix> {
        match self.case {
            CaseTag::Nilpotent => {
                let forms = self.forms();
                let sh = self.shape();
                let mut y = BlockToeplitzMatrix::identity(sh).to_dense();
                for r in 0..sh.n_blocks() {
                    let a = sh.alpha[r];
                    let z: Vec<ExactMatrix> = (1..a)
                        .map(|j| sampling::parity_matrix(rng, sh.mu[r], coefficient_parity(forms.c, a, j) + 1))
                        .collect();
                    y = &y * &diagonal_unipotent(forms, r, &z)?.to_dense();
                }
                for p in 0..sh.n_blocks() {
                    for t in p + 1..sh.n_blocks() {
                        for k in 0..sh.alpha[t] {
                            let f = sampling::matrix(rng, sh.mu[t], sh.mu[p]);
                            y = &y * &offdiagonal_unipotent(forms, p, t, k, &f)?.to_dense();
                        }
                    }
                }
                Ok(self.conjugate(&y))
            }
            CaseTag::Mixed => {
                let blocks = self
                    .parts
                    .iter()
                    .map(|m| m.unipotent_element(rng).map(|q| &(&m.psi * &q) * &m.psi_inv))
                    .collect::<Result<Vec<_>>>()?;
                Ok(self.conjugate(&ExactMatrix::direct_sum_all(&blocks)))
            }
            CaseTag::NonzeroPair => {
                let params = self.sample_params(rng)?;
                self.realize(&strip(params, Part::Unipotent))
            }
        }
    }

    /// Generators of the unipotent part, conjugated back to Q-coordinates. In
    /// the ±λ case these are the elementary matrices I + E of 𝕋^{α,m} off the
    /// leading diagonal coefficient, paired with their inverse transposes.
    pub fn generators(&self) -> Result<Vec<(GeneratorLabel, ExactMatrix)>> {
        match self.case {
            CaseTag::Nilpotent => Ok(unipotent_generators(self.forms())?
                .into_iter()
                .map(|(l, x)| (l, self.conjugate(&x.to_dense())))
                .collect()),
            CaseTag::NonzeroPair => {
                let sh = self.shape();
                let mut out = Vec::new();
                for r in 0..sh.n_blocks() {
                    for s in 0..sh.n_blocks() {
                        for j in 0..sh.b(r, s) {
                            if r == s && j == 0 {
                                continue;
                            }
                            for a in 0..sh.mu[r] {
                                for b in 0..sh.mu[s] {
                                    let mut x = BlockToeplitzMatrix::identity(sh);
                                    let mut e = ExactMatrix::zeros(sh.mu[r], sh.mu[s]);
                                    e[(a, b)] = S::one();
                                    x.set_coeff(r, s, j, e)?;
                                    let q = self.realize(&SampleParams::NonzeroPair { x })?;
                                    out.push((GeneratorLabel::Coordinate { r, s, j, a, b }, q));
                                }
                            }
                        }
                    }
                }
                Ok(out)
            }
            CaseTag::Mixed => {
                let mut out = Vec::new();
                let mut offset = 0;
                for m in &self.parts {
                    let k = m.n();
                    for (l, q) in m.generators()? {
                        let mut full = ExactMatrix::identity(self.n());
                        full.set_block(offset, offset, &q);
                        out.push((l, full));
                    }
                    offset += k;
                }
                Ok(out)
            }
        }
    }
}

#[derive(Clone, Copy)]
enum Part {
    Reductive,
    Unipotent,
}

fn strip(params: SampleParams, part: Part) -> SampleParams {
    match params {
        SampleParams::Nilpotent { mut params } => {
            match part {
                Part::Reductive => {
                    for (_, list) in params.below.iter_mut() {
                        for m in list.iter_mut() {
                            *m = ExactMatrix::zeros(m.rows(), m.cols());
                        }
                    }
                    for list in params.z.iter_mut() {
                        for m in list.iter_mut() {
                            *m = ExactMatrix::zeros(m.rows(), m.cols());
                        }
                    }
                }
                Part::Unipotent => {
                    for m in params.base.iter_mut() {
                        *m = ExactMatrix::identity(m.rows());
                    }
                }
            }
            SampleParams::Nilpotent { params }
        }
        SampleParams::NonzeroPair { x } => {
            let sh = x.shape().clone();
            let mut y = match part {
                Part::Reductive => BlockToeplitzMatrix::zero(&sh),
                Part::Unipotent => x.clone(),
            };
            for r in 0..sh.n_blocks() {
                let d = match part {
                    Part::Reductive => x.coeff(r, r, 0).clone(),
                    Part::Unipotent => ExactMatrix::identity(sh.mu[r]),
                };
                y.set_coeff(r, r, 0, d).expect("shape-consistent");
            }
            SampleParams::NonzeroPair { x: y }
        }
        SampleParams::Mixed { parts } => SampleParams::Mixed {
            parts: parts.into_iter().map(|p| strip(p, part)).collect(),
        },
    }
}
