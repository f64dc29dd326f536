//! End-to-end verification of a centralizer model against its normal form,
//! using only the brute-force oracle for the judgement.

use serde::Serialize;

use crate::engine::dimension::nilpotent_dimension_variants;
use crate::engine::model::CentralizerModel;
use crate::engine::sampling;
use crate::error::Result;
use crate::exact::{inverse, ExactMatrix, GaussianRational};
use crate::normal_form::NormalFormBundle;
use crate::oracle::{
    automorphism_residual, commutator_residual, lie_algebra_dimension_limited, Residual,
    DEFAULT_ORACLE_LIMIT,
};
use crate::shape::CaseTag;

pub const LIMIT_ENV: &str = "ISOTROPY_MAX_N";

/// Oracle size limit, overridable through the environment.
pub fn oracle_limit() -> usize {
    std::env::var(LIMIT_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ORACLE_LIMIT)
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: usize,
    pub total: usize,
    pub pass: bool,
    /// (sample index, row, column, residual entry) of the first failure.
    pub first_failure: Option<(usize, usize, usize, GaussianRational)>,
}

impl Check {
    fn new(name: &str) -> Self {
        Check {
            name: name.into(),
            passed: 0,
            total: 0,
            pass: true,
            first_failure: None,
        }
    }

    fn record(&mut self, index: usize, r: Residual) {
        self.total += 1;
        if r.zero {
            self.passed += 1;
        } else {
            self.pass = false;
            if self.first_failure.is_none() {
                let (i, j, v) = r.first_offending.expect("nonzero residual has an entry");
                self.first_failure = Some((index, i, j, v));
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PartDimension {
    /// (−1)^c variant (nilpotent) or the ±λ formula.
    pub formula: usize,
    /// Unconditional-minus variant, nilpotent parts only; null when it is
    /// not an integer.
    pub minus_variant: Option<i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DimensionCheck {
    pub formula: usize,
    pub oracle: usize,
    pub parts: Vec<PartDimension>,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub case: CaseTag,
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub corrupted: bool,
    pub checks: Vec<Check>,
    pub dimension: DimensionCheck,
    pub all_pass: bool,
}

impl VerificationReport {
    pub fn summary(&self) -> String {
        let mut s = format!(
            "{:?} n={} samples={} seed={}{}\n",
            self.case,
            self.n,
            self.samples,
            self.seed,
            if self.corrupted { " (corrupted)" } else { "" }
        );
        for c in &self.checks {
            s.push_str(&format!(
                "  {:<4} {} ({}/{})\n",
                if c.pass { "ok" } else { "FAIL" },
                c.name,
                c.passed,
                c.total
            ));
        }
        s.push_str(&format!(
            "  {:<4} dimension formula {} vs oracle {}\n",
            if self.dimension.pass { "ok" } else { "FAIL" },
            self.dimension.formula,
            self.dimension.oracle
        ));
        s
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub samples: usize,
    pub seed: u64,
    /// Perturb entry (0, 0) of every sample by 1 before checking.
    pub corrupt: bool,
    pub limit: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            samples: 50,
            seed: 7,
            corrupt: false,
            limit: oracle_limit(),
        }
    }
}

fn part_dimensions(model: &CentralizerModel) -> Result<Vec<PartDimension>> {
    let leaves: Vec<&CentralizerModel> = if model.parts.is_empty() {
        vec![model]
    } else {
        model.parts.iter().collect()
    };
    leaves
        .into_iter()
        .map(|m| {
            let spec = &m.specs[0];
            let minus_variant = match spec.case() {
                CaseTag::Nilpotent => {
                    let v = nilpotent_dimension_variants(spec)?;
                    (v.minus_variant_twice % 2 == 0).then(|| v.minus_variant())
                }
                _ => None,
            };
            Ok(PartDimension {
                formula: m.dimension,
                minus_variant,
            })
        })
        .collect()
}

pub fn verify_model(
    model: &CentralizerModel,
    bundle: &NormalFormBundle,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    let oracle = lie_algebra_dimension_limited(&bundle.a, &bundle.h, opts.limit)?;
    let mut rng = sampling::rng(opts.seed);
    let mut qs: Vec<ExactMatrix> = Vec::with_capacity(opts.samples + 1);
    // The identity-parameter element comes first.
    qs.push(ExactMatrix::identity(model.n()));
    for _ in 0..opts.samples {
        qs.push(model.sample(&mut rng)?.q);
    }
    if opts.corrupt {
        for q in qs.iter_mut() {
            q[(0, 0)] = &q[(0, 0)] + &GaussianRational::one();
        }
    }
    let mut auto = Check::new("Q^T H Q = H");
    let mut comm = Check::new("A Q = Q A");
    let mut comm_r = Check::new("R Q = Q R");
    let mut closure = Check::new("closure: Q_i Q_{i+1} and Q_i^{-1} are members");
    for (i, q) in qs.iter().enumerate() {
        auto.record(i, automorphism_residual(q, &bundle.h)?);
        comm.record(i, commutator_residual(q, &bundle.a)?);
        if let Some(r) = &bundle.r {
            comm_r.record(i, commutator_residual(q, r)?);
        }
    }
    for i in 0..qs.len().saturating_sub(1).min(10) {
        let prod = &qs[i] * &qs[i + 1];
        let mut members = vec![prod];
        match inverse(&qs[i]) {
            Ok(inv) => members.push(inv),
            // A singular matrix cannot be a group element at all.
            Err(_) => closure.record(
                i,
                Residual {
                    zero: false,
                    first_offending: Some((0, 0, GaussianRational::zero())),
                },
            ),
        }
        for x in members {
            let a = automorphism_residual(&x, &bundle.h)?;
            let c = commutator_residual(&x, &bundle.a)?;
            closure.record(i, if a.zero { c } else { a });
        }
    }
    let mut checks = vec![auto, comm];
    if bundle.r.is_some() {
        checks.push(comm_r);
    }
    checks.push(closure);
    let dimension = DimensionCheck {
        formula: model.dimension,
        oracle,
        parts: part_dimensions(model)?,
        pass: model.dimension == oracle,
    };
    let all_pass = dimension.pass && checks.iter().all(|c| c.pass);
    Ok(VerificationReport {
        case: model.case,
        n: model.n(),
        samples: opts.samples,
        seed: opts.seed,
        corrupted: opts.corrupt,
        checks,
        dimension,
        all_pass,
    })
}
