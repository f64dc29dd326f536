//! Command-line surface. Everything writes JSON to stdout except the default
//! `verify` output, which is a short human-readable summary.
//!
//! Exit codes: 0 ok, 1 verification failure, 2 unreadable or malformed input,
//! 3 domain precondition (shape, parity, singularity), 4 size limit.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::engine::dimension::nilpotent_dimension_variants;
use crate::engine::model::{build_centralizer, build_mixed, CentralizerModel};
use crate::error::Error;
use crate::exact::ExactMatrix;
use crate::normal_form::{build_mixed_normal_form, bundle, psi_conjugator};
use crate::oracle::lie_algebra_dimension_limited;
use crate::shape::{CaseTag, ShapeSpec};
use crate::verify::{oracle_limit, verify_model, VerifyOptions, LIMIT_ENV};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "isotropy", about = "Exact centralizers of orthogonal and symplectic matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Emit A, H, R, U, J and Ψ for a spec.
    NormalForm {
        #[arg(long)]
        spec: PathBuf,
    },
    /// Dimension, samples or unipotent generators of the centralizer.
    Centralizer {
        #[command(subcommand)]
        action: Action,
    },
    /// Check samples and the dimension against the brute-force oracle.
    Verify {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Perturb every sample before checking; verification must then fail.
        #[arg(long)]
        corrupt: bool,
        /// Print the full report as JSON instead of the summary.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum Action {
    Dim {
        #[arg(long)]
        spec: PathBuf,
    },
    Sample {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Include the free parameters behind every sample.
        #[arg(long)]
        emit_params: bool,
    },
    Generators {
        #[arg(long)]
        spec: PathBuf,
    },
}

/// A spec file: one ShapeSpec, or {"parts": [ShapeSpec, ...]} for a direct sum
/// over distinct eigenvalue classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecFile {
    Single(ShapeSpec),
    Mixed(Vec<ShapeSpec>),
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct MixedRepr {
    parts: Vec<ShapeSpec>,
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<Self, Error> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let parsed = if v.get("parts").is_some() {
            serde_json::from_value::<MixedRepr>(v).map(|m| SpecFile::Mixed(m.parts))
        } else {
            serde_json::from_value::<ShapeSpec>(v).map(SpecFile::Single)
        };
        parsed.map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn read(path: &PathBuf) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parts(&self) -> Vec<ShapeSpec> {
        match self {
            SpecFile::Single(s) => vec![s.clone()],
            SpecFile::Mixed(p) => p.clone(),
        }
    }

    pub fn model(&self) -> Result<CentralizerModel, Error> {
        match self {
            SpecFile::Single(s) => build_centralizer(s),
            SpecFile::Mixed(p) => build_mixed(p),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_PARSE,
        Error::TooLarge { .. } => EXIT_RESOURCE,
        Error::Identity(_) => EXIT_VERIFY,
        _ => EXIT_DOMAIN,
    }
}

/// Refuse specs larger than the configured limit before doing any work.
fn check_size(n: usize) -> Result<(), Error> {
    let limit = oracle_limit();
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    Ok(())
}

fn total_n(parts: &[ShapeSpec]) -> Result<usize, Error> {
    parts.iter().try_fold(0, |acc, p| {
        p.validate()?;
        Ok(acc + p.n())
    })
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

fn normal_form(file: &SpecFile) -> Result<String, Error> {
    let parts = file.parts();
    check_size(total_n(&parts)?)?;
    let (b, psi) = match file {
        SpecFile::Single(s) => (bundle(s)?, psi_conjugator(s)?),
        SpecFile::Mixed(p) => {
            let psis = p.iter().map(psi_conjugator).collect::<Result<Vec<_>, _>>()?;
            (build_mixed_normal_form(p)?, ExactMatrix::direct_sum_all(&psis))
        }
    };
    let mut v = serde_json::to_value(&b).expect("bundle serializes");
    v["Psi"] = serde_json::to_value(&psi).expect("matrix serializes");
    Ok(to_json(&v))
}

fn dimension(file: &SpecFile) -> Result<String, Error> {
    let parts = file.parts();
    let n = total_n(&parts)?;
    check_size(n)?;
    let model = file.model()?;
    let mut per_part = Vec::new();
    for p in &parts {
        let mut entry = json!({ "case": p.case() });
        if p.case() == CaseTag::Nilpotent {
            let v = nilpotent_dimension_variants(p)?;
            entry["signed_variant_twice"] = json!(v.signed_twice);
            entry["minus_variant_twice"] = json!(v.minus_variant_twice);
        }
        entry["dimension"] = json!(build_centralizer(p)?.dimension);
        per_part.push(entry);
    }
    let oracle = lie_algebra_dimension_limited(&model.bundle.a, &model.bundle.h, oracle_limit())?;
    Ok(to_json(&json!({
        "n": n,
        "dimension": model.dimension,
        "oracle": oracle,
        "parts": per_part,
    })))
}

fn sample(file: &SpecFile, seed: u64, count: usize, emit_params: bool) -> Result<String, Error> {
    check_size(total_n(&file.parts())?)?;
    let model = file.model()?;
    let samples = model.samples(seed, count)?;
    let list: Vec<Value> = samples
        .iter()
        .map(|s| {
            let mut v = json!({ "Q": s.q });
            if emit_params {
                v["params"] = serde_json::to_value(&s.params).expect("params serialize");
            }
            v
        })
        .collect();
    Ok(to_json(&json!({ "seed": seed, "count": count, "samples": list })))
}

fn generators(file: &SpecFile) -> Result<String, Error> {
    check_size(total_n(&file.parts())?)?;
    let model = file.model()?;
    let list: Vec<Value> = model
        .generators()?
        .into_iter()
        .map(|(label, q)| {
            // Back in the structured coordinates 𝒴 = Ψ Q Ψ^{-1} the Toeplitz
            // pattern of each generator is visible.
            let y = &(&model.psi * &q) * &crate::exact::inverse(&model.psi).expect("Ψ invertible");
            json!({ "label": label, "structured": y, "Q": q })
        })
        .collect();
    Ok(to_json(&json!({ "generators": list })))
}

fn verify(file: &SpecFile, samples: usize, seed: u64, corrupt: bool, as_json: bool) -> Result<(String, bool), Error> {
    check_size(total_n(&file.parts())?)?;
    let model = file.model()?;
    let opts = VerifyOptions {
        samples,
        seed,
        corrupt,
        limit: oracle_limit(),
    };
    let rep = verify_model(&model, &model.bundle, &opts)?;
    let out = if as_json { to_json(&rep) } else { rep.summary() };
    Ok((out, rep.all_pass))
}

/// Run the CLI, writing to the given streams; returns the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let _ = write!(if code == EXIT_OK { &mut *out as &mut dyn Write } else { err }, "{e}");
            return code;
        }
    };
    let result = (|| -> Result<(String, bool), Error> {
        match &cli.command {
            Command::NormalForm { spec } => Ok((normal_form(&SpecFile::read(spec)?)?, true)),
            Command::Centralizer { action } => match action {
                Action::Dim { spec } => Ok((dimension(&SpecFile::read(spec)?)?, true)),
                Action::Sample { spec, seed, count, emit_params } => {
                    Ok((sample(&SpecFile::read(spec)?, *seed, *count, *emit_params)?, true))
                }
                Action::Generators { spec } => Ok((generators(&SpecFile::read(spec)?)?, true)),
            },
            Command::Verify { spec, samples, seed, corrupt, json } => {
                verify(&SpecFile::read(spec)?, *samples, *seed, *corrupt, *json)
            }
        }
    })();
    match result {
        Ok((text, ok)) => {
            let _ = writeln!(out, "{}", text.trim_end());
            if ok {
                EXIT_OK
            } else {
                EXIT_VERIFY
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let Error::TooLarge { .. } = e {
                let _ = writeln!(err, "raise the limit with {LIMIT_ENV}=<n>");
            }
            exit_code(&e)
        }
    }
}
