//! Brute-force checks that know nothing about the structured construction:
//! membership identities by direct multiplication, and dimensions by exact
//! elimination on the linearized defining equations. Only `exact` is used here.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{ExactMatrix, GaussianRational, SparseRowReducer};

pub const DEFAULT_ORACLE_LIMIT: usize = 16;

/// Outcome of an exact identity check: zero or the first offending entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Residual {
    pub zero: bool,
    pub first_offending: Option<(usize, usize, GaussianRational)>,
}

impl Residual {
    pub fn of(m: &ExactMatrix) -> Self {
        let first = m.first_nonzero();
        Residual {
            zero: first.is_none(),
            first_offending: first,
        }
    }
}

fn square_pair(q: &ExactMatrix, h: &ExactMatrix) -> Result<()> {
    if !q.is_square() || !h.is_square() || q.rows() != h.rows() {
        return Err(Error::Dimension(format!(
            "expected two square matrices of one size, got {}x{} and {}x{}",
            q.rows(),
            q.cols(),
            h.rows(),
            h.cols()
        )));
    }
    Ok(())
}

/// `Q^T H Q − H`
pub fn automorphism_residual(q: &ExactMatrix, h: &ExactMatrix) -> Result<Residual> {
    square_pair(q, h)?;
    Ok(Residual::of(&(&(&q.transpose() * h) * q - h)))
}

/// `A^T H + H A`
pub fn skew_residual(a: &ExactMatrix, h: &ExactMatrix) -> Result<Residual> {
    square_pair(a, h)?;
    Ok(Residual::of(&(&(&a.transpose() * h) + &(h * a))))
}

/// `A Q − Q A`
pub fn commutator_residual(q: &ExactMatrix, a: &ExactMatrix) -> Result<Residual> {
    square_pair(q, a)?;
    Ok(Residual::of(&(&(a * q) - &(q * a))))
}

pub fn is_h_automorphism(q: &ExactMatrix, h: &ExactMatrix) -> Result<bool> {
    Ok(automorphism_residual(q, h)?.zero)
}

pub fn is_h_skew(a: &ExactMatrix, h: &ExactMatrix) -> Result<bool> {
    Ok(skew_residual(a, h)?.zero)
}

pub fn commutes(q: &ExactMatrix, a: &ExactMatrix) -> Result<bool> {
    Ok(commutator_residual(q, a)?.zero)
}

/// Rows of the map X ↦ XA − AX with X flattened row-major.
fn push_commutation(red: &mut SparseRowReducer, a: &ExactMatrix) {
    let n = a.rows();
    for r in 0..n {
        for c in 0..n {
            let mut row = Vec::new();
            for k in 0..n {
                let akc = &a[(k, c)];
                if !akc.is_zero() {
                    row.push((r * n + k, akc.clone()));
                }
                let ark = &a[(r, k)];
                if !ark.is_zero() {
                    row.push((k * n + c, -ark));
                }
            }
            red.push(row);
        }
    }
}

/// Rows of the map X ↦ X^T H + H X.
fn push_form_skew(red: &mut SparseRowReducer, h: &ExactMatrix) {
    let n = h.rows();
    for r in 0..n {
        for c in 0..n {
            let mut row = Vec::new();
            for k in 0..n {
                let hkc = &h[(k, c)];
                if !hkc.is_zero() {
                    row.push((k * n + r, hkc.clone()));
                }
                let hrk = &h[(r, k)];
                if !hrk.is_zero() {
                    row.push((k * n + c, hrk.clone()));
                }
            }
            red.push(row);
        }
    }
}

fn check_limit(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::TooLarge { n, limit });
    }
    Ok(())
}

/// Dimension of {X : XA = AX, X^T H + H X = 0}, the tangent space at the
/// identity of the isotropy group of A in the automorphism group of H.
pub fn lie_algebra_dimension(a: &ExactMatrix, h: &ExactMatrix) -> Result<usize> {
    lie_algebra_dimension_limited(a, h, DEFAULT_ORACLE_LIMIT)
}

pub fn lie_algebra_dimension_limited(a: &ExactMatrix, h: &ExactMatrix, limit: usize) -> Result<usize> {
    square_pair(a, h)?;
    let n = a.rows();
    check_limit(n, limit)?;
    let mut red = SparseRowReducer::new(n * n);
    push_form_skew(&mut red, h);
    push_commutation(&mut red, a);
    Ok(red.nullity())
}

/// Dimension of the common commutant of a list of square matrices.
pub fn commutant_dimension(mats: &[&ExactMatrix]) -> Result<usize> {
    let n = mats
        .first()
        .ok_or_else(|| Error::Dimension("no matrices given".into()))?
        .rows();
    if mats.iter().any(|m| !m.is_square() || m.rows() != n) {
        return Err(Error::Dimension("commutant of matrices of differing size".into()));
    }
    let mut red = SparseRowReducer::new(n * n);
    for m in mats {
        push_commutation(&mut red, m);
    }
    Ok(red.nullity())
}
