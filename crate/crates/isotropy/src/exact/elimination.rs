//! Exact elimination. Dense work goes through a Bareiss forward pass (every
//! intermediate is a minor of the input, so nothing is reduced until the
//! back-substitution); large sparse systems use [`SparseRowReducer`].

use std::collections::BTreeMap;

use super::matrix::ExactMatrix;
use super::scalar::GaussianRational;
use crate::error::{Error, Result};

type S = GaussianRational;

/// Result of the fraction-free forward pass.
struct Echelon {
    m: ExactMatrix,
    pivots: Vec<usize>,
    swaps: usize,
}

fn bareiss_forward(a: &ExactMatrix, pivot_cols: usize) -> Echelon {
    let mut m = a.clone();
    let rows = m.rows();
    let cols = m.cols();
    let mut prev = S::one();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let tmp = m[(p, j)].clone();
                m[(p, j)] = m[(r, j)].clone();
                m[(r, j)] = tmp;
            }
            swaps += 1;
        }
        let piv = m[(r, c)].clone();
        for i in r + 1..rows {
            let f = m[(i, c)].clone();
            for j in c + 1..cols {
                let v = &(&piv * &m[(i, j)]) - &(&f * &m[(r, j)]);
                m[(i, j)] = if prev.is_one() { v } else { &v / &prev };
            }
            m[(i, c)] = S::zero();
        }
        // Rows above the pivot row are not touched by Bareiss, but entries in
        // rows r+1.. for earlier columns are already zero.
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    Echelon { m, pivots, swaps }
}

/// Reduced row echelon form over the field; returns the matrix and pivot columns.
pub fn rref(a: &ExactMatrix) -> (ExactMatrix, Vec<usize>) {
    rref_limited(a, a.cols())
}

fn rref_limited(a: &ExactMatrix, pivot_cols: usize) -> (ExactMatrix, Vec<usize>) {
    let Echelon { mut m, pivots, .. } = bareiss_forward(a, pivot_cols);
    let cols = m.cols();
    for (r, &c) in pivots.iter().enumerate().rev() {
        let inv = m[(r, c)].inv();
        for j in c..cols {
            if !m[(r, j)].is_zero() {
                m[(r, j)] = &m[(r, j)] * &inv;
            }
        }
        for i in 0..r {
            let f = m[(i, c)].clone();
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                if m[(r, j)].is_zero() {
                    continue;
                }
                let d = &f * &m[(r, j)];
                m[(i, j)] -= &d;
            }
        }
    }
    (m, pivots)
}

pub fn rank(a: &ExactMatrix) -> usize {
    bareiss_forward(a, a.cols()).pivots.len()
}

pub fn determinant(a: &ExactMatrix) -> Result<S> {
    if !a.is_square() {
        return Err(Error::Dimension("determinant of a non-square matrix".into()));
    }
    let n = a.rows();
    if n == 0 {
        return Ok(S::one());
    }
    let e = bareiss_forward(a, n);
    if e.pivots.len() < n {
        return Ok(S::zero());
    }
    let d = e.m[(n - 1, n - 1)].clone();
    Ok(if e.swaps % 2 == 1 { -d } else { d })
}

pub fn inverse(a: &ExactMatrix) -> Result<ExactMatrix> {
    if !a.is_square() {
        return Err(Error::Dimension("inverse of a non-square matrix".into()));
    }
    let n = a.rows();
    let mut aug = ExactMatrix::zeros(n, 2 * n);
    aug.set_block(0, 0, a);
    aug.set_block(0, n, &ExactMatrix::identity(n));
    let (r, pivots) = rref_limited(&aug, n);
    if pivots.len() < n {
        return Err(Error::Singular(format!("{n}x{n} matrix has rank {}", pivots.len())));
    }
    Ok(r.block(0, n, n, n))
}

/// Basis of the right nullspace {x : A x = 0}, one column per basis vector.
pub fn nullspace(a: &ExactMatrix) -> ExactMatrix {
    let (r, pivots) = rref(a);
    let cols = a.cols();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis = ExactMatrix::zeros(cols, free.len());
    for (k, &f) in free.iter().enumerate() {
        basis[(f, k)] = S::one();
        for (row, &p) in pivots.iter().enumerate() {
            basis[(p, k)] = -&r[(row, f)];
        }
    }
    basis
}

/// Solve `A X = B` for square nonsingular `A`.
pub fn solve(a: &ExactMatrix, b: &ExactMatrix) -> Result<ExactMatrix> {
    Ok(&inverse(a)? * b)
}

/// Incremental row reduction for large, very sparse systems. Rows are fed one
/// at a time and reduced against the pivots seen so far; only nonzero entries
/// are stored, so a 400x200 system with a handful of entries per row stays cheap.
#[derive(Default)]
pub struct SparseRowReducer {
    cols: usize,
    pivots: BTreeMap<usize, Vec<(usize, S)>>,
}

impl SparseRowReducer {
    pub fn new(cols: usize) -> Self {
        SparseRowReducer {
            cols,
            pivots: BTreeMap::new(),
        }
    }

    /// Add a row given as (column, coefficient) pairs; duplicates are summed.
    pub fn push(&mut self, entries: impl IntoIterator<Item = (usize, S)>) {
        let mut work: BTreeMap<usize, S> = BTreeMap::new();
        for (c, v) in entries {
            assert!(c < self.cols, "column {c} out of range");
            if v.is_zero() {
                continue;
            }
            let e = work.entry(c).or_insert_with(S::zero);
            *e += &v;
            if e.is_zero() {
                work.remove(&c);
            }
        }
        loop {
            // Reduce the leading entry until it lands on a fresh column.
            let Some((&lead, _)) = work.iter().next() else {
                return;
            };
            match self.pivots.get(&lead) {
                None => break,
                Some(prow) => {
                    let f = work.remove(&lead).expect("lead present");
                    for (c, v) in prow.iter().skip(1) {
                        let e = work.entry(*c).or_insert_with(S::zero);
                        *e -= &(&f * v);
                        if e.is_zero() {
                            work.remove(c);
                        }
                    }
                }
            }
        }
        let lead = *work.keys().next().expect("nonempty");
        let inv = work[&lead].inv();
        let row: Vec<(usize, S)> = work
            .into_iter()
            .map(|(c, v)| (c, if c == lead { S::one() } else { &v * &inv }))
            .collect();
        self.pivots.insert(lead, row);
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.pivots.len()
    }
}
