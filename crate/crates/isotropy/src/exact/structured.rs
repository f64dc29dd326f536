use super::matrix::ExactMatrix;
use super::scalar::GaussianRational;
use crate::error::{Error, Result};

type S = GaussianRational;

fn check_uniform(blocks: &[ExactMatrix]) -> Result<(usize, usize)> {
    let first = blocks
        .first()
        .ok_or_else(|| Error::Dimension("empty block sequence".into()))?;
    let (h, w) = (first.rows(), first.cols());
    if blocks.iter().any(|b| b.rows() != h || b.cols() != w) {
        return Err(Error::Dimension("Toeplitz blocks differ in size".into()));
    }
    Ok((h, w))
}

fn toeplitz_signed(blocks: &[ExactMatrix], alternate: bool) -> Result<ExactMatrix> {
    let (h, w) = check_uniform(blocks)?;
    let k = blocks.len();
    let mut out = ExactMatrix::zeros(k * h, k * w);
    for i in 0..k {
        for j in i..k {
            let b = &blocks[j - i];
            if alternate && i % 2 == 1 {
                out.set_block(i * h, j * w, &-b);
            } else {
                out.set_block(i * h, j * w, b);
            }
        }
    }
    Ok(out)
}

/// Block upper triangular Toeplitz matrix with the given first block row.
pub fn toeplitz_upper(blocks: &[ExactMatrix]) -> Result<ExactMatrix> {
    toeplitz_signed(blocks, false)
}

/// Like [`toeplitz_upper`] but block row `i` (from 0) carries the sign `(−1)^i`.
pub fn toeplitz_alternating(blocks: &[ExactMatrix]) -> Result<ExactMatrix> {
    toeplitz_signed(blocks, true)
}

/// Anti-diagonal with entries `(−1)^{i+1}` at `(i, m+1−i)` (1-based), so the
/// top-right entry is `+1`.
pub fn gamma(m: usize) -> Result<ExactMatrix> {
    if m == 0 {
        return Err(Error::Shape("gamma of size 0".into()));
    }
    let mut g = ExactMatrix::zeros(m, m);
    for i in 0..m {
        g[(i, m - 1 - i)] = S::sign(i as i64);
    }
    Ok(g)
}

/// Block exchange matrix: identities `I_m` on the block anti-diagonal of an α×α grid.
pub fn exchange(alpha: usize, m: usize) -> ExactMatrix {
    let mut e = ExactMatrix::zeros(alpha * m, alpha * m);
    for i in 0..alpha {
        let j = alpha - 1 - i;
        for k in 0..m {
            e[(i * m + k, j * m + k)] = S::one();
        }
    }
    e
}

/// diag(−1, 1, −1, …, (−1)^α).
pub fn sign_diag(alpha: usize) -> ExactMatrix {
    ExactMatrix::diag(&(1..=alpha).map(|j| S::sign(j as i64)).collect::<Vec<_>>())
}

/// The perfect shuffle Ω_{α,m}: its columns are e_1, e_{α+1}, …, e_{(m−1)α+1},
/// e_2, e_{α+2}, …, so `Ω^T X Ω` gathers the k-th entry of every α-block.
pub fn shuffle(alpha: usize, m: usize) -> ExactMatrix {
    let n = alpha * m;
    let mut o = ExactMatrix::zeros(n, n);
    for k in 0..alpha {
        for i in 0..m {
            o[(i * alpha + k, k * m + i)] = S::one();
        }
    }
    o
}

/// Block permutation taking 2N consecutive blocks of sizes
/// (s_1, s_1, s_2, s_2, …, s_N, s_N) into the order 1,3,…,2N−1,2,4,…,2N.
pub fn block_shuffle_pairs(block_sizes: &[usize]) -> ExactMatrix {
    let sizes: Vec<usize> = block_sizes.iter().flat_map(|&s| [s, s]).collect();
    let order: Vec<usize> = (0..sizes.len())
        .step_by(2)
        .chain((1..sizes.len()).step_by(2))
        .collect();
    block_permutation(&sizes, &order)
}

/// Permutation P such that `P^T X P` lists the blocks of X in `order`.
pub fn block_permutation(sizes: &[usize], order: &[usize]) -> ExactMatrix {
    let n: usize = sizes.iter().sum();
    let mut offsets = vec![0usize; sizes.len()];
    for k in 1..sizes.len() {
        offsets[k] = offsets[k - 1] + sizes[k - 1];
    }
    let mut p = ExactMatrix::zeros(n, n);
    let mut col = 0;
    for &b in order {
        for t in 0..sizes[b] {
            p[(offsets[b] + t, col)] = S::one();
            col += 1;
        }
    }
    p
}

/// The Jordan block J_α(λ): λ on the diagonal, ones above it.
pub fn jordan_block(alpha: usize, lambda: &S) -> ExactMatrix {
    let mut j = ExactMatrix::scalar(alpha, lambda);
    for i in 0..alpha.saturating_sub(1) {
        j[(i, i + 1)] = S::one();
    }
    j
}

/// Exact exponential of a nilpotent matrix as a finite power series.
pub fn exp_nilpotent(a: &ExactMatrix) -> Result<ExactMatrix> {
    if !a.is_square() {
        return Err(Error::Dimension("exp of a non-square matrix".into()));
    }
    let n = a.rows();
    let mut out = ExactMatrix::identity(n);
    let mut term = ExactMatrix::identity(n);
    for k in 1..=n {
        term = (&term * a).scale(&S::ratio(1, k as i64));
        if term.is_zero() {
            return Ok(out);
        }
        out = &out + &term;
    }
    Err(Error::Structure("matrix is not nilpotent".into()))
}
