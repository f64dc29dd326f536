//! Commutants of one-eigenvalue Jordan matrices and the block Toeplitz
//! group 𝕋^{α,μ} they turn into after the perfect shuffle.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{
    exp_nilpotent, inverse, jordan_block, shuffle, ExactMatrix, GaussianRational,
};
use crate::oracle::commutant_dimension;

type S = GaussianRational;

/// Block sizes α_1 > … > α_N (not required decreasing here) with multiplicities μ_r.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CommutantShape {
    pub alpha: Vec<usize>,
    pub mu: Vec<usize>,
}

impl CommutantShape {
    pub fn new(alpha: &[usize], mu: &[usize]) -> Result<Self> {
        if alpha.len() != mu.len() || alpha.is_empty() {
            return Err(Error::Shape("alpha and mu must be nonempty and of equal length".into()));
        }
        if alpha.iter().chain(mu).any(|&k| k == 0) {
            return Err(Error::Shape("alpha and mu entries must be positive".into()));
        }
        Ok(CommutantShape {
            alpha: alpha.to_vec(),
            mu: mu.to_vec(),
        })
    }

    pub fn n_blocks(&self) -> usize {
        self.alpha.len()
    }

    /// Number of Toeplitz coefficients in block (r, s).
    pub fn b(&self, r: usize, s: usize) -> usize {
        self.alpha[r].min(self.alpha[s])
    }

    /// Left zero-padding of block (r, s) in columns.
    pub fn d(&self, r: usize, s: usize) -> usize {
        self.alpha[s].saturating_sub(self.alpha[r])
    }

    pub fn n(&self) -> usize {
        self.alpha.iter().zip(&self.mu).map(|(a, m)| a * m).sum()
    }

    pub fn offsets(&self) -> Vec<usize> {
        let mut off = Vec::with_capacity(self.n_blocks());
        let mut acc = 0;
        for (a, m) in self.alpha.iter().zip(&self.mu) {
            off.push(acc);
            acc += a * m;
        }
        off
    }

    /// ⊕_r ⊕^{μ_r} J_{α_r}(λ)
    pub fn jordan(&self, lambda: &S) -> ExactMatrix {
        let blocks: Vec<ExactMatrix> = self
            .alpha
            .iter()
            .zip(&self.mu)
            .flat_map(|(&a, &m)| std::iter::repeat_n(jordan_block(a, lambda), m))
            .collect();
        ExactMatrix::direct_sum_all(&blocks)
    }

    /// Ω = ⊕_r Ω_{α_r, μ_r}
    pub fn omega(&self) -> ExactMatrix {
        let parts: Vec<ExactMatrix> = self
            .alpha
            .iter()
            .zip(&self.mu)
            .map(|(&a, &m)| shuffle(a, m))
            .collect();
        ExactMatrix::direct_sum_all(&parts)
    }

    pub fn coordinate_count(&self) -> usize {
        let n = self.n_blocks();
        (0..n)
            .flat_map(|r| (0..n).map(move |s| (r, s)))
            .map(|(r, s)| self.b(r, s) * self.mu[r] * self.mu[s])
            .sum()
    }
}

/// One free coordinate of the commutant: entry `j` of the first row of the
/// scalar Toeplitz block at position (a, b) inside block pair (r, s).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Coordinate {
    pub r: usize,
    pub s: usize,
    pub a: usize,
    pub b: usize,
    pub j: usize,
}

/// All X with 𝒥X = X𝒥 for 𝒥 = ⊕_r ⊕^{μ_r} J_{α_r}(λ), as a coordinate list
/// and an expander. λ does not change the family, only which 𝒥 it commutes with.
#[derive(Clone, Debug)]
pub struct CommutantFamily {
    pub shape: CommutantShape,
    pub lambda: S,
    pub coordinates: Vec<Coordinate>,
}

pub fn commutant_basis(shape: &CommutantShape, lambda: &S) -> CommutantFamily {
    let mut coordinates = Vec::new();
    let n = shape.n_blocks();
    for r in 0..n {
        for s in 0..n {
            for a in 0..shape.mu[r] {
                for b in 0..shape.mu[s] {
                    for j in 0..shape.b(r, s) {
                        coordinates.push(Coordinate { r, s, a, b, j });
                    }
                }
            }
        }
    }
    CommutantFamily {
        shape: shape.clone(),
        lambda: lambda.clone(),
        coordinates,
    }
}

impl CommutantFamily {
    pub fn dimension(&self) -> usize {
        self.coordinates.len()
    }

    pub fn jordan(&self) -> ExactMatrix {
        self.shape.jordan(&self.lambda)
    }

    /// Dense X in the Jordan basis from one value per coordinate.
    pub fn expand(&self, values: &[S]) -> Result<ExactMatrix> {
        if values.len() != self.coordinates.len() {
            return Err(Error::Dimension(format!(
                "{} values for {} coordinates",
                values.len(),
                self.coordinates.len()
            )));
        }
        let sh = &self.shape;
        let off = sh.offsets();
        let mut x = ExactMatrix::zeros(sh.n(), sh.n());
        for (c, v) in self.coordinates.iter().zip(values) {
            let (ar, as_) = (sh.alpha[c.r], sh.alpha[c.s]);
            let d = sh.d(c.r, c.s);
            let row0 = off[c.r] + c.a * ar;
            let col0 = off[c.s] + c.b * as_;
            for i in 0..ar {
                let l = i + d + c.j;
                if l < as_ {
                    x[(row0 + i, col0 + l)] = v.clone();
                }
            }
        }
        Ok(x)
    }

    /// The basis matrix for a single coordinate.
    pub fn basis_element(&self, k: usize) -> ExactMatrix {
        let mut v = vec![S::zero(); self.dimension()];
        v[k] = S::one();
        self.expand(&v).expect("length matches")
    }
}

/// Σ_{j<α} J_α(0)^j / j!
pub fn exp_nilpotent_jordan(alpha: usize) -> ExactMatrix {
    exp_nilpotent(&jordan_block(alpha, &S::zero())).expect("Jordan block is nilpotent")
}

/// The commutants of 𝒥 and of exp(𝒥) coincide (λ = 0 form): equal dimensions
/// and every basis element of the first commutes with the exponential.
pub fn commutant_coincidence_check(shape: &CommutantShape) -> Result<bool> {
    let j = shape.jordan(&S::zero());
    let e = exp_nilpotent(&j)?;
    let dj = commutant_dimension(&[&j])?;
    let de = commutant_dimension(&[&e])?;
    if dj != de {
        return Ok(false);
    }
    let fam = commutant_basis(shape, &S::zero());
    if fam.dimension() != dj {
        return Ok(false);
    }
    for k in 0..fam.dimension() {
        let x = fam.basis_element(k);
        if &e * &x != &x * &e {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An element of 𝕋^{α,μ} (or of its linear span when some A_0^{rr} is
/// singular), stored by its coefficient blocks A_j^{rs}, 0 ≤ j < min(α_r, α_s).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockToeplitzMatrix {
    shape: CommutantShape,
    coeffs: Vec<Vec<Vec<ExactMatrix>>>,
}

impl BlockToeplitzMatrix {
    pub fn zero(shape: &CommutantShape) -> Self {
        let n = shape.n_blocks();
        let coeffs = (0..n)
            .map(|r| {
                (0..n)
                    .map(|s| vec![ExactMatrix::zeros(shape.mu[r], shape.mu[s]); shape.b(r, s)])
                    .collect()
            })
            .collect();
        BlockToeplitzMatrix {
            shape: shape.clone(),
            coeffs,
        }
    }

    pub fn identity(shape: &CommutantShape) -> Self {
        let mut x = Self::zero(shape);
        for r in 0..shape.n_blocks() {
            x.coeffs[r][r][0] = ExactMatrix::identity(shape.mu[r]);
        }
        x
    }

    pub fn shape(&self) -> &CommutantShape {
        &self.shape
    }

    pub fn coeff(&self, r: usize, s: usize, j: usize) -> &ExactMatrix {
        &self.coeffs[r][s][j]
    }

    pub fn coeffs(&self, r: usize, s: usize) -> &[ExactMatrix] {
        &self.coeffs[r][s]
    }

    pub fn set_coeff(&mut self, r: usize, s: usize, j: usize, m: ExactMatrix) -> Result<()> {
        let sh = &self.shape;
        if r >= sh.n_blocks() || s >= sh.n_blocks() || j >= sh.b(r, s) {
            return Err(Error::Dimension(format!("no coefficient ({r},{s},{j})")));
        }
        if m.rows() != sh.mu[r] || m.cols() != sh.mu[s] {
            return Err(Error::Dimension(format!(
                "coefficient ({r},{s},{j}) must be {}x{}",
                sh.mu[r], sh.mu[s]
            )));
        }
        self.coeffs[r][s][j] = m;
        Ok(())
    }

    /// Dense n×n matrix: block (r,s) is an α_r×α_s grid of μ_r×μ_s blocks
    /// whose (i,l) entry is A^{rs}_{l−i−d_rs}, zero outside the band.
    pub fn to_dense(&self) -> ExactMatrix {
        let sh = &self.shape;
        let off = sh.offsets();
        let mut x = ExactMatrix::zeros(sh.n(), sh.n());
        for r in 0..sh.n_blocks() {
            for s in 0..sh.n_blocks() {
                let d = sh.d(r, s);
                for i in 0..sh.alpha[r] {
                    for l in 0..sh.alpha[s] {
                        if l < i + d {
                            continue;
                        }
                        let j = l - i - d;
                        if j < sh.b(r, s) {
                            let blk = &self.coeffs[r][s][j];
                            if !blk.is_zero() {
                                x.set_block(off[r] + i * sh.mu[r], off[s] + l * sh.mu[s], blk);
                            }
                        }
                    }
                }
            }
        }
        x
    }

    /// Read coefficients off a dense matrix and reject anything that is not
    /// exactly of the banded Toeplitz pattern.
    pub fn from_dense(x: &ExactMatrix, shape: &CommutantShape) -> Result<Self> {
        if x.rows() != shape.n() || x.cols() != shape.n() {
            return Err(Error::Dimension(format!(
                "matrix is {}x{}, shape needs {}",
                x.rows(),
                x.cols(),
                shape.n()
            )));
        }
        let off = shape.offsets();
        let mut t = Self::zero(shape);
        for r in 0..shape.n_blocks() {
            for s in 0..shape.n_blocks() {
                let d = shape.d(r, s);
                for j in 0..shape.b(r, s) {
                    t.coeffs[r][s][j] =
                        x.block(off[r], off[s] + (j + d) * shape.mu[s], shape.mu[r], shape.mu[s]);
                }
            }
        }
        let back = t.to_dense();
        if let Some((i, j, v)) = (&back - x).first_nonzero() {
            return Err(Error::Structure(format!(
                "entry ({i},{j}) breaks the block Toeplitz pattern (off by {v})"
            )));
        }
        Ok(t)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.shape != rhs.shape {
            return Err(Error::Dimension("block Toeplitz shapes differ".into()));
        }
        Self::from_dense(&(&self.to_dense() * &rhs.to_dense()), &self.shape)
    }

    pub fn is_invertible(&self) -> bool {
        (0..self.shape.n_blocks()).all(|r| crate::exact::rank(&self.coeffs[r][r][0]) == self.shape.mu[r])
    }

    pub fn inverse(&self) -> Result<Self> {
        for r in 0..self.shape.n_blocks() {
            if crate::exact::rank(&self.coeffs[r][r][0]) < self.shape.mu[r] {
                return Err(Error::Singular(format!("diagonal coefficient A_0 of block {r}")));
            }
        }
        Self::from_dense(&inverse(&self.to_dense())?, &self.shape)
    }

    /// The 𝔻 factor: ⊕_r (I_{α_r} ⊗ A_0^{rr}).
    pub fn diagonal_part(&self) -> Self {
        let mut d = Self::zero(&self.shape);
        for r in 0..self.shape.n_blocks() {
            d.coeffs[r][r][0] = self.coeffs[r][r][0].clone();
        }
        d
    }

    /// The 𝕌 factor V = D^{-1}X, so that X = D·V.
    pub fn unipotent_part(&self) -> Result<Self> {
        let n = self.shape.n_blocks();
        let mut v = self.clone();
        for r in 0..n {
            let inv = inverse(&self.coeffs[r][r][0])?;
            for s in 0..n {
                for c in v.coeffs[r][s].iter_mut() {
                    *c = &inv * &*c;
                }
            }
        }
        Ok(v)
    }

    pub fn is_unipotent(&self) -> bool {
        (0..self.shape.n_blocks()).all(|r| self.coeffs[r][r][0].is_identity())
    }
}

/// 𝒳 = Ω^T X Ω, read as coefficients.
pub fn pack_toeplitz(x: &ExactMatrix, shape: &CommutantShape) -> Result<BlockToeplitzMatrix> {
    let o = shape.omega();
    if x.rows() != shape.n() || !x.is_square() {
        return Err(Error::Dimension("matrix size does not match the shape".into()));
    }
    BlockToeplitzMatrix::from_dense(&(&(&o.transpose() * x) * &o), shape)
}

/// X = Ω 𝒳 Ω^T, the exact inverse of [`pack_toeplitz`].
pub fn unpack_toeplitz(t: &BlockToeplitzMatrix) -> ExactMatrix {
    let o = t.shape().omega();
    &(&o * &t.to_dense()) * &o.transpose()
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BlockToeplitzRepr {
    alpha: Vec<usize>,
    mu: Vec<usize>,
    coeffs: BTreeMap<String, Vec<ExactMatrix>>,
}

impl Serialize for BlockToeplitzMatrix {
    fn serialize<Ser: serde::Serializer>(&self, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        let n = self.shape.n_blocks();
        let mut coeffs = BTreeMap::new();
        for r in 0..n {
            for c in 0..n {
                coeffs.insert(format!("{},{}", r + 1, c + 1), self.coeffs[r][c].clone());
            }
        }
        BlockToeplitzRepr {
            alpha: self.shape.alpha.clone(),
            mu: self.shape.mu.clone(),
            coeffs,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BlockToeplitzMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = BlockToeplitzRepr::deserialize(d)?;
        let shape = CommutantShape::new(&repr.alpha, &repr.mu).map_err(D::Error::custom)?;
        let mut t = BlockToeplitzMatrix::zero(&shape);
        let n = shape.n_blocks();
        if repr.coeffs.len() != n * n {
            return Err(D::Error::custom("coeffs must list every block pair"));
        }
        for (key, list) in repr.coeffs {
            let (r, s) = key
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse::<usize>().ok()?, b.trim().parse::<usize>().ok()?)))
                .filter(|&(r, s)| (1..=n).contains(&r) && (1..=n).contains(&s))
                .ok_or_else(|| D::Error::custom(format!("bad block key {key:?}")))?;
            if list.len() != shape.b(r - 1, s - 1) {
                return Err(D::Error::custom(format!("block {key} has the wrong coefficient count")));
            }
            for (j, m) in list.into_iter().enumerate() {
                t.set_coeff(r - 1, s - 1, j, m).map_err(D::Error::custom)?;
            }
        }
        Ok(t)
    }
}
