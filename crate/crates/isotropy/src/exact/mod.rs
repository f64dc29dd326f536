pub mod elimination;
pub mod json;
pub mod matrix;
pub mod scalar;
pub mod structured;

pub use elimination::{determinant, inverse, nullspace, rank, rref, solve, SparseRowReducer};
pub use matrix::ExactMatrix;
pub use scalar::GaussianRational;
pub use structured::{
    block_permutation, block_shuffle_pairs, exchange, exp_nilpotent, gamma, jordan_block,
    shuffle, sign_diag, toeplitz_alternating, toeplitz_upper,
};
