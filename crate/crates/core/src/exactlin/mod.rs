//! Exact linear algebra over `Q` and `F_p`.
//!
//! Every linear map in the crate is an [`ExactMatrix`] whose columns are the images of the
//! source basis vectors. Tensor products of spaces use the basis `e_i ⊗ f_j` at index
//! `i * dim W + j`, so [`ExactMatrix::kron`] computes `f ⊗ g` on the nose.
//!
//! There is no floating point anywhere: "is an isomorphism" is always decided exactly.

mod elim;
mod matrix;
mod scalar;
mod sparse;
mod wire;

pub use elim::{AffineSolution, Inversion, Rref};
pub use matrix::{flip, permute_factors, tensor_all, ExactMatrix};
pub use scalar::{Field, Scalar, MAX_PRIME};
pub use sparse::SparseMatrix;
pub use wire::MatrixWire;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("{op}: dimension mismatch between {left:?} and {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },
    #[error("{0} is not an admissible prime modulus")]
    NotPrime(u64),
    #[error("expected {expected} entries, found {found}")]
    EntryCount { expected: usize, found: usize },
    #[error("parse error: {0}")]
    Parse(String),
}
