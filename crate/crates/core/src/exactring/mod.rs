//! Exact ring arithmetic, sparse matrices over a ring, and integer lattice
//! utilities.

mod matrix;
mod poly;
mod ring;
mod smith;

pub use matrix::SparseMatrix;
pub use poly::Poly;
pub use ring::{Elem, Ring, RingValue};
pub use smith::{smith_normal_form, IntMatrix, SmithForm};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("matrix dimensions differ ({0} vs {1})")]
    DimMismatch(usize, usize),
    #[error("entry ({row}, {col}) lies outside a {dim}x{dim} matrix")]
    IndexOutOfRange { row: usize, col: usize, dim: usize },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is smaller than 2")]
    ModulusTooSmall(u64),
    #[error("polynomial rings need at least two distinct variable names, got {0:?}")]
    BadVariables(String),
    #[error("{0}")]
    Parse(String),
}
