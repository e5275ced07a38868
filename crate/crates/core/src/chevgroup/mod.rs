//! Chevalley groups acting on a minuscule module over a commutative ring.
//!
//! The group is generated by `x_i(t) = 1 + t·e_i` and `y_i(t) = 1 + t·f_i`,
//! with the integer matrices pushed through `Z → R`.

mod center;
mod enumerate;
mod factor;
mod relations;
mod weyl;

use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::exactring::{Ring, RingError, RingValue, SparseMatrix};
use crate::liealg::{LieError, LieGenSet, StructureConstants};
use crate::minuscule::WeightBasis;
use crate::rootdata::RootDatum;

pub use center::{center, center_brute_force, CenterDescription};
pub use enumerate::{enumerate_group, EnumerationRecord};
pub use factor::{unipotent_factorize, unipotent_product};
pub use relations::{
    perfectness_identity, torus_kernel_test, verify_commutator, verify_commutators,
    verify_n_h_normalization, verify_torus_conjugation, CommutatorCase,
};
pub use weyl::{weyl_lift_check, weyl_lift_patterns, DEFAULT_WEYL_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error("{0} is not a unit")]
    NonUnit(String),
    #[error("matrix is not upper unitriangular")]
    NotUnipotent,
    #[error("matrix is not a product of positive root elements (stuck after root {0})")]
    FactorizationFailed(usize),
    #[error("factorization order must list each positive root once, by nondecreasing height")]
    BadOrder,
    #[error("cap of {cap} exceeded after {reached} elements")]
    CapExceeded { cap: usize, reached: usize },
    #[error("{0}")]
    Unsupported(String),
    #[error("root {0} is not positive")]
    NotPositive(usize),
    #[error("expected {expected} parameters, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("claimed inverse does not invert the matrix")]
    BadInverse,
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

/// Generators and root vectors of one module, reduced into a ring.
#[derive(Debug)]
pub struct GroupContext {
    gens: Arc<LieGenSet>,
    ring: Ring,
    e: Vec<SparseMatrix>,
    f: Vec<SparseMatrix>,
    root_vectors: Vec<SparseMatrix>,
    int_root_vectors: Vec<SparseMatrix>,
    constants: OnceLock<Result<StructureConstants, LieError>>,
}

impl GroupContext {
    pub fn new(basis: WeightBasis, ring: Ring) -> Result<Self, GroupError> {
        Self::from_generators(Arc::new(LieGenSet::new(basis)), ring)
    }

    pub fn from_generators(gens: Arc<LieGenSet>, ring: Ring) -> Result<Self, GroupError> {
        let map = |ms: &[SparseMatrix]| -> Result<Vec<SparseMatrix>, RingError> {
            ms.iter().map(|m| m.map_into(&ring)).collect()
        };
        let int_root_vectors: Vec<SparseMatrix> = gens
            .root_vectors()
            .into_iter()
            .map(|rv| rv.matrix)
            .collect();
        Ok(Self {
            e: map(&gens.e)?,
            f: map(&gens.f)?,
            root_vectors: map(&int_root_vectors)?,
            int_root_vectors,
            gens,
            ring,
            constants: OnceLock::new(),
        })
    }

    pub fn gens(&self) -> &LieGenSet {
        &self.gens
    }

    pub fn basis(&self) -> &WeightBasis {
        self.gens.basis()
    }

    pub fn datum(&self) -> &RootDatum {
        self.gens.datum()
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.gens.dim()
    }

    pub fn rank(&self) -> usize {
        self.gens.rank()
    }

    /// The image of `e_α` in the ring.
    pub fn root_vector(&self, alpha: usize) -> &SparseMatrix {
        &self.root_vectors[alpha]
    }

    pub fn structure_constants(&self) -> Result<&StructureConstants, GroupError> {
        self.constants
            .get_or_init(|| StructureConstants::compute(self.datum(), &self.int_root_vectors))
            .as_ref()
            .map_err(|e| GroupError::Lie(e.clone()))
    }

    /// Lifts an integer into the ring.
    pub fn value(&self, n: i64) -> RingValue {
        RingValue::from_i64(&self.ring, n)
    }

    pub fn identity(&self) -> GroupElement {
        let id = SparseMatrix::identity(&self.ring, self.dim());
        GroupElement {
            matrix: id.clone(),
            inverse: id,
        }
    }

    fn check_ring(&self, t: &RingValue) -> Result<(), GroupError> {
        if t.ring() == &self.ring {
            Ok(())
        } else {
            Err(RingError::RingMismatch.into())
        }
    }

    fn unit_inverse(&self, t: &RingValue) -> Result<RingValue, GroupError> {
        self.check_ring(t)?;
        t.try_invert()
            .ok_or_else(|| GroupError::NonUnit(t.to_string()))
    }

    /// `1 + t·m` with inverse `1 − t·m`, valid since `m² = 0`.
    fn unipotent(&self, m: &SparseMatrix, t: &RingValue) -> Result<GroupElement, GroupError> {
        self.check_ring(t)?;
        let id = SparseMatrix::identity(&self.ring, self.dim());
        let tm = m.scale(t.elem());
        Ok(GroupElement {
            matrix: &id + &tm,
            inverse: &id - &tm,
        })
    }

    pub fn gen_x(&self, i: usize, t: &RingValue) -> Result<GroupElement, GroupError> {
        self.unipotent(&self.e[i], t)
    }

    pub fn gen_y(&self, i: usize, t: &RingValue) -> Result<GroupElement, GroupError> {
        self.unipotent(&self.f[i], t)
    }

    /// `x_α(t) = 1 + t·e_α` for any root `α`.
    pub fn gen_x_root(&self, alpha: usize, t: &RingValue) -> Result<GroupElement, GroupError> {
        self.unipotent(&self.root_vectors[alpha], t)
    }

    /// `n̄_i(t) = x_i(t) y_i(−t⁻¹) x_i(t)`.
    pub fn gen_n(&self, i: usize, t: &RingValue) -> Result<GroupElement, GroupError> {
        let t_inv = self.unit_inverse(t)?;
        let x = self.gen_x(i, t)?;
        let y = self.gen_y(i, &t_inv.neg())?;
        Ok(x.mul(&y).mul(&x))
    }

    /// `h_i(t) = n̄_i(t) n̄_i(−1)`.
    pub fn gen_h(&self, i: usize, t: &RingValue) -> Result<GroupElement, GroupError> {
        let n_t = self.gen_n(i, t)?;
        let n_m = self.gen_n(i, &self.value(-1))?;
        Ok(n_t.mul(&n_m))
    }

    /// `∏ h_i(t_i)`.
    pub fn torus_element(&self, t: &[RingValue]) -> Result<GroupElement, GroupError> {
        if t.len() != self.rank() {
            return Err(GroupError::Arity {
                expected: self.rank(),
                got: t.len(),
            });
        }
        t.iter()
            .enumerate()
            .try_fold(self.identity(), |acc, (i, ti)| {
                Ok(acc.mul(&self.gen_h(i, ti)?))
            })
    }
}

/// An invertible matrix carried together with its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    matrix: SparseMatrix,
    inverse: SparseMatrix,
}

impl GroupElement {
    /// Checks `matrix·inverse = inverse·matrix = 1`.
    pub fn new(matrix: SparseMatrix, inverse: SparseMatrix) -> Result<Self, GroupError> {
        let left = matrix.checked_mul(&inverse)?;
        let right = inverse.checked_mul(&matrix)?;
        if left.is_identity() && right.is_identity() {
            Ok(Self { matrix, inverse })
        } else {
            Err(GroupError::BadInverse)
        }
    }

    pub fn matrix(&self) -> &SparseMatrix {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &SparseMatrix {
        &self.inverse
    }

    pub fn into_matrix(self) -> SparseMatrix {
        self.matrix
    }

    pub fn inverse(&self) -> Self {
        Self {
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            matrix: &self.matrix * &other.matrix,
            inverse: &other.inverse * &self.inverse,
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let k = k.unsigned_abs() as u32;
        Self {
            matrix: base.matrix.pow(k),
            inverse: base.inverse.pow(k),
        }
    }

    /// `g h g⁻¹`.
    pub fn conjugate(&self, h: &Self) -> Self {
        self.mul(h).mul(&self.inverse())
    }

    /// `g⁻¹ h⁻¹ g h`.
    pub fn commutator(&self, h: &Self) -> Self {
        self.inverse().mul(&h.inverse()).mul(self).mul(h)
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        &self.matrix * &other.matrix == &other.matrix * &self.matrix
    }
}
