//! Square sparse matrices over a [`Ring`].
//!
//! Rows are stored as column-sorted lists of nonzero entries. Because ring
//! elements are canonical and zeros are never stored, structural equality
//! is matrix equality, and the derived `Hash` can be used to deduplicate
//! group elements.

use std::ops::{Add, Mul, Neg, Sub};

use super::ring::{Elem, Ring};
use super::RingError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseMatrix {
    ring: Ring,
    dim: usize,
    rows: Vec<Vec<(usize, Elem)>>,
}

impl SparseMatrix {
    pub fn zero(ring: &Ring, dim: usize) -> Self {
        Self {
            ring: ring.clone(),
            dim,
            rows: vec![Vec::new(); dim],
        }
    }

    pub fn identity(ring: &Ring, dim: usize) -> Self {
        let one = ring.one();
        Self {
            ring: ring.clone(),
            dim,
            rows: (0..dim).map(|i| vec![(i, one.clone())]).collect(),
        }
    }

    /// Builds a matrix from `(row, col, value)` triples. Repeated positions
    /// are summed; zero results are dropped.
    pub fn from_entries<I>(ring: &Ring, dim: usize, entries: I) -> Result<Self, RingError>
    where
        I: IntoIterator<Item = (usize, usize, Elem)>,
    {
        let mut rows: Vec<Vec<(usize, Elem)>> = vec![Vec::new(); dim];
        for (r, c, v) in entries {
            if r >= dim || c >= dim {
                return Err(RingError::IndexOutOfRange {
                    row: r,
                    col: c,
                    dim,
                });
            }
            if !ring.contains(&v) {
                return Err(RingError::RingMismatch);
            }
            rows[r].push((c, v));
        }
        for row in &mut rows {
            row.sort_by_key(|(c, _)| *c);
            let mut merged: Vec<(usize, Elem)> = Vec::with_capacity(row.len());
            for (c, v) in row.drain(..) {
                match merged.last_mut() {
                    Some((lc, lv)) if *lc == c => *lv = ring.add(lv, &v),
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|(_, v)| !ring.is_zero(v));
            *row = merged;
        }
        Ok(Self {
            ring: ring.clone(),
            dim,
            rows,
        })
    }

    /// Diagonal matrix with the given entries.
    pub fn diagonal(ring: &Ring, diag: Vec<Elem>) -> Self {
        let dim = diag.len();
        Self::from_entries(
            ring,
            dim,
            diag.into_iter().enumerate().map(|(i, v)| (i, i, v)),
        )
        .expect("diagonal entries are in range")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn get(&self, r: usize, c: usize) -> Option<&Elem> {
        let row = self.rows.get(r)?;
        row.binary_search_by_key(&c, |(k, _)| *k)
            .ok()
            .map(|k| &row[k].1)
    }

    /// Entry at `(r, c)`, returning the ring's zero when absent.
    pub fn entry(&self, r: usize, c: usize) -> Elem {
        self.get(r, c).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn row(&self, r: usize) -> &[(usize, Elem)] {
        &self.rows[r]
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Elem)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    fn check(&self, other: &Self) -> Result<(), RingError> {
        if self.ring != other.ring {
            return Err(RingError::RingMismatch);
        }
        if self.dim != other.dim {
            return Err(RingError::DimMismatch(self.dim, other.dim));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        let ring = &self.ring;
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut j) = (0, 0);
                while i < a.len() || j < b.len() {
                    match (a.get(i), b.get(j)) {
                        (Some((ca, va)), Some((cb, vb))) if ca == cb => {
                            let s = ring.add(va, vb);
                            if !ring.is_zero(&s) {
                                out.push((*ca, s));
                            }
                            i += 1;
                            j += 1;
                        }
                        (Some((ca, va)), Some((cb, _))) if ca < cb => {
                            out.push((*ca, va.clone()));
                            i += 1;
                        }
                        (Some(_), Some((cb, vb))) => {
                            out.push((*cb, vb.clone()));
                            j += 1;
                        }
                        (Some((ca, va)), None) => {
                            out.push((*ca, va.clone()));
                            i += 1;
                        }
                        (None, Some((cb, vb))) => {
                            out.push((*cb, vb.clone()));
                            j += 1;
                        }
                        (None, None) => unreachable!(),
                    }
                }
                out
            })
            .collect();
        Ok(Self {
            ring: ring.clone(),
            dim: self.dim,
            rows,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check(other)?;
        let ring = &self.ring;
        let mut acc: Vec<Option<Elem>> = vec![None; self.dim];
        let mut touched = Vec::new();
        let rows = self
            .rows
            .iter()
            .map(|row| {
                for (k, a) in row {
                    for (j, b) in &other.rows[*k] {
                        let prod = ring.mul(a, b);
                        match &mut acc[*j] {
                            Some(v) => *v = ring.add(v, &prod),
                            slot @ None => {
                                *slot = Some(prod);
                                touched.push(*j);
                            }
                        }
                    }
                }
                touched.sort_unstable();
                let out: Vec<(usize, Elem)> = touched
                    .drain(..)
                    .filter_map(|j| acc[j].take().map(|v| (j, v)))
                    .filter(|(_, v)| !ring.is_zero(v))
                    .collect();
                out
            })
            .collect();
        Ok(Self {
            ring: ring.clone(),
            dim: self.dim,
            rows,
        })
    }

    pub fn scale(&self, s: &Elem) -> Self {
        let ring = &self.ring;
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(c, v)| (*c, ring.mul(s, v)))
                    .filter(|(_, v)| !ring.is_zero(v))
                    .collect()
            })
            .collect();
        Self {
            ring: ring.clone(),
            dim: self.dim,
            rows,
        }
    }

    fn neg_ref(&self) -> Self {
        let ring = &self.ring;
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|(c, v)| (*c, ring.neg(v))).collect())
            .collect();
        Self {
            ring: ring.clone(),
            dim: self.dim,
            rows,
        }
    }

    pub fn transpose(&self) -> Self {
        let mut rows: Vec<Vec<(usize, Elem)>> = vec![Vec::new(); self.dim];
        for (r, c, v) in self.entries() {
            rows[c].push((r, v.clone()));
        }
        Self {
            ring: self.ring.clone(),
            dim: self.dim,
            rows,
        }
    }

    /// `[A, B] = AB − BA`.
    pub fn commutator(&self, other: &Self) -> Result<Self, RingError> {
        self.checked_mul(other)?
            .checked_sub(&other.checked_mul(self)?)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(&self.ring, self.dim), |acc, _| &acc * self)
    }

    /// Pushes an integer matrix through the canonical morphism Z → R.
    pub fn map_into(&self, target: &Ring) -> Result<Self, RingError> {
        if self.ring != Ring::Integers {
            return Err(RingError::RingMismatch);
        }
        let entries = self.entries().map(|(r, c, v)| {
            let Elem::Int(n) = v else { unreachable!() };
            (r, c, target.from_bigint(n))
        });
        Self::from_entries(target, self.dim, entries)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(&self.ring, self.dim)
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries().all(|(r, c, _)| r == c)
    }

    pub fn diagonal_entries(&self) -> Vec<Elem> {
        (0..self.dim).map(|i| self.entry(i, i)).collect()
    }

    pub fn is_strictly_upper(&self) -> bool {
        self.entries().all(|(r, c, _)| r < c)
    }

    pub fn is_strictly_lower(&self) -> bool {
        self.entries().all(|(r, c, _)| r > c)
    }

    /// Upper triangular with every diagonal entry equal to one.
    pub fn is_upper_unitriangular(&self) -> bool {
        self.entries().all(|(r, c, _)| r <= c)
            && (0..self.dim).all(|i| self.get(i, i).is_some_and(|v| self.ring.is_one(v)))
    }

    pub fn is_lower_unitriangular(&self) -> bool {
        self.transpose().is_upper_unitriangular()
    }

    /// Exactly one nonzero entry in every row and every column.
    pub fn is_monomial(&self) -> bool {
        let mut seen = vec![false; self.dim];
        for row in &self.rows {
            if row.len() != 1 || std::mem::replace(&mut seen[row[0].0], true) {
                return false;
            }
        }
        true
    }

    /// For a monomial matrix, the row holding the nonzero entry of each
    /// column. `None` if the matrix is not monomial.
    pub fn monomial_pattern(&self) -> Option<Vec<usize>> {
        if !self.is_monomial() {
            return None;
        }
        let mut pattern = vec![0; self.dim];
        for (r, c, _) in self.entries() {
            pattern[c] = r;
        }
        Some(pattern)
    }

    /// Band width: the largest `c − r` over nonzero entries (0 if none).
    pub fn upper_bandwidth(&self) -> usize {
        self.entries()
            .map(|(r, c, _)| c.saturating_sub(r))
            .max()
            .unwrap_or(0)
    }
}

impl Mul for &SparseMatrix {
    type Output = SparseMatrix;

    /// Panics if the rings or dimensions differ; use
    /// [`SparseMatrix::checked_mul`] to handle that case.
    fn mul(self, rhs: Self) -> SparseMatrix {
        self.checked_mul(rhs)
            .expect("matrix product of incompatible operands")
    }
}

impl Add for &SparseMatrix {
    type Output = SparseMatrix;

    fn add(self, rhs: Self) -> SparseMatrix {
        self.checked_add(rhs)
            .expect("matrix sum of incompatible operands")
    }
}

impl Sub for &SparseMatrix {
    type Output = SparseMatrix;

    fn sub(self, rhs: Self) -> SparseMatrix {
        self.checked_sub(rhs)
            .expect("matrix difference of incompatible operands")
    }
}

impl Neg for &SparseMatrix {
    type Output = SparseMatrix;

    fn neg(self) -> SparseMatrix {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(ring: &Ring, dim: usize, r: usize, c: usize) -> SparseMatrix {
        SparseMatrix::from_entries(ring, dim, [(r, c, ring.one())]).unwrap()
    }

    #[test]
    fn identity_is_neutral() {
        let z = Ring::Integers;
        let a = SparseMatrix::from_entries(
            &z,
            3,
            [
                (0, 1, z.from_i64(4)),
                (2, 0, z.from_i64(-7)),
                (1, 1, z.from_i64(2)),
            ],
        )
        .unwrap();
        let id = SparseMatrix::identity(&z, 3);
        assert_eq!(&a * &id, a);
        assert_eq!(&id * &a, a);
    }

    #[test]
    fn bandwidth_grows_under_products() {
        let z = Ring::Integers;
        let n = 5;
        let shift =
            SparseMatrix::from_entries(&z, n, (0..n - 1).map(|i| (i, i + 1, z.one()))).unwrap();
        assert!(shift.is_strictly_upper());
        assert_eq!(shift.upper_bandwidth(), 1);
        let sq = &shift * &shift;
        assert!(sq.is_strictly_upper());
        assert_eq!(sq.upper_bandwidth(), 2);
        assert!(sq.entries().all(|(r, c, _)| c == r + 2));
    }

    #[test]
    fn characteristic_two_squares_to_identity() {
        let f2 = Ring::prime_field(2).unwrap();
        let g = &SparseMatrix::identity(&f2, 2) + &unit(&f2, 2, 0, 1);
        assert!((&g * &g).is_identity());
    }

    #[test]
    fn duplicates_sum_and_zeros_vanish() {
        let z = Ring::Integers;
        let m = SparseMatrix::from_entries(
            &z,
            2,
            [
                (0, 0, z.from_i64(1)),
                (0, 0, z.from_i64(-1)),
                (1, 0, z.from_i64(3)),
                (1, 0, z.from_i64(2)),
            ],
        )
        .unwrap();
        assert_eq!(m.nnz(), 1);
        assert_eq!(m.get(1, 0), Some(&z.from_i64(5)));
        assert!(SparseMatrix::from_entries(&z, 2, [(2, 0, z.one())]).is_err());
    }

    #[test]
    fn mismatches_are_errors() {
        let a = SparseMatrix::identity(&Ring::Integers, 2);
        let b = SparseMatrix::identity(&Ring::Rationals, 2);
        let c = SparseMatrix::identity(&Ring::Integers, 3);
        assert_eq!(a.checked_mul(&b), Err(RingError::RingMismatch));
        assert_eq!(a.checked_add(&c), Err(RingError::DimMismatch(2, 3)));
    }

    #[test]
    fn monomial_patterns() {
        let z = Ring::Integers;
        let m = SparseMatrix::from_entries(
            &z,
            3,
            [(1, 0, z.one()), (0, 1, z.from_i64(-1)), (2, 2, z.one())],
        )
        .unwrap();
        assert_eq!(m.monomial_pattern(), Some(vec![1, 0, 2]));
        assert!(!(&m + &unit(&z, 3, 0, 0)).is_monomial());
    }

    #[test]
    fn reduction_mod_p() {
        let z = Ring::Integers;
        let f3 = Ring::prime_field(3).unwrap();
        let m = SparseMatrix::from_entries(&z, 2, [(0, 0, z.from_i64(3)), (0, 1, z.from_i64(-1))])
            .unwrap();
        let r = m.map_into(&f3).unwrap();
        assert_eq!(r.nnz(), 1);
        assert_eq!(r.get(0, 1), Some(&Elem::Residue(2)));
    }
}
