//! Dense integer matrices and their Smith normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let data: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| {
                assert_eq!(r.as_ref().len(), cols, "ragged integer matrix");
                r.as_ref().iter().map(|&x| BigInt::from(x)).collect()
            })
            .collect();
        Self {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn from_big_rows(data: Vec<Vec<BigInt>>, cols: usize) -> Self {
        assert!(
            data.iter().all(|r| r.len() == cols),
            "ragged integer matrix"
        );
        Self {
            rows: data.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r][c]
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.data[r]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "integer matrix shapes do not chain");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i][j] += a * &other.data[k][j];
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j][i] = self.data[i][j].clone();
            }
        }
        out
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.data.swap(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for row in &mut self.data {
            row.swap(a, b);
        }
    }

    /// row[dst] += q · row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = &self.data[src][j] * q;
            self.data[dst][j] += v;
        }
    }

    /// col[dst] += q · col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for row in &mut self.data {
            let v = &row[src] * q;
            row[dst] += v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for v in &mut self.data[r] {
            *v = -&*v;
        }
    }

    fn negate_col(&mut self, c: usize) {
        for row in &mut self.data {
            row[c] = -&row[c];
        }
    }
}

/// `left · M · right = diag`, with `left`, `right` unimodular and their
/// inverses tracked alongside.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub diag: Vec<BigInt>,
    pub left: IntMatrix,
    pub left_inv: IntMatrix,
    pub right: IntMatrix,
    pub right_inv: IntMatrix,
    pub shape: (usize, usize),
}

impl SmithForm {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diag.iter().take_while(|d| !d.is_zero()).count()
    }

    /// The nonzero diagonal entries, each dividing the next.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diag[..self.rank()].to_vec()
    }

    /// Diagonal as a full rows×cols matrix.
    pub fn diag_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.shape.0, self.shape.1);
        for (k, v) in self.diag.iter().enumerate() {
            d.data[k][k] = v.clone();
        }
        d
    }

    /// Solves `x · M = v` over the integers, if possible.
    pub fn solve_row_combination(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let (rows, cols) = self.shape;
        assert_eq!(v.len(), cols, "target has the wrong length");
        let vr = IntMatrix::from_big_rows(vec![v.to_vec()], cols).mul(&self.right);
        let rank = self.rank();
        let mut y = vec![BigInt::zero(); rows];
        for (k, target) in vr.row(0).iter().enumerate() {
            if k < rank {
                let (q, r) = target.div_rem(&self.diag[k]);
                if !r.is_zero() {
                    return None;
                }
                y[k] = q;
            } else if !target.is_zero() {
                return None;
            }
        }
        let x = IntMatrix::from_big_rows(vec![y], rows).mul(&self.left);
        Some(x.data.into_iter().next().unwrap())
    }
}

/// Smith normal form by repeated minimal-pivot elimination.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut left = IntMatrix::identity(rows);
    let mut left_inv = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);
    let mut right_inv = IntMatrix::identity(cols);

    let steps = rows.min(cols);
    'outer: for t in 0..steps {
        loop {
            let pivot = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !a.data[i][j].is_zero())
                .min_by(|&(i, j), &(k, l)| a.data[i][j].abs().cmp(&a.data[k][l].abs()));
            let Some((pi, pj)) = pivot else { break 'outer };
            if pi != t {
                a.swap_rows(t, pi);
                left.swap_rows(t, pi);
                left_inv.swap_cols(t, pi);
            }
            if pj != t {
                a.swap_cols(t, pj);
                right.swap_cols(t, pj);
                right_inv.swap_rows(t, pj);
            }
            let p = a.data[t][t].clone();
            let mut clean = true;
            for i in t + 1..rows {
                if a.data[i][t].is_zero() {
                    continue;
                }
                let q = a.data[i][t].div_floor(&p);
                let neg_q = -&q;
                a.add_row(i, t, &neg_q);
                left.add_row(i, t, &neg_q);
                left_inv.add_col(t, i, &q);
                if !a.data[i][t].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if a.data[t][j].is_zero() {
                    continue;
                }
                let q = a.data[t][j].div_floor(&p);
                let neg_q = -&q;
                a.add_col(j, t, &neg_q);
                right.add_col(j, t, &neg_q);
                right_inv.add_row(t, j, &q);
                if !a.data[t][j].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a.data[i][j].is_multiple_of(&p)));
            if let Some(i) = offender {
                let one = BigInt::one();
                a.add_row(t, i, &one);
                left.add_row(t, i, &one);
                left_inv.add_col(i, t, &-one);
                continue;
            }
            break;
        }
        if a.data[t][t].is_negative() {
            a.negate_row(t);
            left.negate_row(t);
            left_inv.negate_col(t);
        }
    }

    let diag = (0..steps).map(|k| a.data[k][k].clone()).collect();
    SmithForm {
        diag,
        left,
        left_inv,
        right,
        right_inv,
        shape: (rows, cols),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(rows: &[&[i64]]) -> Vec<i64> {
        let snf = smith_normal_form(&IntMatrix::from_rows(rows));
        snf.invariant_factors()
            .iter()
            .map(|d| d.try_into().unwrap())
            .collect()
    }

    #[test]
    fn diagonal_is_normalised() {
        assert_eq!(factors(&[&[2, 0], &[0, 3]]), vec![1, 6]);
        assert_eq!(factors(&[&[4, 0], &[0, 6]]), vec![2, 12]);
    }

    #[test]
    fn a2_cartan() {
        assert_eq!(factors(&[&[2, -1], &[-1, 2]]), vec![1, 3]);
    }

    #[test]
    fn rank_deficient_and_rectangular() {
        let snf = smith_normal_form(&IntMatrix::from_rows(&[[1i64, 2, 3], [2, 4, 6]]));
        assert_eq!(snf.rank(), 1);
        assert_eq!(snf.invariant_factors(), vec![BigInt::one()]);
        let empty = smith_normal_form(&IntMatrix::zeros(2, 2));
        assert_eq!(empty.rank(), 0);
    }

    #[test]
    fn row_combinations() {
        let m = IntMatrix::from_rows(&[[2i64, 0], [0, 3]]);
        let snf = smith_normal_form(&m);
        let two = |x: i64| BigInt::from(x);
        let x = snf.solve_row_combination(&[two(4), two(-3)]).unwrap();
        assert_eq!(x, vec![two(2), two(-1)]);
        assert!(snf.solve_row_combination(&[two(1), two(0)]).is_none());
    }
}
