//! The Lie algebra action on a minuscule module.
//!
//! For a weight basis `{z_μ}`, the Chevalley generators act by
//!
//! ```text
//! e_i z_μ = z_{μ+α_i}  if (μ, α_i^∨) = −1, else 0
//! f_i z_μ = z_{μ−α_i}  if (μ, α_i^∨) = +1, else 0
//! h_i z_μ = (μ, α_i^∨) z_μ
//! ```
//!
//! All matrices here are integer matrices in the basis order of the
//! [`WeightBasis`], with column `k` holding the image of `z_{μ_k}`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::exactring::{smith_normal_form, Elem, IntMatrix, Ring, SparseMatrix};
use crate::minuscule::WeightBasis;
use crate::report::CheckReport;
use crate::rootdata::{Root, RootDatum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("[e_{alpha}, e_{beta}] is not a multiple of the expected root vector")]
    InconsistentConstant { alpha: usize, beta: usize },
}

/// The matrices `e_i`, `f_i`, `h_i` for every node.
#[derive(Debug, Clone)]
pub struct LieGenSet {
    basis: WeightBasis,
    pub e: Vec<SparseMatrix>,
    pub f: Vec<SparseMatrix>,
    pub h: Vec<SparseMatrix>,
}

fn int(n: i64) -> Elem {
    Elem::Int(BigInt::from(n))
}

fn as_i64(e: &Elem) -> i64 {
    match e {
        Elem::Int(n) => n.to_i64().expect("small integer entry"),
        _ => panic!("expected an integer entry"),
    }
}

impl LieGenSet {
    pub fn new(basis: WeightBasis) -> Self {
        let n = basis.datum().rank();
        let d = basis.dim();
        let z = Ring::Integers;
        let mut e = Vec::with_capacity(n);
        let mut f = Vec::with_capacity(n);
        let mut h = Vec::with_capacity(n);
        for i in 0..n {
            let alpha = basis.datum().cartan().column(i);
            let mut e_entries = Vec::new();
            let mut f_entries = Vec::new();
            let mut h_entries = Vec::new();
            for (k, mu) in basis.weights().iter().enumerate() {
                match mu.0[i] {
                    -1 => {
                        let up = basis
                            .index_of(&mu.add(&alpha))
                            .expect("minuscule orbit is closed");
                        e_entries.push((up, k, int(1)));
                    }
                    1 => {
                        let down = basis
                            .index_of(&mu.sub(&alpha))
                            .expect("minuscule orbit is closed");
                        f_entries.push((down, k, int(1)));
                    }
                    _ => {}
                }
                h_entries.push((k, k, int(mu.0[i])));
            }
            e.push(SparseMatrix::from_entries(&z, d, e_entries).unwrap());
            f.push(SparseMatrix::from_entries(&z, d, f_entries).unwrap());
            h.push(SparseMatrix::from_entries(&z, d, h_entries).unwrap());
        }
        Self { basis, e, f, h }
    }

    pub fn basis(&self) -> &WeightBasis {
        &self.basis
    }

    pub fn datum(&self) -> &RootDatum {
        self.basis.datum()
    }

    pub fn rank(&self) -> usize {
        self.e.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// `n_i(t) = (1 + t e_i)(1 − t⁻¹ f_i)(1 + t e_i)` for `t = ±1`.
    pub fn n_matrix(&self, i: usize, sign: i64) -> SparseMatrix {
        assert!(sign == 1 || sign == -1, "n_matrix takes t = ±1");
        let id = SparseMatrix::identity(&Ring::Integers, self.dim());
        let x = &id + &self.e[i].scale(&int(sign));
        let y = &id - &self.f[i].scale(&int(sign));
        &(&x * &y) * &x
    }

    /// `n_i = n_i(1)`.
    pub fn n(&self, i: usize) -> SparseMatrix {
        self.n_matrix(i, 1)
    }

    /// `n_i⁻¹ = n_i(−1)`.
    pub fn n_inv(&self, i: usize) -> SparseMatrix {
        self.n_matrix(i, -1)
    }

    /// `e_α = n_{w_1} ··· n_{w_k} e_base n_{w_k}⁻¹ ··· n_{w_1}⁻¹`, along the
    /// root's stored word.
    pub fn root_vector(&self, alpha: usize) -> RootVector {
        let ns: Vec<_> = (0..self.rank())
            .map(|i| (self.n(i), self.n_inv(i)))
            .collect();
        self.conjugate_along_word(alpha, &ns)
    }

    /// Root vectors for every root, in root-list order.
    pub fn root_vectors(&self) -> Vec<RootVector> {
        let ns: Vec<_> = (0..self.rank())
            .map(|i| (self.n(i), self.n_inv(i)))
            .collect();
        (0..self.datum().roots().len())
            .into_par_iter()
            .map(|alpha| self.conjugate_along_word(alpha, &ns))
            .collect()
    }

    fn conjugate_along_word(
        &self,
        alpha: usize,
        ns: &[(SparseMatrix, SparseMatrix)],
    ) -> RootVector {
        let root = self.datum().root(alpha);
        let mut m = self.e[root.base].clone();
        for &i in root.word.iter().rev() {
            m = &(&ns[i].0 * &m) * &ns[i].1;
        }
        RootVector {
            index: alpha,
            root: root.clone(),
            matrix: m,
        }
    }
}

/// Builds `e_i`, `f_i`, `h_i` on the given basis.
pub fn chevalley_generators(basis: WeightBasis) -> LieGenSet {
    LieGenSet::new(basis)
}

/// A chosen root vector `e_α`; its sign is fixed by the root's word.
#[derive(Debug, Clone)]
pub struct RootVector {
    pub index: usize,
    pub root: Root,
    pub matrix: SparseMatrix,
}

fn ad_power(x: &SparseMatrix, y: &SparseMatrix, k: usize) -> SparseMatrix {
    (0..k).fold(y.clone(), |acc, _| x.commutator(&acc).unwrap())
}

/// Checks every defining relation of the generators as exact matrix
/// identities, plus triangularity and nilpotence of `e_i`, `f_i`.
pub fn verify_serre(gens: &LieGenSet) -> CheckReport {
    let a = gens.datum().cartan();
    let n = gens.rank();
    let mut report = CheckReport::new();
    for i in 0..n {
        report.record(
            format!("e_{0} strictly upper, f_{0} strictly lower", i + 1),
            gens.e[i].is_strictly_upper()
                && gens.f[i].is_strictly_lower()
                && gens.h[i].is_diagonal(),
        );
        report.record(
            format!("e_{0}^2 = f_{0}^2 = 0", i + 1),
            (&gens.e[i] * &gens.e[i]).is_zero() && (&gens.f[i] * &gens.f[i]).is_zero(),
        );
    }
    for i in 0..n {
        for j in 0..n {
            report.record(
                format!("[h_{}, h_{}] = 0", i + 1, j + 1),
                gens.h[i].commutator(&gens.h[j]).unwrap().is_zero(),
            );
        }
    }
    let diagonals: Vec<Vec<i64>> = gens
        .h
        .iter()
        .map(|h| h.diagonal_entries().iter().map(as_i64).collect())
        .collect();
    let snf = smith_normal_form(&IntMatrix::from_rows(&diagonals));
    report.record("h_1..h_n linearly independent", snf.rank() == n);
    for i in 0..n {
        for j in 0..n {
            // (α_i, α_j^∨) = a_{ji}
            let c = int(a.get(j, i));
            report.record(
                format!("[h_{}, e_{}] = {} e_{}", j + 1, i + 1, a.get(j, i), i + 1),
                gens.h[j].commutator(&gens.e[i]).unwrap() == gens.e[i].scale(&c),
            );
            report.record(
                format!("[h_{}, f_{}] = {} f_{}", j + 1, i + 1, -a.get(j, i), i + 1),
                gens.h[j].commutator(&gens.f[i]).unwrap() == gens.f[i].scale(&int(-a.get(j, i))),
            );
        }
    }
    for i in 0..n {
        for j in 0..n {
            let bracket = gens.e[i].commutator(&gens.f[j]).unwrap();
            if i == j {
                report.record(
                    format!("[e_{0}, f_{0}] = h_{0}", i + 1),
                    bracket == gens.h[i],
                );
            } else {
                report.record(format!("[e_{}, f_{}] = 0", i + 1, j + 1), bracket.is_zero());
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let k = (1 - a.get(i, j)) as usize;
            report.record(
                format!("ad(e_{})^{k} e_{} = 0", i + 1, j + 1),
                ad_power(&gens.e[i], &gens.e[j], k).is_zero(),
            );
            report.record(
                format!("ad(f_{})^{k} f_{} = 0", i + 1, j + 1),
                ad_power(&gens.f[i], &gens.f[j], k).is_zero(),
            );
        }
    }
    report
}

/// Braid relation `n_i n_j n_i ··· = n_j n_i n_j ···` with `m` factors on
/// each side, `m` the order of `s_i s_j`.
pub fn verify_braid(gens: &LieGenSet, i: usize, j: usize) -> bool {
    assert_ne!(i, j, "braid relations need distinct nodes");
    let m = gens.datum().cartan().coxeter_order(i, j);
    let (ni, nj) = (gens.n(i), gens.n(j));
    let id = SparseMatrix::identity(&Ring::Integers, gens.dim());
    let mut lhs = id.clone();
    let mut rhs = id;
    for k in 0..m {
        let (a, b) = if k % 2 == 0 { (&ni, &nj) } else { (&nj, &ni) };
        lhs = &lhs * a;
        rhs = &rhs * b;
    }
    lhs == rhs
}

/// Braid relations for every pair of distinct nodes.
pub fn verify_all_braids(gens: &LieGenSet) -> CheckReport {
    let mut report = CheckReport::new();
    let n = gens.rank();
    for i in 0..n {
        for j in i + 1..n {
            let m = gens.datum().cartan().coxeter_order(i, j);
            report.record(
                format!("braid n_{} n_{} (m = {m})", i + 1, j + 1),
                verify_braid(gens, i, j),
            );
        }
    }
    for i in 0..n {
        let ni = gens.n(i);
        report.record(
            format!("n_{} monomial with ±1 entries", i + 1),
            ni.is_monomial() && ni.entries().all(|(_, _, v)| as_i64(v).abs() == 1),
        );
        report.record(format!("n_{}^4 = 1", i + 1), ni.pow(4).is_identity());
    }
    report
}

/// `n_i⁻¹ h_j n_i = h_j − (α_i, α_j^∨) h_i`.
pub fn verify_cartan_conjugation(gens: &LieGenSet, i: usize, j: usize) -> bool {
    let a_ji = gens.datum().cartan().get(j, i);
    let lhs = &(&gens.n_inv(i) * &gens.h[j]) * &gens.n(i);
    lhs == &gens.h[j] - &gens.h[i].scale(&int(a_ji))
}

/// Checks the structural invariants of a root vector: entries `±1`, at most
/// one per row and column, square zero, and `e_α z_μ = ±z_{μ+α}` exactly
/// when `(μ, α^∨) = −1`.
pub fn check_root_vector(gens: &LieGenSet, alpha: usize, m: &SparseMatrix) -> bool {
    let datum = gens.datum();
    let basis = gens.basis();
    let root = datum.root(alpha);
    let mut col_seen = vec![false; m.dim()];
    for r in 0..m.dim() {
        let row = m.row(r);
        if row.len() > 1 {
            return false;
        }
        for (c, v) in row {
            if as_i64(v).abs() != 1 || std::mem::replace(&mut col_seen[*c], true) {
                return false;
            }
        }
    }
    if !(m * m).is_zero() {
        return false;
    }
    basis.weights().iter().enumerate().all(|(k, mu)| {
        let target = mu.add(&root.weight);
        let image: Vec<(usize, &Elem)> = m
            .entries()
            .filter(|(_, c, _)| *c == k)
            .map(|(r, _, v)| (r, v))
            .collect();
        if datum.pairing_with_coroot(mu, alpha) == -1 {
            image.len() == 1 && basis.index_of(&target) == Some(image[0].0)
        } else {
            image.is_empty()
        }
    })
}

/// Integer `c` with `a = c · b`, where `b` is nonzero.
fn scalar_ratio(a: &SparseMatrix, b: &SparseMatrix) -> Option<i64> {
    let (r, c, bv) = b.entries().next()?;
    let bv = as_i64(bv);
    let av = as_i64(&a.entry(r, c));
    if av % bv != 0 {
        return None;
    }
    let k = av / bv;
    (*a == b.scale(&int(k))).then_some(k)
}

/// Signed structure constants among the chosen root vectors.
#[derive(Debug, Clone, Default)]
pub struct StructureConstants {
    /// `[e_α, e_β] = c e_{α+β}`.
    pub c: HashMap<(usize, usize), i64>,
    /// `e_β e_α e_β = c′ e_{α+2β}`.
    pub c_prime: HashMap<(usize, usize), i64>,
    /// `e_α e_β e_α = c″ e_{2α+β}`.
    pub c_dprime: HashMap<(usize, usize), i64>,
}

/// Structure constants for the root vectors of `gens`.
pub fn structure_constants(gens: &LieGenSet) -> Result<StructureConstants, LieError> {
    let rv: Vec<SparseMatrix> = gens.root_vectors().into_iter().map(|r| r.matrix).collect();
    StructureConstants::compute(gens.datum(), &rv)
}

impl StructureConstants {
    /// `rv[k]` is the root vector of root `k`.
    pub fn compute(datum: &RootDatum, rv: &[SparseMatrix]) -> Result<Self, LieError> {
        let nroots = datum.roots().len();
        let pairs: Vec<(usize, usize)> = (0..nroots)
            .flat_map(|a| (0..nroots).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && datum.negative(a) != b)
            .collect();
        type Row = ((usize, usize), Option<i64>, Option<i64>, Option<i64>);
        let rows: Vec<Result<Row, LieError>> = pairs
            .par_iter()
            .map(|&(a, b)| {
                let err = LieError::InconsistentConstant { alpha: a, beta: b };
                let Some(sum) = datum.root_sum(a, b) else {
                    return Ok(((a, b), None, None, None));
                };
                let bracket = rv[a].commutator(&rv[b]).unwrap();
                let c = scalar_ratio(&bracket, &rv[sum]).ok_or(err.clone())?;
                let c_prime = match datum.root_sum(sum, b) {
                    Some(t) => Some(
                        scalar_ratio(&(&(&rv[b] * &rv[a]) * &rv[b]), &rv[t]).ok_or(err.clone())?,
                    ),
                    None => None,
                };
                let c_dprime = match datum.root_sum(sum, a) {
                    Some(t) => {
                        Some(scalar_ratio(&(&(&rv[a] * &rv[b]) * &rv[a]), &rv[t]).ok_or(err)?)
                    }
                    None => None,
                };
                Ok(((a, b), Some(c), c_prime, c_dprime))
            })
            .collect();
        let mut out = Self::default();
        for row in rows {
            let (key, c, cp, cdp) = row?;
            if let Some(c) = c {
                out.c.insert(key, c);
            }
            if let Some(cp) = cp {
                out.c_prime.insert(key, cp);
            }
            if let Some(cdp) = cdp {
                out.c_dprime.insert(key, cdp);
            }
        }
        Ok(out)
    }

    /// Checks the value ranges: `c ∈ {±1, ±2}` with `|c| = 2` exactly when
    /// `α − β` is a root, `c′, c″ ∈ {±1}`, and `c(β, α) = −c(α, β)`.
    pub fn verify(&self, datum: &RootDatum) -> CheckReport {
        let mut report = CheckReport::new();
        let mut range = true;
        let mut two_iff = true;
        let mut antisym = true;
        for (&(a, b), &c) in &self.c {
            range &= matches!(c.abs(), 1 | 2);
            let diff = datum.find(&datum.root(a).weight.sub(&datum.root(b).weight));
            two_iff &= (c.abs() == 2) == diff.is_some();
            antisym &= self.c.get(&(b, a)) == Some(&-c);
        }
        report.record("c in {±1, ±2}", range);
        report.record("|c| = 2 iff α − β is a root", two_iff);
        report.record("c(β, α) = −c(α, β)", antisym);
        report.record("c′ in {±1}", self.c_prime.values().all(|v| v.abs() == 1));
        report.record("c″ in {±1}", self.c_dprime.values().all(|v| v.abs() == 1));
        report
    }
}

type SparseVec = BTreeMap<usize, BigRational>;

fn flatten(m: &SparseMatrix) -> SparseVec {
    let d = m.dim();
    m.entries()
        .map(|(r, c, v)| {
            let Elem::Int(n) = v else { unreachable!() };
            (r * d + c, BigRational::from_integer(n.clone()))
        })
        .collect()
}

/// Echelon basis keyed by leading index; each row has leading coefficient 1.
#[derive(Default)]
struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

impl Echelon {
    /// Adds `v` if it is independent of the rows so far.
    fn insert(&mut self, mut v: SparseVec) -> bool {
        while let Some((&lead, coeff)) = v.iter().next() {
            let coeff = coeff.clone();
            match self.rows.get(&lead) {
                Some(row) => {
                    for (k, x) in row {
                        let entry = v.entry(*k).or_insert_with(BigRational::zero);
                        *entry -= &coeff * x;
                        if entry.is_zero() {
                            v.remove(k);
                        }
                    }
                }
                None => {
                    let inv = coeff.recip();
                    for x in v.values_mut() {
                        *x = &*x * &inv;
                    }
                    debug_assert!(v[&lead].is_one());
                    self.rows.insert(lead, v);
                    return true;
                }
            }
        }
        false
    }
}

/// Dimension over Q of the Lie algebra generated by the `e_i`, `f_i`,
/// obtained by bracketing with generators until the span stops growing.
pub fn lie_closure_dimension(gens: &LieGenSet) -> usize {
    let generators: Vec<&SparseMatrix> = gens.e.iter().chain(gens.f.iter()).collect();
    let mut echelon = Echelon::default();
    let mut queue: Vec<SparseMatrix> = generators.iter().map(|g| (*g).clone()).collect();
    let mut dim = 0;
    while let Some(x) = queue.pop() {
        if x.is_zero() || !echelon.insert(flatten(&x)) {
            continue;
        }
        dim += 1;
        for g in &generators {
            queue.push(g.commutator(&x).unwrap());
        }
    }
    dim
}

/// The weight of a matrix under the Cartan action: `c` with
/// `[h_j, x] = c_j x` for all `j`, if `x` is a simultaneous eigenvector.
pub fn cartan_weight(gens: &LieGenSet, x: &SparseMatrix) -> Option<Vec<i64>> {
    gens.h
        .iter()
        .map(|h| {
            let b = h.commutator(x).unwrap();
            if b.is_zero() {
                return Some(0);
            }
            scalar_ratio(&b, x)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::rootdata::{Family, LieType};

    fn gens(f: Family, n: usize, nodes: &[usize]) -> LieGenSet {
        let datum = Arc::new(RootDatum::build(LieType::new(f, n).unwrap()).unwrap());
        LieGenSet::new(WeightBasis::build(datum, nodes).unwrap())
    }

    fn dense(m: &SparseMatrix) -> Vec<Vec<i64>> {
        (0..m.dim())
            .map(|r| (0..m.dim()).map(|c| as_i64(&m.entry(r, c))).collect())
            .collect()
    }

    #[test]
    fn a1_generators() {
        let g = gens(Family::A, 1, &[0]);
        assert_eq!(dense(&g.e[0]), vec![vec![0, 1], vec![0, 0]]);
        assert_eq!(dense(&g.f[0]), vec![vec![0, 0], vec![1, 0]]);
        assert_eq!(dense(&g.h[0]), vec![vec![1, 0], vec![0, -1]]);
        // n_1 z_{ϖ} = −z_{−ϖ}, n_1 z_{−ϖ} = z_{ϖ}
        assert_eq!(dense(&g.n(0)), vec![vec![0, 1], vec![-1, 0]]);
        assert_eq!(dense(&g.n(0).transpose()), vec![vec![0, -1], vec![1, 0]]);
    }

    #[test]
    fn c2_cartan_diagonal() {
        let g = gens(Family::C, 2, &[1]);
        assert_eq!(
            g.h[1]
                .diagonal_entries()
                .iter()
                .map(as_i64)
                .collect::<Vec<_>>(),
            vec![1, -1, 1, -1]
        );
    }

    #[test]
    fn highest_weight_is_killed() {
        let g = gens(Family::E, 6, &[0]);
        for e in &g.e {
            assert!(e.entries().all(|(_, c, _)| c != 0));
        }
    }

    #[test]
    fn serre_small() {
        assert!(verify_serre(&gens(Family::A, 2, &[0])).all_passed());
        assert!(verify_serre(&gens(Family::B, 2, &[0])).all_passed());
        assert!(verify_serre(&gens(Family::C, 3, &[2])).all_passed());
    }

    #[test]
    fn transposed_cartan_convention_fails_outside_simply_laced() {
        // [h_j, e_i] scales by a_{ji}; using a_{ij} instead breaks in B_2.
        let g = gens(Family::B, 2, &[0]);
        let a = g.datum().cartan();
        let wrong = g.h[1].commutator(&g.e[0]).unwrap() == g.e[0].scale(&int(a.get(0, 1)));
        assert!(!wrong);
    }

    #[test]
    fn braids() {
        let a2 = gens(Family::A, 2, &[0]);
        assert!(verify_braid(&a2, 0, 1));
        let b2 = gens(Family::B, 2, &[0]);
        assert_eq!(b2.datum().cartan().coxeter_order(0, 1), 4);
        assert!(verify_braid(&b2, 0, 1));
        let d4 = gens(Family::D, 4, &[0, 1]);
        assert_eq!(d4.datum().cartan().coxeter_order(0, 1), 2);
        assert!(verify_braid(&d4, 0, 1));
    }

    #[test]
    fn n_matrix_shape() {
        let g = gens(Family::D, 5, &[4]);
        for i in 0..5 {
            let ni = g.n(i);
            assert!(ni.pow(4).is_identity());
            let sq = ni.pow(2);
            assert!(sq.is_diagonal());
            for (k, mu) in g.basis().weights().iter().enumerate() {
                let expected = if mu.0[i] % 2 == 0 { 1 } else { -1 };
                assert_eq!(as_i64(&sq.entry(k, k)), expected);
                if mu.0[i] == 0 {
                    assert_eq!(ni.row(k), &[(k, int(1))]);
                }
            }
        }
    }

    #[test]
    fn root_vectors_are_well_formed() {
        let g = gens(Family::A, 2, &[0]);
        let rv: Vec<SparseMatrix> = g.root_vectors().into_iter().map(|r| r.matrix).collect();
        assert_eq!(rv[0], g.e[0]);
        let top = g.datum().root_sum(0, 1).unwrap();
        assert_eq!(rv[top].nnz(), 1);
        for (alpha, m) in rv.iter().enumerate() {
            assert!(check_root_vector(&g, alpha, m));
            assert_eq!(&g.root_vector(alpha).matrix, m);
            assert_eq!(
                cartan_weight(&g, m).unwrap(),
                g.datum().root(alpha).weight.0
            );
        }
        let neg = g.datum().negative(1);
        assert!(rv[neg] == g.f[1] || rv[neg] == -&g.f[1]);
    }

    #[test]
    fn constants_small() {
        let g = gens(Family::A, 2, &[0]);
        let sc = structure_constants(&g).unwrap();
        assert_eq!(sc.c[&(0, 1)].abs(), 1);
        assert!(sc.verify(g.datum()).all_passed());

        let c2 = gens(Family::C, 2, &[1]);
        let d = c2.datum();
        let sc = structure_constants(&c2).unwrap();
        assert!(sc.verify(d).all_passed());
        // an orthogonal pair with a root sum has |c| = 2
        let mut found = false;
        for (&(a, b), &c) in &sc.c {
            if d.find(&d.root(a).weight.sub(&d.root(b).weight)).is_some() {
                assert_eq!(c.abs(), 2);
                found = true;
            }
        }
        assert!(found);
    }

    #[test]
    fn closure_dimensions() {
        assert_eq!(lie_closure_dimension(&gens(Family::A, 1, &[0])), 3);
        assert_eq!(lie_closure_dimension(&gens(Family::A, 2, &[0])), 8);
        assert_eq!(lie_closure_dimension(&gens(Family::D, 4, &[0])), 28);
    }

    #[test]
    fn cartan_conjugation() {
        let a2 = gens(Family::A, 2, &[0]);
        assert!(verify_cartan_conjugation(&a2, 0, 1));
        let lhs = &(&a2.n_inv(0) * &a2.h[1]) * &a2.n(0);
        assert_eq!(lhs, &a2.h[1] + &a2.h[0]);
        let lhs = &(&a2.n_inv(0) * &a2.h[0]) * &a2.n(0);
        assert_eq!(lhs, -&a2.h[0]);
        let b2 = gens(Family::B, 2, &[0]);
        for i in 0..2 {
            for j in 0..2 {
                assert!(verify_cartan_conjugation(&b2, i, j));
            }
        }
    }
}
