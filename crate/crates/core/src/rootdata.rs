//! Cartan matrices, weight-lattice arithmetic and root enumeration.
//!
//! Node indices are 0-based throughout the library: index `i` is the node
//! labelled `i + 1` in the Dynkin diagrams below.
//!
//! ```text
//! A_n   1 - 2 - 3 - ... - n
//! B_n   1 <= 2 - 3 - ... - n        (node 1 short)
//! C_n   1 => 2 - 3 - ... - n        (node 1 long)
//! D_n   1 \
//!           3 - 4 - ... - n
//!       2 /
//! E_6   1 - 3 - 4 - 5 - 6           E_7   1 - 3 - 4 - 5 - 6 - 7
//!               |                                 |
//!               2                                 2
//! ```
//!
//! Weights are integer vectors in the fundamental-weight basis, so the
//! `i`-th coordinate of a weight is its pairing with the coroot of the
//! `i`-th simple root, and the simple root `α_j` is column `j` of the
//! Cartan matrix.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactring::{smith_normal_form, IntMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootDataError {
    #[error("type {family}{rank} is not a diagram with minuscule weights")]
    RankOutOfRange { family: Family, rank: usize },
    #[error("unknown Lie type {0:?}")]
    UnknownType(String),
    #[error("node index {node} is out of range for rank {rank}")]
    NodeOutOfRange { node: usize, rank: usize },
    #[error("self-check failed: {0}")]
    SelfCheck(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = RootDataError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            _ => Err(RootDataError::UnknownType(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootDataError> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => rank == 6 || rank == 7,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(RootDataError::RankOutOfRange { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E if n == 6 => 36,
            Family::E => 63,
        }
    }

    /// Index of the root lattice in the weight lattice.
    pub fn fundamental_group_order(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::B | Family::C => 2,
            Family::D => 4,
            Family::E if self.rank == 6 => 3,
            Family::E => 2,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for LieType {
    type Err = RootDataError;

    /// Accepts `A3`, `d5`, `E6`, ...
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || RootDataError::UnknownType(s.to_string());
        let mut chars = s.chars();
        let family: Family = chars.next().ok_or_else(bad)?.to_string().parse()?;
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        LieType::new(family, rank)
    }
}

/// Cartan matrix with `a[i][j] = (α_j, α_i^∨)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanMatrix(Vec<Vec<i64>>);

impl CartanMatrix {
    pub fn for_type(lie_type: LieType) -> Self {
        let n = lie_type.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match lie_type.family {
            Family::A | Family::B | Family::C => {
                for i in 0..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::D => {
                link(0, 2);
                link(1, 2);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 2..n - 1 {
                    link(i, i + 1);
                }
            }
        }
        match lie_type.family {
            Family::B => a[0][1] = -2,
            Family::C => a[1][0] = -2,
            _ => {}
        }
        CartanMatrix(a)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.0[i][j]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.0
    }

    /// Column `j`: the simple root `α_j` in fundamental-weight coordinates.
    pub fn column(&self, j: usize) -> Weight {
        Weight(self.0.iter().map(|row| row[j]).collect())
    }

    /// Order of `s_i s_j` in the Weyl group, for `i ≠ j`.
    pub fn coxeter_order(&self, i: usize, j: usize) -> usize {
        match self.0[i][j] * self.0[j][i] {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            p => panic!("Cartan entries of product {p} are not crystallographic"),
        }
    }

    fn inverse(&self) -> Vec<Vec<BigRational>> {
        let n = self.rank();
        let q = |x: i64| BigRational::from_integer(BigInt::from(x));
        let mut m: Vec<Vec<BigRational>> = self
            .0
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r: Vec<_> = row.iter().map(|&x| q(x)).collect();
                r.extend((0..n).map(|j| q((i == j) as i64)));
                r
            })
            .collect();
        for col in 0..n {
            let p = (col..n)
                .find(|&r| !m[r][col].is_zero())
                .expect("Cartan matrix is nonsingular");
            m.swap(col, p);
            let inv = m[col][col].recip();
            for v in &mut m[col] {
                *v = &*v * &inv;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    let pivot = m[col].clone();
                    for (x, p) in m[r].iter_mut().zip(&pivot) {
                        *x -= p * &f;
                    }
                }
            }
        }
        m.into_iter().map(|row| row[n..].to_vec()).collect()
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight of node `i`.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i] = 1;
        w
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }

    pub fn scaled(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Root {
    /// Fundamental-weight coordinates.
    pub weight: Weight,
    /// Simple root index `i` with `α = s_{w_1} ··· s_{w_k}(α_i)`.
    pub base: usize,
    /// Shortest word, lexicographically least among shortest.
    pub word: Vec<usize>,
    pub positive: bool,
    /// Coefficients in the simple-root basis.
    pub simple_expansion: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.simple_expansion.iter().sum()
    }
}

/// Root system of one of the diagrams above, with every root enumerated.
///
/// Roots are ordered as follows: positive roots by increasing height, ties
/// broken by decreasing simple-root expansion (so the first `rank` roots are
/// `α_1, ..., α_n`), then the negatives of those in the same order.
#[derive(Debug, Clone)]
pub struct RootDatum {
    lie_type: LieType,
    cartan: CartanMatrix,
    roots: Vec<Root>,
    addition_table: HashMap<Weight, usize>,
    inverse_cartan: Vec<Vec<BigRational>>,
}

impl RootDatum {
    pub fn build(lie_type: LieType) -> Result<Self, RootDataError> {
        let cartan = CartanMatrix::for_type(lie_type);
        let n = lie_type.rank;
        let reflect = |j: usize, mu: &Weight| simple_reflection_with(&cartan, j, mu);

        // Breadth-first closure from the simple roots. Each root keeps the
        // least (word, base) pair among those reaching it at its BFS level.
        let mut found: HashMap<Weight, (Vec<usize>, usize)> = HashMap::new();
        let mut frontier: Vec<Weight> = Vec::new();
        for j in 0..n {
            let w = cartan.column(j);
            found.insert(w.clone(), (Vec::new(), j));
            frontier.push(w);
        }
        while !frontier.is_empty() {
            let mut next: HashMap<Weight, (Vec<usize>, usize)> = HashMap::new();
            for beta in &frontier {
                let (word, base) = found[beta].clone();
                for i in 0..n {
                    let gamma = reflect(i, beta);
                    if found.contains_key(&gamma) {
                        continue;
                    }
                    let mut cand_word = Vec::with_capacity(word.len() + 1);
                    cand_word.push(i);
                    cand_word.extend_from_slice(&word);
                    let cand = (cand_word, base);
                    match next.get(&gamma) {
                        Some(best) if *best <= cand => {}
                        _ => {
                            next.insert(gamma, cand);
                        }
                    }
                }
            }
            frontier = next.keys().cloned().collect();
            found.extend(next);
        }

        let mut roots: Vec<Root> = found
            .into_iter()
            .map(|(weight, (word, base))| {
                let mut expansion = vec![0i64; n];
                expansion[base] = 1;
                let mut current = cartan.column(base);
                for &i in word.iter().rev() {
                    expansion[i] -= current.0[i];
                    current = reflect(i, &current);
                }
                debug_assert_eq!(current, weight);
                let positive = expansion.iter().all(|&m| m >= 0);
                Root {
                    weight,
                    base,
                    word,
                    positive,
                    simple_expansion: expansion,
                }
            })
            .collect();

        let mut positives: Vec<Root> = roots.iter().filter(|r| r.positive).cloned().collect();
        positives.sort_by(|a, b| {
            a.height()
                .cmp(&b.height())
                .then_with(|| b.simple_expansion.cmp(&a.simple_expansion))
        });
        let by_weight: HashMap<Weight, Root> =
            roots.drain(..).map(|r| (r.weight.clone(), r)).collect();
        let mut ordered = positives.clone();
        for p in &positives {
            let neg = by_weight.get(&p.weight.neg()).ok_or_else(|| {
                RootDataError::SelfCheck(format!("no negative for root {}", p.weight))
            })?;
            ordered.push(neg.clone());
        }
        if ordered.len() != by_weight.len() {
            return Err(RootDataError::SelfCheck(
                "roots do not come in ± pairs".into(),
            ));
        }
        if positives.len() != lie_type.positive_root_count() {
            return Err(RootDataError::SelfCheck(format!(
                "{lie_type} has {} positive roots, expected {}",
                positives.len(),
                lie_type.positive_root_count()
            )));
        }
        let addition_table = ordered
            .iter()
            .enumerate()
            .map(|(k, r)| (r.weight.clone(), k))
            .collect();
        let inverse_cartan = cartan.inverse();
        Ok(Self {
            lie_type,
            cartan,
            roots: ordered,
            addition_table,
            inverse_cartan,
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, idx: usize) -> &Root {
        &self.roots[idx]
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    /// Indices of the positive roots, in increasing height.
    pub fn positive_roots(&self) -> std::ops::Range<usize> {
        0..self.num_positive()
    }

    /// Index of the simple root `α_i`.
    pub fn simple_root(&self, i: usize) -> usize {
        debug_assert!(self.roots[i].word.is_empty() && self.roots[i].base == i);
        i
    }

    /// Index of `−α` for the root with index `idx`.
    pub fn negative(&self, idx: usize) -> usize {
        (idx + self.num_positive()) % self.roots.len()
    }

    pub fn find(&self, w: &Weight) -> Option<usize> {
        self.addition_table.get(w).copied()
    }

    pub fn check_node(&self, node: usize) -> Result<(), RootDataError> {
        if node < self.rank() {
            Ok(())
        } else {
            Err(RootDataError::NodeOutOfRange {
                node,
                rank: self.rank(),
            })
        }
    }

    /// `s_j(μ) = μ − (μ, α_j^∨) α_j`.
    pub fn simple_reflection(&self, j: usize, mu: &Weight) -> Weight {
        simple_reflection_with(&self.cartan, j, mu)
    }

    /// `(μ, α^∨)`, computed as `(w⁻¹ μ, α_base^∨)` where `α = w(α_base)`.
    pub fn pairing_with_coroot(&self, mu: &Weight, alpha: usize) -> i64 {
        let root = &self.roots[alpha];
        let mut v = mu.clone();
        for &i in &root.word {
            v = self.simple_reflection(i, &v);
        }
        v.0[root.base]
    }

    /// `α + β` if it is a root.
    pub fn root_sum(&self, alpha: usize, beta: usize) -> Option<usize> {
        self.find(&self.roots[alpha].weight.add(&self.roots[beta].weight))
    }

    /// Index of `s_i(α)`.
    pub fn reflect_root(&self, i: usize, alpha: usize) -> usize {
        self.find(&self.simple_reflection(i, &self.roots[alpha].weight))
            .expect("root system is closed under simple reflections")
    }

    /// Coefficients of `μ` in the simple-root basis.
    pub fn root_basis_expansion(&self, mu: &Weight) -> Vec<BigRational> {
        self.inverse_cartan
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&mu.0)
                    .fold(BigRational::zero(), |acc, (c, &m)| {
                        acc + c * BigRational::from_integer(m.into())
                    })
            })
            .collect()
    }

    /// Sum of the simple-root coefficients of `μ`.
    pub fn height(&self, mu: &Weight) -> BigRational {
        self.root_basis_expansion(mu)
            .into_iter()
            .fold(BigRational::zero(), |a, b| a + b)
    }

    pub fn inverse_cartan(&self) -> &[Vec<BigRational>] {
        &self.inverse_cartan
    }

    /// Determinant of the Cartan matrix, i.e. the index of the root lattice
    /// in the weight lattice.
    pub fn cartan_determinant(&self) -> BigInt {
        let snf = smith_normal_form(&IntMatrix::from_rows(self.cartan.rows()));
        snf.invariant_factors().iter().product()
    }
}

fn simple_reflection_with(cartan: &CartanMatrix, j: usize, mu: &Weight) -> Weight {
    let k = mu.0[j];
    if k == 0 {
        return mu.clone();
    }
    Weight(
        mu.0.iter()
            .enumerate()
            .map(|(i, &m)| m - k * cartan.0[i][j])
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(f: Family, n: usize) -> RootDatum {
        RootDatum::build(LieType::new(f, n).unwrap()).unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rank_limits() {
        assert!(LieType::new(Family::A, 0).is_err());
        assert!(LieType::new(Family::B, 1).is_err());
        assert!(LieType::new(Family::C, 1).is_err());
        assert!(LieType::new(Family::D, 2).is_err());
        assert!(LieType::new(Family::E, 8).is_err());
        assert!(LieType::new(Family::E, 5).is_err());
        assert_eq!(
            "e6".parse::<LieType>().unwrap(),
            LieType::new(Family::E, 6).unwrap()
        );
        assert!("F4".parse::<LieType>().is_err());
        assert!("G2".parse::<LieType>().is_err());
    }

    #[test]
    fn a2_basics() {
        let d = datum(Family::A, 2);
        assert_eq!(d.cartan().rows(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(d.roots().len(), 6);
        let sum = d.root_sum(0, 1).unwrap();
        assert_eq!(d.root(sum).simple_expansion, vec![1, 1]);
        assert_eq!(d.root_sum(0, 0), None);
        assert_eq!(d.root_sum(0, d.negative(0)), None);
        // (ϖ_1, (α_1+α_2)^∨) = 1
        assert_eq!(d.pairing_with_coroot(&Weight::fundamental(2, 0), sum), 1);
    }

    #[test]
    fn b2_cartan_orientation() {
        let d = datum(Family::B, 2);
        assert_eq!(d.cartan().rows(), &[vec![2, -2], vec![-1, 2]]);
        assert_eq!(
            d.simple_reflection(0, &Weight(vec![1, 0])),
            Weight(vec![-1, 1])
        );
        let c = datum(Family::C, 2);
        assert_eq!(c.cartan().rows(), &[vec![2, -1], vec![-2, 2]]);
    }

    #[test]
    fn exceptional_counts() {
        assert_eq!(datum(Family::E, 6).roots().len(), 72);
        assert_eq!(datum(Family::E, 7).roots().len(), 126);
    }

    #[test]
    fn reflections() {
        let a1 = datum(Family::A, 1);
        assert_eq!(a1.simple_reflection(0, &Weight(vec![1])), Weight(vec![-1]));
        let e6 = datum(Family::E, 6);
        for i in 0..6 {
            for j in 0..6 {
                let w = Weight::fundamental(6, j);
                let s = e6.simple_reflection(i, &w);
                if i == j {
                    assert_eq!(s, w.sub(&e6.cartan().column(j)));
                } else {
                    assert_eq!(s, w);
                }
            }
        }
    }

    #[test]
    fn expansions() {
        let a1 = datum(Family::A, 1);
        assert_eq!(a1.root_basis_expansion(&Weight(vec![1])), vec![rat(1, 2)]);
        let a2 = datum(Family::A, 2);
        assert_eq!(
            a2.root_basis_expansion(&Weight(vec![1, 0])),
            vec![rat(2, 3), rat(1, 3)]
        );
        for j in 0..2 {
            let e: Vec<_> = (0..2).map(|k| rat((k == j) as i64, 1)).collect();
            assert_eq!(a2.root_basis_expansion(&a2.cartan().column(j)), e);
        }
    }

    #[test]
    fn simple_roots_lead_the_list() {
        let d = datum(Family::D, 5);
        for i in 0..5 {
            let r = d.root(i);
            assert!(r.word.is_empty());
            assert_eq!(r.base, i);
            assert_eq!(r.weight, d.cartan().column(i));
        }
        let neg = d.root(d.negative(2));
        assert_eq!(neg.word, vec![2]);
        assert_eq!(neg.base, 2);
    }

    #[test]
    fn determinants() {
        for (f, n, det) in [
            (Family::A, 4, 5),
            (Family::B, 3, 2),
            (Family::C, 4, 2),
            (Family::D, 4, 4),
            (Family::D, 5, 4),
            (Family::E, 6, 3),
            (Family::E, 7, 2),
        ] {
            assert_eq!(
                datum(f, n).cartan_determinant(),
                BigInt::from(det),
                "{f}{n}"
            );
        }
    }
}
