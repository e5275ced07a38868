//! Weyl orbits of minuscule weights and the ordered weight basis built
//! from them.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::exactring::{smith_normal_form, IntMatrix};
use crate::rootdata::{Family, LieType, RootDataError, RootDatum, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinusculeError {
    #[error("node {node} of {lie_type} does not carry a minuscule weight")]
    NotMinuscule { lie_type: LieType, node: usize },
    #[error("no nodes selected")]
    EmptySelection,
    #[error("node {0} selected more than once")]
    DuplicateNode(usize),
    #[error(transparent)]
    RootData(#[from] RootDataError),
    #[error("self-check failed: {0}")]
    SelfCheck(String),
}

/// Nodes whose fundamental weight is minuscule (0-based).
pub fn minuscule_nodes(lie_type: LieType) -> Vec<usize> {
    let n = lie_type.rank();
    match lie_type.family() {
        Family::A => (0..n).collect(),
        Family::B => vec![0],
        Family::C => vec![n - 1],
        Family::D => vec![0, 1, n - 1],
        Family::E if n == 6 => vec![0, 5],
        Family::E => vec![6],
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Size of the Weyl orbit of the fundamental weight of a minuscule node.
pub fn expected_orbit_size(lie_type: LieType, node: usize) -> Option<usize> {
    if !minuscule_nodes(lie_type).contains(&node) {
        return None;
    }
    let n = lie_type.rank();
    Some(match lie_type.family() {
        Family::A => binomial(n + 1, node + 1),
        Family::B => 1 << n,
        Family::C => 2 * n,
        Family::D if node < 2 => 1 << (n - 1),
        Family::D => 2 * n,
        Family::E if n == 6 => 27,
        Family::E => 56,
    })
}

fn check_minuscule(datum: &RootDatum, node: usize) -> Result<(), MinusculeError> {
    datum.check_node(node)?;
    if minuscule_nodes(datum.lie_type()).contains(&node) {
        Ok(())
    } else {
        Err(MinusculeError::NotMinuscule {
            lie_type: datum.lie_type(),
            node,
        })
    }
}

/// Descending height, ties by descending coordinates.
fn basis_order(a: &(BigRational, Weight), b: &(BigRational, Weight)) -> Ordering {
    b.0.cmp(&a.0).then_with(|| b.1.cmp(&a.1))
}

/// Weyl orbit of the fundamental weight `ϖ_node`, in basis order.
///
/// Every member is checked to pair with every coroot into `{0, ±1}`, and the
/// orbit size is checked against the known value for the diagram.
pub fn orbit(datum: &RootDatum, node: usize) -> Result<Vec<Weight>, MinusculeError> {
    check_minuscule(datum, node)?;
    let n = datum.rank();
    let start = Weight::fundamental(n, node);
    let mut seen: HashSet<Weight> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(mu) = queue.pop_front() {
        for j in 0..n {
            let nu = datum.simple_reflection(j, &mu);
            if seen.insert(nu.clone()) {
                queue.push_back(nu);
            }
        }
    }
    let expected = expected_orbit_size(datum.lie_type(), node).expect("node checked above");
    if seen.len() != expected {
        return Err(MinusculeError::SelfCheck(format!(
            "orbit of node {} in {} has {} weights, expected {expected}",
            node + 1,
            datum.lie_type(),
            seen.len()
        )));
    }
    for mu in &seen {
        for alpha in 0..datum.roots().len() {
            let p = datum.pairing_with_coroot(mu, alpha);
            if p.abs() > 1 {
                return Err(MinusculeError::SelfCheck(format!(
                    "weight {mu} pairs to {p} with coroot of {}",
                    datum.root(alpha).weight
                )));
            }
        }
    }
    let mut keyed: Vec<(BigRational, Weight)> =
        seen.into_iter().map(|w| (datum.height(&w), w)).collect();
    keyed.sort_by(basis_order);
    Ok(keyed.into_iter().map(|(_, w)| w).collect())
}

/// An ordered union of minuscule orbits indexing the module basis.
///
/// The order is by descending height with descending-lexicographic
/// tie-break; it is a linear extension of the dominance order, so raising
/// operators are strictly upper triangular.
#[derive(Debug, Clone)]
pub struct WeightBasis {
    datum: Arc<RootDatum>,
    nodes: Vec<usize>,
    weights: Vec<Weight>,
    index_of: HashMap<Weight, usize>,
    block_of: Vec<usize>,
    height: Vec<BigRational>,
}

impl WeightBasis {
    pub fn build(datum: Arc<RootDatum>, nodes: &[usize]) -> Result<Self, MinusculeError> {
        if nodes.is_empty() {
            return Err(MinusculeError::EmptySelection);
        }
        let mut seen = HashSet::new();
        for &node in nodes {
            check_minuscule(&datum, node)?;
            if !seen.insert(node) {
                return Err(MinusculeError::DuplicateNode(node));
            }
        }
        let mut keyed: Vec<(BigRational, Weight, usize)> = Vec::new();
        let mut all: HashSet<Weight> = HashSet::new();
        for &node in nodes {
            for w in orbit(&datum, node)? {
                if !all.insert(w.clone()) {
                    return Err(MinusculeError::SelfCheck(format!("orbits overlap at {w}")));
                }
                keyed.push((datum.height(&w), w, node));
            }
        }
        keyed.sort_by(|a, b| basis_order(&(a.0.clone(), a.1.clone()), &(b.0.clone(), b.1.clone())));
        let weights: Vec<Weight> = keyed.iter().map(|k| k.1.clone()).collect();
        let index_of = weights
            .iter()
            .enumerate()
            .map(|(k, w)| (w.clone(), k))
            .collect();
        let block_of = keyed.iter().map(|k| k.2).collect();
        let height = keyed.into_iter().map(|k| k.0).collect();
        Ok(Self {
            datum,
            nodes: nodes.to_vec(),
            weights,
            index_of,
            block_of,
            height,
        })
    }

    pub fn datum(&self) -> &Arc<RootDatum> {
        &self.datum
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn weight(&self, k: usize) -> &Weight {
        &self.weights[k]
    }

    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.index_of.get(w).copied()
    }

    /// Node whose orbit contains the `k`-th weight.
    pub fn block_of(&self, k: usize) -> usize {
        self.block_of[k]
    }

    pub fn height(&self, k: usize) -> &BigRational {
        &self.height[k]
    }

    /// Integer matrix whose rows are the weights, in basis order.
    pub fn weight_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.weights.iter().map(|w| w.0.clone()).collect::<Vec<_>>())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeReport {
    /// Every simple root lies in the integer span of the weights.
    pub contains_all_roots: bool,
    /// The weights span the whole weight lattice.
    pub simply_connected: bool,
    /// Index of the span in the weight lattice; `None` when infinite.
    pub index_in_weight_lattice: Option<BigInt>,
}

pub fn lattice_report(basis: &WeightBasis) -> LatticeReport {
    let datum = basis.datum();
    let snf = smith_normal_form(&basis.weight_matrix());
    let contains_all_roots = (0..datum.rank()).all(|j| {
        let target: Vec<BigInt> = datum
            .cartan()
            .column(j)
            .0
            .iter()
            .map(|&x| x.into())
            .collect();
        snf.solve_row_combination(&target).is_some()
    });
    let index =
        (snf.rank() == datum.rank()).then(|| snf.invariant_factors().iter().product::<BigInt>());
    let simply_connected = index.as_ref().is_some_and(|i| *i == BigInt::from(1));
    LatticeReport {
        contains_all_roots,
        simply_connected,
        index_in_weight_lattice: index,
    }
}

/// True when `a − b` is a nonzero nonnegative combination of simple roots.
pub fn strictly_dominates(datum: &RootDatum, a: &Weight, b: &Weight) -> bool {
    let diff = datum.root_basis_expansion(&a.sub(b));
    diff.iter()
        .all(|c| c.is_integer() && *c >= BigRational::zero())
        && diff.iter().any(|c| !c.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(f: Family, n: usize) -> Arc<RootDatum> {
        Arc::new(RootDatum::build(LieType::new(f, n).unwrap()).unwrap())
    }

    #[test]
    fn node_lists() {
        let t = |f, n| minuscule_nodes(LieType::new(f, n).unwrap());
        assert_eq!(t(Family::E, 7), vec![6]);
        assert_eq!(t(Family::D, 5), vec![0, 1, 4]);
        assert_eq!(t(Family::A, 3), vec![0, 1, 2]);
        assert_eq!(t(Family::E, 6), vec![0, 5]);
        assert_eq!(t(Family::C, 4), vec![3]);
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(orbit(&datum(Family::A, 4), 1).unwrap().len(), 10);
        assert_eq!(orbit(&datum(Family::B, 4), 0).unwrap().len(), 16);
        assert_eq!(orbit(&datum(Family::D, 3), 2).unwrap().len(), 6);
    }

    #[test]
    fn non_minuscule_nodes_are_rejected() {
        let b3 = datum(Family::B, 3);
        assert!(matches!(
            orbit(&b3, 1),
            Err(MinusculeError::NotMinuscule { .. })
        ));
        assert!(matches!(orbit(&b3, 9), Err(MinusculeError::RootData(_))));
        assert_eq!(
            WeightBasis::build(b3.clone(), &[]).unwrap_err(),
            MinusculeError::EmptySelection
        );
        let d4 = datum(Family::D, 4);
        assert_eq!(
            WeightBasis::build(d4, &[0, 0]).unwrap_err(),
            MinusculeError::DuplicateNode(0)
        );
    }

    #[test]
    fn sl_chain() {
        let a4 = datum(Family::A, 4);
        let basis = WeightBasis::build(a4.clone(), &[0]).unwrap();
        let mut expected = Weight::fundamental(4, 0);
        for k in 0..5 {
            assert_eq!(basis.weight(k), &expected);
            if k < 4 {
                expected = expected.sub(&a4.cartan().column(k));
            }
        }
    }

    #[test]
    fn spin_blocks() {
        let basis = WeightBasis::build(datum(Family::D, 4), &[0, 1]).unwrap();
        assert_eq!(basis.dim(), 16);
        assert_eq!((0..16).filter(|&k| basis.block_of(k) == 0).count(), 8);
        assert_eq!(basis.weight(0), &Weight::fundamental(4, 0));
    }

    #[test]
    fn dominant_weight_first() {
        for (f, n) in [
            (Family::A, 5),
            (Family::C, 3),
            (Family::E, 6),
            (Family::E, 7),
        ] {
            let d = datum(f, n);
            for node in minuscule_nodes(d.lie_type()) {
                assert_eq!(orbit(&d, node).unwrap()[0], Weight::fundamental(n, node));
            }
        }
    }

    #[test]
    fn lattices() {
        let a3 = WeightBasis::build(datum(Family::A, 3), &[0]).unwrap();
        let r = lattice_report(&a3);
        assert!(r.contains_all_roots && r.simply_connected);
        let d5 = WeightBasis::build(datum(Family::D, 5), &[4]).unwrap();
        let r = lattice_report(&d5);
        assert!(r.contains_all_roots && !r.simply_connected);
        assert_eq!(r.index_in_weight_lattice, Some(BigInt::from(2)));
        let a3mid = WeightBasis::build(datum(Family::A, 3), &[1]).unwrap();
        assert_eq!(
            lattice_report(&a3mid).index_in_weight_lattice,
            Some(BigInt::from(2))
        );
    }
}
