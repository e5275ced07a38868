use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{GroupContext, GroupElement, GroupError};
use crate::exactring::{smith_normal_form, Elem, IntMatrix, Ring, RingValue, SparseMatrix};

/// The center of the group over a prime field, as diagonal elements
/// `∏ h_i(g^{x_i})` for a fixed primitive root `g`.
#[derive(Debug, Clone)]
pub struct CenterDescription {
    pub order: usize,
    /// Invariant factors greater than one, each dividing the next.
    pub invariant_factors: Vec<u64>,
    pub elements: Vec<GroupElement>,
    /// Exponents `x_i` for each element, in the same order.
    pub parameterizations: Vec<Vec<u64>>,
    pub generator: u64,
}

fn modulus(ctx: &GroupContext) -> Result<(u64, u64), GroupError> {
    match ctx.ring() {
        Ring::PrimeField(p) => {
            let g = ctx
                .ring()
                .primitive_root()
                .expect("prime fields have primitive roots");
            Ok((p - 1, g))
        }
        r => Err(GroupError::Unsupported(format!(
            "center is computed over prime fields only, not {r}"
        ))),
    }
}

/// Per-weight exponents `Σ_i x_i (μ, α_i^∨) mod m`.
fn weight_exponents(ctx: &GroupContext, x: &[u64], m: u64) -> Vec<u64> {
    ctx.basis()
        .weights()
        .iter()
        .map(|mu| {
            let s: i64 = mu.0.iter().zip(x).map(|(&a, &b)| a * b as i64).sum();
            s.rem_euclid(m as i64) as u64
        })
        .collect()
}

fn diagonal_element(ctx: &GroupContext, exps: &[u64], m: u64, g: u64) -> GroupElement {
    let ring = ctx.ring();
    let gen = Elem::Residue(g);
    let entry = |k: u64| ring.pow(&gen, k as i64).expect("powers of a unit");
    let matrix = SparseMatrix::diagonal(ring, exps.iter().map(|&k| entry(k)).collect());
    let inverse = SparseMatrix::diagonal(ring, exps.iter().map(|&k| entry((m - k) % m)).collect());
    GroupElement::new(matrix, inverse).expect("diagonal inverse")
}

fn to_u64(n: &BigInt) -> u64 {
    n.to_u64().expect("small nonnegative integer")
}

/// Solves `Σ_i x_i a_ij ≡ 0 (mod p − 1)` for all `j` with a Smith normal form
/// of the Cartan matrix, maps solutions to diagonal matrices and checks each
/// against the generators.
pub fn center(ctx: &GroupContext) -> Result<CenterDescription, GroupError> {
    let (m, g) = modulus(ctx)?;
    let n = ctx.rank();
    let cartan = IntMatrix::from_rows(ctx.datum().cartan().rows());
    let snf = smith_normal_form(&cartan);
    let mb = BigInt::from(m);

    // Generators of the solution group and their orders.
    let mut gens: Vec<(Vec<u64>, u64)> = Vec::new();
    for k in 0..n {
        let d = snf.diag.get(k).cloned().unwrap_or_else(BigInt::zero);
        let ord = d.gcd(&mb);
        if ord <= BigInt::from(1) {
            continue;
        }
        let step = &mb / &ord;
        let v = snf
            .left
            .row(k)
            .iter()
            .map(|x| to_u64(&(x * &step).mod_floor(&mb)))
            .collect();
        gens.push((v, to_u64(&ord)));
    }

    let mut found: BTreeMap<Vec<u64>, Vec<u64>> = BTreeMap::new();
    let mut counters = vec![0u64; gens.len()];
    loop {
        let mut x = vec![0u64; n];
        for ((v, _), &c) in gens.iter().zip(&counters) {
            for (xi, vi) in x.iter_mut().zip(v) {
                *xi = (*xi + c * vi) % m;
            }
        }
        found.entry(weight_exponents(ctx, &x, m)).or_insert(x);
        let mut k = 0;
        loop {
            if k == gens.len() {
                return finish(ctx, found, &gens, m, g);
            }
            counters[k] += 1;
            if counters[k] < gens[k].1 {
                break;
            }
            counters[k] = 0;
            k += 1;
        }
    }
}

fn finish(
    ctx: &GroupContext,
    found: BTreeMap<Vec<u64>, Vec<u64>>,
    gens: &[(Vec<u64>, u64)],
    m: u64,
    g: u64,
) -> Result<CenterDescription, GroupError> {
    let d = ctx.dim();
    let mut rows: Vec<Vec<BigInt>> = gens
        .iter()
        .map(|(v, _)| {
            weight_exponents(ctx, v, m)
                .into_iter()
                .map(BigInt::from)
                .collect()
        })
        .collect();
    for k in 0..d {
        let mut r = vec![BigInt::zero(); d];
        r[k] = BigInt::from(m);
        rows.push(r);
    }
    let lattice = smith_normal_form(&IntMatrix::from_big_rows(rows, d));
    let mut invariant_factors: Vec<u64> = lattice
        .invariant_factors()
        .iter()
        .map(|e| m / to_u64(e))
        .filter(|&f| f > 1)
        .collect();
    invariant_factors.sort_unstable();

    let one = ctx.value(1);
    let checks: Vec<GroupElement> = (0..ctx.rank())
        .flat_map(|i| [ctx.gen_x(i, &one), ctx.gen_y(i, &one)])
        .collect::<Result<_, _>>()?;
    let mut elements = Vec::with_capacity(found.len());
    let mut parameterizations = Vec::with_capacity(found.len());
    for (exps, x) in found {
        let z = diagonal_element(ctx, &exps, m, g);
        if !checks.iter().all(|c| z.commutes_with(c)) {
            return Err(GroupError::Inconsistent(format!(
                "center candidate {x:?} is not central"
            )));
        }
        elements.push(z);
        parameterizations.push(x);
    }
    let order = elements.len();
    let product: u64 = invariant_factors.iter().product();
    if product as usize != order {
        return Err(GroupError::Inconsistent(format!(
            "center has {order} elements but invariant factors {invariant_factors:?}"
        )));
    }
    Ok(CenterDescription {
        order,
        invariant_factors,
        elements,
        parameterizations,
        generator: g,
    })
}

/// Diagonal matrices `∏ h_i(t_i)` over all `t ∈ (F_p^×)^n` satisfying
/// `∏ t_i^{(α, α_i^∨)} = 1` for every root `α`, by exhaustive search.
pub fn center_brute_force(ctx: &GroupContext) -> Result<BTreeSet<Vec<u64>>, GroupError> {
    let (m, g) = modulus(ctx)?;
    let n = ctx.rank();
    let roots: Vec<&[i64]> = ctx
        .datum()
        .roots()
        .iter()
        .map(|r| r.weight.0.as_slice())
        .collect();
    let mut out = BTreeSet::new();
    let mut x = vec![0u64; n];
    loop {
        // t_i = g^{x_i}; the root condition is checked on exponents mod m.
        let central = roots.iter().all(|a| {
            let s: i64 = a.iter().zip(&x).map(|(&c, &e)| c * e as i64).sum();
            s.rem_euclid(m as i64) == 0
        });
        if central {
            let gen = RingValue::new(ctx.ring(), Elem::Residue(g))?;
            let t: Vec<RingValue> = x
                .iter()
                .map(|&e| gen.pow(e as i64).expect("unit"))
                .collect();
            let h = ctx.torus_element(&t)?;
            out.insert(diagonal_logs(ctx.ring(), h.matrix(), g, m));
        }
        let mut k = 0;
        loop {
            if k == n {
                return Ok(out);
            }
            x[k] += 1;
            if x[k] < m {
                break;
            }
            x[k] = 0;
            k += 1;
        }
    }
}

fn discrete_log(ring: &Ring, v: &Elem, g: u64, m: u64) -> u64 {
    (0..m)
        .find(|&k| ring.pow(&Elem::Residue(g), k as i64).as_ref() == Some(v))
        .expect("unit")
}

fn diagonal_logs(ring: &Ring, d: &SparseMatrix, g: u64, m: u64) -> Vec<u64> {
    d.diagonal_entries()
        .iter()
        .map(|v| discrete_log(ring, v, g, m))
        .collect()
}

impl CenterDescription {
    /// Base-`g` logarithms of each element's diagonal, comparable with the
    /// output of [`center_brute_force`].
    pub fn exponent_keys(&self) -> BTreeSet<Vec<u64>> {
        self.elements
            .iter()
            .map(|z| {
                let ring = z.matrix().ring();
                let m = ring.order().expect("finite field") - 1;
                diagonal_logs(ring, z.matrix(), self.generator, m)
            })
            .collect()
    }
}
