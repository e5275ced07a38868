use rayon::prelude::*;

use super::{GroupContext, GroupElement, GroupError};
use crate::exactring::{Ring, RingValue};
use crate::report::CheckReport;

/// Which form of the commutator relation applies to a pair of positive roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommutatorCase {
    /// `α + β` is not a root.
    Commuting,
    /// `α + β` is a root, `2α + β` and `α + 2β` are not.
    Simple,
    /// `α + 2β` is a root.
    ExtraBeta,
    /// `2α + β` is a root.
    ExtraAlpha,
}

impl CommutatorCase {
    pub fn classify(ctx: &GroupContext, alpha: usize, beta: usize) -> Self {
        let d = ctx.datum();
        match d.root_sum(alpha, beta) {
            None => Self::Commuting,
            Some(s) if d.root_sum(s, beta).is_some() => Self::ExtraBeta,
            Some(s) if d.root_sum(s, alpha).is_some() => Self::ExtraAlpha,
            Some(_) => Self::Simple,
        }
    }
}

fn poly_vars(ctx: &GroupContext) -> Result<(RingValue, RingValue), GroupError> {
    let ring = ctx.ring();
    match ring {
        Ring::IntPolynomial(_) => {
            let t = RingValue::new(ring, ring.var(0).expect("two variables"))?;
            let u = RingValue::new(ring, ring.var(1).expect("two variables"))?;
            Ok((t, u))
        }
        _ => Err(GroupError::Unsupported(format!(
            "commutator relations are checked over a two-variable polynomial ring, not {ring}"
        ))),
    }
}

/// Checks the commutator relation for positive roots `α ≠ β` as an identity of
/// polynomial matrices in the two variables of the context's ring.
pub fn verify_commutator(
    ctx: &GroupContext,
    alpha: usize,
    beta: usize,
) -> Result<CheckReport, GroupError> {
    let d = ctx.datum();
    for r in [alpha, beta] {
        if !d.root(r).positive {
            return Err(GroupError::NotPositive(r));
        }
    }
    if alpha == beta {
        return Err(GroupError::Unsupported(
            "commutator of a root with itself".into(),
        ));
    }
    let (t, u) = poly_vars(ctx)?;
    let sc = ctx.structure_constants()?;
    let k = |n: i64| ctx.value(n);
    let x = |r: usize, v: &RingValue| ctx.gen_x_root(r, v);
    let tu = t.mul(&u)?;
    let label = format!("commutator (root {alpha}, root {beta})");
    let mut report = CheckReport::new();
    let case = CommutatorCase::classify(ctx, alpha, beta);
    if case == CommutatorCase::Commuting {
        let xa = x(alpha, &t)?;
        let xb = x(beta, &u)?;
        report.record(format!("{label}: commute"), xa.commutes_with(&xb));
        return Ok(report);
    }
    let lhs = x(beta, &u.neg())?.mul(&x(alpha, &t)?).mul(&x(beta, &u)?);
    let sum = d.root_sum(alpha, beta).unwrap();
    let c = sc.c[&(alpha, beta)];
    let first = x(alpha, &t)?;
    let second = x(sum, &k(c).mul(&tu)?)?;
    let third: Option<GroupElement> = match case {
        CommutatorCase::ExtraBeta => {
            let r = d.root_sum(sum, beta).unwrap();
            let cp = sc.c_prime[&(alpha, beta)];
            Some(x(r, &k(-cp).mul(&tu)?.mul(&u)?)?)
        }
        CommutatorCase::ExtraAlpha => {
            let r = d.root_sum(sum, alpha).unwrap();
            let cdp = sc.c_dprime[&(alpha, beta)];
            Some(x(r, &k(cdp).mul(&tu)?.mul(&t)?)?)
        }
        _ => None,
    };
    let rhs = match &third {
        Some(z) => first.mul(&second).mul(z),
        None => first.mul(&second),
    };
    report.record(format!("{label}: {case:?} relation"), lhs == rhs);
    if let (CommutatorCase::ExtraBeta, Some(z)) = (case, &third) {
        let pairwise =
            first.commutes_with(&second) && first.commutes_with(z) && second.commutes_with(z);
        report.record(format!("{label}: right-hand factors commute"), pairwise);
    }
    Ok(report)
}

/// All ordered pairs of distinct positive roots, plus the constant ranges.
pub fn verify_commutators(ctx: &GroupContext) -> Result<CheckReport, GroupError> {
    let d = ctx.datum();
    let sc = ctx.structure_constants()?;
    let mut report = sc.verify(d);
    let pos: Vec<usize> = d.positive_roots().collect();
    let pairs: Vec<(usize, usize)> = pos
        .iter()
        .flat_map(|&a| pos.iter().map(move |&b| (a, b)))
        .filter(|(a, b)| a != b)
        .collect();
    let reports: Vec<Result<CheckReport, GroupError>> = pairs
        .par_iter()
        .map(|&(a, b)| verify_commutator(ctx, a, b))
        .collect();
    for r in reports {
        report.merge(r?);
    }
    Ok(report)
}

/// `h_i(t) x_α(u) h_i(t)⁻¹ = x_α(u · t^{(α, α_i^∨)})`.
pub fn verify_torus_conjugation(
    ctx: &GroupContext,
    i: usize,
    alpha: usize,
    t: &RingValue,
    u: &RingValue,
) -> Result<bool, GroupError> {
    let h = ctx.gen_h(i, t)?;
    let lhs = h.conjugate(&ctx.gen_x_root(alpha, u)?);
    let exponent = ctx.datum().root(alpha).weight.0[i];
    let scale = t
        .pow(exponent)
        .ok_or_else(|| GroupError::NonUnit(t.to_string()))?;
    let rhs = ctx.gen_x_root(alpha, &u.mul(&scale)?)?;
    Ok(lhs == rhs)
}

/// `n̄_i h_j(t) n̄_i⁻¹ = h_j(t) h_i(t)^{−a_ji}`, together with `n̄_i ∉ H`,
/// `n̄_i² = h_i(−1) ∈ H`.
pub fn verify_n_h_normalization(
    ctx: &GroupContext,
    i: usize,
    j: usize,
    t: &RingValue,
) -> Result<bool, GroupError> {
    let n = ctx.gen_n(i, &ctx.value(1))?;
    let hj = ctx.gen_h(j, t)?;
    let hi = ctx.gen_h(i, t)?;
    let a_ji = ctx.datum().cartan().get(j, i);
    let conj = n.conjugate(&hj) == hj.mul(&hi.pow(-a_ji));
    let outside = !n.matrix().is_diagonal();
    let square = n.mul(&n);
    let inside = square.matrix().is_diagonal() && square == ctx.gen_h(i, &ctx.value(-1))?;
    Ok(conj && outside && inside)
}

/// Whether `∏ h_i(t_i)` is the identity. Cross-checked against the weight
/// criterion `∏ t_i^{(μ, α_i^∨)} = 1` for every basis weight `μ`.
pub fn torus_kernel_test(ctx: &GroupContext, t: &[RingValue]) -> Result<bool, GroupError> {
    let h = ctx.torus_element(t)?;
    let by_matrix = h.is_identity();
    let one = RingValue::one(ctx.ring());
    let mut by_weights = true;
    for mu in ctx.basis().weights() {
        let mut acc = one.clone();
        for (ti, &m) in t.iter().zip(&mu.0) {
            acc = acc.mul(
                &ti.pow(m)
                    .ok_or_else(|| GroupError::NonUnit(ti.to_string()))?,
            )?;
        }
        by_weights &= acc == one;
    }
    if by_matrix != by_weights {
        return Err(GroupError::Inconsistent(
            "torus kernel criteria disagree".into(),
        ));
    }
    Ok(by_matrix)
}

/// `h_i(t) x_i(u) h_i(t)⁻¹ x_i(u)⁻¹ = x_i(u(t² − 1))`.
pub fn perfectness_identity(
    ctx: &GroupContext,
    i: usize,
    t: &RingValue,
    u: &RingValue,
) -> Result<bool, GroupError> {
    let h = ctx.gen_h(i, t)?;
    let x = ctx.gen_x(i, u)?;
    let lhs = h.conjugate(&x).mul(&x.inverse());
    let factor = t.mul(t)?.sub(&ctx.value(1))?;
    Ok(lhs == ctx.gen_x(i, &u.mul(&factor)?)?)
}
