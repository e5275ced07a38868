use num_bigint::BigInt;

use super::{GroupContext, GroupElement, GroupError};
use crate::exactring::{Elem, RingValue, SparseMatrix};

fn check_order(ctx: &GroupContext, order: &[usize]) -> Result<(), GroupError> {
    let d = ctx.datum();
    let mut seen = vec![false; d.roots().len()];
    for &r in order {
        if r >= seen.len() || !d.root(r).positive || std::mem::replace(&mut seen[r], true) {
            return Err(GroupError::BadOrder);
        }
    }
    let monotone = order
        .windows(2)
        .all(|w| d.root(w[0]).height() <= d.root(w[1]).height());
    if order.len() != d.num_positive() || !monotone {
        return Err(GroupError::BadOrder);
    }
    Ok(())
}

/// `∏ x_{α_k}(t_k)` in the given order.
pub fn unipotent_product(
    ctx: &GroupContext,
    order: &[usize],
    coeffs: &[RingValue],
) -> Result<GroupElement, GroupError> {
    if order.len() != coeffs.len() {
        return Err(GroupError::Arity {
            expected: order.len(),
            got: coeffs.len(),
        });
    }
    order
        .iter()
        .zip(coeffs)
        .try_fold(ctx.identity(), |acc, (&r, t)| {
            Ok(acc.mul(&ctx.gen_x_root(r, t)?))
        })
}

/// Writes an upper unitriangular `g` as `∏ x_α(t_α)` over the positive roots
/// in `order`, which must list each positive root once by nondecreasing
/// height.
///
/// Peels one factor at a time from the left: for the lowest remaining root
/// the coefficient can be read off any entry where `e_α` is nonzero, since no
/// product of higher roots reaches that position.
pub fn unipotent_factorize(
    ctx: &GroupContext,
    g: &SparseMatrix,
    order: &[usize],
) -> Result<Vec<RingValue>, GroupError> {
    check_order(ctx, order)?;
    if g.ring() != ctx.ring() || g.dim() != ctx.dim() {
        return Err(crate::exactring::RingError::RingMismatch.into());
    }
    if !g.is_upper_unitriangular() {
        return Err(GroupError::NotUnipotent);
    }
    let ring = ctx.ring();
    let mut rest = g.clone();
    let mut coeffs = Vec::with_capacity(order.len());
    for &r in order {
        let (p, q, sign) = ctx.int_root_vectors[r]
            .entries()
            .next()
            .expect("root vectors are nonzero");
        let sign = match sign {
            Elem::Int(s) if *s == BigInt::from(1) => 1,
            _ => -1,
        };
        let t = RingValue::new(ring, ring.mul(&rest.entry(p, q), &ring.from_i64(sign)))?;
        rest = ctx.gen_x_root(r, &t.neg())?.matrix() * &rest;
        coeffs.push(t);
    }
    if !rest.is_identity() {
        return Err(GroupError::FactorizationFailed(*order.last().unwrap_or(&0)));
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::super::tests::ctx;
    use super::*;
    use crate::exactring::Ring;
    use crate::rootdata::Family;

    #[test]
    fn identity_and_single_factor() {
        let g = ctx(Family::A, 3, &[1], Ring::Integers);
        let order: Vec<usize> = g.datum().positive_roots().collect();
        let zero = unipotent_factorize(&g, g.identity().matrix(), &order).unwrap();
        assert!(zero.iter().all(RingValue::is_zero));
        let top = *order.last().unwrap();
        let x = g.gen_x_root(top, &g.value(5)).unwrap();
        let t = unipotent_factorize(&g, x.matrix(), &order).unwrap();
        for (k, &r) in order.iter().enumerate() {
            assert_eq!(t[k], g.value(if r == top { 5 } else { 0 }));
        }
    }

    #[test]
    fn round_trip() {
        let g = ctx(Family::B, 3, &[0], Ring::prime_field(7).unwrap());
        let order: Vec<usize> = g.datum().positive_roots().collect();
        let coeffs: Vec<RingValue> = (0..order.len())
            .map(|k| g.value((k * k + 3) as i64))
            .collect();
        let prod = unipotent_product(&g, &order, &coeffs).unwrap();
        assert!(prod.matrix().is_upper_unitriangular());
        assert_eq!(
            unipotent_factorize(&g, prod.matrix(), &order).unwrap(),
            coeffs
        );
    }

    #[test]
    fn rejects_bad_input() {
        let g = ctx(Family::A, 2, &[0], Ring::Integers);
        let order: Vec<usize> = g.datum().positive_roots().collect();
        let y = g.gen_y(0, &g.value(1)).unwrap();
        assert_eq!(
            unipotent_factorize(&g, y.matrix(), &order),
            Err(GroupError::NotUnipotent)
        );
        let mut rev = order.clone();
        rev.reverse();
        assert_eq!(
            unipotent_factorize(&g, y.matrix(), &rev),
            Err(GroupError::BadOrder)
        );
        assert_eq!(
            unipotent_factorize(&g, y.matrix(), &order[1..]),
            Err(GroupError::BadOrder)
        );
    }

    #[test]
    fn outside_unipotent_radical() {
        // In D4 on the 8-dim module, U has 12 parameters but the upper
        // unitriangular group has 28.
        let g = ctx(Family::D, 4, &[0], Ring::Integers);
        let order: Vec<usize> = g.datum().positive_roots().collect();
        let one = g.ring().one();
        let m = SparseMatrix::from_entries(
            g.ring(),
            8,
            (0..8)
                .map(|k| (k, k, one.clone()))
                .chain([(0, 7, one.clone())]),
        )
        .unwrap();
        assert!(matches!(
            unipotent_factorize(&g, &m, &order),
            Err(GroupError::FactorizationFailed(_))
        ));
    }
}
