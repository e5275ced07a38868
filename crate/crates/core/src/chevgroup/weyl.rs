use std::collections::HashSet;

use super::{GroupContext, GroupError};
use crate::exactring::SparseMatrix;

pub const DEFAULT_WEYL_CAP: usize = 100_000;

/// Number of Weyl group elements and of distinct monomial patterns among
/// their lifts `n̄_{i_1} ··· n̄_{i_k}` along reduced words.
///
/// The group is enumerated breadth-first as permutations of the root list,
/// so the word reaching each element first is reduced.
pub fn weyl_lift_patterns(ctx: &GroupContext, cap: usize) -> Result<(usize, usize), GroupError> {
    let gens = ctx.gens();
    let d = ctx.datum();
    let nroots = d.roots().len();
    let reflections: Vec<Vec<usize>> = (0..d.rank())
        .map(|i| (0..nroots).map(|k| d.reflect_root(i, k)).collect())
        .collect();
    let lifts: Vec<SparseMatrix> = (0..d.rank()).map(|i| gens.n(i)).collect();

    let identity: Vec<usize> = (0..nroots).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([identity.clone()]);
    let mut patterns: HashSet<Vec<usize>> = HashSet::new();
    let mut frontier = vec![(
        identity,
        SparseMatrix::identity(gens.e[0].ring(), gens.dim()),
    )];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (perm, m) in frontier {
            let pattern = m
                .monomial_pattern()
                .ok_or_else(|| GroupError::Inconsistent("Weyl lift is not monomial".into()))?;
            patterns.insert(pattern);
            for (s, n) in reflections.iter().zip(&lifts) {
                let w: Vec<usize> = s.iter().map(|&k| perm[k]).collect();
                if seen.contains(&w) {
                    continue;
                }
                if seen.len() >= cap {
                    return Err(GroupError::CapExceeded {
                        cap,
                        reached: seen.len(),
                    });
                }
                seen.insert(w.clone());
                next.push((w, &m * n));
            }
        }
        frontier = next;
    }
    Ok((seen.len(), patterns.len()))
}

/// Whether distinct Weyl group elements lift to distinct cosets of the
/// diagonal torus, detected by their monomial patterns.
pub fn weyl_lift_check(ctx: &GroupContext, cap: usize) -> Result<bool, GroupError> {
    let (order, distinct) = weyl_lift_patterns(ctx, cap)?;
    Ok(order == distinct)
}

#[cfg(test)]
mod tests {
    use super::super::tests::ctx;
    use super::*;
    use crate::exactring::Ring;
    use crate::rootdata::Family;

    #[test]
    fn small_weyl_groups() {
        let a2 = ctx(Family::A, 2, &[0], Ring::Integers);
        assert_eq!(weyl_lift_patterns(&a2, DEFAULT_WEYL_CAP).unwrap(), (6, 6));
        let b2 = ctx(Family::B, 2, &[0], Ring::Integers);
        assert_eq!(weyl_lift_patterns(&b2, DEFAULT_WEYL_CAP).unwrap(), (8, 8));
        assert!(weyl_lift_check(
            &ctx(Family::D, 4, &[0, 1, 3], Ring::Integers),
            DEFAULT_WEYL_CAP
        )
        .unwrap());
    }

    #[test]
    fn longest_element_words_agree() {
        let a2 = ctx(Family::A, 2, &[0], Ring::Integers);
        let (n1, n2) = (a2.gens().n(0), a2.gens().n(1));
        let w1 = &(&n1 * &n2) * &n1;
        let w2 = &(&n2 * &n1) * &n2;
        assert_eq!(w1.monomial_pattern(), w2.monomial_pattern());
        assert_eq!(w1, w2);
    }

    #[test]
    fn cap() {
        let b3 = ctx(Family::B, 3, &[0], Ring::Integers);
        assert!(matches!(
            weyl_lift_check(&b3, 10),
            Err(GroupError::CapExceeded { cap: 10, .. })
        ));
    }
}
