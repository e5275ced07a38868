use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use super::{GroupContext, GroupError};
use crate::exactring::SparseMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EnumerationRecord {
    pub order: usize,
    /// False when the cap stopped the search; `order` is then a lower bound.
    pub completed: bool,
}

/// Breadth-first closure of `{x_i(t), y_i(t) : t ≠ 0}` under right
/// multiplication by the generators, over a finite ring.
///
/// Frontiers are expanded in parallel and merged into a single set, so the
/// result does not depend on scheduling.
pub fn enumerate_group(ctx: &GroupContext, cap: usize) -> Result<EnumerationRecord, GroupError> {
    let ring = ctx.ring();
    let elements = ring.elements().ok_or_else(|| {
        GroupError::Unsupported(format!("cannot enumerate over the infinite ring {ring}"))
    })?;
    let mut gens: Vec<SparseMatrix> = Vec::new();
    for t in elements.into_iter().filter(|t| !ring.is_zero(t)) {
        let t = crate::exactring::RingValue::new(ring, t)?;
        for i in 0..ctx.rank() {
            gens.push(ctx.gen_x(i, &t)?.into_matrix());
            gens.push(ctx.gen_y(i, &t)?.into_matrix());
        }
    }
    let id = SparseMatrix::identity(ring, ctx.dim());
    let mut seen: HashSet<SparseMatrix> = HashSet::from([id.clone()]);
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let products: Vec<SparseMatrix> = frontier
            .par_iter()
            .flat_map_iter(|m| gens.iter().map(move |g| m * g))
            .collect();
        let mut next = Vec::new();
        for p in products {
            if seen.contains(&p) {
                continue;
            }
            if seen.len() >= cap {
                return Ok(EnumerationRecord {
                    order: seen.len(),
                    completed: false,
                });
            }
            seen.insert(p.clone());
            next.push(p);
        }
        frontier = next;
    }
    Ok(EnumerationRecord {
        order: seen.len(),
        completed: true,
    })
}
