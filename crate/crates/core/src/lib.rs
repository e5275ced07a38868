//! Chevalley groups of minuscule type, built as explicit matrices over
//! commutative rings from the Weyl orbits of minuscule weights.

pub mod chevgroup;
pub mod exactring;
pub mod liealg;
pub mod minuscule;
pub mod report;
pub mod rootdata;
