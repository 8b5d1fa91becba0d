//! Exhaustive enumeration of finite symplectic groups over F_l, subgroup
//! families, characteristic-polynomial histograms and the C(eta, M) property.

mod charpoly;
mod families;
mod group;
mod p1;
pub mod packed;

pub use charpoly::{
    c_eta_m, charpoly_census, index_two_implication, scalar_charpoly, square_similitude_subgroup,
    unipotent_count_polynomial, unipotent_orbit_sum, CEtaResult, CharPolyHistogram, CoverageStep,
};
pub use families::{
    block_swap, build_family, gl2, hen_elem, incremental_generators, s_block, s_matrix, u_matrix, Case, Family,
    FamilySpec,
};
pub use group::{
    closure, enumerate_gsp4, enumerate_sp4, estimated_bytes, gsp4_generators, primitive_root, sp4_generators,
    sp4_order, GroupSet,
};
pub use p1::{enumerate_p1_reps, p1_count};

use std::collections::BTreeMap;

/// Histogram of `(trace, det)` over GL2(F_l); the 2x2 analogue of [`charpoly_census`].
pub fn gl2_charpoly_counts(ell: u8) -> BTreeMap<(u8, u8), u64> {
    let l = ell as u32;
    let mut out = BTreeMap::new();
    for m in gl2(ell) {
        let tr = ((m[0] as u32 + m[3] as u32) % l) as u8;
        let det = ((m[0] as u32 * m[3] as u32 + l * l - m[1] as u32 * m[2] as u32) % l) as u8;
        *out.entry((tr, det)).or_insert(0) += 1;
    }
    out
}

#[cfg(test)]
mod oracles;
