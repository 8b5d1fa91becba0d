//! Explicit four-dimensional Artin-type representations over exact fields.

mod closure;
mod martin;
mod sym3;

pub use closure::{group_closure, FiniteMatrixGroup, DEFAULT_CLOSURE_CAP};
pub use martin::{martin_generators, martin_report, MartinReport, NamedGenerator};
pub use sym3::{
    conjugator_p, j_prime, sym3_form, sym3_gsp4, sym3_identities_check, sym3_lift, sym3_symplectic_basis,
    Sym3Report,
};

pub use crate::gsp4::endoscopic_embed;

/// One verified identity: a stable anchor and its outcome.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check {
    pub anchor: String,
    pub pass: bool,
}

impl Check {
    pub fn new(anchor: &str, pass: bool) -> Self {
        Check { anchor: anchor.to_string(), pass }
    }
}

#[cfg(test)]
mod proptests;
