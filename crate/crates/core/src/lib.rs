//! Exact arithmetic for the symplectic similitude group GSp4.
//!
//! The crate is split into layers: coefficient domains ([`exact_arith`]),
//! the group itself ([`gsp4`]), exhaustive finite-field enumeration
//! ([`census`]), Hecke/Satake/Euler-factor arithmetic ([`hecke`]), explicit
//! Artin-representation constructions ([`gallery`]) and the command-line
//! driver ([`cli`]).

pub mod census;
pub mod cli;
pub mod error;
pub mod exact_arith;
pub mod gallery;
pub mod gsp4;
pub mod hecke;

pub use error::{Error, Result};

#[cfg(test)]
mod testutil;
