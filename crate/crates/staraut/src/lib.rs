//! Exact computations with the duality structures carried by finite abelian
//! groups: weak quadratic forms and their decomposition, abelian 3-cocycles,
//! skeletal (weak) ribbon structures on graded vector spaces, generalised
//! graded duality, finite-dimensional Chu pairs and coend-based profunctor
//! composition over finite categories.
//!
//! Everything is computed in exact arithmetic: scalars are roots of unity
//! stored as reduced fractions in the exponent, and all linear algebra runs
//! over arbitrary-precision rationals. There is no floating point anywhere.
//!
//! The crate is `no_std` (with `alloc`); IO, JSON formats and the batch CLI
//! live in the companion crate `staraut-cli`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod chu;
pub mod cohomology;
pub mod exact;
pub mod groups;
pub mod gvect;
pub mod prof;
pub mod qforms;
pub mod ribbon;

pub use exact::{RationalMatrix, RootOfUnity};
pub use groups::{Character, FinAbGroup, GroupAutomorphism, GroupElement};
pub use qforms::{BiHom, QuadraticForm, WeakQuadraticForm, WrqfDatum, WsqfDatum};

/// One named check of a verification run, as reported by the `verify`
/// entry points of the graded, Chu and profunctor modules.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: Option<alloc::string::String>,
}

impl CheckResult {
    pub fn pass(name: &'static str) -> Self {
        CheckResult { name, pass: true, detail: None }
    }

    pub fn fail(name: &'static str, detail: alloc::string::String) -> Self {
        CheckResult { name, pass: false, detail: Some(detail) }
    }
}
