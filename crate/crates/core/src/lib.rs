//! Exact symbolic toolkit for Brill's equations of the Chow variety of
//! products of linear forms.
//!
//! The crate builds Brill's polynomial map `𝔅 : S^dV → S^d(∧²V) ⊗ S^{d²-d}V`
//! and its complete polarization `𝔅̄ : S^{d+1}(S^dV) → S^d(∧²V) ⊗ S^{d²-d}V`,
//! together with the `GL(V)` weight machinery and the invariant pairing used
//! to decide which irreducible modules `S_{(d²-j,d,j)}V` lie in the image of
//! `𝔅̄`. Every coefficient is an exact rational.

pub mod brill;
pub mod chow;
pub mod error;
pub mod kernel;
pub mod pairing;
pub mod polyspace;
pub mod rep;

pub use error::{Error, Result};
pub use kernel::{Coeff, MPoly, RatMatrix, Rational, Vector};
pub use polyspace::{CurlyElement, Mono, SymElement, Tens2Element, WedgeMono};
