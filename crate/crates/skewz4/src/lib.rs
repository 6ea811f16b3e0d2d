//! Skew-cyclic codes with derivation over the ring R = Z4 + vZ4 (v^2 = v).
//!
//! The crate builds codes of length n over R that are closed under the
//! twisted shift induced by the automorphism theta and an inner
//! theta-derivation, i.e. left R[x; theta, delta]-submodules of
//! R[x; theta, delta] / (x^n - 1). From such a code it derives Z4-linear
//! codes (Gray image, residue, torsion, Plotkin sums) and computes their
//! parameters by exact minimum Lee distance enumeration.
//!
//! No std is required; `alloc` is.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;
pub mod cyclic;
pub mod poly;
pub mod ring;
pub mod z4;

pub use cyclic::{parity_check_matrix, ClosureReport, RCode, RMatrix, RVector, SpanSet};
pub use error::Error;
pub use poly::SkewPoly;
pub use ring::{lee_weight, nontrivial_ideals, DerivationKind, Ideal, RingElem};
pub use z4::{gray_image, plotkin_sum, CodeParams, Z4Code};
