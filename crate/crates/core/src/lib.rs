//! Knot signature functions, their jump divisors, and the Jones jump
//! divisor read off the pole structure of P/Δ² at the Alexander roots.
//!
//! The crate is `no_std` and needs only `alloc`. Exact arithmetic lives in
//! [`sympoly`]; the only floating-point paths are Hermitian signature counts
//! (guarded against near-singular forms) and the high-precision [`hp`]
//! evaluations used for printed turns and Laurent coefficients.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod braid;
mod error;
pub mod hermitian;
pub mod hp;
pub mod invariants;
pub mod qjump;
pub mod skein;
pub mod sympoly;
pub mod torus;

pub use braid::{BraidWord, IntMatrix};
pub use error::{Error, Result};
pub use invariants::{alexander, jump_divisor, signature_at, JumpDivisor, JumpEntry};
pub use sympoly::{AlgebraicRoot, SymPoly};
