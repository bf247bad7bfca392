//! Exact computation with Clifford algebras, Vahlen groups of 2×2 Clifford
//! matrices, and Weyl groups of the double-extended root systems `T_n⁺⁺`.
//!
//! Everything is carried out over the rationals with arbitrary precision, so
//! every identity checked by this crate is checked exactly.
//!
//! The crate is `no_std` and only needs `alloc`.
//!
//! Module map:
//! - [`exactform`]: quadratic spaces, reflections, signatures, reflection
//!   decompositions of isometries and spinor norms.
//! - [`clifford`]: universal Clifford algebras for arbitrary Gram matrices.
//! - [`cartan`]: generalized Cartan matrices and canonical double extensions.
//! - [`vahlen`]: 2×2 Clifford matrices, Vahlen membership and the action on
//!   `H₂(V)`.
//! - [`outer`]: spinor norms of diagram automorphisms acting on `H₂(Λ)`.
//! - [`paravector`]: the paravector formalism and its bridge to the
//!   non-paravector picture.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cartan;
pub mod clifford;
mod error;
pub mod exactform;
pub mod matrix;
pub mod outer;
pub mod paravector;
pub mod rational;
pub mod vahlen;

pub use error::{Error, Result};
pub use rational::Rational;
