//! Central value φ(1/2) of explicit automorphic scattering determinants.
//!
//! The crate evaluates the scattering determinants of PSL(2,ℤ), Γ₀(N) and
//! Γ₀(N)⁺ (N squarefree), counts their real zeros and poles right of ½, reads
//! off the leading Dirichlet coefficient, and checks the sign law
//! φ(½) = (-1)^{N+P} sgn d(1) against a direct Laurent-germ evaluation.
//! Underneath sit complex special functions (log Γ, ψ, ζ, Hurwitz ζ, Barnes G),
//! orbifold bookkeeping and zeta-regularized products.

// reference constants keep every digit they were published with
#![allow(clippy::excessive_precision)]

pub mod divisor;
pub mod error;
pub mod report;
pub mod scattering;
pub mod specfun;
pub mod superzeta;
pub mod surface;

pub use error::{Error, Result};
pub use specfun::ComplexValue;
