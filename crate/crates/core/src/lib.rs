//! Pseudo-spectral toolkit for ground states of linear eigenproblems
//! `P(D)ψ + Vψ = Eψ` and nonlinear equations `P(D)Q + λQ − |Q|^{2σ}Q = 0`
//! with arbitrary-order real Fourier multipliers `p(ξ)`.
//!
//! The crate is organised around a periodic-box discretisation of ℝⁿ
//! (n = 1, 2, 3) with unitary discrete Fourier transforms in the
//! `e^{−2πi x·ξ}` convention, so that symbols read literally
//! (e.g. −Δ ↔ 4π²|ξ|²). On top of that sit:
//!
//! - [`symbols`]: a library of multipliers with growth/ellipticity/sector
//!   checkers,
//! - [`rearrange`]: the Fourier-modulus operator `f ↦ ℱ⁻¹|ℱf|`, majorant
//!   comparisons and the trigonometric-polynomial counterexample search,
//! - [`linear`]: dense, preconditioned-iterative and kernel-fixed-point
//!   solvers for the lowest eigenpair, plus its verification predicates,
//! - [`nonlinear`]: a stabilised fixed-point solver for solitary-wave
//!   profiles, action/Sobolev functionals and the verification suite,
//! - [`report`], [`io`]: structured pass/fail reports and field dumps.

pub mod error;
pub mod field;
pub mod grid;
pub mod io;
pub mod linear;
pub mod nonlinear;
pub mod random;
pub mod rearrange;
pub mod report;
pub mod symbols;

pub use error::{Error, Result};
pub use field::{Field, SpectralField};
pub use grid::Grid;
pub use symbols::Symbol;

/// Complex sample type used throughout.
pub type C64 = num_complex::Complex64;
