//! Spectral toolkit for half-plane magnetic Schrödinger operators.
//!
//! The half-plane Hamiltonian −∂²/∂x² + (−i∂/∂y − bx)² with Dirichlet or
//! Neumann condition at x = 0 fibers over the boundary momentum k into the
//! family h(k) = −d²/dx² + (bx−k)² on (0, ∞).  Everything in this crate is
//! built on that reduction:
//!
//! - [`numerics`]: Sturm-sequence eigenvalue counting, lowest eigenpairs,
//!   Hermitian Galerkin counts, Gauss–Legendre quadrature, scalar special
//!   functions (log-Gamma, Beta, erf).
//! - [`bands`]: the band functions E_D(k), E_N(k), their eigenfunctions,
//!   the Neumann band minimum (the de Gennes point) and the large-k
//!   projector-convergence diagnostic.
//! - [`special`]: the parabolic-cylinder pair Θ, Ψ, the rank-one defect
//!   vector ρ_k and the Dirichlet gap asymptotic.
//! - [`dirichlet`]: the anti-Wick operator, the sandwich operator S_D,
//!   the model family Γ_δ^±(m) / g_I(m) and the |ln λ|^{1/2} counting law.
//! - [`neumann`]: the effective 1D Hamiltonian −μ d²/dy² − v, its counting
//!   function, the semiclassical phase-space count and the decay-law
//!   coefficients.
//!
//! All numerical kernels are generic over the scalar type through [`Real`];
//! concrete `f64` aliases are exported at the crate root (`Tridiagonal64`,
//! `BandTable64`, …) and are what the CLI and the self-test suite use.

pub mod bands;
pub mod dirichlet;
pub mod error;
pub mod neumann;
pub mod numerics;
pub mod oracles;
pub mod potential;
pub mod real;
pub mod selftest;
pub mod special;

pub use error::{Error, Result};
pub use real::Real;

/// `f64` aliases for the main domain types.
pub type Tridiagonal64 = numerics::Tridiagonal<f64>;
pub type HermitianGram64 = numerics::HermitianGram<f64>;
pub type Quadrature64 = numerics::Quadrature<f64>;
pub type ModelParams64 = bands::ModelParams<f64>;
pub type BandTable64 = bands::BandTable<f64>;
pub type NeumannMinimum64 = bands::NeumannMinimum<f64>;
pub type Potential2D64 = potential::Potential2D<f64>;
pub type KWindow64 = dirichlet::KWindow<f64>;
pub type GeometrySpec64 = dirichlet::GeometrySpec<f64>;
pub type DirichletConstants64 = dirichlet::DirichletConstants<f64>;
pub type CountingResult64 = dirichlet::CountingResult<f64>;
pub type EffectivePotential1D64 = neumann::EffectivePotential1D<f64>;
pub type DecayProfile64 = neumann::DecayProfile<f64>;
