//! Self-contained linear-algebra and quadrature kernel.
//!
//! Everything downstream (band functions, Galerkin counts, special-function
//! integrals) reduces to the primitives in this module: Sturm-sequence
//! eigenvalue counts on symmetric tridiagonal matrices, lowest eigenpairs by
//! bisection + inverse iteration, eigenvalue counts for weighted Hermitian
//! matrices through the real symmetric embedding, Gauss–Legendre rules, and
//! a handful of scalar special functions.
//!
//! All operations are pure; values are immutable after construction and can
//! be shared across threads freely.

mod hermitian;
mod quadrature;
mod scalar;
mod tridiagonal;

pub use hermitian::{hermitian_count_above, HermitianGram};
pub use quadrature::{gauss_legendre, Quadrature};
pub use scalar::{erf, erfc, erfcx, euler_beta, ln_gamma, ln_gauss_integral, solve_increasing};
pub use tridiagonal::{lowest_eigenpair, sturm_count_below, sturm_count_below_fn, Tridiagonal};
