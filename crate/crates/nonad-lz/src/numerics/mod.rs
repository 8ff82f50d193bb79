//! Shared numerical kernels: adaptive quadrature, improper tails, complex
//! Newton root finding, branch-continued square roots and real root
//! bracketing. All kernels are pure and reentrant.

mod continuation;
mod quadrature;
mod roots;

pub use continuation::{
    continue_sqrt_along, integrate_sqrt_along, integrate_weighted_inverse_sqrt_along,
    PathContinuation, StartBranch,
};
pub use quadrature::{
    improper_tail, integrate, integrate_complex, integrate_sqrt_endpoint, QuadratureResult,
};
pub use roots::{bracket_real_roots, complex_newton_roots, golden_minimum, seed_grid};
