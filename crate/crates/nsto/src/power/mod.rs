//! Laplace expansion of `r₁₂^μ` and the Breit radial integrals.
mod breit;
mod sack;

pub use breit::{breit_n, breit_n_with, breit_v, breit_v_quadrature, StepConvention};
pub use sack::{
    kernel_relation_residual, mu_ladder_residual, mu_ladder_terms, sack_kernel, sack_radial, PowerParams,
};
