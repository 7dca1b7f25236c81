//! Independent checks: adaptive quadrature of the defining integrals and
//! numerical validation of the identities the analytic routes rely on.
mod angular;
mod identities;
mod quad;
mod radial;

pub use angular::{quad_gaunt, real_harmonic, spherical_harmonic};
pub use identities::{identity_suite, identity_suite_with, IdentityReport, IdentityRow, IDENTITY_TOL};
pub use quad::{integrate, panels_around, Estimate, Panel, QuadSpec};
pub use radial::{power_kernel, quad_1d, quad_2d, quad_radial, Density, QuadResult, Region};
