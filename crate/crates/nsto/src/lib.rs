//! One-center electron repulsion radial integrals over Slater-type orbitals
//! with non-integer principal quantum numbers.
//!
//! The central object is the radial integral
//!
//! ```text
//! R^L(n, n', ζ, ζ') = ∫∫ r1^n e^{-ζ r1} (r<^L / r>^{L+1}) r2^n' e^{-ζ' r2} dr1 dr2
//! ```
//!
//! evaluated for every `L` at once by a three-term ladder in `L`
//! ([`radial::ladder`]), with the two-series form ([`radial::radial_direct_series`])
//! as reference and fallback and brute-force quadrature ([`oracle`]) as an
//! independent check.
//!
//! ```
//! use nsto::radial::{ladder, RadialParams};
//! use nsto::PrecisionConfig;
//!
//! let p = RadialParams::new(2.0, 2.0, 2.0, 2.0).unwrap();
//! let table = ladder(&p, 3, &PrecisionConfig::default()).unwrap();
//! assert!((table.r[0].to_f64() - 5.0 / 128.0).abs() < 1e-15);
//! ```
mod config;
mod error;

pub mod angular;
pub mod assembly;
pub mod numerics;
pub mod oracle;
pub mod power;
pub mod radial;

pub use config::PrecisionConfig;
pub use error::{Error, Result};
pub use numerics::LogScaled;
