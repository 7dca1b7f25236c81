//! The guide under `book/`, compiled so that `cargo test` runs its listings.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/radial.md")]
pub mod radial {}
#[doc = include_str!("../../../book/src/precision.md")]
pub mod precision {}
#[doc = include_str!("../../../book/src/coulomb.md")]
pub mod coulomb {}
#[doc = include_str!("../../../book/src/power.md")]
pub mod power {}
#[doc = include_str!("../../../book/src/checking.md")]
pub mod checking {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
