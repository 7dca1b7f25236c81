//! The radial integral `R^L`: seeds, helpers, single-series closed forms,
//! the `L`-ladder and the kernel-generalized integral.
mod generalized;
mod helpers;
mod ladder;
mod params;
mod seeds;
mod series;

pub use generalized::radial_generalized;
pub use helpers::{compute_helpers, l1_step, Axis, HelperSet, L1Context};
pub use ladder::{channel_ladder, ladder, ladder_with, Channel, ChannelTable, LadderReport, LadderTable, RecoveryMode, Source};
pub use params::RadialParams;
pub use seeds::{seed_l0, seed_l1, seed_l1_or_series};
pub use series::{partner_channel, primary_channel, radial_closed_form, radial_direct_series, ClosedForm};
