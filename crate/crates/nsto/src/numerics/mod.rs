//! Scalar kernels: log-scaled arithmetic and the special functions.
mod beta;
mod gamma;
mod hyp2f1;
mod incgamma;
mod log_scaled;
mod sum;

pub use beta::{inc_beta, inc_beta_scaled};
pub use gamma::{beta, digamma, gamma_signed, ln_gamma, pochhammer, rgamma};
pub use hyp2f1::{hyp2f1_complement, hyp2f1_general, hyp2f1_unit_a};
pub use incgamma::{a_func, lower_inc_gamma, upper_inc_gamma};
pub use log_scaled::LogScaled;
pub use sum::{CompensatedSum, ScaledSum};

