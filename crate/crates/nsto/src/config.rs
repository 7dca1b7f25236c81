/// Tolerances and work limits shared by every numerical routine.
///
/// All routines take the configuration by reference and never mutate it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrecisionConfig {
    pub series_rel_tol: f64,
    pub series_max_terms: usize,
    pub quad_rel_tol: f64,
    pub quad_max_subdivisions: usize,
    /// `|x - round(x)|` below this counts as an integer for pole detection.
    pub integer_detect_eps: f64,
    /// Error budget the L-ladder may accumulate before it re-anchors on a series value.
    pub ladder_rel_tol: f64,
    /// Largest relative error a closed form may lose to cancellation before it is refused.
    pub cancellation_rel_tol: f64,
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        PrecisionConfig {
            series_rel_tol: 1e-15,
            series_max_terms: 100_000,
            quad_rel_tol: 1e-10,
            quad_max_subdivisions: 4000,
            integer_detect_eps: 1e-9,
            ladder_rel_tol: 1e-12,
            cancellation_rel_tol: 1e-11,
        }
    }
}

impl PrecisionConfig {
    pub fn validate(&self) -> crate::Result<()> {
        let tols = [
            self.series_rel_tol,
            self.quad_rel_tol,
            self.integer_detect_eps,
            self.ladder_rel_tol,
            self.cancellation_rel_tol,
        ];
        if tols.iter().any(|t| !(*t > 0.0) || !t.is_finite()) {
            return Err(crate::Error::Domain("tolerances must be positive".into()));
        }
        if self.series_max_terms == 0 || self.quad_max_subdivisions == 0 {
            return Err(crate::Error::Domain("work limits must be at least 1".into()));
        }
        Ok(())
    }

    /// Distance-to-integer test used by every pole guard.
    pub fn near_integer(&self, x: f64) -> bool {
        (x - x.round()).abs() <= self.integer_detect_eps
    }
}
