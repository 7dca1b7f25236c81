use super::LogScaled;

/// Neumaier-compensated running sum.
#[derive(Debug, Default, Clone, Copy)]
pub struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }

    pub(crate) fn rescale(&mut self, k: i32) {
        self.sum = libm::ldexp(self.sum, k);
        self.comp = libm::ldexp(self.comp, k);
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = CompensatedSum::new();
        for x in iter {
            s.add(x);
        }
        s
    }
}

/// Compensated sum of [`LogScaled`] terms held at a floating binary scale.
#[derive(Debug, Clone, Copy)]
pub struct ScaledSum {
    acc: CompensatedSum,
    exp: i64,
    started: bool,
}

impl Default for ScaledSum {
    fn default() -> Self {
        ScaledSum { acc: CompensatedSum::new(), exp: 0, started: false }
    }
}

impl ScaledSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: LogScaled) {
        if x.is_zero() {
            return;
        }
        let (m, e) = x.parts();
        if !self.started {
            self.exp = e;
            self.started = true;
        }
        let shift = e - self.exp;
        if shift > 512 {
            self.acc.rescale(-(shift as i32));
            self.exp = e;
            self.acc.add(m);
        } else if shift >= -1100 {
            self.acc.add(libm::ldexp(m, shift as i32));
        }
        if self.acc.sum.abs() > 1e150 {
            self.acc.rescale(-500);
            self.exp += 500;
        }
    }

    pub fn value(&self) -> LogScaled {
        LogScaled::from_parts(self.acc.value(), self.exp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensation_recovers_lost_bits() {
        let s: CompensatedSum = [1.0, 1e100, 1.0, -1e100].into_iter().collect();
        assert_eq!(s.value(), 2.0);
    }

    #[test]
    fn scaled_sum_spans_ranges() {
        let mut s = ScaledSum::new();
        for k in 0..2000 {
            s.add(LogScaled::exp(k as f64));
        }
        // geometric series sum e^k, k < 2000
        let e = std::f64::consts::E;
        let expected = 1999.0 + (1.0 / (1.0 - 1.0 / e)).ln();
        assert!((s.value().log_mag() - expected).abs() < 1e-12);
    }
}
