//! Signed numbers with an unbounded exponent range.
#![allow(clippy::excessive_precision)]
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

const LN2_HI: f64 = 6.931_471_803_691_238_164_90e-1;
const LN2_LO: f64 = 1.908_214_929_270_587_700_02e-10;
const LOG10_2: f64 = std::f64::consts::LOG10_2;

/// A real number `mant * 2^exp` with `0.5 <= |mant| < 1` (or `mant == 0`).
///
/// The binary exponent is an `i64`, so quantities like `Γ(241)` or
/// `(ζ+ζ')^{-201}` are held without overflow. Conversions from and to `f64`
/// are exact whenever the value is representable. [`LogScaled::sign`] and
/// [`LogScaled::log_mag`] expose the sign / natural-log view.
#[derive(Clone, Copy, Debug)]
pub struct LogScaled {
    mant: f64,
    exp: i64,
}

impl LogScaled {
    pub const ZERO: LogScaled = LogScaled { mant: 0.0, exp: 0 };
    pub const ONE: LogScaled = LogScaled { mant: 0.5, exp: 1 };

    fn norm(m: f64, e: i64) -> LogScaled {
        if m == 0.0 {
            return LogScaled::ZERO;
        }
        debug_assert!(m.is_finite(), "non-finite mantissa {m}");
        let (f, k) = libm::frexp(m);
        LogScaled { mant: f, exp: e + k as i64 }
    }

    /// Exact conversion. Panics on NaN or infinity.
    pub fn from_f64(x: f64) -> LogScaled {
        assert!(x.is_finite(), "LogScaled::from_f64 on non-finite {x}");
        LogScaled::norm(x, 0)
    }

    /// `sign * e^log_mag`; `sign == 0` gives zero.
    pub fn from_sign_log(sign: i8, log_mag: f64) -> LogScaled {
        match sign.signum() {
            0 => LogScaled::ZERO,
            s => {
                let v = LogScaled::exp(log_mag);
                if s < 0 {
                    -v
                } else {
                    v
                }
            }
        }
    }

    /// `e^x` for any finite `x`.
    pub fn exp(x: f64) -> LogScaled {
        assert!(x.is_finite(), "LogScaled::exp on non-finite {x}");
        let k = (x / std::f64::consts::LN_2).round();
        let r = (x - k * LN2_HI) - k * LN2_LO;
        LogScaled::norm(r.exp(), k as i64)
    }

    /// `base^p` for `base > 0`.
    pub fn powf(base: f64, p: f64) -> LogScaled {
        assert!(base > 0.0 && base.is_finite(), "powf base must be positive, got {base}");
        if p == p.trunc() && p.abs() <= 64.0 {
            return LogScaled::from_f64(base).powi(p as i32);
        }
        let (f, k) = libm::frexp(base);
        // f^p through libm pow, in chunks that stay inside the f64 range
        const CHUNK: f64 = 512.0;
        let mut m = LogScaled::ONE;
        let mut rest = p;
        if (p * f.log2()).abs() > 900.0 {
            let q = (p / CHUNK).trunc();
            m = LogScaled::from_f64(f.powf(CHUNK)).powi(q as i32);
            rest = p - q * CHUNK;
        }
        m = m.scale(f.powf(rest));
        // 2^(k p) with k p split exactly into hi + lo
        let kf = k as f64;
        let hi = kf * p;
        let lo = kf.mul_add(p, -hi);
        let ki = hi.floor();
        let m = m.scale(((hi - ki) + lo).exp2());
        LogScaled { mant: m.mant, exp: m.exp + ki as i64 }
    }

    /// `(x + y)^p` for `x + y > 0`, without the rounding of the sum being
    /// raised to the power `p`.
    pub fn pow_of_sum(x: f64, y: f64, p: f64) -> LogScaled {
        let s = x + y;
        let bb = s - x;
        let err = (x - (s - bb)) + (y - bb);
        let base = LogScaled::powf(s, p);
        if err == 0.0 {
            return base;
        }
        base.scale((p * (err / s).ln_1p()).exp())
    }

    /// Integer power by repeated squaring.
    pub fn powi(self, p: i32) -> LogScaled {
        if p < 0 {
            return LogScaled::ONE / self.powi(-p);
        }
        let mut acc = LogScaled::ONE;
        let mut base = self;
        let mut k = p as u32;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            k >>= 1;
        }
        acc
    }

    pub fn sign(&self) -> i8 {
        if self.mant > 0.0 {
            1
        } else if self.mant < 0.0 {
            -1
        } else {
            0
        }
    }

    /// Natural log of `|self|`; `-inf` for zero.
    pub fn log_mag(&self) -> f64 {
        if self.mant == 0.0 {
            return f64::NEG_INFINITY;
        }
        self.mant.abs().ln() + self.exp as f64 * std::f64::consts::LN_2
    }

    /// Base-10 log of `|self|`.
    pub fn log10_mag(&self) -> f64 {
        if self.mant == 0.0 {
            return f64::NEG_INFINITY;
        }
        self.mant.abs().log10() + self.exp as f64 * LOG10_2
    }

    /// Nearest `f64`; saturates to infinity or flushes to zero out of range.
    pub fn to_f64(&self) -> f64 {
        if self.mant == 0.0 {
            return 0.0;
        }
        let e = self.exp.clamp(-2200, 2200) as i32;
        libm::ldexp(self.mant, e)
    }

    pub fn is_zero(&self) -> bool {
        self.mant == 0.0
    }

    /// True when the value converts to a finite, non-zero `f64` without loss.
    pub fn fits_f64(&self) -> bool {
        self.mant == 0.0 || (-1021..=1024).contains(&self.exp)
    }

    pub fn abs(self) -> LogScaled {
        LogScaled { mant: self.mant.abs(), exp: self.exp }
    }

    pub fn recip(self) -> LogScaled {
        LogScaled::ONE / self
    }

    /// Multiply by a plain real.
    pub fn scale(self, x: f64) -> LogScaled {
        LogScaled::norm(self.mant * x, self.exp)
    }

    /// `self / other` as a plain real (both may be far outside `f64` range).
    pub fn ratio(self, other: LogScaled) -> f64 {
        (self / other).to_f64()
    }

    /// `|self - reference| / |reference|`.
    pub fn rel_diff(self, reference: LogScaled) -> f64 {
        if reference.is_zero() {
            return if self.is_zero() { 0.0 } else { f64::INFINITY };
        }
        ((self - reference) / reference).to_f64().abs()
    }

    pub fn checked_div(self, rhs: LogScaled) -> Option<LogScaled> {
        if rhs.is_zero() {
            None
        } else {
            Some(LogScaled::norm(self.mant / rhs.mant, self.exp - rhs.exp))
        }
    }

    /// Binary exponent and mantissa, for code that accumulates at a fixed scale.
    pub(crate) fn parts(&self) -> (f64, i64) {
        (self.mant, self.exp)
    }

    pub(crate) fn from_parts(mant: f64, exp: i64) -> LogScaled {
        LogScaled::norm(mant, exp)
    }

    fn fmt_sci(&self, digits: usize) -> String {
        if self.mant == 0.0 {
            return format!("{:.*e}", digits - 1, 0.0);
        }
        if (-1020..=1023).contains(&self.exp) {
            return format!("{:.*e}", digits - 1, self.to_f64());
        }
        // divide by 10^e10 (repeated squaring keeps the error at a few ulp)
        let e10 = self.log10_mag().floor() as i64;
        let ten = LogScaled::from_f64(10.0);
        let scaled = (*self / ten.powi(e10 as i32)).to_f64();
        let s = format!("{:.*e}", digits - 1, scaled);
        // `scaled` sits in [1, 10) up to rounding; re-attach the exponent
        let (mant, exp) = s.split_once('e').expect("scientific format");
        format!("{mant}e{}", exp.parse::<i64>().expect("exponent") + e10)
    }
}

impl Default for LogScaled {
    fn default() -> Self {
        LogScaled::ZERO
    }
}

impl From<f64> for LogScaled {
    fn from(x: f64) -> Self {
        LogScaled::from_f64(x)
    }
}

impl Neg for LogScaled {
    type Output = LogScaled;
    fn neg(self) -> LogScaled {
        LogScaled { mant: -self.mant, exp: self.exp }
    }
}

impl Mul for LogScaled {
    type Output = LogScaled;
    fn mul(self, rhs: LogScaled) -> LogScaled {
        if self.mant == 0.0 || rhs.mant == 0.0 {
            return LogScaled::ZERO;
        }
        LogScaled::norm(self.mant * rhs.mant, self.exp + rhs.exp)
    }
}

impl Div for LogScaled {
    type Output = LogScaled;
    fn div(self, rhs: LogScaled) -> LogScaled {
        self.checked_div(rhs).expect("LogScaled division by zero")
    }
}

impl Add for LogScaled {
    type Output = LogScaled;
    fn add(self, rhs: LogScaled) -> LogScaled {
        if self.mant == 0.0 {
            return rhs;
        }
        if rhs.mant == 0.0 {
            return self;
        }
        let (big, small) = if self.exp >= rhs.exp { (self, rhs) } else { (rhs, self) };
        let d = small.exp - big.exp;
        if d < -1100 {
            return big;
        }
        LogScaled::norm(big.mant + libm::ldexp(small.mant, d as i32), big.exp)
    }
}

impl Sub for LogScaled {
    type Output = LogScaled;
    fn sub(self, rhs: LogScaled) -> LogScaled {
        self + (-rhs)
    }
}

impl PartialEq for LogScaled {
    fn eq(&self, other: &Self) -> bool {
        self.mant == other.mant && (self.mant == 0.0 || self.exp == other.exp)
    }
}

impl PartialOrd for LogScaled {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let d = *self - *other;
        d.mant.partial_cmp(&0.0)
    }
}

/// Seventeen significant digits; values beyond `f64` range still print.
impl fmt::Display for LogScaled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().map(|p| p + 1).unwrap_or(17);
        let s = self.fmt_sci(digits);
        match f.width() {
            Some(w) => write!(f, "{s:>w$}"),
            None => f.write_str(&s),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_is_exact() {
        for &x in &[1.0, -3.5, 1e-300, 4.9e-324, 1.7976931348623157e308, 0.1, -7.25e12] {
            assert_eq!(LogScaled::from_f64(x).to_f64(), x);
        }
        assert!(LogScaled::from_f64(0.0).is_zero());
        assert_eq!(LogScaled::from_f64(-2.0).sign(), -1);
    }

    #[test]
    fn arithmetic_beyond_f64() {
        let big = LogScaled::exp(1000.0);
        let tiny = LogScaled::exp(-1000.0);
        let one = big * tiny;
        assert!((one.to_f64() - 1.0).abs() < 1e-13);
        assert!((big.log_mag() - 1000.0).abs() < 1e-12);
        let twice = big + big;
        assert!((twice.log_mag() - 1000.0 - 2f64.ln()).abs() < 1e-12);
        assert!((big - big).is_zero());
        assert!(big > tiny && -big < tiny);
    }

    #[test]
    fn powers() {
        let a = LogScaled::powf(2.3, -201.0);
        assert!((a.log_mag() + 201.0 * 2.3f64.ln()).abs() < 1e-12);
        let b = LogScaled::powf(1.7, 2.5);
        assert!((b.to_f64() / 1.7f64.powf(2.5) - 1.0).abs() < 1e-15);
        assert_eq!(LogScaled::from_f64(3.0).powi(3).to_f64(), 27.0);
    }

    #[test]
    fn large_powers_keep_full_precision() {
        let a = LogScaled::powf(2.3, -200.01).to_f64();
        assert!((a / 4.4752316256772885557e-73 - 1.0).abs() < 2e-15);
        let b = LogScaled::powf(0.37, 1234.5);
        let want = LogScaled::from_f64(8.8110640996596329413e-34) / LogScaled::from_f64(1e250).powi(2);
        assert!(b.rel_diff(want) < 5e-15);
        let c = LogScaled::pow_of_sum(1.1, 1.2, -200.01).to_f64();
        assert!((c / 4.4752316256772021426e-73 - 1.0).abs() < 2e-15);
    }

    #[test]
    fn display() {
        assert_eq!(LogScaled::from_f64(29.214103839897745).to_string(), "2.9214103839897746e1");
        let s = LogScaled::exp(1000.0).to_string();
        assert!(s.starts_with("1.97007") && s.ends_with("e434"), "{s}");
        assert_eq!(format!("{:.3}", LogScaled::from_f64(-0.5)), "-5.000e-1");
    }
}
