//! Overflow-safe real and complex values stored as logarithms of their
//! magnitude.
//!
//! Hermite values grow like `exp((n/2) ln(2n))`, which leaves the `f64`
//! range well before the degrees of interest, so every formula in this crate
//! produces a [`SignedLogReal`].

use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fmt;
use std::ops::{Mul, Neg};

/// Largest `log_abs` for which [`SignedLogReal::to_f64`] converts.
pub const PLAIN_LOG_LIMIT: f64 = 700.0;

/// A real number `sign * exp(log_abs)`.
///
/// `sign == 0` encodes an exact zero; `log_abs` is then `-inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLogReal {
    sign: i8,
    log_abs: f64,
}

impl SignedLogReal {
    pub const ZERO: Self = Self { sign: 0, log_abs: f64::NEG_INFINITY };
    pub const ONE: Self = Self { sign: 1, log_abs: 0.0 };

    /// Builds a value from a sign and a log-magnitude. A zero sign or a
    /// `-inf` magnitude both give exact zero.
    pub fn new(sign: i8, log_abs: f64) -> Self {
        assert!(!log_abs.is_nan(), "log magnitude is NaN");
        if sign == 0 || log_abs == f64::NEG_INFINITY {
            Self::ZERO
        } else {
            Self { sign: sign.signum(), log_abs }
        }
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else {
            Self::new(if x > 0.0 { 1 } else { -1 }, x.abs().ln())
        }
    }

    /// `exp(log_abs)` with a positive sign.
    pub fn from_log(log_abs: f64) -> Self {
        Self::new(1, log_abs)
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn log_abs(&self) -> f64 {
        self.log_abs
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// Plain value, or `None` when the magnitude is at or beyond `e^700`.
    pub fn to_f64(&self) -> Option<f64> {
        if self.sign == 0 {
            Some(0.0)
        } else if self.log_abs.abs() < PLAIN_LOG_LIMIT {
            Some(f64::from(self.sign) * self.log_abs.exp())
        } else {
            None
        }
    }

    /// Plain value, saturating to `±inf` or `±0`.
    pub fn to_f64_lossy(&self) -> f64 {
        if self.sign == 0 {
            0.0
        } else {
            f64::from(self.sign) * self.log_abs.exp()
        }
    }

    pub fn abs(self) -> Self {
        Self::new(self.sign.abs(), self.log_abs)
    }

    /// `self^k` for a non-negative integer power.
    pub fn powi(self, k: u32) -> Self {
        if k == 0 {
            return Self::ONE;
        }
        let sign = if k % 2 == 0 { self.sign.abs() } else { self.sign };
        Self::new(sign, self.log_abs * f64::from(k))
    }

    /// Multiplies by `exp(shift)`.
    pub fn scale_log(self, shift: f64) -> Self {
        Self::new(self.sign, self.log_abs + shift)
    }

    /// Sum computed by shifting to the larger magnitude and taking
    /// `ln_1p` of the signed ratio.
    pub fn add(self, other: Self) -> Self {
        if self.sign == 0 {
            return other;
        }
        if other.sign == 0 {
            return self;
        }
        let (big, small) = if self.log_abs >= other.log_abs { (self, other) } else { (other, self) };
        let ratio = (small.log_abs - big.log_abs).exp();
        if big.sign == small.sign {
            Self::new(big.sign, big.log_abs + ratio.ln_1p())
        } else if ratio == 1.0 {
            Self::ZERO
        } else {
            Self::new(big.sign, big.log_abs + (-ratio).ln_1p())
        }
    }

    pub fn sub(self, other: Self) -> Self {
        self.add(-other)
    }

    /// Relative error `|self - exact| / |exact|` evaluated without leaving
    /// the log domain. Exact zero against exact zero is `0`; anything else
    /// against zero is `inf`.
    pub fn rel_err(self, exact: Self) -> f64 {
        if exact.sign == 0 {
            return if self.sign == 0 { 0.0 } else { f64::INFINITY };
        }
        if self.sign == 0 {
            return 1.0;
        }
        let d = self.log_abs - exact.log_abs;
        if self.sign == exact.sign {
            d.exp_m1().abs()
        } else {
            1.0 + d.exp()
        }
    }

    /// Ordering of the represented values.
    pub fn total_cmp(&self, other: &Self) -> Ordering {
        match self.sign.cmp(&other.sign) {
            Ordering::Equal => match self.sign {
                0 => Ordering::Equal,
                1 => self.log_abs.total_cmp(&other.log_abs),
                _ => other.log_abs.total_cmp(&self.log_abs),
            },
            o => o,
        }
    }
}

impl Neg for SignedLogReal {
    type Output = Self;
    fn neg(self) -> Self {
        Self { sign: -self.sign, log_abs: self.log_abs }
    }
}

impl Mul for SignedLogReal {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(self.sign * rhs.sign, self.log_abs + rhs.log_abs)
    }
}

impl fmt::Display for SignedLogReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            0 => write!(f, "0"),
            s => write!(f, "{}exp({})", if s < 0 { "-" } else { "" }, self.log_abs),
        }
    }
}

/// A complex number `exp(log_abs + i*phase)` with `phase` in `(-pi, pi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexLog {
    pub log_abs: f64,
    pub phase: f64,
}

impl ComplexLog {
    pub fn new(log_abs: f64, phase: f64) -> Self {
        Self { log_abs, phase: normalize_phase(phase) }
    }

    pub fn conj(self) -> Self {
        Self::new(self.log_abs, -self.phase)
    }

    /// Real part as a [`SignedLogReal`].
    pub fn re(self) -> SignedLogReal {
        SignedLogReal::from_f64(self.phase.cos()).scale_log(self.log_abs)
    }

    pub fn im(self) -> SignedLogReal {
        SignedLogReal::from_f64(self.phase.sin()).scale_log(self.log_abs)
    }

    /// Sum of two values, returned as real and imaginary parts.
    pub fn add(self, other: Self) -> (SignedLogReal, SignedLogReal) {
        (self.re().add(other.re()), self.im().add(other.im()))
    }
}

/// Reduces an angle into `(-pi, pi]`.
pub fn normalize_phase(phase: f64) -> f64 {
    if phase > -PI && phase <= PI {
        return phase;
    }
    let tau = 2.0 * PI;
    let mut r = phase.rem_euclid(tau);
    if r > PI {
        r -= tau;
    }
    r
}
