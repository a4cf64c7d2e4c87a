//! Ground-truth Hermite and Charlier values and true Hermite zeros.
//!
//! Every finite `f64` is a dyadic rational, so both finite sums are
//! evaluated exactly in big-integer or big-rational arithmetic and only the
//! final result is rounded into a [`SignedLogReal`]. The three-term
//! recurrence gives a second, floating-point route for Hermite values.

use std::f64::consts::LN_2;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::logreal::SignedLogReal;
use crate::zeros;

/// Largest degree accepted by the exact-sum oracles.
pub const MAX_EXACT_DEGREE: u32 = 400;
/// Largest degree accepted by [`hermite_zeros_exact`].
pub const MAX_ZEROS_DEGREE: u32 = 200;
const BISECTION_CAP: usize = 200;

/// Evaluation coordinates `(n, xi)` for `H_n(xi)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermitePoint {
    pub n: u32,
    pub xi: f64,
}

impl HermitePoint {
    pub fn new(n: u32, xi: f64) -> Result<Self> {
        if !xi.is_finite() {
            return Err(Error::domain(format!("Hermite argument must be finite, got {xi}")));
        }
        Ok(Self { n, xi })
    }
}

/// Evaluation coordinates `(n, a, x)` for `C_n^{(a)}(x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharlierPoint {
    pub n: u32,
    pub a: f64,
    pub x: f64,
}

impl CharlierPoint {
    pub fn new(n: u32, a: f64, x: f64) -> Result<Self> {
        if !(a > 0.0) || !a.is_finite() {
            return Err(Error::domain(format!("Charlier parameter a must be positive and finite, got {a}")));
        }
        if !x.is_finite() {
            return Err(Error::domain(format!("Charlier argument must be finite, got {x}")));
        }
        Ok(Self { n, a, x })
    }

    /// Whether `0 < n < a`, the hypothesis attached to the lower turning
    /// point formulas.
    pub fn degree_below_parameter(&self) -> bool {
        self.n > 0 && f64::from(self.n) < self.a
    }
}

/// Natural log of |v| for a nonzero big integer.
fn bigint_ln_abs(v: &BigInt) -> f64 {
    let bits = v.bits();
    if bits <= 64 {
        let mag = v.magnitude().iter_u64_digits().next().unwrap_or(0);
        return (mag as f64).ln();
    }
    let shift = bits - 64;
    let top: BigInt = v.abs() >> shift;
    let mag = top.magnitude().iter_u64_digits().next().unwrap_or(0);
    (mag as f64).ln() + shift as f64 * LN_2
}

fn bigint_to_log(v: &BigInt) -> SignedLogReal {
    match v.sign() {
        Sign::NoSign => SignedLogReal::ZERO,
        Sign::Plus => SignedLogReal::from_log(bigint_ln_abs(v)),
        Sign::Minus => SignedLogReal::new(-1, bigint_ln_abs(v)),
    }
}

fn rational_to_log(v: &BigRational) -> SignedLogReal {
    if v.is_zero() {
        return SignedLogReal::ZERO;
    }
    let sign = if v.is_negative() { -1 } else { 1 };
    SignedLogReal::new(sign, bigint_ln_abs(v.numer()) - bigint_ln_abs(v.denom()))
}

/// Splits a finite non-negative `x` into `m / 2^s` with integer `m`, `s >= 0`.
fn dyadic(x: f64) -> (BigInt, u64) {
    if x == 0.0 {
        return (BigInt::zero(), 0);
    }
    let bits = x.to_bits();
    let raw_exp = ((bits >> 52) & 0x7ff) as i64;
    let frac = bits & ((1u64 << 52) - 1);
    let (mut mant, mut exp) = if raw_exp == 0 { (frac, -1074) } else { (frac | (1u64 << 52), raw_exp - 1075) };
    let tz = i64::from(mant.trailing_zeros());
    mant >>= tz;
    exp += tz;
    if exp >= 0 {
        (BigInt::from(mant) << exp as u64, 0)
    } else {
        (BigInt::from(mant), (-exp) as u64)
    }
}

/// Integer coefficients c_k = (-1)^k n! 2^{n-2k} / (k! (n-2k)!).
fn hermite_coefficients(n: u32) -> Vec<BigInt> {
    let half = n / 2;
    let mut coeffs = Vec::with_capacity(half as usize + 1);
    let mut c = BigInt::one() << n as usize;
    coeffs.push(c.clone());
    for k in 1..=half {
        let top = u64::from(n - 2 * k + 2) * u64::from(n - 2 * k + 1);
        c = -(c * top) / (4 * u64::from(k));
        coeffs.push(c.clone());
    }
    coeffs
}

/// `H_n(xi)` from the explicit finite sum, evaluated exactly.
pub fn hermite_exact_sum(p: HermitePoint) -> Result<SignedLogReal> {
    let HermitePoint { n, xi } = HermitePoint::new(p.n, p.xi)?;
    if n > MAX_EXACT_DEGREE {
        return Err(Error::Capability(format!("exact Hermite sum supports n <= {MAX_EXACT_DEGREE}, got {n}")));
    }
    let flip = xi < 0.0 && n % 2 == 1;
    let (m, s) = dyadic(xi.abs());
    let coeffs = hermite_coefficients(n);
    let m2 = &m * &m;
    // Homogeneous Horner in (m^2, 4^s): sum_k c_k m^{2(K-k)} 2^{2sk}.
    let mut acc = BigInt::zero();
    for (k, c) in coeffs.iter().enumerate() {
        acc = acc * &m2 + (c << (2 * s as usize * k));
    }
    if n % 2 == 1 {
        acc *= &m;
    }
    let value = bigint_to_log(&acc).scale_log(-(s as f64) * f64::from(n) * LN_2);
    Ok(if flip { -value } else { value })
}

/// `H_n(xi)` from H_{k+1} = 2 xi H_k - 2k H_{k-1}, rescaled by powers of
/// two to stay in range.
pub fn hermite_recurrence_log(p: HermitePoint) -> Result<SignedLogReal> {
    let HermitePoint { n, xi } = HermitePoint::new(p.n, p.xi)?;
    let flip = xi < 0.0 && n % 2 == 1;
    let x = xi.abs();
    const BIG: f64 = 1e150;
    const SHRINK_EXP: i32 = -500;
    let shrink = 2f64.powi(SHRINK_EXP);
    let mut prev = 1.0;
    let mut cur = 2.0 * x;
    let mut log_scale = 0.0;
    if n == 0 {
        cur = 1.0;
    }
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * f64::from(k) * prev;
        prev = cur;
        cur = next;
        if cur.abs() > BIG || prev.abs() > BIG {
            cur *= shrink;
            prev *= shrink;
            log_scale -= f64::from(SHRINK_EXP) * LN_2;
        }
    }
    let value = SignedLogReal::from_f64(cur).scale_log(log_scale);
    Ok(if flip { -value } else { value })
}

/// `C_n^{(a)}(x)` from the terminating hypergeometric sum, evaluated in
/// exact rational arithmetic.
pub fn charlier_exact_sum(p: CharlierPoint) -> Result<SignedLogReal> {
    let CharlierPoint { n, a, x } = CharlierPoint::new(p.n, p.a, p.x)?;
    if n > MAX_EXACT_DEGREE {
        return Err(Error::Capability(format!("exact Charlier sum supports n <= {MAX_EXACT_DEGREE}, got {n}")));
    }
    let a = BigRational::from_float(a).expect("finite");
    let x = BigRational::from_float(x).expect("finite");
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    for k in 0..n {
        let kk = BigRational::from_integer(BigInt::from(k));
        let factor = (&x - &kk) * BigInt::from(n - k);
        term = -(term * factor) / (&a * BigInt::from(k + 1));
        if term.is_zero() {
            break;
        }
        sum += &term;
    }
    Ok(rational_to_log(&sum))
}

fn hermite_sign(n: u32, xi: f64) -> i8 {
    hermite_recurrence_log(HermitePoint { n, xi }).expect("finite argument").sign()
}

/// Bisection on the sign of the recurrence; `lo` and `hi` must carry
/// opposite nonzero signs.
fn bisect_sign(n: u32, mut lo: f64, mut hi: f64) -> f64 {
    let s_lo = hermite_sign(n, lo);
    for _ in 0..BISECTION_CAP {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        match hermite_sign(n, mid) {
            0 => return mid,
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
    0.5 * (lo + hi)
}

fn brackets_from_estimates(n: u32, positive: usize) -> Option<Vec<(f64, f64)>> {
    let est: Vec<f64> = zeros::tau_estimates(n, zeros::Method::Newton, &zeros::KapteynOptions::for_degree(n))
        .ok()?
        .into_iter()
        .map(|t| (2.0 * f64::from(n)).sqrt() * t.sin())
        .collect();
    let outer = (2.0 * f64::from(n) + 1.0).sqrt();
    let mut out = Vec::with_capacity(positive);
    for j in 0..positive {
        let hi = if j == 0 { outer } else { 0.5 * (est[j - 1] + est[j]) };
        let lo = if j + 1 < positive {
            0.5 * (est[j] + est[j + 1])
        } else if n % 2 == 1 {
            0.5 * est[j]
        } else {
            0.0
        };
        let (sl, sh) = (hermite_sign(n, lo), hermite_sign(n, hi));
        if sl == 0 || sh == 0 || sl == sh {
            return None;
        }
        out.push((lo, hi));
    }
    Some(out)
}

fn brackets_from_grid(n: u32, positive: usize) -> Result<Vec<(f64, f64)>> {
    let outer = (2.0 * f64::from(n) + 1.0).sqrt();
    let steps = 50 * n as usize;
    let h = outer / steps as f64;
    let mut out = Vec::with_capacity(positive);
    let mut prev_x = outer;
    let mut prev_s = hermite_sign(n, outer);
    for i in (1..steps).rev() {
        let x = h * i as f64;
        let s = hermite_sign(n, x);
        if s != 0 && s != prev_s {
            out.push((x, prev_x));
        }
        if s != 0 {
            prev_x = x;
            prev_s = s;
        }
    }
    if out.len() != positive {
        return Err(Error::domain(format!("grid search found {} of {positive} positive zeros for n = {n}", out.len())));
    }
    Ok(out)
}

/// The `n` real zeros of `H_n`, in decreasing order.
pub fn hermite_zeros_exact(n: u32) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::domain("H_0 has no zeros"));
    }
    if n > MAX_ZEROS_DEGREE {
        return Err(Error::Capability(format!("exact zeros supported for n <= {MAX_ZEROS_DEGREE}, got {n}")));
    }
    let positive = (n / 2) as usize;
    let brackets = match brackets_from_estimates(n, positive) {
        Some(b) => b,
        None => brackets_from_grid(n, positive)?,
    };
    let pos: Vec<f64> = brackets.into_iter().map(|(lo, hi)| bisect_sign(n, lo, hi)).collect();
    let mut all = pos.clone();
    if n % 2 == 1 {
        all.push(0.0);
    }
    all.extend(pos.iter().rev().map(|z| -z));
    Ok(all)
}
