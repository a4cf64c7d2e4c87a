use super::{KernelPolicy, TailGuard};
use crate::error::{Error, Result};

const RESCALE_AT: f64 = 1e250;
const RESCALE_BY: f64 = 1e-250;

/// Bessel function of the first kind J_k(x) for integer order k >= 0.
///
/// Negative arguments are reduced with J_k(-x) = (-1)^k J_k(x) before any
/// evaluation, so the reflection holds bit for bit.
pub fn bessel_j(k: i64, x: f64) -> Result<f64> {
    bessel_j_with(k, x, &KernelPolicy::default())
}

pub fn bessel_j_with(k: i64, x: f64, policy: &KernelPolicy) -> Result<f64> {
    if k < 0 {
        return Err(Error::domain(format!("Bessel order must be non-negative, got {k}")));
    }
    if !x.is_finite() {
        return Err(Error::domain(format!("Bessel argument must be finite, got {x}")));
    }
    let k = u64::try_from(k).expect("checked non-negative");
    let v = j_nonneg(k, x.abs(), policy);
    Ok(if x.is_sign_negative() && k % 2 == 1 { -v } else { v })
}

/// J_k(x) for x >= 0.
pub(crate) fn j_nonneg(k: u64, x: f64, policy: &KernelPolicy) -> f64 {
    if x == 0.0 {
        return if k == 0 { 1.0 } else { 0.0 };
    }
    if x <= 8.0 || x * x <= (k + 1) as f64 {
        ascending_series(k, x, policy)
    } else {
        miller(k, x)
    }
}

/// Power series sum (-1)^m (x/2)^{2m+k} / (m! (m+k)!). Used only where the
/// terms either start small or decrease from the first one.
fn ascending_series(k: u64, x: f64, policy: &KernelPolicy) -> f64 {
    let half = 0.5 * x;
    let mut lead = 1.0;
    for i in 1..=k {
        lead *= half / i as f64;
        if lead == 0.0 {
            return 0.0;
        }
    }
    let q = half * half;
    let mut term = lead;
    let mut sum = lead;
    let mut guard = TailGuard::default();
    for m in 1..=policy.max_terms as u64 {
        term *= -q / (m as f64 * (m + k) as f64);
        sum += term;
        let threshold = policy.negligible() * sum.abs().min(1.0);
        if guard.done(term, threshold) || term == 0.0 {
            break;
        }
    }
    sum
}

/// Miller's downward recurrence from an order well above max(k, x),
/// normalized with J_0 + 2 sum J_{2m} = 1.
fn miller(k: u64, x: f64) -> f64 {
    let top = (k as f64).max(x);
    let mut start = (top + 15.0 * top.cbrt() + 30.0).ceil() as u64;
    start += start % 2;
    let two_over_x = 2.0 / x;
    let mut above = 0.0; // j_{nu+1}
    let mut current = 1e-30; // j_nu
    let mut norm = 0.0;
    let mut result = 0.0;
    let mut nu = start;
    loop {
        if nu == k {
            result = current;
        }
        if nu % 2 == 0 {
            norm += if nu == 0 { current } else { 2.0 * current };
        }
        if nu == 0 {
            break;
        }
        let below = nu as f64 * two_over_x * current - above;
        above = current;
        current = below;
        nu -= 1;
        if current.abs() > RESCALE_AT {
            current *= RESCALE_BY;
            above *= RESCALE_BY;
            norm *= RESCALE_BY;
            result *= RESCALE_BY;
        }
    }
    result / norm
}
