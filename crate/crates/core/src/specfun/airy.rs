use std::f64::consts::PI;

use super::dd::DoubleDouble;
use super::{KernelPolicy, TailGuard};
use crate::error::{Error, Result};
use crate::logreal::SignedLogReal;

/// Ai(0) and -Ai'(0) split into double-double parts.
const AI0: DoubleDouble = DoubleDouble::new(0.3550280538878172, 2.05233632436212e-17);
const NEG_AIP0: DoubleDouble = DoubleDouble::new(0.2588194037928068, -2.522243111610832e-17);

/// Boundary between the power series and the asymptotic expansions.
const SERIES_LIMIT: f64 = 8.0;

/// Airy function of the first kind on the real line, default accuracy.
pub fn airy_ai(z: f64) -> Result<f64> {
    airy_ai_with(z, &KernelPolicy::default())
}

pub fn airy_ai_with(z: f64, policy: &KernelPolicy) -> Result<f64> {
    if !z.is_finite() {
        return Err(Error::domain(format!("Airy argument must be finite, got {z}")));
    }
    Ok(if z.abs() <= SERIES_LIMIT {
        maclaurin(z, policy)
    } else if z > 0.0 {
        let (log_prefactor, s) = decaying(z, policy);
        s * log_prefactor.exp()
    } else {
        oscillating(-z, policy)
    })
}

/// Ai(z) in log form, so that the decaying tail stays representable past
/// the underflow point near z = 105.
pub fn airy_ai_log(z: f64) -> Result<SignedLogReal> {
    let policy = KernelPolicy::default();
    if z.is_finite() && z > SERIES_LIMIT {
        let (log_prefactor, s) = decaying(z, &policy);
        Ok(SignedLogReal::from_f64(s).scale_log(log_prefactor))
    } else {
        airy_ai_with(z, &policy).map(SignedLogReal::from_f64)
    }
}

/// Ai(z) = Ai(0) f(z) + Ai'(0) g(z) with the two power-series solutions,
/// summed in double-double to absorb the cancellation for |z| up to 8.
fn maclaurin(z: f64, policy: &KernelPolicy) -> f64 {
    let zd = DoubleDouble::from_f64(z);
    let z3 = zd * zd * zd;
    let mut f_term = DoubleDouble::from_f64(1.0);
    let mut g_term = zd;
    let mut f_sum = f_term;
    let mut g_sum = g_term;
    let mut guard = TailGuard::default();
    for k in 0..policy.max_terms {
        let k3 = 3.0 * k as f64;
        f_term = (f_term * z3).div_f64((k3 + 2.0) * (k3 + 3.0));
        g_term = (g_term * z3).div_f64((k3 + 3.0) * (k3 + 4.0));
        f_sum = f_sum + f_term;
        g_sum = g_sum + g_term;
        let size = f_term.abs_f64().max(g_term.abs_f64());
        if guard.done(size, policy.negligible() * 1e-6) {
            break;
        }
    }
    (AI0 * f_sum - NEG_AIP0 * g_sum).to_f64()
}

/// Coefficients u_k of the large-argument Airy expansions.
fn u_coefficients(count: usize) -> Vec<f64> {
    let mut u = Vec::with_capacity(count);
    u.push(1.0);
    for k in 1..count {
        let kf = k as f64;
        let r = (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0) / ((2.0 * kf - 1.0) * 216.0 * kf);
        u.push(u[k - 1] * r);
    }
    u
}

/// Returns (ln of e^{-zeta}/(2 sqrt(pi) z^{1/4}), asymptotic sum) for z > 0.
fn decaying(z: f64, policy: &KernelPolicy) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * z * z.sqrt();
    let log_prefactor = -zeta - (2.0 * PI.sqrt()).ln() - 0.25 * z.ln();
    let u = u_coefficients(policy.max_terms.min(200));
    let mut sum = 1.0;
    let mut prev = 1.0;
    let mut power = 1.0;
    for (k, uk) in u.iter().enumerate().skip(1) {
        power /= zeta;
        let term = uk * power;
        if term > prev {
            break;
        }
        sum += if k % 2 == 0 { term } else { -term };
        if term < policy.target_rel_tol * 1e-2 {
            break;
        }
        prev = term;
    }
    (log_prefactor, sum)
}

/// Ai(-x) for x > 0 from the modulus-phase form
/// x^{-1/4}/sqrt(pi) [cos(zeta - pi/4) P + sin(zeta - pi/4) Q].
fn oscillating(x: f64, policy: &KernelPolicy) -> f64 {
    let zeta = 2.0 / 3.0 * x * x.sqrt();
    let u = u_coefficients(policy.max_terms.min(200));
    let mut p = 1.0;
    let mut q = 0.0;
    let mut prev = f64::INFINITY;
    let mut power = 1.0;
    for (k, uk) in u.iter().enumerate().skip(1) {
        power /= zeta;
        let term = uk * power;
        if term > prev {
            break;
        }
        // k = 2m contributes (-1)^m to P, k = 2m + 1 contributes (-1)^m to Q.
        let m = k / 2;
        let signed = if m % 2 == 0 { term } else { -term };
        if k % 2 == 0 {
            p += signed;
        } else {
            q += signed;
        }
        if term < policy.target_rel_tol * 1e-2 {
            break;
        }
        prev = term;
    }
    let (s, c) = zeta.sin_cos();
    let cos_shift = (c + s) * std::f64::consts::FRAC_1_SQRT_2;
    let sin_shift = (s - c) * std::f64::consts::FRAC_1_SQRT_2;
    (cos_shift * p + sin_shift * q) / (PI.sqrt() * x.powf(0.25))
}

#[cfg(test)]
mod tests {
    use super::*;

    // Reference values computed with 40-digit arithmetic.
    const REFERENCE: &[(f64, f64)] = &[
        (0.0, 0.35502805388781723926),
        (1.0, 0.13529241631288141552),
        (-1.0, 0.5355608832923521188),
        (2.5, 0.015725923380470489995),
        (-2.5, -0.11232506769296608919),
        (5.4, 0.000042729861694116620329),
        (-5.4, 0.10293459611013465227),
        (5.6, 0.000026500613296849970989),
        (-5.6, -0.068330699686167863919),
        (7.0, 7.4921288639971670808e-7),
        (-7.0, 0.18428083525050563728),
        (7.9, 6.2396400972839404787e-8),
        (-7.9, 0.041701883617387043357),
        (8.1, 3.522435623573567885e-8),
        (-8.1, -0.14290814709358142437),
        (10.0, 1.1047532552898685934e-10),
        (-10.0, 0.040241238486443190689),
        (12.0, 1.393184688875360839e-13),
        (-12.0, -0.066555175054373129474),
        (-20.0, -0.17640612707798468959),
        (-50.0, -0.16188142361232092392),
        (-200.0, 0.14889394248381025115),
    ];

    #[test]
    fn matches_reference_absolute() {
        for &(z, want) in REFERENCE {
            let got = airy_ai(z).unwrap();
            assert!((got - want).abs() <= 1e-12, "Ai({z}) = {got}, want {want}");
        }
    }

    #[test]
    fn relative_accuracy_on_decaying_side() {
        for &(z, want) in &[(15.0, 2.164962520737992299e-18), (20.0, 1.6916728686705403136e-27)] {
            let got = airy_ai(z).unwrap();
            assert!(((got - want) / want).abs() <= 1e-10, "Ai({z}) = {got}");
        }
        let got = airy_ai(20.0).unwrap();
        assert!(got > 0.0 && got < 1e-26);
    }

    #[test]
    fn first_zero() {
        assert!(airy_ai(-2.338107410459767).unwrap().abs() <= 1e-10);
    }

    #[test]
    fn log_form_far_right() {
        for &(z, want) in &[(30.0, -111.66095404121411627), (100.0, -669.08357542530962671), (1000.0, -21084.843522026386834)] {
            let got = airy_ai_log(z).unwrap();
            assert_eq!(got.sign(), 1);
            assert!(((got.log_abs() - want) / want).abs() < 1e-13, "ln Ai({z}) = {}", got.log_abs());
        }
        assert_eq!(airy_ai(1000.0).unwrap(), 0.0);
    }

    #[test]
    fn rejects_non_finite() {
        assert!(airy_ai(f64::NAN).is_err());
        assert!(airy_ai(f64::INFINITY).is_err());
        assert!(airy_ai_log(f64::NEG_INFINITY).is_err());
    }

    #[test]
    fn continuity_across_series_limit() {
        for &z in &[SERIES_LIMIT, -SERIES_LIMIT] {
            let below = airy_ai(z * (1.0 - 1e-15)).unwrap();
            let above = airy_ai(z * (1.0 + 1e-15)).unwrap();
            assert!((below - above).abs() < 1e-12);
        }
    }
}
