//! Hermite zero estimates from the large-degree phase condition.
//!
//! The j-th zero is `zeta_j = sqrt(2n) sin(tau_j)` where `tau_j` solves
//! `n [sin(2t)/2 + t - pi/2] + t/2 = pi/2 - j pi`. With `E = 2t` this is
//! Kepler's equation `E - eps sin E = M`, `M = 2 pi (1 + n - 2j) / (2n + 1)`,
//! `eps = -2n / (2n + 1)`, solved either by safeguarded Newton iteration or
//! by the Kapteyn series `E = M + 2 sum_k J_k(k eps) sin(k M) / k`.

use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{Error, Result};
use crate::exactpoly;
use crate::specfun::{self, KernelPolicy};

const NEWTON_MAX_ITER: usize = 100;
const MAX_TERMS_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Newton,
    Kapteyn,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Newton => "newton",
            Method::Kapteyn => "kapteyn",
        }
    }
}

/// Truncation controls for the Kapteyn series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KapteynOptions {
    pub tol: f64,
    pub max_terms: usize,
}

impl KapteynOptions {
    /// `tol = 1e-12` and a term budget of `20 (2n+1)^{3/2}`, capped at
    /// one million; `J_k(k eps)` decays only like `exp(-c k / N^{3/2})`.
    pub fn for_degree(n: u32) -> Self {
        let big_n = 2.0 * f64::from(n) + 1.0;
        let budget = 20.0 * (big_n * big_n.sqrt()).ceil();
        Self { tol: 1e-12, max_terms: (budget as usize).min(MAX_TERMS_CAP) }
    }
}

/// `E - eps sin E = M`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KeplerProblem {
    pub mean_anomaly: f64,
    pub eps: f64,
}

impl KeplerProblem {
    /// Kepler form of `n [sin(2t)/2 + t - pi/2] + t/2 = rhs`.
    pub fn from_phase_equation(n: u32, rhs: f64) -> Self {
        let big_n = 2.0 * f64::from(n) + 1.0;
        Self {
            mean_anomaly: 2.0 * (2.0 * rhs + f64::from(n) * PI) / big_n,
            eps: -2.0 * f64::from(n) / big_n,
        }
    }

    /// The problem whose solution is `2 tau_j`; the mean anomaly is built
    /// from the integer `1 + n - 2j` so that `j` and `n + 1 - j` give
    /// exactly opposite values.
    pub fn for_zero(n: u32, j: u32) -> Self {
        let big_n = 2.0 * f64::from(n) + 1.0;
        let m = 1 + i64::from(n) - 2 * i64::from(j);
        Self { mean_anomaly: 2.0 * PI * m as f64 / big_n, eps: -2.0 * f64::from(n) / big_n }
    }

    pub fn residual(&self, e: f64) -> f64 {
        e - self.eps * e.sin() - self.mean_anomaly
    }
}

/// Kapteyn series result with the number of significant terms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KapteynSolution {
    pub e: f64,
    pub terms_used: usize,
}

/// One row of a zeros table.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroEstimate {
    pub j: u32,
    pub n: u32,
    pub tau: f64,
    pub zeta: f64,
    pub method: Method,
    /// Residual of the phase equation at `tau`.
    pub residual: f64,
    /// Significant Kapteyn terms; `None` for Newton.
    pub terms_used: Option<usize>,
    /// True zero from the exact oracle, when requested.
    pub exact_zeta: Option<f64>,
}

/// Solves Kepler's equation by Newton iteration from `E0 = M`, falling back
/// to bisection on `[M - |eps|, M + |eps|]` whenever a step leaves the
/// bracket.
pub fn kepler_newton(mean_anomaly: f64, eps: f64) -> Result<f64> {
    if !(eps.abs() < 1.0) {
        return Err(Error::domain(format!("Kepler eccentricity must satisfy |eps| < 1, got {eps}")));
    }
    if !mean_anomaly.is_finite() {
        return Err(Error::domain("mean anomaly must be finite"));
    }
    let problem = KeplerProblem { mean_anomaly, eps };
    let mut lo = mean_anomaly - eps.abs();
    let mut hi = mean_anomaly + eps.abs();
    let mut e = mean_anomaly;
    for _ in 0..NEWTON_MAX_ITER {
        let f = problem.residual(e);
        if f == 0.0 {
            break;
        }
        if f > 0.0 {
            hi = hi.min(e);
        } else {
            lo = lo.max(e);
        }
        let slope = 1.0 - eps * e.cos();
        let mut next = e - f / slope;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        let done = (next - e).abs() <= 4.0 * f64::EPSILON * e.abs().max(1.0);
        e = next;
        if done {
            break;
        }
    }
    Ok(e)
}

/// Coefficients `c_k = J_k(k x) / k`, `k = 1..`, truncated after three
/// consecutive coefficients below `tol / weight`.
fn kapteyn_coefficients(x: f64, weight: f64, opts: &KapteynOptions) -> Result<(Vec<f64>, usize)> {
    if !(opts.tol > 0.0) || opts.max_terms == 0 {
        return Err(Error::domain("Kapteyn tolerance must be positive and max_terms at least 1"));
    }
    let policy = KernelPolicy::default();
    let mut coeffs = Vec::new();
    let mut run = 0;
    let mut significant = 0;
    let mut last = 0.0;
    for k in 1..=opts.max_terms {
        let kf = k as f64;
        let c = if x == 0.0 { 0.0 } else { specfun::bessel_j_with(k as i64, kf * x, &policy)? / kf };
        coeffs.push(c);
        last = (weight * c).abs();
        if last < opts.tol {
            run += 1;
            if run >= 3 {
                return Ok((coeffs, significant));
            }
        } else {
            run = 0;
            significant = k;
        }
    }
    Err(Error::Truncation { terms: opts.max_terms, last_term: last })
}

/// Solves Kepler's equation with the Kapteyn series. A term counts as
/// negligible when its envelope `2 |J_k(k eps)| / k` is below `tol`.
pub fn kepler_kapteyn(mean_anomaly: f64, eps: f64, tol: f64, max_terms: usize) -> Result<KapteynSolution> {
    if !(eps.abs() < 1.0) {
        return Err(Error::domain(format!("Kepler eccentricity must satisfy |eps| < 1, got {eps}")));
    }
    let (coeffs, terms_used) = kapteyn_coefficients(eps, 2.0, &KapteynOptions { tol, max_terms })?;
    let series: f64 = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| c * ((i + 1) as f64 * mean_anomaly).sin())
        .sum();
    Ok(KapteynSolution { e: mean_anomaly + 2.0 * series, terms_used })
}

/// `sin(r pi / den)` with exact zeros at multiples of `pi`.
fn sin_pi_fraction(r: u64, den: u64) -> f64 {
    let r = r % (2 * den);
    let (r, sign) = if r >= den { (r - den, -1.0) } else { (r, 1.0) };
    if r == 0 {
        return 0.0;
    }
    let r = r.min(den - r);
    sign * (PI * r as f64 / den as f64).sin()
}

/// Left side minus right side of the phase equation for the j-th zero.
pub fn phase_residual(n: u32, j: u32, tau: f64) -> f64 {
    let nf = f64::from(n);
    nf * (0.5 * (2.0 * tau).sin() + tau - FRAC_PI_2) + 0.5 * tau - (FRAC_PI_2 - f64::from(j) * PI)
}

fn check_degree(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("zero estimates need n >= 1"));
    }
    Ok(())
}

/// `tau_j` for `j = 1..=n`, and the significant Kapteyn term count (zero
/// for Newton). The Kapteyn series is shared by every `j`, so a truncation
/// failure applies to the whole table.
fn tau_table(n: u32, method: Method, opts: &KapteynOptions) -> Result<(Vec<f64>, usize)> {
    check_degree(n)?;
    match method {
        Method::Newton => {
            let taus = (1..=n)
                .map(|j| {
                    let p = KeplerProblem::for_zero(n, j);
                    kepler_newton(p.mean_anomaly, p.eps).map(|e| 0.5 * e)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((taus, 0))
        }
        Method::Kapteyn => {
            // Reflected form: J_k(k eps) = (-1)^k J_k(k (1 - 1/N)).
            let big_n = 2 * u64::from(n) + 1;
            let x = 1.0 - 1.0 / big_n as f64;
            let (coeffs, used) = kapteyn_coefficients(x, 1.0, opts)?;
            let taus = (1..=n)
                .map(|j| {
                    let lead = PI * (1 + i64::from(n) - 2 * i64::from(j)) as f64 / big_n as f64;
                    let step = 4 * u64::from(j) - 1;
                    let series: f64 = coeffs
                        .iter()
                        .enumerate()
                        .map(|(i, c)| c * sin_pi_fraction(step * (i as u64 + 1), big_n))
                        .sum();
                    lead - series
                })
                .collect();
            Ok((taus, used))
        }
    }
}

/// `tau_j^n` for `j = 1..=n`, decreasing in `j`.
pub fn tau_estimates(n: u32, method: Method, opts: &KapteynOptions) -> Result<Vec<f64>> {
    tau_table(n, method, opts).map(|(t, _)| t)
}

/// Full zeros table. With `compare_exact`, each row also carries the true
/// zero from [`exactpoly::hermite_zeros_exact`].
pub fn zero_estimates(n: u32, method: Method, opts: &KapteynOptions, compare_exact: bool) -> Result<Vec<ZeroEstimate>> {
    let (taus, used) = tau_table(n, method, opts)?;
    let exact = if compare_exact { Some(exactpoly::hermite_zeros_exact(n)?) } else { None };
    let scale = (2.0 * f64::from(n)).sqrt();
    Ok(taus
        .into_iter()
        .enumerate()
        .map(|(i, tau)| {
            let j = i as u32 + 1;
            ZeroEstimate {
                j,
                n,
                tau,
                zeta: scale * tau.sin(),
                method,
                residual: phase_residual(n, j, tau),
                terms_used: (method == Method::Kapteyn).then_some(used),
                exact_zeta: exact.as_ref().map(|z| z[i]),
            }
        })
        .collect())
}
