//! Browser demo: three operations exported to JavaScript. The plain
//! functions return flat `f64` rows and are tested natively; the
//! `#[wasm_bindgen]` wrappers only convert errors.

use hermite_asymptotics::exactpoly::{charlier_exact_sum, hermite_exact_sum, CharlierPoint, HermitePoint, MAX_ZEROS_DEGREE};
use hermite_asymptotics::hermite_asym::{hermite_eval_asym, HermiteOptions, HermiteRegionTag};
use hermite_asymptotics::zeros::{zero_estimates, KapteynOptions, Method};
use hermite_asymptotics::{Error, SignedLogReal};
use wasm_bindgen::prelude::*;

/// Largest degree the demo accepts for curves.
pub const MAX_DEMO_DEGREE: u32 = 400;

/// `ln` of the L2 norm `sqrt(2^n n! sqrt(pi))` of `H_n` under `e^{-xi^2}`.
fn log_norm(n: u32) -> f64 {
    let log_factorial: f64 = (2..=n).map(|k| f64::from(k).ln()).sum();
    0.5 * (f64::from(n) * std::f64::consts::LN_2 + log_factorial + 0.5 * std::f64::consts::PI.ln())
}

/// Hermite function value `H_n(xi) e^{-xi^2/2}` divided by the norm; stays O(1).
fn normalized(v: SignedLogReal, n: u32, xi: f64) -> f64 {
    v.scale_log(-0.5 * xi * xi - log_norm(n)).to_f64_lossy()
}

fn region_index(tag: HermiteRegionTag) -> f64 {
    match tag {
        HermiteRegionTag::ISmallN => 1.0,
        HermiteRegionTag::IILeftOuter => 2.0,
        HermiteRegionTag::IIIRightOuter => 3.0,
        HermiteRegionTag::IVLeftAiry => 4.0,
        HermiteRegionTag::VRightAiry => 5.0,
        HermiteRegionTag::VIOscillatory => 6.0,
    }
}

fn check_grid(lo: f64, hi: f64, steps: u32) -> Result<(), Error> {
    if steps < 2 || steps > 20_000 || !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::Domain(format!("bad grid [{lo}, {hi}] with {steps} steps")));
    }
    Ok(())
}

/// Rows `[xi, asymptotic, exact, region]` on a uniform grid, both values as
/// normalized Hermite functions. `region` is the Roman numeral as a number.
pub fn hermite_curve(n: u32, xi_min: f64, xi_max: f64, steps: u32, band_width: f64) -> Result<Vec<f64>, Error> {
    if !(1..=MAX_DEMO_DEGREE).contains(&n) {
        return Err(Error::Domain(format!("degree must be in 1..={MAX_DEMO_DEGREE}, got {n}")));
    }
    check_grid(xi_min, xi_max, steps)?;
    let opts = HermiteOptions { airy_band_width: band_width, ..Default::default() };
    let mut rows = Vec::with_capacity(4 * steps as usize);
    for i in 0..steps {
        let xi = xi_min + (xi_max - xi_min) * f64::from(i) / f64::from(steps - 1);
        let approx = hermite_eval_asym(n, xi, &opts)?;
        let exact = hermite_exact_sum(HermitePoint::new(n, xi)?)?;
        rows.extend([xi, normalized(approx.value, n, xi), normalized(exact, n, xi), region_index(approx.region.tag)]);
    }
    Ok(rows)
}

/// Rows `[j, estimate, true zero]` using the Newton solution of Kepler's
/// equation; true zeros need `n <= 200`.
pub fn zero_table(n: u32) -> Result<Vec<f64>, Error> {
    if !(1..=MAX_ZEROS_DEGREE).contains(&n) {
        return Err(Error::Domain(format!("degree must be in 1..={MAX_ZEROS_DEGREE}, got {n}")));
    }
    let rows = zero_estimates(n, Method::Newton, &KapteynOptions::for_degree(n), true)?;
    Ok(rows.iter().flat_map(|z| [f64::from(z.j), z.zeta, z.exact_zeta.unwrap_or(f64::NAN)]).collect())
}

/// Rows `[xi, scaled Charlier, Hermite]`, both normalized, where the scaled
/// Charlier value is `(-1)^n (2a)^{n/2} C_n^{(a)}(a + xi sqrt(2a))`.
pub fn charlier_limit_curve(n: u32, a: f64, xi_min: f64, xi_max: f64, steps: u32) -> Result<Vec<f64>, Error> {
    if n > 60 {
        return Err(Error::Domain(format!("degree must be at most 60, got {n}")));
    }
    if !(a > 0.0 && a <= 1e8) {
        return Err(Error::Domain(format!("a must be in (0, 1e8], got {a}")));
    }
    check_grid(xi_min, xi_max, steps)?;
    let sign = if n % 2 == 0 { 1 } else { -1 };
    let scale = SignedLogReal::new(sign, 0.5 * f64::from(n) * (2.0 * a).ln());
    let mut rows = Vec::with_capacity(3 * steps as usize);
    for i in 0..steps {
        let xi = xi_min + (xi_max - xi_min) * f64::from(i) / f64::from(steps - 1);
        let c = charlier_exact_sum(CharlierPoint::new(n, a, a + xi * (2.0 * a).sqrt())?)?;
        let h = hermite_exact_sum(HermitePoint::new(n, xi)?)?;
        rows.extend([xi, normalized(scale * c, n, xi), normalized(h, n, xi)]);
    }
    Ok(rows)
}

fn to_js(e: Error) -> JsError {
    JsError::new(&e.to_string())
}

#[wasm_bindgen(js_name = hermiteCurve)]
pub fn hermite_curve_js(n: u32, xi_min: f64, xi_max: f64, steps: u32, band_width: f64) -> Result<Vec<f64>, JsError> {
    hermite_curve(n, xi_min, xi_max, steps, band_width).map_err(to_js)
}

#[wasm_bindgen(js_name = zeroTable)]
pub fn zero_table_js(n: u32) -> Result<Vec<f64>, JsError> {
    zero_table(n).map_err(to_js)
}

#[wasm_bindgen(js_name = charlierLimitCurve)]
pub fn charlier_limit_curve_js(n: u32, a: f64, xi_min: f64, xi_max: f64, steps: u32) -> Result<Vec<f64>, JsError> {
    charlier_limit_curve(n, a, xi_min, xi_max, steps).map_err(to_js)
}
