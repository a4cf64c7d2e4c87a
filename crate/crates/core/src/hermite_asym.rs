//! Large-degree approximations of `H_n(xi)` in the six regions cut out by
//! the turning points `xi = +-sqrt(2n)`.
//!
//! | region | range                     | formula                |
//! |--------|---------------------------|------------------------|
//! | I      | `n = O(1)`                | `(2 xi)^n`             |
//! | II     | `xi < -sqrt(2n)`          | `Lambda_1`             |
//! | III    | `xi > sqrt(2n)`           | `Lambda_2`             |
//! | IV     | `xi ~ -sqrt(2n)`          | `Lambda_3` (Airy)      |
//! | V      | `xi ~ sqrt(2n)`           | `Lambda_4` (Airy)      |
//! | VI     | `|xi| < sqrt(2n)`         | `Lambda_5` (cosine)    |
//!
//! Left and right formulas are written so that IEEE negation symmetry makes
//! `Lambda_left(-xi) = (-1)^n Lambda_right(xi)` hold bit for bit.

use std::f64::consts::{FRAC_PI_2, LN_2, PI};

use crate::error::{Error, Result};
use crate::logreal::{ComplexLog, SignedLogReal};
use crate::specfun;
use crate::Fidelity;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HermiteRegionTag {
    ISmallN,
    IILeftOuter,
    IIIRightOuter,
    IVLeftAiry,
    VRightAiry,
    VIOscillatory,
}

impl HermiteRegionTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::ISmallN => "I_SMALL_N",
            Self::IILeftOuter => "II_LEFT_OUTER",
            Self::IIIRightOuter => "III_RIGHT_OUTER",
            Self::IVLeftAiry => "IV_LEFT_AIRY",
            Self::VRightAiry => "V_RIGHT_AIRY",
            Self::VIOscillatory => "VI_OSCILLATORY",
        }
    }

    /// Roman numeral of the region.
    pub fn numeral(&self) -> &'static str {
        match self {
            Self::ISmallN => "I",
            Self::IILeftOuter => "II",
            Self::IIIRightOuter => "III",
            Self::IVLeftAiry => "IV",
            Self::VRightAiry => "V",
            Self::VIOscillatory => "VI",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermiteRegion {
    pub tag: HermiteRegionTag,
    /// Half-width of the Airy bands in units of `n^{-1/6} / sqrt(2)`.
    pub airy_band_width: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

fn parity_sign(n: u32) -> i8 {
    if n % 2 == 0 {
        1
    } else {
        -1
    }
}

fn check_xi(xi: f64) -> Result<()> {
    if xi.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("Hermite argument must be finite, got {xi}")))
    }
}

/// `sigma = sqrt(xi^2 - 2n)`, real outside the oscillatory band.
pub fn sigma(n: u32, xi: f64) -> Result<f64> {
    check_xi(xi)?;
    let radicand = xi * xi - 2.0 * f64::from(n);
    if radicand < 0.0 {
        return Err(Error::domain(format!(
            "sigma is imaginary for xi^2 < 2n (n = {n}, xi = {xi}); use the oscillatory form"
        )));
    }
    Ok(radicand.sqrt())
}

/// `Lambda_1` (left of `-sqrt(2n)`) or `Lambda_2` (right of `sqrt(2n)`).
///
/// `xi^2 -+ sigma xi` is rewritten as `+-2n xi / (sigma +- xi)` to avoid
/// cancellation for large `|xi|`.
pub fn lambda_outer(n: u32, xi: f64, side: Side) -> Result<SignedLogReal> {
    check_xi(xi)?;
    let nf = f64::from(n);
    let outside = xi * xi > 2.0 * nf;
    match side {
        Side::Left => {
            if !(xi < 0.0 && outside) {
                return Err(Error::domain(format!("Lambda_1 needs xi < -sqrt(2n), got n = {n}, xi = {xi}")));
            }
            let s = sigma(n, xi)?;
            let gap = s - xi;
            let phi = nf * gap.ln() + (-2.0 * nf * xi / gap - nf) / 2.0;
            let u = ((1.0 - xi / s) / 2.0).sqrt();
            Ok(SignedLogReal::new(parity_sign(n), phi + u.ln()))
        }
        Side::Right => {
            if !(xi > 0.0 && outside) {
                return Err(Error::domain(format!("Lambda_2 needs xi > sqrt(2n), got n = {n}, xi = {xi}")));
            }
            let s = sigma(n, xi)?;
            let gap = s + xi;
            let phi = nf * gap.ln() + (2.0 * nf * xi / gap - nf) / 2.0;
            let u = ((1.0 + xi / s) / 2.0).sqrt();
            Ok(SignedLogReal::from_log(phi + u.ln()))
        }
    }
}

/// `Lambda_3` (at `-sqrt(2n)`) or `Lambda_4` (at `sqrt(2n)`). Accepted for
/// any `xi`; accuracy degrades away from the turning point.
///
/// In corrected mode `Phi_4 = (n/2) ln(2n) - 3n/2 + xi sqrt(2n)`, the mirror
/// image of `Phi_3`; as printed it repeats `Phi_3` verbatim.
pub fn lambda_airy(n: u32, xi: f64, side: Side, fidelity: Fidelity) -> Result<SignedLogReal> {
    check_xi(xi)?;
    if n == 0 {
        return Err(Error::domain("Airy turning-point formulas need n >= 1"));
    }
    let nf = f64::from(n);
    let r = (2.0 * nf).sqrt();
    let c = nf.powf(1.0 / 6.0) * std::f64::consts::SQRT_2;
    let base = 0.5 * nf * (2.0 * nf).ln() - 1.5 * nf;
    let log_prefactor = 0.5 * (2.0 * PI).ln() + nf.ln() / 6.0;
    let (phi, arg, sign) = match side {
        Side::Left => (base - xi * r, -(c * (xi + r)), parity_sign(n)),
        Side::Right => {
            let phi = match fidelity {
                Fidelity::Corrected => base + xi * r,
                Fidelity::AsPrinted => base - xi * r,
            };
            (phi, c * (xi - r), 1)
        }
    };
    let ai = specfun::airy_ai_log(arg)?;
    Ok(SignedLogReal::new(sign, 0.0) * ai.scale_log(log_prefactor + phi))
}

/// `cos(phase - n pi / 2)` with the quarter turns applied exactly.
fn cos_minus_quarter_turns(phase: f64, n: u32) -> f64 {
    match n % 4 {
        0 => phase.cos(),
        1 => phase.sin(),
        2 => -phase.cos(),
        _ => -phase.sin(),
    }
}

fn check_band(n: u32, xi: f64) -> Result<()> {
    check_xi(xi)?;
    if !(xi * xi < 2.0 * f64::from(n)) {
        return Err(Error::domain(format!("oscillatory form needs |xi| < sqrt(2n), got n = {n}, xi = {xi}")));
    }
    Ok(())
}

/// `Lambda_5(xi) = sqrt(2) (1 - xi^2/2n)^{-1/4} exp{(n/2)[ln(2n) - 1] + xi^2/2}
/// cos[(xi/2) sqrt(2n - xi^2) + (n + 1/2) asin(xi / sqrt(2n)) - n pi/2]`.
pub fn lambda_oscillatory(n: u32, xi: f64) -> Result<SignedLogReal> {
    check_band(n, xi)?;
    let nf = f64::from(n);
    let two_n = 2.0 * nf;
    let log_amp = 0.5 * LN_2 - 0.25 * (-(xi * xi) / two_n).ln_1p() + 0.5 * nf * (two_n.ln() - 1.0) + 0.5 * xi * xi;
    let phase = 0.5 * xi * (two_n - xi * xi).sqrt() + (nf + 0.5) * (xi / two_n.sqrt()).asin();
    Ok(SignedLogReal::from_f64(cos_minus_quarter_turns(phase, n)).scale_log(log_amp))
}

/// The conjugate pair `Lambda_1`, `Lambda_2` continued into the band with
/// `xi = sqrt(2n) sin(theta)` and imaginary `sigma`. Their sum is
/// `Lambda_5`.
pub fn lambda_osc_complex_pair(n: u32, xi: f64) -> Result<(ComplexLog, ComplexLog)> {
    check_band(n, xi)?;
    let nf = f64::from(n);
    let theta = (xi / (2.0 * nf).sqrt()).asin();
    let log_abs = 0.5 * nf * ((2.0 * nf).ln() - (2.0 * theta).cos()) - 0.5 * (2.0 * theta.cos()).ln();
    let turns = f64::from(n % 4) * FRAC_PI_2;
    let phase = nf * (0.5 * (2.0 * theta).sin() + theta) + 0.5 * theta - turns;
    let first = ComplexLog::new(log_abs, phase);
    Ok((first, first.conj()))
}

/// Real part of the sum of a conjugate pair.
pub fn pair_sum(pair: (ComplexLog, ComplexLog)) -> SignedLogReal {
    pair.0.add(pair.1).0
}

/// `(2 xi)^n`; exact for `n = 0, 1`.
pub fn monomial_regime(n: u32, xi: f64) -> SignedLogReal {
    SignedLogReal::from_f64(2.0 * xi).powi(n)
}

/// Leading term `sqrt(2) exp{(n/2)[ln(2n) - 1] + xi^2/2} cos(n pi/2 - xi sqrt(2n))`.
pub fn szego_leading(n: u32, xi: f64) -> Result<SignedLogReal> {
    check_xi(xi)?;
    if n == 0 {
        return Err(Error::domain("leading oscillatory term needs n >= 1"));
    }
    let nf = f64::from(n);
    let log_amp = 0.5 * LN_2 + 0.5 * nf * ((2.0 * nf).ln() - 1.0) + 0.5 * xi * xi;
    // cos(n pi/2 - y) = cos(y - n pi/2).
    let y = xi * (2.0 * nf).sqrt();
    Ok(SignedLogReal::from_f64(cos_minus_quarter_turns(y, n)).scale_log(log_amp))
}

/// Region of `(n, xi)`. Airy bands are `|xi -+ sqrt(2n)| <= w n^{-1/6} / sqrt(2)`.
/// Region I is returned only for `n = 0`.
pub fn classify_hermite(n: u32, xi: f64, airy_band_width: f64) -> HermiteRegion {
    let region = |tag| HermiteRegion { tag, airy_band_width };
    if n == 0 {
        return region(HermiteRegionTag::ISmallN);
    }
    let nf = f64::from(n);
    let r = (2.0 * nf).sqrt();
    let half_width = airy_band_width * nf.powf(-1.0 / 6.0) / std::f64::consts::SQRT_2;
    region(if (xi - r).abs() <= half_width {
        HermiteRegionTag::VRightAiry
    } else if (xi + r).abs() <= half_width {
        HermiteRegionTag::IVLeftAiry
    } else if xi > r {
        HermiteRegionTag::IIIRightOuter
    } else if xi < -r {
        HermiteRegionTag::IILeftOuter
    } else {
        HermiteRegionTag::VIOscillatory
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermiteOptions {
    pub fidelity: Fidelity,
    pub airy_band_width: f64,
    pub forced_region: Option<HermiteRegionTag>,
}

impl Default for HermiteOptions {
    fn default() -> Self {
        Self { fidelity: Fidelity::Corrected, airy_band_width: 1.0, forced_region: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HermiteEvaluation {
    pub value: SignedLogReal,
    pub region: HermiteRegion,
}

/// Evaluates the regional formula for `(n, xi)`, classified automatically
/// unless `forced_region` is set. The monomial regime is only used on
/// request.
pub fn hermite_eval_asym(n: u32, xi: f64, opts: &HermiteOptions) -> Result<HermiteEvaluation> {
    check_xi(xi)?;
    let region = match opts.forced_region {
        Some(tag) => HermiteRegion { tag, airy_band_width: opts.airy_band_width },
        None if n == 0 => {
            return Err(Error::domain("n = 0 is never dispatched automatically; request the monomial regime"));
        }
        None => classify_hermite(n, xi, opts.airy_band_width),
    };
    let value = match region.tag {
        HermiteRegionTag::ISmallN => monomial_regime(n, xi),
        HermiteRegionTag::IILeftOuter => lambda_outer(n, xi, Side::Left)?,
        HermiteRegionTag::IIIRightOuter => lambda_outer(n, xi, Side::Right)?,
        HermiteRegionTag::IVLeftAiry => lambda_airy(n, xi, Side::Left, opts.fidelity)?,
        HermiteRegionTag::VRightAiry => lambda_airy(n, xi, Side::Right, opts.fidelity)?,
        HermiteRegionTag::VIOscillatory => lambda_oscillatory(n, xi)?,
    };
    Ok(HermiteEvaluation { value, region })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::{hermite_exact_sum, HermitePoint};
    use approx::assert_relative_eq;

    fn exact(n: u32, xi: f64) -> SignedLogReal {
        hermite_exact_sum(HermitePoint { n, xi }).unwrap()
    }

    #[test]
    fn sigma_values() {
        assert_eq!(sigma(4, 3.0).unwrap(), 1.0);
        assert_relative_eq!(sigma(2, -3.0).unwrap(), 5f64.sqrt(), max_relative = 1e-15);
        assert_eq!(sigma(8, 4.0).unwrap(), 0.0);
        assert!(matches!(sigma(8, 3.9), Err(Error::Domain(_))));
    }

    #[test]
    fn outer_values() {
        for side in [Side::Left, Side::Right] {
            let xi = if side == Side::Left { -5.0 } else { 5.0 };
            assert_eq!(lambda_outer(0, xi, side).unwrap(), SignedLogReal::ONE);
        }
        let left = lambda_outer(2, -3.0, Side::Left).unwrap();
        assert_relative_eq!(left.to_f64().unwrap(), 34.3256, max_relative = 1e-5);
        assert!(left.rel_err(exact(2, -3.0)) <= 0.01);
        let right = lambda_outer(2, 3.0, Side::Right).unwrap();
        assert_eq!(left, right);
        assert!(lambda_outer(2, 1.0, Side::Right).is_err());
        assert!(lambda_outer(2, 3.0, Side::Left).is_err());
    }

    #[test]
    fn airy_values() {
        let xi = 8f64.sqrt();
        let v = lambda_airy(4, xi, Side::Right, Fidelity::Corrected).unwrap();
        assert_relative_eq!(v.to_f64().unwrap(), 530.6, max_relative = 1e-3);
        assert!((v.rel_err(exact(4, xi)) - 0.19).abs() < 0.01);
        let printed = lambda_airy(4, xi, Side::Right, Fidelity::AsPrinted).unwrap();
        assert_relative_eq!(printed.to_f64().unwrap(), 5.9e-5, max_relative = 0.02);
        let left = lambda_airy(4, -xi, Side::Left, Fidelity::Corrected).unwrap();
        assert_eq!(left, v);
        assert!(lambda_airy(0, 1.0, Side::Right, Fidelity::Corrected).is_err());
    }

    #[test]
    fn airy_far_right_stays_finite() {
        let v = lambda_airy(50, 200.0, Side::Right, Fidelity::Corrected).unwrap();
        assert_eq!(v.sign(), 1);
        assert!(v.log_abs().is_finite());
    }

    #[test]
    fn oscillatory_values() {
        let v = lambda_oscillatory(2, 0.0).unwrap();
        assert_relative_eq!(v.to_f64().unwrap(), -2.0811, max_relative = 1e-4);
        assert!(v.rel_err(exact(2, 0.0)) <= 0.05);
        for n in [1, 3, 5, 41] {
            assert!(lambda_oscillatory(n, 0.0).unwrap().is_zero());
        }
        assert!(lambda_oscillatory(20, 1.0).unwrap().rel_err(exact(20, 1.0)) <= 0.02);
        assert!(lambda_oscillatory(2, 2.0).is_err());
    }

    #[test]
    fn complex_pair() {
        let (a, b) = lambda_osc_complex_pair(10, 2.0).unwrap();
        assert_eq!(a.conj(), b);
        assert_relative_eq!(pair_sum((a, b)).to_f64().unwrap(), lambda_oscillatory(10, 2.0).unwrap().to_f64().unwrap(), max_relative = 1e-12);
        let s = pair_sum(lambda_osc_complex_pair(2, 0.0).unwrap());
        assert_relative_eq!(s.to_f64().unwrap(), -2.0811, max_relative = 1e-4);
    }

    #[test]
    fn monomial() {
        assert_eq!(monomial_regime(1, 3.0).to_f64().unwrap(), 6.0);
        assert_eq!(monomial_regime(0, 123.0), SignedLogReal::ONE);
        assert_eq!(monomial_regime(0, 0.0), SignedLogReal::ONE);
        let v = monomial_regime(2, 10.0);
        assert_relative_eq!(v.to_f64().unwrap(), 400.0, max_relative = 1e-14);
        assert_relative_eq!(v.rel_err(exact(2, 10.0)), 2.0 / 398.0, max_relative = 1e-10);
    }

    #[test]
    fn szego() {
        assert_eq!(szego_leading(2, 0.0).unwrap(), lambda_oscillatory(2, 0.0).unwrap());
        assert!(szego_leading(7, 0.0).unwrap().is_zero());
        assert!(szego_leading(0, 0.0).is_err());
    }

    #[test]
    fn classify_examples() {
        let tag = |n, xi| classify_hermite(n, xi, 1.0).tag;
        assert_eq!(tag(50, 10.0), HermiteRegionTag::VRightAiry);
        assert_eq!(tag(50, -10.0), HermiteRegionTag::IVLeftAiry);
        assert_eq!(tag(50, 0.0), HermiteRegionTag::VIOscillatory);
        assert_eq!(tag(50, -20.0), HermiteRegionTag::IILeftOuter);
        assert_eq!(tag(50, 20.0), HermiteRegionTag::IIIRightOuter);
        assert_eq!(tag(0, 3.0), HermiteRegionTag::ISmallN);
    }

    #[test]
    fn dispatcher() {
        let opts = HermiteOptions::default();
        let e = hermite_eval_asym(2, -3.0, &opts).unwrap();
        assert_eq!(e.region.tag, HermiteRegionTag::IILeftOuter);
        assert_relative_eq!(e.value.to_f64().unwrap(), 34.3256, max_relative = 1e-5);
        let e = hermite_eval_asym(2, 0.0, &opts).unwrap();
        assert_eq!(e.region.tag, HermiteRegionTag::VIOscillatory);
        let e = hermite_eval_asym(4, 8f64.sqrt(), &opts).unwrap();
        assert_eq!(e.region.tag, HermiteRegionTag::VRightAiry);
        assert_relative_eq!(e.value.to_f64().unwrap(), 530.6, max_relative = 1e-3);

        let forced = |tag| HermiteOptions { forced_region: Some(tag), ..Default::default() };
        assert!(hermite_eval_asym(4, 0.0, &forced(HermiteRegionTag::IIIRightOuter)).is_err());
        assert!(hermite_eval_asym(4, 9.0, &forced(HermiteRegionTag::VIOscillatory)).is_err());
        let mono = hermite_eval_asym(0, 2.0, &forced(HermiteRegionTag::ISmallN)).unwrap();
        assert_eq!(mono.value, SignedLogReal::ONE);
        assert!(hermite_eval_asym(0, 2.0, &opts).is_err());
    }
}
