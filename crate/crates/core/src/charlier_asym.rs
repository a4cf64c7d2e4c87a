//! Large-degree approximations of the Charlier polynomials
//! `C_n^{(a)}(x)`, one per region relative to the turning points
//! `Omega^{+-} = (sqrt(n) +- sqrt(a))^2`.
//!
//! [`Fidelity::Corrected`] uses `-Delta` in the third term of `Psi_3` and
//! `-n` in the exponent of both Airy edges; [`Fidelity::AsPrinted`] keeps
//! `+Delta` and `-sqrt(n)`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exactpoly::CharlierPoint;
use crate::logreal::SignedLogReal;
use crate::specfun;
use crate::Fidelity;

/// Degrees at or below which the classifier picks the small-degree formula.
pub const SMALL_DEGREE_MAX: u32 = 2;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TurningPoints {
    pub omega_minus: f64,
    pub omega_plus: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharlierRegionTag {
    SmallN,
    BelowOmegaMinus,
    AboveOmegaPlus,
    NearOmegaMinus,
    Oscillatory,
    NearOmegaPlus,
}

impl CharlierRegionTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::SmallN => "SMALL_N",
            Self::BelowOmegaMinus => "BELOW_OMEGA_MINUS",
            Self::AboveOmegaPlus => "ABOVE_OMEGA_PLUS",
            Self::NearOmegaMinus => "NEAR_OMEGA_MINUS",
            Self::Oscillatory => "OSCILLATORY",
            Self::NearOmegaPlus => "NEAR_OMEGA_PLUS",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharlierRegion {
    pub tag: CharlierRegionTag,
    pub band_width_const: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OuterSide {
    Below,
    Above,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeSide {
    Minus,
    Plus,
}

fn check_a(a: f64) -> Result<()> {
    if a > 0.0 && a.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("Charlier parameter a must be positive and finite, got {a}")))
    }
}

pub fn turning_points(n: u32, a: f64) -> Result<TurningPoints> {
    check_a(a)?;
    let (rn, ra) = (f64::from(n).sqrt(), a.sqrt());
    Ok(TurningPoints { omega_minus: (rn - ra) * (rn - ra), omega_plus: (rn + ra) * (rn + ra) })
}

/// `Delta(x) = sqrt(a^2 - 2a(x+n) + (x-n)^2)`, evaluated as
/// `sqrt((x - Omega^-)(x - Omega^+))` so that it vanishes exactly at the
/// turning points, and as `|a - n|` at `x = 0`.
pub fn delta(n: u32, a: f64, x: f64) -> Result<f64> {
    let tp = turning_points(n, a)?;
    if x == 0.0 {
        return Ok((a - f64::from(n)).abs());
    }
    let radicand = (x - tp.omega_minus) * (x - tp.omega_plus);
    if radicand < 0.0 {
        return Err(Error::domain(format!(
            "Delta is imaginary for x = {x} inside the oscillatory band ({}, {})",
            tp.omega_minus, tp.omega_plus
        )));
    }
    Ok(radicand.sqrt())
}

/// `F_3` below `Omega^-` or `F_4` above `Omega^+`.
pub fn f_outer(p: CharlierPoint, side: OuterSide, fidelity: Fidelity) -> Result<SignedLogReal> {
    let CharlierPoint { n, a, x } = CharlierPoint::new(p.n, p.a, p.x)?;
    let tp = turning_points(n, a)?;
    let nf = f64::from(n);
    match side {
        OuterSide::Below => {
            if !(x < tp.omega_minus) {
                return Err(Error::domain(format!("F_3 needs x < Omega^- = {}, got x = {x}", tp.omega_minus)));
            }
            let d = delta(n, a, x)?;
            let s = a - nf;
            let log_arg = a + x - nf + d;
            if x != 0.0 && !(log_arg > 0.0) {
                // Only reachable with n > a and 0 < x < Omega^-.
                return Err(Error::domain(format!("F_3 is not real at x = {x} for n = {n} > a = {a}")));
            }
            let first = if x == 0.0 { 0.0 } else { x * (log_arg / (2.0 * a)).ln() };
            let second = if n == 0 { 0.0 } else { nf * (((d - s) - x) / (2.0 * a)).ln_1p() };
            let third = match fidelity {
                Fidelity::Corrected => ((s - x) - d) / 2.0,
                Fidelity::AsPrinted => ((s - x) + d) / 2.0,
            };
            let amplitude = ((s - x) + d) / (2.0 * d);
            Ok(SignedLogReal::from_log(first + second + third + 0.5 * amplitude.ln()))
        }
        OuterSide::Above => {
            if !(x > tp.omega_plus) {
                return Err(Error::domain(format!("F_4 needs x > Omega^+ = {}, got x = {x}", tp.omega_plus)));
            }
            let d = delta(n, a, x)?;
            let w = x - a - nf;
            // a + x - n - Delta = 2a + 4an / (w + Delta), and
            // a - x - n + Delta = -n - 2an / (w + Delta) after halving.
            let first = x * (2.0 * nf / (w + d)).ln_1p();
            let second = if n == 0 { 0.0 } else { nf * ((w + d) / (2.0 * a)).ln() };
            let third = -2.0 * a * nf / (w + d) - nf;
            let amplitude = (w + 2.0 * nf + d) / (2.0 * d);
            let sign = if n % 2 == 0 { 1 } else { -1 };
            Ok(SignedLogReal::new(sign, first + second + third + 0.5 * amplitude.ln()))
        }
    }
}

/// `ln F_3` continued into the band, where `Delta = i D`.
fn f3_complex(n: f64, a: f64, x: f64, d: f64, fidelity: Fidelity) -> Complex64 {
    let id = Complex64::new(0.0, d);
    let two_a = 2.0 * a;
    let third = match fidelity {
        Fidelity::Corrected => (a - x - n - id) / 2.0,
        Fidelity::AsPrinted => (a - x - n + id) / 2.0,
    };
    let psi = x * ((a + x - n + id) / two_a).ln() + n * ((a - x + n + id) / two_a).ln() + third;
    psi + ((a - x - n + id) / (2.0 * id)).sqrt().ln()
}

/// `ln F_4` continued into the band, with `(-1)^n` folded into the phase.
fn f4_complex(n: f64, a: f64, x: f64, d: f64) -> Complex64 {
    let id = Complex64::new(0.0, d);
    let two_a = 2.0 * a;
    let psi = x * ((a + x - n - id) / two_a).ln() + n * ((x - a - n + id) / two_a).ln() + (a - x - n + id) / 2.0;
    psi + ((x - a + n + id) / (2.0 * id)).sqrt().ln() + Complex64::new(0.0, n * PI)
}

fn re_exp(z: Complex64) -> SignedLogReal {
    SignedLogReal::from_f64(z.im.cos()).scale_log(z.re)
}

/// `F_3 + F_4` between the turning points. In corrected mode the two
/// branches are complex conjugates and the result is `2 Re F_3`; as
/// printed they are not, and the real part of the sum is returned.
pub fn f_oscillatory(p: CharlierPoint, fidelity: Fidelity) -> Result<SignedLogReal> {
    let CharlierPoint { n, a, x } = CharlierPoint::new(p.n, p.a, p.x)?;
    let tp = turning_points(n, a)?;
    if !(x > tp.omega_minus && x < tp.omega_plus) {
        return Err(Error::domain(format!(
            "oscillatory formula needs Omega^- < x < Omega^+ = ({}, {}), got x = {x}",
            tp.omega_minus, tp.omega_plus
        )));
    }
    let d = ((x - tp.omega_minus) * (tp.omega_plus - x)).sqrt();
    let nf = f64::from(n);
    let f3 = f3_complex(nf, a, x, d, fidelity);
    Ok(match fidelity {
        Fidelity::Corrected => re_exp(f3).scale_log(std::f64::consts::LN_2),
        Fidelity::AsPrinted => re_exp(f3).add(re_exp(f4_complex(nf, a, x, d))),
    })
}

/// Complex continuation of both branches as `(ln F_3, ln F_4)`.
pub fn oscillatory_branches(p: CharlierPoint, fidelity: Fidelity) -> Result<(Complex64, Complex64)> {
    let CharlierPoint { n, a, x } = CharlierPoint::new(p.n, p.a, p.x)?;
    let tp = turning_points(n, a)?;
    if !(x > tp.omega_minus && x < tp.omega_plus) {
        return Err(Error::domain("oscillatory branches need Omega^- < x < Omega^+"));
    }
    let d = ((x - tp.omega_minus) * (tp.omega_plus - x)).sqrt();
    let nf = f64::from(n);
    Ok((f3_complex(nf, a, x, d, fidelity), f4_complex(nf, a, x, d)))
}

/// Airy-function forms at `x ~ Omega^-` (needs `0 < n < a`) and
/// `x ~ Omega^+`.
pub fn f_airy_edge(p: CharlierPoint, side: EdgeSide, fidelity: Fidelity) -> Result<SignedLogReal> {
    let CharlierPoint { n, a, x } = CharlierPoint::new(p.n, p.a, p.x)?;
    if n == 0 {
        return Err(Error::domain("Airy edge formulas need n >= 1"));
    }
    let tp = turning_points(n, a)?;
    let nf = f64::from(n);
    let ratio = nf / a;
    let sixth = ratio.powf(1.0 / 6.0);
    let root_ratio = ratio.sqrt();
    let tail = match fidelity {
        Fidelity::Corrected => nf,
        Fidelity::AsPrinted => nf.sqrt(),
    };
    let (spread, arg, exponent, sign) = match side {
        EdgeSide::Minus => {
            if !p.degree_below_parameter() {
                return Err(Error::domain(format!("Airy edge at Omega^- needs 0 < n < a, got n = {n}, a = {a}")));
            }
            let spread = a.sqrt() - nf.sqrt();
            let arg = sixth * (tp.omega_minus - x) / spread.powf(2.0 / 3.0);
            let exponent = 0.5 * nf * ratio.ln() + x * (-root_ratio).ln_1p() + (a * nf).sqrt() - tail;
            (spread, arg, exponent, 1)
        }
        EdgeSide::Plus => {
            let spread = a.sqrt() + nf.sqrt();
            let arg = sixth * (x - tp.omega_plus) / spread.powf(2.0 / 3.0);
            let exponent = 0.5 * nf * ratio.ln() + x * root_ratio.ln_1p() - (a * nf).sqrt() - tail;
            (spread, arg, exponent, if n % 2 == 0 { 1 } else { -1 })
        }
    };
    let log_prefactor = 0.5 * (2.0 * PI).ln() + sixth.ln() + spread.ln() / 3.0;
    let ai = specfun::airy_ai_log(arg)?;
    Ok(SignedLogReal::new(sign, 0.0) * ai.scale_log(log_prefactor + exponent))
}

/// `(1 - x/a)^n`.
pub fn small_n_formula(p: CharlierPoint) -> SignedLogReal {
    SignedLogReal::from_f64(1.0 - p.x / p.a).powi(p.n)
}

/// Assigns a region. The Airy bands are
/// `|x - Omega^-+| <= c |sqrt(a) -+ sqrt(n)|^{2/3} (a/n)^{1/6}`, the scale
/// on which the Airy argument is of order one; the band at `Omega^-` takes
/// precedence where the two overlap.
pub fn classify_charlier(p: CharlierPoint, band_width_const: f64) -> CharlierRegion {
    let region = |tag| CharlierRegion { tag, band_width_const };
    if p.n <= SMALL_DEGREE_MAX {
        return region(CharlierRegionTag::SmallN);
    }
    let nf = f64::from(p.n);
    let tp = turning_points(p.n, p.a).expect("CharlierPoint has a > 0");
    let scale = (p.a / nf).powf(1.0 / 6.0);
    let band_minus = band_width_const * (p.a.sqrt() - nf.sqrt()).abs().powf(2.0 / 3.0) * scale;
    let band_plus = band_width_const * (p.a.sqrt() + nf.sqrt()).powf(2.0 / 3.0) * scale;
    let tag = if (p.x - tp.omega_minus).abs() <= band_minus {
        CharlierRegionTag::NearOmegaMinus
    } else if (p.x - tp.omega_plus).abs() <= band_plus {
        CharlierRegionTag::NearOmegaPlus
    } else if p.x < tp.omega_minus {
        CharlierRegionTag::BelowOmegaMinus
    } else if p.x > tp.omega_plus {
        CharlierRegionTag::AboveOmegaPlus
    } else {
        CharlierRegionTag::Oscillatory
    };
    region(tag)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharlierOptions {
    pub fidelity: Fidelity,
    pub band_width_const: f64,
    pub forced_region: Option<CharlierRegionTag>,
}

impl Default for CharlierOptions {
    fn default() -> Self {
        Self { fidelity: Fidelity::Corrected, band_width_const: 1.0, forced_region: None }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharlierEvaluation {
    pub value: SignedLogReal,
    pub region: CharlierRegion,
    /// Set when the below-`Omega^-` formula ran with `n >= a`, outside the
    /// `0 < n < a` hypothesis it is stated under.
    pub outside_hypothesis: bool,
}

/// Classifies (unless a region is forced) and evaluates that region's formula.
pub fn charlier_eval_asym(p: CharlierPoint, opts: &CharlierOptions) -> Result<CharlierEvaluation> {
    let p = CharlierPoint::new(p.n, p.a, p.x)?;
    let region = match opts.forced_region {
        Some(tag) => CharlierRegion { tag, band_width_const: opts.band_width_const },
        None => classify_charlier(p, opts.band_width_const),
    };
    let value = match region.tag {
        CharlierRegionTag::SmallN => small_n_formula(p),
        CharlierRegionTag::BelowOmegaMinus => f_outer(p, OuterSide::Below, opts.fidelity)?,
        CharlierRegionTag::AboveOmegaPlus => f_outer(p, OuterSide::Above, opts.fidelity)?,
        CharlierRegionTag::NearOmegaMinus => f_airy_edge(p, EdgeSide::Minus, opts.fidelity)?,
        CharlierRegionTag::Oscillatory => f_oscillatory(p, opts.fidelity)?,
        CharlierRegionTag::NearOmegaPlus => f_airy_edge(p, EdgeSide::Plus, opts.fidelity)?,
    };
    let outside_hypothesis = region.tag == CharlierRegionTag::BelowOmegaMinus && !p.degree_below_parameter();
    Ok(CharlierEvaluation { value, region, outside_hypothesis })
}
