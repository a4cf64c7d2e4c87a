//! Commands behind the `hermasym` binary. Each command returns its records;
//! [`write_records`] renders them as CSV or JSON.

use std::io::Write;

use hermite_asymptotics::charlier_asym::{charlier_eval_asym, CharlierOptions, CharlierRegionTag};
use hermite_asymptotics::exactpoly::{
    charlier_exact_sum, hermite_exact_sum, hermite_recurrence_log, CharlierPoint, HermitePoint, MAX_EXACT_DEGREE,
};
use hermite_asymptotics::hermite_asym::{
    classify_hermite, hermite_eval_asym, szego_leading, HermiteOptions, HermiteRegionTag,
};
use hermite_asymptotics::zeros::{zero_estimates, KapteynOptions, Method};
use hermite_asymptotics::{Fidelity, SignedLogReal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// Malformed arguments that clap cannot catch; exit code 2.
    #[error("{0}")]
    Usage(String),
    /// Domain or truncation failure in the library; exit code 3.
    #[error(transparent)]
    Library(#[from] hermite_asymptotics::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Library(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Globals {
    pub format: Format,
    pub fidelity: Fidelity,
    pub band_width: f64,
}

impl Default for Globals {
    fn default() -> Self {
        Self { format: Format::Csv, fidelity: Fidelity::Corrected, band_width: 1.0 }
    }
}

/// Non-finite numbers become empty CSV fields and JSON nulls.
fn finite(v: f64) -> Option<f64> {
    v.is_finite().then_some(v)
}

/// Fields shared by every approximation-versus-exact record.
struct Comparison {
    sign: i8,
    log_abs: Option<f64>,
    value: Option<f64>,
    exact_log_abs: Option<f64>,
    rel_err: Option<f64>,
}

fn compare(approx: SignedLogReal, exact: SignedLogReal) -> Comparison {
    Comparison {
        sign: approx.sign(),
        log_abs: finite(approx.log_abs()),
        value: approx.to_f64(),
        exact_log_abs: finite(exact.log_abs()),
        rel_err: finite(approx.rel_err(exact)),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HermiteRecord {
    pub n: u32,
    pub xi: f64,
    pub region: String,
    pub method: String,
    pub sign: i8,
    pub log_abs: Option<f64>,
    pub value: Option<f64>,
    pub exact_log_abs: Option<f64>,
    pub rel_err: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CharlierRecord {
    pub n: u32,
    pub a: f64,
    pub x: f64,
    pub region: String,
    pub method: String,
    pub sign: i8,
    pub log_abs: Option<f64>,
    pub value: Option<f64>,
    pub exact_log_abs: Option<f64>,
    pub rel_err: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitRecord {
    pub n: u32,
    pub xi: f64,
    pub a: f64,
    pub x: f64,
    pub sign: i8,
    pub log_abs: Option<f64>,
    pub value: Option<f64>,
    pub exact_log_abs: Option<f64>,
    pub err_log_abs: Option<f64>,
    pub err: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroRecord {
    pub n: u32,
    pub j: u32,
    pub method: String,
    pub tau: f64,
    pub zeta: f64,
    pub residual: f64,
    pub terms_used: Option<usize>,
    pub kapteyn_tau: Option<f64>,
    pub tau_diff: Option<f64>,
    pub exact_zeta: Option<f64>,
    pub abs_err: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalMethod {
    Auto,
    Region(HermiteRegionTag),
    Szego,
}

impl EvalMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            EvalMethod::Auto => "auto",
            EvalMethod::Region(HermiteRegionTag::ISmallN) => "monomial",
            EvalMethod::Region(tag) => tag.numeral(),
            EvalMethod::Szego => "szego",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZerosMethod {
    Newton,
    Kapteyn,
    Both,
}

/// Exact `H_n(xi)`: the big-integer sum up to its degree cap, the scaled
/// recurrence beyond.
pub fn hermite_reference(n: u32, xi: f64) -> CliResult<SignedLogReal> {
    let p = HermitePoint::new(n, xi)?;
    Ok(if n <= MAX_EXACT_DEGREE { hermite_exact_sum(p)? } else { hermite_recurrence_log(p)? })
}

pub fn eval(n: u32, xi: f64, method: EvalMethod, g: &Globals) -> CliResult<HermiteRecord> {
    let exact = hermite_reference(n, xi)?;
    let (approx, region) = match method {
        EvalMethod::Szego => (szego_leading(n, xi)?, classify_hermite(n, xi, g.band_width).tag),
        EvalMethod::Auto | EvalMethod::Region(_) => {
            let opts = HermiteOptions {
                fidelity: g.fidelity,
                airy_band_width: g.band_width,
                forced_region: match method {
                    EvalMethod::Region(tag) => Some(tag),
                    _ => None,
                },
            };
            let e = hermite_eval_asym(n, xi, &opts)?;
            (e.value, e.region.tag)
        }
    };
    let c = compare(approx, exact);
    Ok(HermiteRecord {
        n,
        xi,
        region: region.as_str().to_string(),
        method: method.as_str().to_string(),
        sign: c.sign,
        log_abs: c.log_abs,
        value: c.value,
        exact_log_abs: c.exact_log_abs,
        rel_err: c.rel_err,
    })
}

/// Auto-dispatched records on `steps` equally spaced points of
/// `[xi_min, xi_max]`, in grid order.
pub fn sweep(n: u32, xi_min: f64, xi_max: f64, steps: usize, g: &Globals) -> CliResult<Vec<HermiteRecord>> {
    if steps < 2 {
        return Err(CliError::Usage(format!("--steps must be at least 2, got {steps}")));
    }
    if !(xi_min.is_finite() && xi_max.is_finite() && xi_min < xi_max) {
        return Err(CliError::Usage(format!("need finite --xi-min < --xi-max, got [{xi_min}, {xi_max}]")));
    }
    let last = steps - 1;
    (0..steps)
        .into_par_iter()
        .map(|i| {
            let xi = if i == last { xi_max } else { xi_min + (xi_max - xi_min) * i as f64 / last as f64 };
            eval(n, xi, EvalMethod::Auto, g)
        })
        .collect()
}

pub fn zeros(
    n: u32,
    method: ZerosMethod,
    tol: Option<f64>,
    max_terms: Option<usize>,
    compare_exact: bool,
) -> CliResult<Vec<ZeroRecord>> {
    if n == 0 {
        return Err(CliError::Usage("--n must be at least 1".into()));
    }
    let mut opts = KapteynOptions::for_degree(n);
    if let Some(tol) = tol {
        if !(tol > 0.0 && tol.is_finite()) {
            return Err(CliError::Usage(format!("--tol must be positive, got {tol}")));
        }
        opts.tol = tol;
    }
    if let Some(m) = max_terms {
        opts.max_terms = m;
    }
    let primary = match method {
        ZerosMethod::Kapteyn => Method::Kapteyn,
        ZerosMethod::Newton | ZerosMethod::Both => Method::Newton,
    };
    let rows = zero_estimates(n, primary, &opts, compare_exact)?;
    let second = match method {
        ZerosMethod::Both => Some(zero_estimates(n, Method::Kapteyn, &opts, false)?),
        _ => None,
    };
    Ok(rows
        .iter()
        .enumerate()
        .map(|(i, z)| {
            let k = second.as_ref().map(|s| &s[i]);
            ZeroRecord {
                n,
                j: z.j,
                method: match method {
                    ZerosMethod::Both => "both".to_string(),
                    _ => z.method.as_str().to_string(),
                },
                tau: z.tau,
                zeta: z.zeta,
                residual: z.residual,
                terms_used: z.terms_used.or(k.and_then(|k| k.terms_used)),
                kapteyn_tau: k.map(|k| k.tau),
                tau_diff: k.map(|k| (k.tau - z.tau).abs()),
                exact_zeta: z.exact_zeta,
                abs_err: z.exact_zeta.map(|e| (z.zeta - e).abs()),
            }
        })
        .collect())
}

/// `(-1)^n (2a)^{n/2} C_n^{(a)}(a + xi sqrt(2a))` against `H_n(xi)` for each `a`.
pub fn limit(n: u32, xi: f64, a_list: &[f64]) -> CliResult<Vec<LimitRecord>> {
    let exact = hermite_reference(n, xi)?;
    a_list
        .iter()
        .map(|&a| {
            let x = a + xi * (2.0 * a).sqrt();
            let c = charlier_exact_sum(CharlierPoint::new(n, a, x)?)?;
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let scaled = SignedLogReal::new(sign, 0.5 * f64::from(n) * (2.0 * a).ln()) * c;
            let err = scaled.sub(exact).abs();
            Ok(LimitRecord {
                n,
                xi,
                a,
                x,
                sign: scaled.sign(),
                log_abs: finite(scaled.log_abs()),
                value: scaled.to_f64(),
                exact_log_abs: finite(exact.log_abs()),
                err_log_abs: finite(err.log_abs()),
                err: err.to_f64(),
            })
        })
        .collect()
}

pub fn charlier(n: u32, a: f64, x: f64, forced: Option<CharlierRegionTag>, g: &Globals) -> CliResult<CharlierRecord> {
    let p = CharlierPoint::new(n, a, x)?;
    let exact = charlier_exact_sum(p)?;
    let opts = CharlierOptions { fidelity: g.fidelity, band_width_const: g.band_width, forced_region: forced };
    let e = charlier_eval_asym(p, &opts)?;
    if e.outside_hypothesis {
        eprintln!("warning: (n = {n}, a = {a}, x = {x}) lies outside the hypotheses of the {} formula", e.region.tag.as_str());
    }
    let c = compare(e.value, exact);
    Ok(CharlierRecord {
        n,
        a,
        x,
        region: e.region.tag.as_str().to_string(),
        method: forced.map_or("auto", charlier_method_name).to_string(),
        sign: c.sign,
        log_abs: c.log_abs,
        value: c.value,
        exact_log_abs: c.exact_log_abs,
        rel_err: c.rel_err,
    })
}

/// Command-line spelling of a forced Charlier region.
pub fn charlier_method_name(tag: CharlierRegionTag) -> &'static str {
    match tag {
        CharlierRegionTag::SmallN => "small-n",
        CharlierRegionTag::BelowOmegaMinus => "below",
        CharlierRegionTag::AboveOmegaPlus => "above",
        CharlierRegionTag::NearOmegaMinus => "near-minus",
        CharlierRegionTag::Oscillatory => "oscillatory",
        CharlierRegionTag::NearOmegaPlus => "near-plus",
    }
}

/// CSV with a header row, or a JSON array of objects.
pub fn write_records<T: Serialize, W: Write>(records: &[T], format: Format, mut out: W) -> CliResult<()> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in records {
                w.serialize(r).map_err(|e| std::io::Error::other(e.to_string()))?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut out, records).map_err(std::io::Error::other)?;
            writeln!(out)?;
        }
    }
    Ok(())
}
