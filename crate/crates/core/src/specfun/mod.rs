//! Airy and Bessel kernels used by the turning-point formulas and the
//! Kapteyn series.

mod airy;
mod bessel;
mod dd;

pub use airy::{airy_ai, airy_ai_log, airy_ai_with};
pub use bessel::{bessel_j, bessel_j_with};

use crate::error::{Error, Result};

/// Accuracy targets shared by the series in this module.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelPolicy {
    pub target_abs_tol: f64,
    pub target_rel_tol: f64,
    pub max_terms: usize,
}

impl Default for KernelPolicy {
    fn default() -> Self {
        Self { target_abs_tol: 1e-13, target_rel_tol: 1e-12, max_terms: 500 }
    }
}

impl KernelPolicy {
    pub fn new(target_abs_tol: f64, target_rel_tol: f64, max_terms: usize) -> Result<Self> {
        if !(target_abs_tol > 0.0) || !(target_rel_tol > 0.0) {
            return Err(Error::domain("kernel tolerances must be strictly positive"));
        }
        if max_terms == 0 {
            return Err(Error::domain("max_terms must be at least 1"));
        }
        Ok(Self { target_abs_tol, target_rel_tol, max_terms })
    }

    /// Magnitude below which a series term counts as negligible.
    pub(crate) fn negligible(&self) -> f64 {
        self.target_abs_tol * 1e-2
    }
}

/// Counts consecutive negligible terms; a series stops after three.
#[derive(Debug, Default)]
pub(crate) struct TailGuard {
    run: u32,
}

impl TailGuard {
    pub fn done(&mut self, term: f64, threshold: f64) -> bool {
        if term.abs() < threshold {
            self.run += 1;
        } else {
            self.run = 0;
        }
        self.run >= 3
    }
}
