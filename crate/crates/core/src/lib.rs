//! Asymptotic evaluation of Hermite polynomials through the
//! Charlier-to-Hermite limit, Hermite zero estimates from Kepler's equation,
//! and exact oracles to measure both against.
//!
//! * [`specfun`]: Airy `Ai` and integer-order Bessel `J_k` kernels.
//! * [`exactpoly`]: exact Hermite and Charlier values and true Hermite zeros.
//! * [`charlier_asym`]: the six large-degree Charlier approximations.
//! * [`hermite_asym`]: the six Hermite regions and a dispatching evaluator.
//! * [`zeros`]: Hermite zero estimates by Newton iteration or Kapteyn series.
//!
//! Values that can leave the `f64` range are returned as [`SignedLogReal`].

pub mod charlier_asym;
pub mod error;
pub mod exactpoly;
pub mod hermite_asym;
pub mod logreal;
pub mod specfun;
pub mod zeros;

pub use error::{Error, Result};
pub use logreal::{ComplexLog, SignedLogReal};

/// Formula variant for the three terms whose printed form is inconsistent
/// with the limit derivation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub enum Fidelity {
    /// Validated forms: `-Delta` in the third term of Psi_3, `-n` in the
    /// Charlier Airy exponents, `+xi sqrt(2n)` in Phi_4.
    #[default]
    Corrected,
    /// The formulas exactly as printed in the source text.
    AsPrinted,
}
