//! Special functions and the parameter types shared by every module.

mod gamma;
mod hypergeometric;
mod lambert;
mod polylog;
mod stirling;
mod zeta;

pub use gamma::{gamma_fn, gamma_real, ln_gamma, ln_gamma_complex, rgamma, EULER_GAMMA};
pub use hypergeometric::{gauss_2f1, hyp_2f2};
pub use lambert::{lambert_w0, lambert_w0_exp};
pub use polylog::{ln_polylog, polylog};
pub use stirling::{stirling2, stirling2_f64, StirlingTable};
pub use zeta::{hurwitz_tail, zeta};

use crate::error::{Error, Result};

/// The pair (alpha, gamma) of the recursion. alpha lies in [0, 1), gamma is positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    alpha: f64,
    gamma: f64,
}

impl Params {
    pub fn new(alpha: f64, gamma: f64) -> Result<Self> {
        if !alpha.is_finite() || !(0.0..1.0).contains(&alpha) {
            return Err(Error::InvalidParams(format!("alpha = {alpha} must lie in [0, 1)")));
        }
        if !gamma.is_finite() || gamma <= 0.0 {
            return Err(Error::InvalidParams(format!("gamma = {gamma} must be positive")));
        }
        Ok(Self { alpha, gamma })
    }

    #[inline]
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    #[inline]
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// r = alpha / (1 - alpha)
    #[inline]
    pub fn ratio(&self) -> f64 {
        self.alpha / (1.0 - self.alpha)
    }

    /// ln(1 - alpha), computed without cancellation.
    #[inline]
    pub fn ln_one_minus_alpha(&self) -> f64 {
        (-self.alpha).ln_1p()
    }
}

/// Truncation controls for series and products.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Precision {
    pub rel_tol: f64,
    pub max_terms: usize,
    pub product_cutoff: usize,
}

impl Default for Precision {
    fn default() -> Self {
        Self {
            rel_tol: 1e-12,
            max_terms: 1_000_000,
            product_cutoff: 100_000,
        }
    }
}

impl Precision {
    pub fn new(rel_tol: f64, max_terms: usize, product_cutoff: usize) -> Result<Self> {
        if !(rel_tol > 0.0 && rel_tol < 1.0) {
            return Err(Error::InvalidParams(format!("rel_tol = {rel_tol} must lie in (0, 1)")));
        }
        if max_terms == 0 || product_cutoff == 0 {
            return Err(Error::InvalidParams("term limits must be positive".into()));
        }
        Ok(Self {
            rel_tol,
            max_terms,
            product_cutoff,
        })
    }

    /// Sum to working precision.
    pub fn machine() -> Self {
        Self {
            rel_tol: f64::EPSILON / 4.0,
            ..Self::default()
        }
    }
}

/// Rising factorial (x)_k.
pub fn pochhammer(x: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |p, i| p * (x + i as f64))
}

/// ln (x)_k for x > 0.
pub fn ln_pochhammer(x: f64, k: usize) -> f64 {
    crate::sum::neumaier((0..k).map(|i| (x + i as f64).ln()))
}
