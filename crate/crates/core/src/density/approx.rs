use num_complex::Complex64;

use super::gamma_products::GammaRatioSpec;
use super::mellin_barnes::{density_mellin_barnes, MbOptions};
use crate::error::{Error, Result};
use crate::quad::{integrate, QuadOptions};
use crate::specfun::{gamma_real, gauss_2f1, hyp_2f2, ln_gamma, rgamma, Params, Precision};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DensityOrder {
    FirstOrder,
    SecondOrder,
    SmallXAsymptotic,
    MellinBarnesOracle,
}

/// Samples of one approximation of h(x), x strictly increasing.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityCurve {
    order: DensityOrder,
    samples: Vec<(f64, f64)>,
}

impl DensityCurve {
    pub fn evaluate(order: DensityOrder, params: &Params, xs: &[f64]) -> Result<Self> {
        if xs.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::Domain("x grid must be strictly increasing".into()));
        }
        let samples = xs
            .iter()
            .map(|&x| {
                let h = match order {
                    DensityOrder::FirstOrder => density_first_order(params, x)?,
                    DensityOrder::SecondOrder => density_second_order(params, x)?,
                    DensityOrder::SmallXAsymptotic => density_smallx_second(params, x)?,
                    DensityOrder::MellinBarnesOracle => density_mellin_barnes(params, x, &MbOptions::default())?,
                };
                if !h.is_finite() {
                    return Err(Error::Domain(format!("non-finite density at x = {x}")));
                }
                Ok((x, h))
            })
            .collect::<Result<_>>()?;
        Ok(Self { order, samples })
    }

    pub fn order(&self) -> DensityOrder {
        self.order
    }

    pub fn samples(&self) -> &[(f64, f64)] {
        &self.samples
    }
}

/// sqrt(alpha/gamma)/(1-alpha).
pub fn second_order_beta(params: &Params) -> f64 {
    (params.alpha() / params.gamma()).sqrt() / (1.0 - params.alpha())
}

fn check_x(x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("density needs x > 0, got {x}")));
    }
    Ok(())
}

/// ln Z with Z = ((1-alpha) x)^-gamma.
fn ln_z(params: &Params, x: f64) -> f64 {
    -params.gamma() * (params.ln_one_minus_alpha() + x.ln())
}

fn ln_first_order(params: &Params, x: f64) -> f64 {
    let a = 1.0 / (1.0 - params.alpha());
    let lz = ln_z(params, x);
    params.gamma().ln() - x.ln() + a * lz - lz.exp() - ln_gamma(a)
}

/// (gamma/x) Z^a e^-Z / Gamma(a), a = 1/(1-alpha).
pub fn density_first_order(params: &Params, x: f64) -> Result<f64> {
    Ok(ln_density_first_order(params, x)?.exp())
}

pub fn ln_density_first_order(params: &Params, x: f64) -> Result<f64> {
    check_x(x)?;
    Ok(ln_first_order(params, x))
}

/// The first-order density divided by Gamma(1+beta) Gamma(1-beta).
pub fn density_smallx_second(params: &Params, x: f64) -> Result<f64> {
    let (sign, ln) = ln_density_smallx_second(params, x)?;
    Ok(sign * ln.exp())
}

/// (sign, ln |h|) of the small-x form.
pub fn ln_density_smallx_second(params: &Params, x: f64) -> Result<(f64, f64)> {
    check_x(x)?;
    let b = second_order_beta(params);
    let g = gamma_real(1.0 + b)? * gamma_real(1.0 - b)?;
    Ok((g.signum(), ln_first_order(params, x) - g.abs().ln()))
}

const SERIES_MAX_Z: f64 = 6.0;
const COLLISION_GAP: f64 = 1e-6;

fn check_collisions(a: f64, b: f64) -> Result<()> {
    for (name, v) in [("a - 1 - beta", a - 1.0 - b), ("a - 1 + beta", a - 1.0 + b), ("2 beta", 2.0 * b)] {
        if (v - v.round()).abs() < COLLISION_GAP {
            return Err(Error::PoleCollision(format!("{name} = {v} is an integer")));
        }
    }
    Ok(())
}

/// Gamma ratio that is zero when a denominator argument sits on a pole.
fn ratio_or_zero(num: &[f64], den: &[f64]) -> Result<f64> {
    if den.iter().any(|&d| rgamma(d) == 0.0) {
        return Ok(0.0);
    }
    let v: Complex64 = GammaRatioSpec::real(num, den)?.value()?;
    Ok(v.re)
}

/// Second-order approximation: Z <= 6 by the three-term 2F2 sum, beyond by the
/// Laplace form.
pub fn density_second_order(params: &Params, x: f64) -> Result<f64> {
    let (sign, ln) = ln_density_second_order(params, x)?;
    Ok(sign * ln.exp())
}

/// (sign, ln |h|) of the second-order approximation; finite where h itself underflows.
pub fn ln_density_second_order(params: &Params, x: f64) -> Result<(f64, f64)> {
    check_x(x)?;
    if ln_z(params, x) <= SERIES_MAX_Z.ln() {
        let v = density_second_order_series(params, x)?;
        Ok((v.signum(), v.abs().ln()))
    } else {
        laplace_signed(params, x)
    }
}

fn prefactor(params: &Params, x: f64) -> f64 {
    let a = 1.0 / (1.0 - params.alpha());
    let b = second_order_beta(params);
    params.gamma() / x * rgamma(a) * rgamma(1.0 + b) * rgamma(1.0 - b)
}

/// The three 2F2 terms at argument -Z; accurate while Z is moderate.
pub fn density_second_order_series(params: &Params, x: f64) -> Result<f64> {
    check_x(x)?;
    let a = 1.0 / (1.0 - params.alpha());
    let b = second_order_beta(params);
    if b == 0.0 {
        return density_first_order(params, x);
    }
    check_collisions(a, b)?;
    let lz = ln_z(params, x);
    let z = lz.exp();
    let prec = Precision::machine();
    let t1 = ratio_or_zero(&[1.0 + b - a, 1.0 - b - a], &[1.0 - a, 1.0 - a])?
        * (a * lz).exp()
        * hyp_2f2(a, a, a - b, a + b, -z, &prec)?;
    let mut sum = t1;
    for bb in [b, -b] {
        let r = ratio_or_zero(&[a - 1.0 - bb, -2.0 * bb], &[-bb, -bb])?;
        sum += r * ((1.0 + bb) * lz).exp() * hyp_2f2(1.0 + bb, 1.0 + bb, 2.0 + bb - a, 1.0 + 2.0 * bb, -z, &prec)?;
    }
    Ok(prefactor(params, x) * sum)
}

/// P Z^a e^-Z (1 + I) with I = int_0^inf (1+s)^(a-1) e^(-Z s) psi(s) ds and
/// psi(s) = beta^2 (1+s)^(beta-1) 2F1(1-beta, 1-beta; 2; s/(1+s)).
pub fn density_second_order_laplace(params: &Params, x: f64) -> Result<f64> {
    let (sign, ln) = laplace_signed(params, x)?;
    Ok(sign * ln.exp())
}

fn laplace_signed(params: &Params, x: f64) -> Result<(f64, f64)> {
    check_x(x)?;
    let a = 1.0 / (1.0 - params.alpha());
    let b = second_order_beta(params);
    if b == 0.0 {
        return Ok((1.0, ln_first_order(params, x)));
    }
    check_collisions(a, b)?;
    let lz = ln_z(params, x);
    let z = lz.exp();
    let prec = Precision::machine();
    let expo = |s: f64| (a - 1.0) * s.ln_1p() - z * s;
    let peak = ((a - 1.0) / z - 1.0).max(0.0);
    let top = expo(peak);
    let mut hi = peak + 45.0 / z;
    while expo(hi) - top > -45.0 {
        hi *= 2.0;
    }
    let mut cuts = vec![0.0];
    for k in [1.0, 5.0, 15.0] {
        let c = k / z;
        if c < hi {
            cuts.push(c);
        }
    }
    if peak > 0.0 && peak < hi {
        cuts.push(peak);
    }
    cuts.push(hi);
    cuts.sort_by(|p, q| p.partial_cmp(q).unwrap());
    cuts.dedup();
    let mut failure = None;
    let mut integrand = |s: f64| {
        let w = s / (1.0 + s);
        match gauss_2f1(1.0 - b, 1.0 - b, 2.0, w, &prec) {
            Ok(f) => b * b * ((b - 1.0) * s.ln_1p() + expo(s)).exp() * f,
            Err(e) => {
                failure.get_or_insert(e);
                0.0
            }
        }
    };
    let opts = QuadOptions::default();
    let mut total = 0.0;
    for w in cuts.windows(2) {
        total += integrate(&mut integrand, w[0], w[1], opts)?;
    }
    if let Some(e) = failure {
        return Err(e);
    }
    let p = prefactor(params, x);
    let q = 1.0 + total;
    Ok((p.signum() * q.signum(), p.abs().ln() + a * lz - z + q.abs().ln()))
}
