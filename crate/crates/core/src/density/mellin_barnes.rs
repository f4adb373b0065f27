use std::f64::consts::PI;

use num_complex::Complex64;

use super::fseq::{ln_g_interpolated_complex, HypergeometricSequence};
use crate::error::{Error, Result};
use crate::sequences::f_ppe_recursive;
use crate::specfun::{ln_gamma_complex, Params};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MbOptions {
    /// Real part of the contour, below 1.
    pub c: f64,
    pub truncation_j: usize,
    /// Trapezoid nodes on [0, T].
    pub nodes: usize,
}

impl Default for MbOptions {
    fn default() -> Self {
        Self {
            c: 0.5,
            truncation_j: 1000,
            nodes: 512,
        }
    }
}

const TAIL_TARGET: f64 = 1e-8;

/// Whether x lies where the contour quadrature is trusted:
/// 0.2 <= (1-alpha) x <= 5 and ((1-alpha) x)^-gamma <= 30.
pub fn mellin_barnes_band(params: &Params, x: f64) -> bool {
    let y = (1.0 - params.alpha()) * x;
    (0.2..=5.0).contains(&y) && -params.gamma() * y.ln() <= 30f64.ln()
}

/// h(x) = gamma/(2 pi i x) int_{c-i inf}^{c+i inf} x^(-gamma t) Gamma(1-t) G(-t) dt
/// by the trapezoid rule on [-T, T]; conjugate symmetry halves the work.
pub fn density_mellin_barnes(params: &Params, x: f64, opts: &MbOptions) -> Result<f64> {
    if !(opts.c < 1.0) {
        return Err(Error::Domain(format!("contour needs c < 1, got {}", opts.c)));
    }
    if !mellin_barnes_band(params, x) {
        return Err(Error::Domain(format!("x = {x} is outside the contour quadrature band")));
    }
    if opts.nodes < 16 {
        return Err(Error::Domain(format!("{} nodes are too few", opts.nodes)));
    }
    let g = params.gamma();
    let seq = HypergeometricSequence::new(params)?;
    // G(-t) grows at most like |t|^|f_1|; Gamma(1-t) decays like e^(-pi tau/2)
    let growth = f_ppe_recursive(params, 1)?.get(1).unwrap_or(0.0).abs() + 1.0;
    let mut big_t = 1.0;
    while -PI * big_t / 2.0 + growth * (1.0 + big_t).ln() > (1e-10f64).ln() {
        big_t += 0.5;
    }
    let lx = x.ln();
    let integrand = |tau: f64| -> Result<(Complex64, f64)> {
        let t = Complex64::new(opts.c, tau);
        let (full, half) = ln_g_interpolated_complex(&seq, t, opts.truncation_j)?;
        let v = (-t * g * lx + ln_gamma_complex(1.0 - t)? + full).exp();
        Ok((v, (full - half).norm()))
    };
    let h = big_t / (opts.nodes - 1) as f64;
    let mut vals = Vec::with_capacity(opts.nodes);
    let mut drift = Vec::with_capacity(opts.nodes);
    for k in 0..opts.nodes {
        let (v, d) = integrand(k as f64 * h)?;
        vals.push(v);
        drift.push(d);
    }
    let peak = vals.iter().map(|v| v.norm()).fold(0.0, f64::max);
    // halving J must not move any node that matters by more than 1e-4 relative
    if vals.iter().zip(&drift).any(|(v, d)| d * v.norm() > 1e-4 * peak) {
        return Err(Error::NonConvergence {
            what: "contour product tail",
            terms: opts.truncation_j,
        });
    }
    let end = vals[opts.nodes - 1].norm();
    if end > TAIL_TARGET * peak {
        return Err(Error::Tail {
            tail: end / peak,
            target: TAIL_TARGET,
        });
    }
    let mut s = 0.5 * (vals[0] + vals[opts.nodes - 1]);
    for v in &vals[1..opts.nodes - 1] {
        s += v;
    }
    Ok(g / (2.0 * PI * x) * 2.0 * (s * h).re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::density::density_first_order;

    #[test]
    fn frechet_at_one() {
        let q = Params::new(0.0, 1.0).unwrap();
        let h = density_mellin_barnes(&q, 1.0, &MbOptions::default()).unwrap();
        assert!((h / (-1.0f64).exp() - 1.0).abs() < 1e-4, "{h}");
    }

    #[test]
    fn frechet_across_band() {
        let q = Params::new(0.0, 2.0).unwrap();
        for &x in &[0.3, 0.8, 2.5] {
            let h = density_mellin_barnes(&q, x, &MbOptions::default()).unwrap();
            let want = density_first_order(&q, x).unwrap();
            assert!((h / want - 1.0).abs() < 1e-6, "x = {x}: {h} vs {want}");
        }
    }

    #[test]
    fn approaches_first_order_as_alpha_vanishes() {
        let dev = |a: f64| {
            let q = Params::new(a, 2.0).unwrap();
            [0.5, 1.0, 2.0]
                .iter()
                .map(|&x| {
                    let h = density_mellin_barnes(&q, x, &MbOptions::default()).unwrap();
                    (h / density_first_order(&q, x).unwrap() - 1.0).abs()
                })
                .fold(0.0, f64::max)
        };
        let (d1, d2, d3) = (dev(0.1), dev(0.05), dev(0.01));
        assert!(d3 < d2 && d2 < d1, "{d1} {d2} {d3}");
    }

    #[test]
    fn outside_band_is_rejected() {
        let q = Params::new(0.3, 2.0).unwrap();
        assert!(density_mellin_barnes(&q, 50.0, &MbOptions::default()).is_err());
        let bad = MbOptions {
            c: 1.2,
            ..MbOptions::default()
        };
        assert!(density_mellin_barnes(&q, 1.0, &bad).is_err());
    }

    #[test]
    fn positive_at_reference() {
        let q = Params::new(0.3, 1.0).unwrap();
        let h = density_mellin_barnes(&q, 1.5, &MbOptions::default()).unwrap();
        assert!(h > 0.0 && h.is_finite());
    }
}
