use std::f64::consts::PI;

use super::fseq::HypergeometricSequence;
use crate::error::{Error, Result};
use crate::specfun::{ln_gamma, Params, EULER_GAMMA};
use crate::sum::NeumaierSum;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConstantReport {
    pub exact_c: f64,
    pub first_order_c: f64,
    /// Signed; it changes sign wherever sqrt(alpha/gamma)/(1-alpha) crosses an integer.
    pub second_order_c: f64,
    pub truncation_k: usize,
    /// Extrapolated log-sum minus the raw partial log-sum at K.
    pub tail_correction: f64,
    /// |first-level - third-level extrapolant| of ln c.
    pub extrapolation_spread: f64,
}

/// Largest tolerated disagreement between the two extrapolation levels, in ln c.
const SPREAD_LIMIT: f64 = 1e-2;

/// gamma (1-alpha)^(-gamma/(1-alpha)) / Gamma(1/(1-alpha)).
pub fn first_order_constant(params: &Params) -> f64 {
    ln_first_order(params).exp()
}

fn ln_first_order(params: &Params) -> f64 {
    let a = 1.0 / (1.0 - params.alpha());
    params.gamma().ln() - params.gamma() * a * params.ln_one_minus_alpha() - ln_gamma(a)
}

/// The first-order constant divided by Gamma(1+beta) Gamma(1-beta),
/// beta = sqrt(alpha/gamma)/(1-alpha).
pub fn second_order_constant(params: &Params) -> f64 {
    let b = super::approx::second_order_beta(params);
    let sinc = if b == 0.0 { 1.0 } else { (PI * b).sin() / (PI * b) };
    first_order_constant(params) * sinc
}

/// c(alpha, gamma) from K factors of its infinite product, with the partial
/// log-sums at K, K/2 and K/4 extrapolated under an O(1/K) remainder.
pub fn simon_constant(params: &Params, k: usize) -> Result<ConstantReport> {
    if k < 1000 {
        return Err(Error::Domain(format!("truncation K = {k} is below 1000")));
    }
    let al = params.alpha();
    let g = params.gamma();
    let base = g.ln() - g * params.ln_one_minus_alpha() / (1.0 - al) + al * EULER_GAMMA / (1.0 - al);
    let first = first_order_constant(params);
    let second = second_order_constant(params);
    if al == 0.0 {
        return Ok(ConstantReport {
            exact_c: g,
            first_order_c: first,
            second_order_c: second,
            truncation_k: k,
            tail_correction: 0.0,
            extrapolation_spread: 0.0,
        });
    }
    let seq = HypergeometricSequence::new(params)?;
    let r = al / (1.0 - al);
    let mut s = NeumaierSum::new();
    let (k2, k4) = (k / 2, k / 4);
    let (mut s2, mut s4) = (0.0, 0.0);
    for j in 1..=k {
        let jf = j as f64;
        s.add(-r / jf - seq.ln_normalized(jf));
        if j == k4 {
            s4 = s.value();
        }
        if j == k2 {
            s2 = s.value();
        }
    }
    let sk = s.value();
    let r1 = 2.0 * sk - s2;
    let r3 = (8.0 * sk - 6.0 * s2 + s4) / 3.0;
    let spread = (r1 - r3).abs();
    if !(spread <= SPREAD_LIMIT) {
        return Err(Error::NonConvergence {
            what: "constant extrapolation",
            terms: k,
        });
    }
    let exact = (base + r1).exp();
    if !(exact > 0.0 && exact.is_finite()) {
        return Err(Error::NonConvergence {
            what: "constant product",
            terms: k,
        });
    }
    Ok(ConstantReport {
        exact_c: exact,
        first_order_c: first,
        second_order_c: second,
        truncation_k: k,
        tail_correction: r1 - sk,
        extrapolation_spread: spread,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{gamma_real, gauss_2f1, Precision};

    fn p(a: f64, g: f64) -> Params {
        Params::new(a, g).unwrap()
    }

    #[test]
    fn alpha_zero_gives_gamma() {
        for &g in &[0.5, 1.0, 2.0, 4.0] {
            let rep = simon_constant(&p(0.0, g), 1000).unwrap();
            assert_eq!(rep.exact_c, g);
            assert!((rep.first_order_c / g - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn factor_matches_negative_argument_series() {
        // 2F1(1, gamma; 1 + k gamma; alpha/(alpha-1)) = (1-alpha)^gamma F_k, with a convergent
        // direct series for alpha < 1/2
        let (a, g) = (0.3, 1.7);
        let q = p(a, g);
        let seq = HypergeometricSequence::new(&q).unwrap();
        for k in [1usize, 3, 17] {
            let direct = gauss_2f1(1.0, g, 1.0 + k as f64 * g, a / (a - 1.0), &Precision::machine()).unwrap();
            assert!((seq.ln_normalized(k as f64) - direct.ln()).abs() < 1e-13);
        }
    }

    #[test]
    fn halving_k_is_stable() {
        let q = p(0.4, 1.0);
        let a = simon_constant(&q, 4000).unwrap();
        let b = simon_constant(&q, 16000).unwrap();
        assert!((a.exact_c / b.exact_c - 1.0).abs() < 1e-6, "{} {}", a.exact_c, b.exact_c);
        assert!(a.tail_correction.abs() > 1e-6);
    }

    #[test]
    fn trends_toward_the_edge() {
        let lo = simon_constant(&p(0.8, 0.5), 10_000).unwrap().exact_c;
        let hi = simon_constant(&p(0.95, 0.5), 10_000).unwrap().exact_c;
        assert!(hi < lo);
        let lo = simon_constant(&p(0.8, 2.0), 10_000).unwrap().exact_c;
        let hi = simon_constant(&p(0.95, 2.0), 10_000).unwrap().exact_c;
        assert!(hi > lo);
    }

    #[test]
    fn second_order_constant_via_gammas() {
        let q = p(0.5, 1.0);
        let b = 2f64.sqrt();
        let want = first_order_constant(&q) / (gamma_real(1.0 + b).unwrap() * gamma_real(1.0 - b).unwrap());
        assert!((second_order_constant(&q) / want - 1.0).abs() < 1e-13);
        // 0.5^-2 / Gamma(2)
        assert!((first_order_constant(&q) - 4.0).abs() < 1e-14);
    }
}
