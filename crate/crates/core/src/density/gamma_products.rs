use std::f64::consts::PI;

use num_complex::Complex64;

use super::fseq::HypergeometricSequence;
use crate::error::{Error, Result};
use crate::sequences::{f_ppe_recursive, CoeffTable};
use crate::specfun::{gamma_fn, ln_gamma_complex, zeta, Params};
use crate::sum::{ComplexSum, NeumaierSum};

const ARG_EPS: f64 = 1e-12;

fn near_pole(z: Complex64) -> bool {
    z.re < 0.5 && (z.re - z.re.round()).abs() < ARG_EPS && z.im.abs() < ARG_EPS
}

/// prod Gamma(numerator) / prod Gamma(denominator).
#[derive(Debug, Clone, PartialEq)]
pub struct GammaRatioSpec {
    numerator: Vec<Complex64>,
    denominator: Vec<Complex64>,
}

impl GammaRatioSpec {
    pub fn new(numerator: Vec<Complex64>, denominator: Vec<Complex64>) -> Result<Self> {
        if let Some(z) = numerator.iter().chain(&denominator).find(|z| near_pole(**z)) {
            return Err(Error::pole("gamma ratio", z));
        }
        Ok(Self { numerator, denominator })
    }

    pub fn real(numerator: &[f64], denominator: &[f64]) -> Result<Self> {
        let c = |v: &[f64]| v.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::new(c(numerator), c(denominator))
    }

    pub fn numerator(&self) -> &[Complex64] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[Complex64] {
        &self.denominator
    }

    /// ln of the ratio; the imaginary part is defined modulo 2 pi.
    pub fn ln_value(&self) -> Result<Complex64> {
        let mut s = ComplexSum::new();
        for z in &self.numerator {
            s.add(ln_gamma_complex(*z)?);
        }
        for z in &self.denominator {
            s.add(-ln_gamma_complex(*z)?);
        }
        Ok(s.value())
    }

    pub fn value(&self) -> Result<Complex64> {
        Ok(self.ln_value()?.exp())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaProductReport {
    /// prod_{n<=N} n^m / (n^m - z^m)
    pub lhs: Complex64,
    /// prod_j Gamma(1 - omega^j z)
    pub rhs: Complex64,
    /// exp(sum_k zeta(m k) z^(m k) / k), only for |z| < 1
    pub wan_rhs: Option<Complex64>,
}

/// The three sides of prod_n n^m/(n^m - z^m) = prod_{j<m} Gamma(1 - omega_m^j z).
pub fn gamma_product_identity(m: usize, z: Complex64, n: usize) -> Result<GammaProductReport> {
    if m < 2 {
        return Err(Error::Domain(format!("root-of-unity order must be at least 2, got {m}")));
    }
    let zm = z.powu(m as u32);
    let mut ln_lhs = ComplexSum::new();
    for k in 1..=n {
        let w = 1.0 - zm / (k as f64).powi(m as i32);
        if w.norm() < ARG_EPS {
            return Err(Error::pole("gamma product", z));
        }
        ln_lhs.add(-w.ln());
    }
    let mut rhs = Complex64::new(1.0, 0.0);
    for j in 0..m {
        let omega = Complex64::from_polar(1.0, 2.0 * PI * j as f64 / m as f64);
        rhs *= gamma_fn(1.0 - omega * z)?;
    }
    let wan_rhs = if z.norm() < 1.0 { Some(wan_form(m, zm)) } else { None };
    Ok(GammaProductReport {
        lhs: ln_lhs.value().exp(),
        rhs,
        wan_rhs,
    })
}

fn wan_form(m: usize, zm: Complex64) -> Complex64 {
    let mut s = ComplexSum::new();
    let mut pw = zm;
    for k in 1.. {
        let term = pw * zeta((m * k) as f64) / k as f64;
        s.add(term);
        if term.norm() < 1e-18 * s.value().norm().max(1e-300) || k > 10_000 {
            break;
        }
        pw *= zm;
    }
    s.value().exp()
}

/// prod_mu prod_k Gamma(1 - t - rho) / (Gamma(1 - t) Gamma(1 - rho)) over the roots
/// rho = f_mu^(1/mu) exp(i pi (2k+1)/mu), the closed form of
/// prod_j prod_mu (1 + f_mu j^-mu) / (1 + f_mu (j-t)^-mu).
pub fn truncated_ppe_gamma_product(params: &Params, m: usize, t: f64) -> Result<f64> {
    let v = truncated_ppe_gamma_product_complex(params, m, t)?;
    if v.im.abs() > 1e-10 * v.norm() {
        return Err(Error::Conjugacy {
            residue: v.im.abs() / v.norm(),
        });
    }
    Ok(v.re)
}

/// The same product before the imaginary residue is discarded.
pub fn truncated_ppe_gamma_product_complex(params: &Params, m: usize, t: f64) -> Result<Complex64> {
    if !(1..=6).contains(&m) {
        return Err(Error::Domain(format!("truncation order must be in 1..=6, got {m}")));
    }
    if t == 0.0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let f = f_ppe_recursive(params, m)?;
    let one_t = Complex64::new(1.0 - t, 0.0);
    let mut num = Vec::new();
    let mut den = Vec::new();
    for mu in 1..=m {
        let fm = f.get(mu).unwrap_or(0.0);
        if fm == 0.0 {
            continue;
        }
        let root = Complex64::new(fm, 0.0).powf(1.0 / mu as f64);
        for k in 0..mu {
            let rho = root * Complex64::from_polar(1.0, PI * (2 * k + 1) as f64 / mu as f64);
            num.push(one_t - rho);
            den.push(one_t);
            den.push(1.0 - rho);
        }
    }
    GammaRatioSpec::new(num, den)?.value()
}

/// |(1-alpha)^gamma prod_{k<=m} (1 + f_k j^-k) F_j - 1|.
pub fn ppe_truncation_residual(seq: &HypergeometricSequence, f: &CoeffTable, m: usize, j: f64) -> f64 {
    let mut s = NeumaierSum::new();
    s.add((-seq.deficit(j)).ln_1p());
    for k in 1..=m {
        s.add((f.get(k).unwrap_or(0.0) * j.powi(-(k as i32))).ln_1p());
    }
    s.value().exp_m1().abs()
}

/// Least-squares log-log slope of the truncation residual over integer j in [j_lo, j_hi].
pub fn ppe_decay_slope(params: &Params, m: usize, j_lo: usize, j_hi: usize) -> Result<f64> {
    if j_lo < 1 || j_hi <= j_lo {
        return Err(Error::Domain(format!("bad fit window [{j_lo}, {j_hi}]")));
    }
    let seq = HypergeometricSequence::new(params)?;
    let f = f_ppe_recursive(params, m)?;
    let pts: Vec<(f64, f64)> = (j_lo..=j_hi)
        .map(|j| {
            let jf = j as f64;
            (jf.ln(), ppe_truncation_residual(&seq, &f, m, jf).ln())
        })
        .filter(|(_, y)| y.is_finite())
        .collect();
    if pts.len() < 3 {
        return Err(Error::NonConvergence {
            what: "residual fit",
            terms: pts.len(),
        });
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Ok(sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gamma_real;

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn identity_at_zero() {
        let r = gamma_product_identity(3, Complex64::new(0.0, 0.0), 100).unwrap();
        assert_eq!(r.lhs, Complex64::new(1.0, 0.0));
        assert!(rel(r.rhs, Complex64::new(1.0, 0.0)) < 1e-15);
        assert_eq!(r.wan_rhs, Some(Complex64::new(1.0, 0.0)));
    }

    #[test]
    fn m2_reflection() {
        // Gamma(1-z) Gamma(1+z) = pi z / sin(pi z)
        let z = 0.5;
        let r = gamma_product_identity(2, Complex64::new(z, 0.0), 10_000).unwrap();
        let want = PI * z / (PI * z).sin();
        assert!((r.rhs.re - want).abs() < 1e-14);
        assert!(rel(r.lhs, r.rhs) < 1e-3);
        assert!(rel(r.wan_rhs.unwrap(), r.rhs) < 1e-10);
    }

    #[test]
    fn complex_cubic() {
        let r = gamma_product_identity(3, Complex64::new(0.4, 0.1), 1000).unwrap();
        assert!(rel(r.wan_rhs.unwrap(), r.rhs) < 1e-9);
        assert!(gamma_product_identity(2, Complex64::new(2.0, 0.0), 10).is_err());
    }

    #[test]
    fn first_order_ratio() {
        let q = Params::new(0.5, 1.0).unwrap();
        let f1 = f_ppe_recursive(&q, 1).unwrap().get(1).unwrap();
        let t = 0.37;
        let want = gamma_real(1.0 - t + f1).unwrap() / (gamma_real(1.0 - t).unwrap() * gamma_real(1.0 + f1).unwrap());
        let got = truncated_ppe_gamma_product(&q, 1, t).unwrap();
        assert!((got / want - 1.0).abs() < 1e-13);
        assert_eq!(truncated_ppe_gamma_product(&q, 3, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn closed_form_matches_direct_product() {
        let q = Params::new(0.3, 1.0).unwrap();
        let t = 0.4;
        for m in 1..=4 {
            let f = f_ppe_recursive(&q, m).unwrap();
            // early factors can be negative, so track the sign apart from the log
            let mut s = NeumaierSum::new();
            let mut sign = 1.0;
            for j in 1..=10_000 {
                let jf = j as f64;
                for mu in 1..=m {
                    let fm = f.get(mu).unwrap();
                    let r = (1.0 + fm * jf.powi(-(mu as i32))) / (1.0 + fm * (jf - t).powi(-(mu as i32)));
                    sign *= r.signum();
                    s.add(r.abs().ln());
                }
            }
            let direct = sign * s.value().exp();
            let closed = truncated_ppe_gamma_product(&q, m, t).unwrap();
            assert!((direct / closed - 1.0).abs() < 1e-3, "m = {m}: {direct} vs {closed}");
        }
    }

    #[test]
    fn residual_decay_order() {
        for &(a, g) in &[(0.3, 1.0), (0.6, 2.0)] {
            let q = Params::new(a, g).unwrap();
            for m in 1..=5 {
                let slope = ppe_decay_slope(&q, m, 50, 400).unwrap();
                assert!((slope + (m as f64 + 1.0)).abs() < 0.2, "({a}, {g}) m = {m}: {slope}");
            }
        }
    }
}
