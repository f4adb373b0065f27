//! Gamma function via Lanczos (g = 7, n = 9) with reflection.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const G: f64 = 7.0;
const P: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;
const POLE_EPS: f64 = 1e-12;

fn near_nonpositive_integer(x: f64) -> bool {
    x <= 0.5 && (x - x.round()).abs() < POLE_EPS * x.abs().max(1.0)
}

fn lanczos_sum(z: f64) -> f64 {
    let mut a = P[0];
    for (k, p) in P.iter().enumerate().skip(1) {
        a += p / (z + k as f64);
    }
    a
}

fn lanczos_sum_c(z: Complex64) -> Complex64 {
    let mut a = Complex64::new(P[0], 0.0);
    for (k, p) in P.iter().enumerate().skip(1) {
        a += *p / (z + k as f64);
    }
    a
}

/// Gamma for real arguments, including negative non-integers.
pub fn gamma_real(x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::Domain("gamma of NaN".into()));
    }
    if near_nonpositive_integer(x) {
        return Err(Error::pole("gamma", x));
    }
    if x < 0.5 {
        let s = (PI * x).sin();
        return Ok(PI / (s * gamma_real(1.0 - x)?));
    }
    if x > 171.62 {
        return Ok(f64::INFINITY);
    }
    if x == x.floor() && x <= 23.0 {
        // exact factorials
        let mut f = 1.0;
        for k in 2..(x as u64) {
            f *= k as f64;
        }
        return Ok(f);
    }
    if x >= 10.0 {
        // split the power so x^(x-1/2) cannot overflow before e^-x is applied
        let h = x.powf(0.5 * (x - 0.5));
        return Ok((2.0 * PI).sqrt() * h * (h * (-x).exp()) * stirling_correction(x).exp());
    }
    let z = x - 1.0;
    let t = z + G + 0.5;
    let a = lanczos_sum(z);
    let h = t.powf(0.5 * (z + 0.5));
    Ok((2.0 * PI).sqrt() * h * (h * (-t).exp()) * a)
}

/// ln Gamma(x) - [(x - 1/2) ln x - x + ln sqrt(2 pi)], asymptotic series, x >= 10.
fn stirling_correction(x: f64) -> f64 {
    let r = 1.0 / x;
    let r2 = r * r;
    r * (1.0 / 12.0
        + r2 * (-1.0 / 360.0
            + r2 * (1.0 / 1260.0 + r2 * (-1.0 / 1680.0 + r2 * (1.0 / 1188.0 + r2 * (-691.0 / 360_360.0 + r2 / 156.0))))))
}

/// ln Gamma(x) for x > 0.
pub fn ln_gamma(x: f64) -> f64 {
    assert!(x > 0.0, "ln_gamma needs a positive argument, got {x}");
    if x < 0.5 {
        // Gamma(x) = Gamma(x + 1) / x keeps us on the accurate side
        return ln_gamma(x + 1.0) - x.ln();
    }
    if x < 10.0 {
        return gamma_real(x).unwrap().ln();
    }
    (x - 0.5) * x.ln() - x + LN_SQRT_2PI + stirling_correction(x)
}

/// 1/Gamma(x); zero at the poles.
pub fn rgamma(x: f64) -> f64 {
    if near_nonpositive_integer(x) {
        return 0.0;
    }
    if x < 0.5 {
        // 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi
        return (PI * x).sin() * gamma_real(1.0 - x).unwrap() / PI;
    }
    1.0 / gamma_real(x).unwrap()
}

fn check_pole_c(z: Complex64) -> Result<()> {
    if z.re <= 0.5 && (z.re - z.re.round()).abs() < POLE_EPS && z.im.abs() < POLE_EPS {
        return Err(Error::pole("gamma", z));
    }
    Ok(())
}

/// ln Gamma(z) for complex z. The imaginary part is only defined modulo 2 pi.
pub fn ln_gamma_complex(z: Complex64) -> Result<Complex64> {
    check_pole_c(z)?;
    if z.re < 0.5 {
        // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
        let s = (z * PI).sin();
        return Ok(Complex64::new(PI.ln(), 0.0) - s.ln() - ln_gamma_complex(1.0 - z)?);
    }
    let zm = z - 1.0;
    let t = zm + G + 0.5;
    Ok(LN_SQRT_2PI + (zm + 0.5) * t.ln() - t + lanczos_sum_c(zm).ln())
}

/// Gamma(z) for complex z.
pub fn gamma_fn(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 {
        return gamma_real(z.re).map(|v| Complex64::new(v, 0.0));
    }
    check_pole_c(z)?;
    if z.re < 0.5 {
        let s = (z * PI).sin();
        return Ok(PI / (s * gamma_fn(1.0 - z)?));
    }
    Ok(ln_gamma_complex(z)?.exp())
}
