//! Plain power-series evaluation of 2F1 and 2F2.

use super::Precision;
use crate::error::{Error, Result};
use crate::sum::NeumaierSum;

fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.round()
}

/// Sum a hypergeometric series given the ratio of successive terms.
/// Stops once three consecutive terms fall below rel_tol relative to the sum.
fn sum_series<R: Fn(usize) -> f64>(ratio: R, prec: &Precision, what: &'static str) -> Result<f64> {
    let mut s = NeumaierSum::new();
    let mut term = 1.0;
    s.add(term);
    let mut small = 0;
    for k in 0..prec.max_terms {
        term *= ratio(k);
        s.add(term);
        if !term.is_finite() {
            return Err(Error::NonConvergence { what, terms: k });
        }
        if term.abs() <= prec.rel_tol * s.value().abs() {
            small += 1;
            if small == 3 {
                return Ok(s.value());
            }
        } else {
            small = 0;
        }
    }
    Err(Error::NonConvergence {
        what,
        terms: prec.max_terms,
    })
}

/// Gauss hypergeometric 2F1(a, b; c; z) for real |z| < 1.
pub fn gauss_2f1(a: f64, b: f64, c: f64, z: f64, prec: &Precision) -> Result<f64> {
    if z.abs() >= 1.0 || z.is_nan() {
        return Err(Error::Domain(format!("2F1 series needs |z| < 1, got {z}")));
    }
    if is_nonpositive_integer(c) {
        return Err(Error::pole("2F1", format!("c = {c}")));
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    sum_series(
        |k| {
            let k = k as f64;
            (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z
        },
        prec,
        "2F1 series",
    )
}

/// 2F2(a1, a2; b1, b2; z), entire in z.
pub fn hyp_2f2(a1: f64, a2: f64, b1: f64, b2: f64, z: f64, prec: &Precision) -> Result<f64> {
    if is_nonpositive_integer(b1) || is_nonpositive_integer(b2) {
        return Err(Error::pole("2F2", format!("b = ({b1}, {b2})")));
    }
    if !z.is_finite() {
        return Err(Error::Domain(format!("2F2 argument {z}")));
    }
    if z == 0.0 {
        return Ok(1.0);
    }
    sum_series(
        |k| {
            let k = k as f64;
            (a1 + k) * (a2 + k) / ((b1 + k) * (b2 + k) * (k + 1.0)) * z
        },
        prec,
        "2F2 series",
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::{integrate, QuadOptions};

    fn tight() -> Precision {
        Precision::machine()
    }

    #[test]
    fn elementary_cases() {
        let p = tight();
        let z: f64 = 0.7;
        let v = gauss_2f1(1.0, 1.0, 2.0, z, &p).unwrap();
        assert!((v - (-(1.0 - z).ln() / z)).abs() < 1e-14);
        let v = gauss_2f1(2.5, 1.3, 1.3, -0.4, &p).unwrap();
        assert!((v - 1.4f64.powf(-2.5)).abs() < 1e-14);
        assert_eq!(gauss_2f1(1.0, 2.0, 3.0, 0.0, &p).unwrap(), 1.0);
        let v = hyp_2f2(0.3, 1.7, 0.3, 1.7, -3.0, &p).unwrap();
        assert!((v - (-3.0f64).exp()).abs() < 1e-14);
    }

    #[test]
    fn terminating_series() {
        // 2F1(-2, b; c; z) = 1 - 2bz/c + b(b+1)z^2/(c(c+1))
        let (b, c, z) = (1.5, 2.5, 0.3);
        let want = 1.0 - 2.0 * b * z / c + b * (b + 1.0) * z * z / (c * (c + 1.0));
        let v = gauss_2f1(-2.0, b, c, z, &tight()).unwrap();
        assert!((v - want).abs() < 1e-15);
    }

    #[test]
    fn euler_integral() {
        // 2F1(a, b; c; z) = Gamma(c)/(Gamma(b)Gamma(c-b)) int t^(b-1)(1-t)^(c-b-1)(1-zt)^-a
        let (a, b, c, z) = (0.8, 1.5, 3.0, 0.6);
        let k = super::super::gamma_real(c).unwrap()
            / (super::super::gamma_real(b).unwrap() * super::super::gamma_real(c - b).unwrap());
        let i = integrate(
            |t: f64| t.powf(b - 1.0) * (1.0 - t).powf(c - b - 1.0) * (1.0 - z * t).powf(-a),
            0.0,
            1.0,
            QuadOptions::default(),
        )
        .unwrap();
        let v = gauss_2f1(a, b, c, z, &tight()).unwrap();
        assert!((v - k * i).abs() / v < 1e-11);
    }

    #[test]
    fn hyp_2f2_against_quadrature() {
        // 2F2(1,1;2,2;-z) = (1/z) int_0^z (1 - e^-t)/t dt
        for &z in &[0.5, 4.0, 12.0] {
            let i = integrate(
                |t: f64| if t == 0.0 { 1.0 } else { -(-t).exp_m1() / t },
                0.0,
                z,
                QuadOptions::default(),
            )
            .unwrap();
            let v = hyp_2f2(1.0, 1.0, 2.0, 2.0, -z, &tight()).unwrap();
            assert!((v - i / z).abs() < 1e-12 * (1.0 + z.exp() * 1e-4), "z = {z}");
        }
    }

    #[test]
    fn domain_and_poles() {
        let p = Precision::default();
        assert!(matches!(gauss_2f1(1.0, 1.0, 2.0, 1.0, &p), Err(Error::Domain(_))));
        assert!(matches!(gauss_2f1(1.0, 1.0, -2.0, 0.5, &p), Err(Error::Pole { .. })));
        assert!(matches!(hyp_2f2(1.0, 1.0, 0.0, 2.0, 0.5, &p), Err(Error::Pole { .. })));
    }

    #[test]
    fn nonconvergence_is_reported() {
        let p = Precision::new(1e-15, 10, 10).unwrap();
        assert!(matches!(
            gauss_2f1(1.0, 1.0, 2.0, 0.99, &p),
            Err(Error::NonConvergence { .. })
        ));
    }
}
