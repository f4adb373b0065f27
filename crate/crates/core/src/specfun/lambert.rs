//! Principal branch of the Lambert W function.

use std::f64::consts::E;

use crate::error::{Error, Result};

fn halley(x: f64, mut w: f64) -> f64 {
    for _ in 0..64 {
        let ew = w.exp();
        let f = w * ew - x;
        let wp1 = w + 1.0;
        if wp1.abs() < 1e-300 {
            break;
        }
        let dw = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= dw;
        if dw.abs() <= 4.0 * f64::EPSILON * (1.0 + w.abs()) {
            break;
        }
    }
    w
}

/// W0(x) for x >= -1/e.
pub fn lambert_w0(x: f64) -> Result<f64> {
    let branch = -1.0 / E;
    if x.is_nan() || x < branch - 1e-15 {
        return Err(Error::Domain(format!("W0 needs x >= -1/e, got {x}")));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x.is_infinite() {
        return Ok(f64::INFINITY);
    }
    let q = E * x + 1.0;
    if q <= 1e-16 {
        return Ok(-1.0);
    }
    let w0 = if x < -0.25 {
        // series about the branch point
        let p = (2.0 * q).sqrt();
        -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p
    } else if x < 3.0 {
        let l = x.ln_1p();
        l * (1.0 - (1.0 + l).ln() / (2.0 + l))
    } else {
        let l1 = x.ln();
        let l2 = l1.ln();
        l1 - l2 + l2 / l1
    };
    if x > 1e300 {
        return Ok(lambert_w0_exp(x.ln()));
    }
    Ok(halley(x, w0))
}

/// W0(e^l): the solution w of w + ln w = l. Works far beyond the range where
/// e^l is representable.
pub fn lambert_w0_exp(l: f64) -> f64 {
    if l < 600.0 {
        return lambert_w0(l.exp()).expect("e^l is in the domain");
    }
    let mut w = l - l.ln();
    for _ in 0..50 {
        let dw = (w + w.ln() - l) / (1.0 + 1.0 / w);
        w -= dw;
        if dw.abs() <= 4.0 * f64::EPSILON * w {
            break;
        }
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_equation() {
        for &x in &[-0.367, -0.2, -1e-5, 1e-8, 0.3, 1.0, 2.5, 10.0, 1e3, 1e10, 1e200] {
            let w = lambert_w0(x).unwrap();
            let r = (w * w.exp() - x) / x;
            assert!(r.abs() < 1e-13, "x = {x}, residual {r}");
        }
    }

    #[test]
    fn special_values() {
        assert!((lambert_w0(E).unwrap() - 1.0).abs() < 1e-15);
        assert!((lambert_w0(-1.0 / E).unwrap() + 1.0).abs() < 1e-7);
        assert_eq!(lambert_w0(0.0).unwrap(), 0.0);
        assert!(lambert_w0(-0.5).is_err());
        // omega constant
        assert!((lambert_w0(1.0).unwrap() - 0.567_143_290_409_783_8).abs() < 1e-15);
    }

    #[test]
    fn log_form() {
        for &l in &[1.0, 50.0, 599.0, 650.0, 1e4, 1e8] {
            let w = lambert_w0_exp(l);
            assert!((w + w.ln() - l).abs() < 1e-12 * l, "l = {l}");
        }
        let a = lambert_w0_exp(599.9);
        let b = lambert_w0_exp(600.1);
        assert!(b > a && b - a < 0.2);
    }
}
