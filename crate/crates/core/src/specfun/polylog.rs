//! Polylogarithm Li_s(z) for 0 <= z < 1 and arbitrary real order.
//!
//! For very negative s the terms k^-s z^k peak far from k = 1, so the sum is
//! formed in log space around the peak.

use super::Precision;
use crate::error::{Error, Result};
use crate::sum::NeumaierSum;

fn check(s: f64, z: f64) -> Result<()> {
    if !s.is_finite() || !(0.0..1.0).contains(&z) {
        return Err(Error::Domain(format!("polylog needs finite s and 0 <= z < 1, got s = {s}, z = {z}")));
    }
    Ok(())
}

/// ln Li_s(z). Returns -inf at z = 0.
pub fn ln_polylog(s: f64, z: f64, prec: &Precision) -> Result<f64> {
    check(s, z)?;
    if z == 0.0 {
        return Ok(f64::NEG_INFINITY);
    }
    let lz = z.ln();
    let lt = |k: f64| k * lz - s * k.ln();
    let kp = if s < 0.0 { (s / lz).round().max(1.0) } else { 1.0 };
    let lmax = lt(kp);
    let mut acc = NeumaierSum::new();
    acc.add(1.0);
    let tol = prec.rel_tol * 1e-2;
    let mut used = 1usize;

    // walk down from the peak; successive ratios shrink as k decreases
    let mut k = kp - 1.0;
    let mut prev = 1.0;
    while k >= 1.0 {
        let term = (lt(k) - lmax).exp();
        acc.add(term);
        used += 1;
        let q = term / prev;
        if q < 1.0 && term * q / (1.0 - q) < tol * acc.value() {
            break;
        }
        if used > prec.max_terms {
            return Err(Error::NonConvergence { what: "polylog", terms: used });
        }
        prev = term;
        k -= 1.0;
    }

    // walk up; the ratio tends to z, from above when s < 0 and from below otherwise
    let mut k = kp + 1.0;
    let mut prev = 1.0;
    loop {
        let term = (lt(k) - lmax).exp();
        acc.add(term);
        used += 1;
        let mut q = term / prev;
        if s > 0.0 {
            q = q.max(z);
        }
        if q < 1.0 && term * q / (1.0 - q) < tol * acc.value() {
            break;
        }
        if used > prec.max_terms {
            return Err(Error::NonConvergence { what: "polylog", terms: used });
        }
        prev = term;
        k += 1.0;
    }
    Ok(lmax + acc.value().ln())
}

/// Li_s(z). Overflows to +inf when the value exceeds the f64 range; use
/// [`ln_polylog`] there.
pub fn polylog(s: f64, z: f64, prec: &Precision) -> Result<f64> {
    check(s, z)?;
    if z == 0.0 {
        return Ok(0.0);
    }
    Ok(ln_polylog(s, z, prec)?.exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eulerian_li(n: usize, z: f64) -> f64 {
        // Li_{-n}(z) = z A_n(z) / (1 - z)^(n+1) with Eulerian numbers A(n, k)
        let mut row = vec![1.0f64];
        for m in 1..=n {
            let mut next = vec![0.0; m];
            for k in 0..m {
                let a = if k < row.len() { row[k] } else { 0.0 };
                let b = if k >= 1 && k - 1 < row.len() { row[k - 1] } else { 0.0 };
                next[k] = (k as f64 + 1.0) * a + (m - k) as f64 * b;
            }
            row = next;
        }
        let poly: f64 = row.iter().enumerate().map(|(k, c)| c * z.powi(k as i32)).sum();
        z * poly / (1.0 - z).powi(n as i32 + 1)
    }

    #[test]
    fn negative_integer_orders() {
        let p = Precision::machine();
        for n in [0usize, 1, 2, 5, 9] {
            for &z in &[0.05, 0.3, 0.8] {
                let v = polylog(-(n as f64), z, &p).unwrap();
                let w = eulerian_li(n, z);
                assert!(((v - w) / w).abs() < 1e-13, "n = {n}, z = {z}: {v} vs {w}");
            }
        }
    }

    #[test]
    fn positive_orders() {
        let p = Precision::machine();
        let z: f64 = 0.5;
        // Li_1(z) = -ln(1 - z), Li_2(1/2) = pi^2/12 - ln^2(2)/2
        assert!((polylog(1.0, z, &p).unwrap() + (1.0 - z).ln()).abs() < 1e-15);
        let l2 = std::f64::consts::PI.powi(2) / 12.0 - 2f64.ln().powi(2) / 2.0;
        assert!((polylog(2.0, z, &p).unwrap() - l2).abs() < 1e-15);
    }

    #[test]
    fn small_z_leading_term() {
        let p = Precision::machine();
        for &s in &[-3.5, 0.5, 2.0] {
            let z = 1e-9;
            assert!((polylog(s, z, &p).unwrap() / z - 1.0).abs() < 1e-7);
        }
    }

    #[test]
    fn huge_negative_order_in_log_space() {
        // against a direct sum of scaled terms over the whole range
        let p = Precision::machine();
        let (s, z) = (-150.5f64, 0.8f64);
        let lt = |k: f64| k * z.ln() - s * k.ln();
        let m = (1..20000).map(|k| lt(k as f64)).fold(f64::MIN, f64::max);
        let direct = m + crate::sum::neumaier((1..20000).map(|k| (lt(k as f64) - m).exp())).ln();
        let v = ln_polylog(s, z, &p).unwrap();
        assert!((v - direct).abs() < 1e-12 * direct.abs());
        assert!(polylog(s, z, &p).unwrap().is_infinite() || v < 709.0);
    }

    #[test]
    fn domain() {
        let p = Precision::default();
        assert!(polylog(-1.0, 1.0, &p).is_err());
        assert!(polylog(-1.0, -0.2, &p).is_err());
        assert_eq!(polylog(-1.0, 0.0, &p).unwrap(), 0.0);
    }
}
