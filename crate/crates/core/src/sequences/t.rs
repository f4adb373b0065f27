//! Engines for t_n, the power-series coefficients of the normalised fixed-point generating function.

use num_complex::Complex64;

use super::{CoeffTable, Family, Method};
use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::specfun::{ln_gamma, ln_pochhammer, stirling2_f64, Params, Precision, StirlingTable};
use crate::sum::{neumaier, ComplexSum, NeumaierSum};

/// Sign and ln |t_n| from the Stirling sum. All terms share the sign (-1)^n.
pub fn t_stirling_ln(params: &Params, n: usize) -> (f64, f64) {
    let table = StirlingTable::new(n);
    t_stirling_ln_with(&table, params, n)
}

fn t_stirling_ln_with(table: &StirlingTable, p: &Params, n: usize) -> (f64, f64) {
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    if n == 0 {
        return (1.0, 0.0);
    }
    if p.alpha() == 0.0 {
        return (sign, f64::NEG_INFINITY);
    }
    let g = p.gamma();
    let lr = p.ratio().ln();
    let mut lp = 0.0; // ln (gamma)_i, built up incrementally
    let mut logs = Vec::with_capacity(n);
    for i in 1..=n {
        lp += (g + (i - 1) as f64).ln();
        logs.push(table.ln(n, i) + lp + i as f64 * lr);
    }
    let m = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let s = neumaier(logs.iter().map(|l| (l - m).exp()));
    (sign, m + s.ln() - n as f64 * g.ln())
}

/// t_n = (-1)^n gamma^-n sum_i S(n, i) (gamma)_i r^i, r = alpha / (1 - alpha).
pub fn t_stirling(params: &Params, n: usize) -> f64 {
    if n <= 60 {
        // plain products are exact enough and faster here
        let g = params.gamma();
        let r = params.ratio();
        let mut acc = NeumaierSum::new();
        let mut poch_r = 1.0;
        for i in 0..=n {
            if i > 0 {
                poch_r *= (g + (i - 1) as f64) * r;
            }
            acc.add(stirling2_f64(n, i) * poch_r);
        }
        let v = acc.value() * g.powi(-(n as i32));
        if v.is_finite() {
            return if n % 2 == 0 { v } else { -v };
        }
    }
    let (s, l) = t_stirling_ln(params, n);
    s * l.exp()
}

/// Stirling-sum table of t_0..t_nmax with an explicit log scale.
pub fn t_table_scaled(params: &Params, n_max: usize, log_scale: f64) -> CoeffTable {
    let table = StirlingTable::new(n_max);
    let values = (0..=n_max)
        .map(|n| {
            let (s, l) = t_stirling_ln_with(&table, params, n);
            if l == f64::NEG_INFINITY {
                0.0
            } else {
                s * (l + n as f64 * log_scale).exp()
            }
        })
        .collect();
    CoeffTable::new(Family::T, Method::StirlingSum, Some(*params), log_scale, values)
}

/// Stirling-sum table of t_0..t_nmax, scaled automatically when the top
/// entries would leave the comfortable f64 range.
pub fn t_table(params: &Params, n_max: usize) -> CoeffTable {
    let (_, l) = t_stirling_ln(params, n_max);
    let s = if l.is_finite() && l.abs() > 300.0 { -l / n_max as f64 } else { 0.0 };
    t_table_scaled(params, n_max, s)
}

/// t_n via the shift recurrence t_n(g) = t_{n-1}(g) - (1-alpha)^-1 (1 + 1/g)^(n-1) t_{n-1}(g+1),
/// started from t_0 = 1. The recursion loses roughly a factor of three per step to
/// cancellation when gamma is small, so it runs in double-double arithmetic.
/// Intended for n_max up to about 150.
pub fn t_recurrence(params: &Params, n_max: usize) -> CoeffTable {
    let inv = Dd::ONE / (Dd::ONE - Dd::from(params.alpha()));
    let g = Dd::from(params.gamma());
    // u[s] = 1 + 1/(g + s), pw[s] = u[s]^(k-1)
    let u: Vec<Dd> = (0..=n_max).map(|s| Dd::ONE + Dd::ONE / (g + Dd::from(s as f64))).collect();
    let mut pw = vec![Dd::ONE; n_max + 1];
    // cur[s] = t_k(g + s)
    let mut cur = vec![Dd::ONE; n_max + 1];
    let mut out = vec![1.0];
    for k in 1..=n_max {
        let width = n_max + 1 - k;
        let next: Vec<Dd> = (0..width).map(|s| cur[s] - inv * pw[s] * cur[s + 1]).collect();
        for s in 0..width {
            pw[s] = pw[s] * u[s];
        }
        out.push(next[0].to_f64());
        cur = next;
    }
    CoeffTable::new(Family::T, Method::Recurrence, Some(*params), 0.0, out)
}

/// t_n = (-1)^n gamma^-n (1-alpha)^gamma sum_l l^n (gamma)_l alpha^l / l!.
pub fn t_alpha_series(params: &Params, n: usize, prec: &Precision) -> Result<f64> {
    let a = params.alpha();
    let g = params.gamma();
    if n == 0 {
        return Ok(1.0);
    }
    if a == 0.0 {
        return Ok(0.0);
    }
    let la = a.ln();
    let nf = n as f64;
    // ln of term l, l >= 1
    let mut logs = Vec::new();
    let mut lc = 0.0; // ln((gamma)_l alpha^l / l!)
    let mut l = 1usize;
    let tol = prec.rel_tol * 1e-2;
    let mut peak = f64::NEG_INFINITY;
    loop {
        let lf = l as f64;
        lc += ((g + lf - 1.0) / lf).ln() + la;
        let lt = nf * lf.ln() + lc;
        peak = peak.max(lt);
        logs.push(lt);
        if logs.len() >= 2 {
            let q = (lt - logs[logs.len() - 2]).exp();
            // past the peak the ratio decreases monotonically toward alpha
            if q < 1.0 {
                let partial = neumaier(logs.iter().map(|x| (x - peak).exp()));
                let term = (lt - peak).exp();
                if term * q / (1.0 - q) < tol * partial {
                    break;
                }
            }
        }
        if l >= prec.max_terms {
            return Err(Error::NonConvergence {
                what: "alpha series for t_n",
                terms: l,
            });
        }
        l += 1;
    }
    let s = neumaier(logs.iter().map(|x| (x - peak).exp()));
    let ln_abs = peak + s.ln() + g * params.ln_one_minus_alpha() - nf * g.ln();
    let v = ln_abs.exp();
    Ok(if n % 2 == 0 { v } else { -v })
}

/// Relative residual between the truncated exponential generating function
/// sum_n t_n z0^n / n! and its closed form (1-alpha)^gamma (1 - alpha e^(-z0/gamma))^-gamma.
pub fn t_egf_check(params: &Params, n_max: usize, z0: f64) -> Result<f64> {
    let a = params.alpha();
    let g = params.gamma();
    let limit = 0.1 * g * (1.0 / a).ln();
    if z0.abs() > limit {
        return Err(Error::Domain(format!("|z0| = {} exceeds {limit}", z0.abs())));
    }
    let t = t_table(params, n_max);
    let mut acc = NeumaierSum::new();
    for (n, v) in t.scaled_values().iter().enumerate() {
        if *v == 0.0 || z0 == 0.0 && n > 0 {
            continue;
        }
        let nf = n as f64;
        let mag = (nf * (z0.abs().ln() - t.log_scale()) - ln_gamma(nf + 1.0)).exp();
        let sgn = if z0 < 0.0 && n % 2 == 1 { -1.0 } else { 1.0 };
        acc.add(v * mag * sgn);
    }
    let closed = ((g * params.ln_one_minus_alpha()) - g * (-a * (-z0 / g).exp()).ln_1p()).exp();
    Ok(((acc.value() - closed) / closed).abs())
}

/// Relative gap in sum_k alpha^k (gamma)_k k^m / k! = (1-alpha)^-gamma sum_l S(m, l) (gamma)_l r^l.
pub fn power_sum_identity_check(params: &Params, m: usize, prec: &Precision) -> Result<f64> {
    if m > 12 {
        return Err(Error::Domain(format!("power-sum check supports m <= 12, got {m}")));
    }
    let a = params.alpha();
    let g = params.gamma();
    let r = params.ratio();
    let rhs = (-g * params.ln_one_minus_alpha()).exp()
        * neumaier((0..=m).map(|l| stirling2_f64(m, l) * (ln_pochhammer(g, l) + l as f64 * r.ln()).exp()));
    let rhs = if a == 0.0 { if m == 0 { 1.0 } else { 0.0 } } else { rhs };
    let mut lhs = NeumaierSum::new();
    if m == 0 {
        lhs.add(1.0);
    }
    let mut c = 1.0; // alpha^k (gamma)_k / k!
    let mut prev = 0.0f64;
    for k in 1..prec.max_terms {
        let kf = k as f64;
        c *= a * (g + kf - 1.0) / kf;
        let term = c * kf.powi(m as i32);
        lhs.add(term);
        if term < prev && term < prec.rel_tol * 1e-3 * lhs.value() {
            break;
        }
        prev = term;
    }
    if rhs == 0.0 {
        return Ok(lhs.value().abs());
    }
    Ok(((lhs.value() - rhs) / rhs).abs())
}

/// t_n from the Cauchy integral of (1-alpha)^gamma (1 - alpha e^(-z/gamma))^-gamma on a
/// circle of radius gamma ln(1/alpha) / 2, by the trapezoid rule. A slow independent check
/// for small n.
pub fn t_loop_integral(params: &Params, n: usize, nodes: usize) -> Result<f64> {
    if n > 8 {
        return Err(Error::Domain("loop-integral check is only for n <= 8".into()));
    }
    let a = params.alpha();
    let g = params.gamma();
    if a == 0.0 {
        return Ok(if n == 0 { 1.0 } else { 0.0 });
    }
    // substitute z = -gamma w so the kernel becomes (1 - alpha e^w)^-gamma
    let rho = 0.5 * (1.0 / a).ln();
    let mut acc = ComplexSum::new();
    for k in 0..nodes {
        let th = 2.0 * std::f64::consts::PI * k as f64 / nodes as f64;
        let w = Complex64::from_polar(rho, th);
        let kern = (1.0 - a * w.exp()).powf(-g);
        acc.add(kern * Complex64::from_polar(1.0, -(n as f64) * th));
    }
    let mean = acc.value().re / nodes as f64;
    let nf = n as f64;
    let fact = ln_gamma(nf + 1.0).exp();
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign * (g * params.ln_one_minus_alpha()).exp() * fact * mean * rho.powi(-(n as i32)) * g.powi(-(n as i32)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: f64, g: f64) -> Params {
        Params::new(a, g).unwrap()
    }

    fn rel(x: f64, y: f64) -> f64 {
        if x == y {
            0.0
        } else {
            ((x - y) / y).abs()
        }
    }

    #[test]
    fn first_coefficients() {
        // t_1 = -alpha/(1-alpha), t_2 = (alpha^2 gamma + alpha)/((1-alpha)^2 gamma)
        let q = p(0.3, 1.7);
        let (a, g) = (0.3, 1.7);
        assert!(rel(t_stirling(&q, 1), -a / (1.0 - a)) < 1e-15);
        let t2 = (a * a * g + a) / ((1.0 - a) * (1.0 - a) * g);
        assert!(rel(t_stirling(&q, 2), t2) < 1e-15);
        assert_eq!(t_stirling(&q, 0), 1.0);
    }

    #[test]
    fn three_engines_agree() {
        let prec = Precision::machine();
        for &(a, g) in &[(0.1, 0.5), (0.5, 1.0), (0.7, 4.0), (0.95, 0.3)] {
            let q = p(a, g);
            let rec = t_recurrence(&q, 25);
            for n in 0..=25 {
                let s = t_stirling(&q, n);
                assert!(rel(rec.get(n).unwrap(), s) < 1e-10, "rec n = {n} ({a}, {g})");
                let ser = t_alpha_series(&q, n, &prec).unwrap();
                assert!(rel(ser, s) < 1e-11, "series n = {n} ({a}, {g})");
            }
        }
    }

    #[test]
    fn log_and_direct_forms_agree() {
        let q = p(0.6, 2.5);
        for n in [1usize, 10, 40, 60] {
            let (s, l) = t_stirling_ln(&q, n);
            assert!(rel(s * l.exp(), t_stirling(&q, n)) < 1e-12);
        }
        let t = t_table(&q, 200);
        assert!(t.log_scale() < 0.0);
        assert!(t.scaled_values().iter().all(|v| v.is_finite()));
        let (_, l) = t_stirling_ln(&q, 200);
        assert!((t.ln_abs(200).unwrap() - l).abs() < 1e-12 * l);
    }

    #[test]
    fn alpha_zero_gives_zeros() {
        let q = p(0.0, 2.0);
        let rec = t_recurrence(&q, 10);
        for n in 1..=10 {
            assert_eq!(t_stirling(&q, n), 0.0);
            assert_eq!(rec.get(n).unwrap(), 0.0);
            assert_eq!(t_alpha_series(&q, n, &Precision::default()).unwrap(), 0.0);
        }
    }

    #[test]
    fn egf_and_power_sums() {
        let q = p(0.5, 1.0);
        let z0 = 0.05;
        assert!(t_egf_check(&q, 40, z0).unwrap() < 1e-12);
        assert!(t_egf_check(&q, 40, -z0).unwrap() < 1e-12);
        assert!(matches!(t_egf_check(&q, 40, 1.0), Err(Error::Domain(_))));
        for &(a, g) in &[(0.2, 0.5), (0.5, 1.0), (0.8, 3.0)] {
            for m in 0..=12 {
                let r = power_sum_identity_check(&p(a, g), m, &Precision::machine()).unwrap();
                assert!(r < 1e-12, "m = {m}: {r}");
            }
        }
        assert!(power_sum_identity_check(&q, 13, &Precision::default()).is_err());
    }

    #[test]
    fn loop_integral_matches() {
        for &(a, g) in &[(0.3, 1.0), (0.6, 2.5)] {
            let q = p(a, g);
            for n in 0..=8 {
                let v = t_loop_integral(&q, n, 4096).unwrap();
                assert!(rel(v, t_stirling(&q, n)) < 1e-10, "n = {n}");
            }
        }
    }
}
