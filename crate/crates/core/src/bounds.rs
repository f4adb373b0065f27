//! Polylogarithm and saddle-point bounds on |t_n|, large-n estimates, and the
//! d/t and f/t ratio limits.

use std::f64::consts::PI;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::sequences::{d_from_t, f_from_divisors, t_stirling_ln, t_table};
use crate::specfun::{lambert_w0_exp, ln_gamma, ln_pochhammer, ln_polylog, Params, Precision};

fn require_polylog_domain(p: &Params, n: usize) -> Result<()> {
    if p.gamma() >= 1.0 {
        return Err(Error::Domain(format!("polylog bounds need gamma < 1, got {}", p.gamma())));
    }
    if p.alpha() == 0.0 {
        return Err(Error::Domain("polylog bounds need alpha > 0".into()));
    }
    if n == 0 {
        return Err(Error::Domain("polylog bounds start at n = 1".into()));
    }
    Ok(())
}

fn require_saddle_domain(p: &Params, n: usize) -> Result<()> {
    if p.alpha() == 0.0 {
        return Err(Error::Domain("saddle-point quantities need alpha > 0".into()));
    }
    if n == 0 {
        return Err(Error::Domain("saddle-point quantities start at n = 1".into()));
    }
    Ok(())
}

fn polylog_prefactor(p: &Params, n: usize) -> f64 {
    p.gamma() * p.ln_one_minus_alpha() - n as f64 * p.gamma().ln() - ln_gamma(p.gamma())
}

/// ln of (1-alpha)^gamma gamma^-n Li_{1-n-gamma}(alpha) / Gamma(gamma).
pub fn t_upper_polylog_ln(params: &Params, n: usize, prec: &Precision) -> Result<f64> {
    require_polylog_domain(params, n)?;
    let g = params.gamma();
    let li = ln_polylog(1.0 - n as f64 - g, params.alpha(), prec)?;
    Ok(polylog_prefactor(params, n) + li)
}

/// Upper bound on |t_n| for 0 < gamma < 1.
pub fn t_upper_polylog(params: &Params, n: usize, prec: &Precision) -> Result<f64> {
    Ok(t_upper_polylog_ln(params, n, prec)?.exp())
}

/// Lower bound on |t_n| for 0 < gamma < 1:
/// (1-alpha)^gamma gamma^-n [Li_{1-n-gamma}(alpha) - (1-gamma) Li_{2-n-gamma}(alpha)] / Gamma(gamma).
/// Negative (vacuous) at small n.
pub fn t_lower_polylog(params: &Params, n: usize, prec: &Precision) -> Result<f64> {
    require_polylog_domain(params, n)?;
    let g = params.gamma();
    let a = params.alpha();
    let l1 = ln_polylog(1.0 - n as f64 - g, a, prec)?;
    let l2 = ln_polylog(2.0 - n as f64 - g, a, prec)?;
    let inner = 1.0 - (1.0 - g) * (l2 - l1).exp();
    let mag = (polylog_prefactor(params, n) + l1).exp();
    Ok(mag * inner)
}

/// Solution rho of rho + m/gamma = W0((m/(alpha gamma)) e^(m/gamma)), i.e. of
/// alpha e^rho (m + gamma rho) = m. Gives r_0 for m = n and z_0 for m = n + 1.
pub fn critical_radius(params: &Params, m: f64) -> Result<f64> {
    let a = params.alpha();
    let g = params.gamma();
    if a == 0.0 || m <= 0.0 {
        return Err(Error::Domain("critical radius needs alpha > 0 and m > 0".into()));
    }
    let k = m / g;
    let l = (k / a).ln() + k;
    let mut rho = lambert_w0_exp(l) - k;
    // polish on phi(rho) = ln(m + gamma rho) + rho - ln(m / alpha), which has no cancellation
    let target = (m / a).ln();
    for _ in 0..20 {
        let phi = (m + g * rho).ln() + rho - target;
        let d = g / (m + g * rho) + 1.0;
        let step = phi / d;
        rho -= step;
        if step.abs() <= 4.0 * f64::EPSILON * rho.abs().max(1e-300) {
            break;
        }
    }
    if !rho.is_finite() || rho <= 0.0 {
        return Err(Error::NonConvergence {
            what: "critical radius",
            terms: 20,
        });
    }
    Ok(rho)
}

/// ln of (1-alpha)^gamma n! (gamma r0)^(-n-gamma) (n + gamma r0)^gamma.
pub fn t_sup_bound_ln(params: &Params, n: usize) -> Result<f64> {
    require_saddle_domain(params, n)?;
    let g = params.gamma();
    let nf = n as f64;
    let r0 = critical_radius(params, nf)?;
    Ok(g * params.ln_one_minus_alpha() + ln_gamma(nf + 1.0) - (nf + g) * (g * r0).ln() + g * (nf + g * r0).ln())
}

/// Upper bound on |t_n| valid for every gamma > 0.
pub fn t_sup_bound(params: &Params, n: usize) -> Result<f64> {
    Ok(t_sup_bound_ln(params, n)?.exp())
}

/// Sign and ln of the saddle-point estimate
/// (-1)^n (1-alpha)^gamma (2 pi)^(-1/2) gamma^-n n! (n+1)^(-1/2) z0^(-n-gamma)
///   (z0 + (n+1)/gamma)^gamma (z0 + (n+1)/gamma + 1)^(-1/2).
pub fn t_estimate_steepest_ln(params: &Params, n: usize) -> Result<(f64, f64)> {
    require_saddle_domain(params, n)?;
    let g = params.gamma();
    let nf = n as f64;
    let z0 = critical_radius(params, nf + 1.0)?;
    let w = z0 + (nf + 1.0) / g;
    let l = g * params.ln_one_minus_alpha() - 0.5 * (2.0 * PI).ln() - nf * g.ln() + ln_gamma(nf + 1.0)
        - 0.5 * (nf + 1.0).ln()
        - (nf + g) * z0.ln()
        + g * w.ln()
        - 0.5 * (w + 1.0).ln();
    Ok((sign(n), l))
}

pub fn t_estimate_steepest(params: &Params, n: usize) -> Result<f64> {
    let (s, l) = t_estimate_steepest_ln(params, n)?;
    Ok(s * l.exp())
}

/// Sign and ln of (-1)^n (1-alpha)^gamma (gamma)_n gamma^-n ln(1/alpha)^(-n-gamma).
pub fn t_estimate_simple_ln(params: &Params, n: usize) -> Result<(f64, f64)> {
    require_saddle_domain(params, n)?;
    let g = params.gamma();
    let nf = n as f64;
    let big_l = -params.alpha().ln();
    let l = g * params.ln_one_minus_alpha() + ln_pochhammer(g, n) - nf * g.ln() - (nf + g) * big_l.ln();
    Ok((sign(n), l))
}

pub fn t_estimate_simple(params: &Params, n: usize) -> Result<f64> {
    let (s, l) = t_estimate_simple_ln(params, n)?;
    Ok(s * l.exp())
}

/// |t_n|^(1/n) e gamma ln(1/alpha) / n, which tends to 1.
pub fn root_growth_ratio(params: &Params, n: usize) -> Result<f64> {
    require_saddle_domain(params, n)?;
    let (_, l) = t_stirling_ln(params, n);
    let nf = n as f64;
    Ok((l / nf).exp() * std::f64::consts::E * params.gamma() * (-params.alpha().ln()) / nf)
}

fn sign(n: usize) -> f64 {
    if n % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    pub t_exact: f64,
    /// None when gamma >= 1, where the polylog bounds are not claimed.
    pub lower: Option<f64>,
    pub upper: Option<f64>,
    pub sup_bound: f64,
    pub estimate_steepest: f64,
    pub estimate_simple: f64,
    /// The lower bound is non-positive and says nothing.
    pub vacuous: bool,
}

impl BoundReport {
    /// Whether every bound that applies holds, with a relative slack.
    pub fn holds(&self, slack: f64) -> bool {
        let t = self.t_exact.abs();
        let lo_ok = self.lower.map_or(true, |l| l <= 0.0 || l <= t * (1.0 + slack));
        let up_ok = self.upper.map_or(true, |u| t <= u * (1.0 + slack));
        lo_ok && up_ok && t <= self.sup_bound * (1.0 + slack)
    }
}

pub fn bound_report(params: &Params, n: usize, prec: &Precision) -> Result<BoundReport> {
    require_saddle_domain(params, n)?;
    let (s, l) = t_stirling_ln(params, n);
    let (lower, upper) = if params.gamma() < 1.0 {
        (
            Some(t_lower_polylog(params, n, prec)?),
            Some(t_upper_polylog(params, n, prec)?),
        )
    } else {
        (None, None)
    };
    Ok(BoundReport {
        n,
        t_exact: s * l.exp(),
        lower,
        upper,
        sup_bound: t_sup_bound(params, n)?,
        estimate_steepest: t_estimate_steepest(params, n)?,
        estimate_simple: t_estimate_simple(params, n)?,
        vacuous: lower.is_some_and(|v| v <= 0.0),
    })
}

/// Ratios along n with a fitted C in |ratio - limit| <= C/n and the log-log
/// decay exponent, both taken over the upper half of the range.
#[derive(Debug, Clone, PartialEq)]
pub struct RatioSeries {
    pub values: Vec<(usize, f64)>,
    pub limit: f64,
    pub fitted_c: f64,
    pub decay_exponent: f64,
}

impl RatioSeries {
    fn fit(values: Vec<(usize, f64)>, limit: f64) -> Self {
        let n_max = values.last().map_or(0, |v| v.0);
        let tail: Vec<(f64, f64)> = values
            .iter()
            .filter(|(n, _)| 2 * n >= n_max)
            .map(|&(n, r)| (n as f64, (r - limit).abs()))
            .collect();
        let fitted_c = tail.iter().map(|(n, e)| n * e).fold(0.0, f64::max);
        let pts: Vec<(f64, f64)> = tail.iter().filter(|p| p.1 > 0.0).map(|(n, e)| (n.ln(), e.ln())).collect();
        let decay_exponent = if pts.len() >= 2 {
            let k = pts.len() as f64;
            let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
            let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
            let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
            let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
            sxy / sxx
        } else {
            f64::NAN
        };
        Self {
            values,
            limit,
            fitted_c,
            decay_exponent,
        }
    }

    pub fn get(&self, n: usize) -> Option<f64> {
        self.values.iter().find(|v| v.0 == n).map(|v| v.1)
    }
}

fn check_ratio_range(n_max: usize) -> Result<()> {
    if n_max > 200 {
        return Err(Error::Complexity(format!("ratio tables are limited to 200 terms, got {n_max}")));
    }
    if n_max < 2 {
        return Err(Error::Domain("need at least two terms".into()));
    }
    Ok(())
}

/// -d_m / (m t_m) for m = 1..=m_max; tends to 1.
pub fn ratio_d_over_t(params: &Params, m_max: usize) -> Result<RatioSeries> {
    check_ratio_range(m_max)?;
    if params.alpha() == 0.0 {
        return Err(Error::Domain("ratios are undefined at alpha = 0".into()));
    }
    let t = t_table(params, m_max);
    let d = d_from_t(&t)?;
    let values = (1..=m_max)
        .map(|m| (m, -d.scaled(m).unwrap() / (m as f64 * t.scaled(m).unwrap())))
        .collect();
    Ok(RatioSeries::fit(values, 1.0))
}

/// f_n / t_n for n = 1..=n_max via the divisor route; tends to -1.
pub fn ratio_f_over_t(params: &Params, n_max: usize) -> Result<RatioSeries> {
    check_ratio_range(n_max)?;
    if params.alpha() == 0.0 {
        return Err(Error::Domain("ratios are undefined at alpha = 0".into()));
    }
    let t = t_table(params, n_max);
    let f = f_from_divisors(&d_from_t(&t)?, n_max)?;
    let values = (1..=n_max).map(|n| (n, f.scaled(n).unwrap() / t.scaled(n).unwrap())).collect();
    Ok(RatioSeries::fit(values, -1.0))
}

/// x_1..x_n of x_k = 1 + x_{k-1}^2, x_1 = 1, exactly.
pub fn tree_count_sequence(n: usize) -> Vec<BigUint> {
    let mut out: Vec<BigUint> = Vec::with_capacity(n);
    for k in 0..n {
        let next = if k == 0 {
            BigUint::from(1u32)
        } else {
            &out[k - 1] * &out[k - 1] + 1u32
        };
        out.push(next);
    }
    out
}

/// x_n^(1/2^n), evaluated through logarithms.
pub fn tree_growth_constant(n: usize) -> f64 {
    assert!(n >= 1);
    let mut l = 0.0f64; // ln x_1
    for _ in 1..n {
        l = 2.0 * l + (-2.0 * l).exp().ln_1p();
    }
    (l / 2f64.powi(n as i32)).exp()
}

/// kappa = c^2 / 2 with c the limiting growth constant of the tree counts.
pub fn kappa() -> f64 {
    let c = tree_growth_constant(60);
    c * c / 2.0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::t_stirling;

    fn p(a: f64, g: f64) -> Params {
        Params::new(a, g).unwrap()
    }

    #[test]
    fn sandwich_small_grid() {
        let prec = Precision::default();
        for &g in &[0.3, 0.5, 0.8] {
            for &a in &[0.2, 0.5, 0.8] {
                let q = p(a, g);
                for n in 5..=40 {
                    let r = bound_report(&q, n, &prec).unwrap();
                    assert!(r.holds(1e-12), "({a}, {g}) n = {n}: {r:?}");
                }
            }
        }
    }

    #[test]
    fn upper_ratio_example() {
        let q = p(0.3, 0.5);
        let r = t_upper_polylog(&q, 10, &Precision::default()).unwrap() / t_stirling(&q, 10).abs();
        assert!(r > 1.0 && r < 1.5, "{r}");
    }

    #[test]
    fn radius_inequality() {
        for &(a, g) in &[(0.5, 1.0), (0.1, 4.0), (0.9, 0.3)] {
            let q = p(a, g);
            let big_l = -f64::ln(a);
            for n in 1..=40 {
                let nf = n as f64;
                let r0 = critical_radius(&q, nf).unwrap();
                assert!(nf / (nf + g) * big_l < r0 && r0 < big_l, "n = {n}");
                assert!((a * r0.exp() * (nf + g * r0) / nf - 1.0).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn log_space_matches_direct() {
        let q = p(0.4, 1.5);
        let (a, g) = (0.4f64, 1.5f64);
        for n in 1..=15usize {
            let nf = n as f64;
            let fact: f64 = (1..=n).map(|k| k as f64).product();
            let r0 = critical_radius(&q, nf).unwrap();
            let sup = (1.0 - a).powf(g) * fact * (g * r0).powf(-nf - g) * (nf + g * r0).powf(g);
            assert!((t_sup_bound(&q, n).unwrap() / sup - 1.0).abs() < 1e-10);
            let poch: f64 = (0..n).map(|k| g + k as f64).product();
            let simple = (1.0 - a).powf(g) * poch * g.powf(-nf) * (1.0 / a).ln().powf(-nf - g);
            assert!((t_estimate_simple(&q, n).unwrap().abs() / simple - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn estimates_signs() {
        let q = p(0.5, 1.0);
        for n in 1..=12 {
            let s = t_estimate_steepest(&q, n).unwrap();
            assert_eq!(s.signum(), t_stirling(&q, n).signum());
        }
    }

    #[test]
    fn domains() {
        let prec = Precision::default();
        assert!(matches!(t_upper_polylog(&p(0.5, 1.0), 3, &prec), Err(Error::Domain(_))));
        assert!(matches!(t_lower_polylog(&p(0.5, 2.0), 3, &prec), Err(Error::Domain(_))));
        assert!(t_upper_polylog(&p(0.5, 0.5), 0, &prec).is_err());
        assert!(ratio_d_over_t(&p(0.3, 1.0), 201).is_err());
    }

    #[test]
    fn ratio_endpoints() {
        let q = p(0.3, 1.0);
        let d = ratio_d_over_t(&q, 60).unwrap();
        assert!((d.get(1).unwrap() - 1.0).abs() < 1e-15);
        let f = ratio_f_over_t(&q, 60).unwrap();
        assert!((f.get(1).unwrap() + 1.0).abs() < 1e-15);
        assert!((f.get(60).unwrap() + 1.0).abs() < 0.05);
    }

    #[test]
    fn tree_counts() {
        let xs = tree_count_sequence(5);
        let want: Vec<BigUint> = [1u32, 2, 5, 26, 677].iter().map(|&v| BigUint::from(v)).collect();
        assert_eq!(xs, want);
        let c12 = tree_growth_constant(12);
        assert!((c12 - 1.225_902_443_5).abs() < 1e-4);
        assert!((kappa() - 0.751_418_4).abs() < 5e-8);
    }
}
