//! Triangular Toeplitz solves and convolution identities linking t, a, d and f.

use super::{CoeffTable, Family, Method};
use crate::dd::Dd;
use crate::error::{Error, Result};
use crate::sum::NeumaierSum;

fn expect_family(t: &CoeffTable, f: Family) -> Result<()> {
    if t.family() != f {
        return Err(Error::Domain(format!("expected a {f:?} table, got {:?}", t.family())));
    }
    Ok(())
}

/// Coefficients of 1/B(x) for B(x) = sum b_k x^k with b_0 = 1.
pub fn reciprocal_series(b: &[f64]) -> Vec<f64> {
    assert!(!b.is_empty() && b[0] == 1.0, "series must start with 1");
    // the recursion feeds its own rounding errors forward, so carry it in double-double
    let mut c = vec![Dd::from(0.0); b.len()];
    c[0] = Dd::ONE;
    for m in 1..b.len() {
        let mut s = Dd::from(0.0);
        for k in 1..=m {
            s = s + Dd::from(b[k]) * c[m - k];
        }
        c[m] = -s;
    }
    c.into_iter().map(Dd::to_f64).collect()
}

/// a_n from t_n: the coefficients of 1 / sum t_n x^n.
pub fn a_from_t(t: &CoeffTable) -> Result<CoeffTable> {
    expect_family(t, Family::T)?;
    let c = reciprocal_series(&t.padded());
    Ok(CoeffTable::new(
        Family::A,
        Method::ToeplitzSolve,
        t.params(),
        t.log_scale(),
        c[1..].to_vec(),
    ))
}

/// t_n from a_n (a_0 = 1). The same solve, run the other way.
pub fn t_from_a(a: &CoeffTable) -> Result<CoeffTable> {
    expect_family(a, Family::A)?;
    let c = reciprocal_series(&a.padded());
    Ok(CoeffTable::new(Family::T, Method::ToeplitzSolve, a.params(), a.log_scale(), c))
}

/// d_m = -sum_{k<m} d_k t_{m-k} - m t_m.
pub fn d_from_t(t: &CoeffTable) -> Result<CoeffTable> {
    expect_family(t, Family::T)?;
    let tv = t.padded();
    let n = tv.len().saturating_sub(1);
    let mut d = vec![0.0; n + 1];
    for m in 1..=n {
        let mut s = NeumaierSum::new();
        for k in 1..m {
            s.add(d[k] * tv[m - k]);
        }
        s.add(m as f64 * tv[m]);
        d[m] = -s.value();
    }
    Ok(CoeffTable::new(Family::D, Method::Convolution, t.params(), t.log_scale(), d[1..].to_vec()))
}

fn d_a_residuals(a: &CoeffTable, d: &CoeffTable) -> Result<Vec<(f64, f64)>> {
    expect_family(a, Family::A)?;
    expect_family(d, Family::D)?;
    let d = d.rescaled(a.log_scale());
    let av = a.padded();
    let dv = d.padded();
    let n = (av.len().min(dv.len())).saturating_sub(1);
    let mut out = Vec::with_capacity(n);
    for m in 1..=n {
        let mut s = NeumaierSum::new();
        let mut mag = (m as f64 * av[m]).abs() + dv[m].abs();
        s.add(m as f64 * av[m]);
        s.add(-dv[m]);
        for k in 1..m {
            s.add(-dv[k] * av[m - k]);
            mag += (dv[k] * av[m - k]).abs();
        }
        let unscale = (-(m as f64) * a.log_scale()).exp();
        out.push((s.value().abs() * unscale, mag * unscale));
    }
    Ok(out)
}

/// max_m |m a_m - d_m - sum_{k<m} d_k a_{m-k}|.
pub fn d_a_check(a: &CoeffTable, d: &CoeffTable) -> Result<f64> {
    Ok(d_a_residuals(a, d)?.into_iter().map(|r| r.0).fold(0.0, f64::max))
}

/// The same residual, each divided by the magnitude of the terms it cancels.
pub fn d_a_relative_check(a: &CoeffTable, d: &CoeffTable) -> Result<f64> {
    Ok(d_a_residuals(a, d)?
        .into_iter()
        .map(|(r, m)| if m == 0.0 { r } else { r / m })
        .fold(0.0, f64::max))
}

/// a_n = sum over partitions n = sum l m_l of (-1)^(sum m) multinomial(sum m; m_1, ...) prod t_l^m_l.
pub fn a_multinomial(t: &CoeffTable, n: usize) -> Result<f64> {
    expect_family(t, Family::T)?;
    if n > 20 {
        return Err(Error::Complexity(format!("multinomial formula enumerates partitions only up to n = 20, got {n}")));
    }
    if t.n_max() < n {
        return Err(Error::Domain(format!("table holds t up to {}, need {n}", t.n_max())));
    }
    if n == 0 {
        return Ok(1.0);
    }
    let tv: Vec<f64> = (0..=n).map(|k| t.get(k).unwrap()).collect();
    let mut fact = [1u128; 21];
    for k in 1..=20 {
        fact[k] = fact[k - 1] * k as u128;
    }
    let mut acc = NeumaierSum::new();
    let mut mult = vec![0usize; n + 1];
    // recursive descent over parts in decreasing order
    fn walk(rem: usize, max_part: usize, mult: &mut Vec<usize>, tv: &[f64], fact: &[u128; 21], acc: &mut NeumaierSum) {
        if rem == 0 {
            let total: usize = mult.iter().sum();
            let mut coef = fact[total];
            let mut prod = 1.0;
            for (l, &m) in mult.iter().enumerate().skip(1) {
                if m > 0 {
                    coef /= fact[m];
                    prod *= tv[l].powi(m as i32);
                }
            }
            let sign = if total % 2 == 0 { 1.0 } else { -1.0 };
            acc.add(sign * coef as f64 * prod);
            return;
        }
        for part in (1..=max_part.min(rem)).rev() {
            mult[part] += 1;
            walk(rem - part, part, mult, tv, fact, acc);
            mult[part] -= 1;
        }
    }
    walk(n, n, &mut mult, &tv, &fact, &mut acc);
    Ok(acc.value())
}

/// a_n from f_n by expanding prod_l (1 + f_l x^l).
pub fn a_from_f(f: &CoeffTable) -> Result<CoeffTable> {
    expect_family(f, Family::F)?;
    let fv = f.padded();
    let n = fv.len() - 1;
    let mut poly = vec![0.0; n + 1];
    poly[0] = 1.0;
    for l in 1..=n {
        for k in (l..=n).rev() {
            poly[k] += fv[l] * poly[k - l];
        }
    }
    Ok(CoeffTable::new(Family::A, Method::Convolution, f.params(), f.log_scale(), poly[1..].to_vec()))
}
