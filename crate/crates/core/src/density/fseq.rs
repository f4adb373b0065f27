use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::specfun::{gamma_real, gauss_2f1, hurwitz_tail, Params, Precision};
use crate::sum::{ComplexSum, NeumaierSum};

/// The coefficients c_l = alpha^l (gamma)_l / l! of F_j = sum_l c_l j gamma / (j gamma + l),
/// truncated once the geometric tail drops below 1e-18 of the total.
#[derive(Debug, Clone)]
pub struct HypergeometricSequence {
    params: Params,
    coeffs: Vec<f64>,
    norm: f64,
}

impl HypergeometricSequence {
    pub fn new(params: &Params) -> Result<Self> {
        Self::with_limit(params, Precision::default().max_terms)
    }

    pub fn with_limit(params: &Params, max_terms: usize) -> Result<Self> {
        let a = params.alpha();
        let g = params.gamma();
        let mut coeffs = vec![1.0];
        if a > 0.0 {
            let mut c = 1.0;
            let mut total = 1.0;
            for l in 0.. {
                let lf = l as f64;
                c *= a * (g + lf) / (lf + 1.0);
                coeffs.push(c);
                total += c;
                let q = a * ((g + lf + 1.0) / (lf + 2.0)).max(1.0);
                if q < 1.0 && c * q / (1.0 - q) < 1e-18 * total {
                    break;
                }
                if coeffs.len() > max_terms {
                    return Err(Error::NonConvergence {
                        what: "F_j coefficients",
                        terms: coeffs.len(),
                    });
                }
            }
        }
        Ok(Self {
            params: *params,
            coeffs,
            norm: (g * params.ln_one_minus_alpha()).exp(),
        })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// F_j for real j > 0; F_0 = 1.
    pub fn value(&self, j: f64) -> f64 {
        if j == 0.0 {
            return 1.0;
        }
        let u = j * self.params.gamma();
        let mut s = NeumaierSum::new();
        for (l, c) in self.coeffs.iter().enumerate() {
            s.add(c * u / (u + l as f64));
        }
        s.value()
    }

    /// 1 - (1-alpha)^gamma F_j, summed without cancellation.
    pub fn deficit(&self, j: f64) -> f64 {
        let u = j * self.params.gamma();
        let mut s = NeumaierSum::new();
        for (l, c) in self.coeffs.iter().enumerate().skip(1) {
            let lf = l as f64;
            s.add(c * lf / (u + lf));
        }
        self.norm * s.value()
    }

    /// ln((1-alpha)^gamma F_j).
    pub fn ln_normalized(&self, j: f64) -> f64 {
        (-self.deficit(j)).ln_1p()
    }

    /// F_u at complex u, away from the poles u gamma = -l.
    pub fn value_complex(&self, u: Complex64) -> Complex64 {
        let w = u * self.params.gamma();
        let mut s = ComplexSum::new();
        for (l, c) in self.coeffs.iter().enumerate() {
            s.add(*c * w / (w + l as f64));
        }
        s.value()
    }

    /// ln(F_{j-t} / F_j) through the exact difference
    /// F_{j-t} - F_j = -t gamma sum_l c_l l / ((u + l)(v + l)), u = (j-t) gamma, v = j gamma.
    pub fn ln_ratio_complex(&self, j: f64, t: Complex64) -> Complex64 {
        let g = self.params.gamma();
        let v = j * g;
        let u = (Complex64::new(j, 0.0) - t) * g;
        let mut s = ComplexSum::new();
        let mut fj = NeumaierSum::new();
        fj.add(1.0);
        for (l, c) in self.coeffs.iter().enumerate().skip(1) {
            let lf = l as f64;
            s.add(*c * lf / ((u + lf) * (v + lf)));
            fj.add(c * v / (v + lf));
        }
        let w = -t * g * s.value() / fj.value();
        ln1p_c(w)
    }

    pub fn ln_ratio(&self, j: f64, t: f64) -> f64 {
        self.ln_ratio_complex(j, Complex64::new(t, 0.0)).re
    }
}

fn ln1p_c(w: Complex64) -> Complex64 {
    if w.norm() < 1e-4 {
        // alternating series; five terms reach 1e-20
        let mut term = w;
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 1..=6 {
            acc += term / k as f64 * if k % 2 == 1 { 1.0 } else { -1.0 };
            term *= w;
        }
        acc
    } else {
        (1.0 + w).ln()
    }
}

/// F_j = 2F1(gamma, j gamma; 1 + j gamma; alpha) from the partial-fraction sum,
/// with a geometric tail bound against `prec.rel_tol`.
pub fn big_f(params: &Params, j: f64, prec: &Precision) -> Result<f64> {
    if !(j >= 0.0) || !j.is_finite() {
        return Err(Error::Domain(format!("F_j needs j >= 0, got {j}")));
    }
    if j == 0.0 || params.alpha() == 0.0 {
        return Ok(1.0);
    }
    let a = params.alpha();
    let g = params.gamma();
    let u = j * g;
    let mut s = NeumaierSum::new();
    s.add(1.0);
    let mut c = 1.0;
    for l in 0..prec.max_terms {
        let lf = l as f64;
        c *= a * (g + lf) / (lf + 1.0);
        let term = c * u / (u + lf + 1.0);
        s.add(term);
        // successive ratios are bounded by alpha max(1, (gamma + l)/(l + 1))
        let q = a * ((g + lf + 1.0) / (lf + 2.0)).max(1.0);
        if q < 1.0 && term * q / (1.0 - q) < prec.rel_tol * s.value() {
            return Ok(s.value());
        }
    }
    Err(Error::NonConvergence {
        what: "F_j series",
        terms: prec.max_terms,
    })
}

/// G_k = 1 / (F_1 F_2 ... F_k).
pub fn g_k(params: &Params, k: usize) -> Result<f64> {
    let seq = HypergeometricSequence::new(params)?;
    let mut s = NeumaierSum::new();
    for l in 1..=k {
        s.add(seq.value(l as f64).ln());
    }
    Ok((-s.value()).exp())
}

/// ln of (1-alpha)^(-gamma t) prod_{j<=J} F_{j-t}/F_j plus a fitted tail, at J and at J/2.
fn ln_g_pair(seq: &HypergeometricSequence, t: Complex64, big_j: usize) -> (Complex64, Complex64) {
    let g = seq.params().gamma();
    let lead = -t * g * seq.params().ln_one_minus_alpha();
    let logs: Vec<Complex64> = (1..=big_j).map(|j| seq.ln_ratio_complex(j as f64, t)).collect();
    let estimate = |jj: usize| {
        let mut s = ComplexSum::new();
        for x in &logs[..jj] {
            s.add(*x);
        }
        lead + s.value() + fitted_tail(&logs, jj)
    };
    (estimate(big_j), estimate(big_j / 2))
}

/// Least-squares fit of sum_{k=2..5} c_k j^-k over the last decade j in [J/10, J],
/// summed from J+1 to infinity.
fn fitted_tail(logs: &[Complex64], big_j: usize) -> Complex64 {
    const K: usize = 4;
    let lo = (big_j / 10).max(1);
    let jj = big_j as f64;
    // basis (J/j)^(k+2), well scaled on the window
    let mut m = [[0.0f64; K]; K];
    let mut rhs = [Complex64::new(0.0, 0.0); K];
    for j in lo..=big_j {
        let r = jj / j as f64;
        let mut phi = [0.0; K];
        let mut v = r * r;
        for p in phi.iter_mut() {
            *p = v;
            v *= r;
        }
        for a in 0..K {
            for b in 0..K {
                m[a][b] += phi[a] * phi[b];
            }
            rhs[a] += logs[j - 1] * phi[a];
        }
    }
    let c = solve_small(m, rhs);
    let mut tail = Complex64::new(0.0, 0.0);
    for (k, ck) in c.iter().enumerate() {
        let p = (k + 2) as f64;
        tail += ck * jj.powf(p) * hurwitz_tail(p, big_j);
    }
    tail
}

/// Gaussian elimination with partial pivoting on a small dense system.
fn solve_small<const K: usize>(mut m: [[f64; K]; K], mut b: [Complex64; K]) -> [Complex64; K] {
    for col in 0..K {
        let piv = (col..K).max_by(|&x, &y| m[x][col].abs().total_cmp(&m[y][col].abs())).unwrap();
        m.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..K {
            let f = m[row][col] / m[col][col];
            let pivot_row = m[col];
            for (x, &pc) in m[row][col..].iter_mut().zip(&pivot_row[col..]) {
                *x -= f * pc;
            }
            let bc = b[col];
            b[row] -= bc * f;
        }
    }
    let mut x = [Complex64::new(0.0, 0.0); K];
    for row in (0..K).rev() {
        let mut acc = b[row];
        for k in row + 1..K {
            acc -= x[k] * m[row][k];
        }
        x[row] = acc / m[row][row];
    }
    x
}

fn check_truncation(big_j: usize) -> Result<()> {
    if big_j < 1000 {
        return Err(Error::Domain(format!("truncation J = {big_j} is below 1000")));
    }
    Ok(())
}

/// ln G(-t) = ln[(1-alpha)^(-gamma t) prod_j F_{j-t}/F_j] for complex t with Re t < 1.
/// Returns the values at J and at J/2.
pub fn ln_g_interpolated_complex(
    seq: &HypergeometricSequence,
    t: Complex64,
    big_j: usize,
) -> Result<(Complex64, Complex64)> {
    check_truncation(big_j)?;
    if t.re >= 1.0 {
        return Err(Error::Domain(format!("interpolation needs Re t < 1, got {t}")));
    }
    Ok(ln_g_pair(seq, t, big_j))
}

/// G(-t) = (1-alpha)^(-gamma t) prod_{j>=1} F_{j-t}/F_j for real t < 1; equals G_k at t = -k.
pub fn g_interpolated(params: &Params, t: f64, big_j: usize) -> Result<f64> {
    check_truncation(big_j)?;
    if t >= 1.0 {
        return Err(Error::Domain(format!("interpolation needs t < 1, got {t}")));
    }
    if t == 0.0 {
        return Ok(1.0);
    }
    let seq = HypergeometricSequence::new(params)?;
    let (full, half) = ln_g_pair(&seq, Complex64::new(t, 0.0), big_j);
    if (full.re - half.re).abs() > 1e-4 {
        return Err(Error::NonConvergence {
            what: "interpolated product tail",
            terms: big_j,
        });
    }
    Ok(full.re.exp())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MellinReport {
    pub value: f64,
    /// |H(s) - gamma/(1+gamma-s) F_{(1+gamma-s)/gamma} H(s-gamma)| / |H(s)|
    pub functional_residual: f64,
}

/// H(s) = Gamma(1 + t) G(t), t = (1-s)/gamma, together with the residual of its
/// functional equation.
pub fn mellin_transform(params: &Params, s: f64, big_j: usize) -> Result<MellinReport> {
    let g = params.gamma();
    if s >= 1.0 + g {
        return Err(Error::Domain(format!("Mellin transform needs s < 1 + gamma, got {s}")));
    }
    let t = (1.0 - s) / g;
    if t > big_j as f64 / 10.0 {
        return Err(Error::Domain(format!("s = {s} is too far left for J = {big_j}")));
    }
    let h = |tt: f64| -> Result<f64> { Ok(gamma_real(1.0 + tt)? * g_interpolated(params, -tt, big_j)?) };
    let hs = h(t)?;
    let hs_shift = h(t + 1.0)?;
    let f = gauss_2f1(g, 1.0 + g - s, 2.0 + g - s, params.alpha(), &Precision::machine())?;
    let resid = (hs - g / (1.0 + g - s) * f * hs_shift).abs() / hs.abs();
    Ok(MellinReport {
        value: hs,
        functional_residual: resid,
    })
}
