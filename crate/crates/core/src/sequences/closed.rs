//! Explicit low-order polynomials for t, f and a (n = 1..=6).

use super::{t_table, CoeffTable, Family};
use crate::error::{Error, Result};
use crate::specfun::Params;

fn check_n(n: usize) -> Result<()> {
    if !(1..=6).contains(&n) {
        return Err(Error::Domain(format!("closed forms exist for n = 1..=6, got {n}")));
    }
    Ok(())
}

fn get(t: &CoeffTable, fam: Family, n: usize) -> Result<f64> {
    if t.family() != fam {
        return Err(Error::Domain(format!("expected {fam:?} table")));
    }
    t.get(n).ok_or_else(|| Error::Domain(format!("table has no entry {n}")))
}

/// t_n as a polynomial in alpha and gamma over (1-alpha)^n gamma^(n-1).
pub fn t_closed(params: &Params, n: usize) -> Result<f64> {
    check_n(n)?;
    let a = params.alpha();
    let g = params.gamma();
    let (a2, a3, a4, a5, a6) = (a * a, a.powi(3), a.powi(4), a.powi(5), a.powi(6));
    let (g2, g3, g4, g5) = (g * g, g.powi(3), g.powi(4), g.powi(5));
    let num = match n {
        1 => -a,
        2 => a2 * g + a,
        3 => -(a3 * g2 + a2 * (3.0 * g + 1.0) + a),
        4 => a4 * g3 + a3 * (6.0 * g2 + 4.0 * g + 1.0) + a2 * (7.0 * g + 4.0) + a,
        5 => -(a5 * g4
            + a4 * (10.0 * g3 + 10.0 * g2 + 5.0 * g + 1.0)
            + a3 * (25.0 * g2 + 30.0 * g + 11.0)
            + a2 * (15.0 * g + 11.0)
            + a),
        _ => {
            a6 * g5
                + a5 * (15.0 * g4 + 20.0 * g3 + 15.0 * g2 + 6.0 * g + 1.0)
                + a4 * (65.0 * g3 + 120.0 * g2 + 91.0 * g + 26.0)
                + a3 * (90.0 * g2 + 146.0 * g + 66.0)
                + a2 * (31.0 * g + 26.0)
                + a
        }
    };
    Ok(num / ((1.0 - a).powi(n as i32) * g.powi(n as i32 - 1)))
}

/// f_n as a polynomial in alpha and gamma over (1-alpha)^n gamma^(n-1).
pub fn f_closed(params: &Params, n: usize) -> Result<f64> {
    check_n(n)?;
    let a = params.alpha();
    let g = params.gamma();
    let (a2, a3, a4) = (a * a, a.powi(3), a.powi(4));
    let (g2, g3, g4) = (g * g, g.powi(3), g.powi(4));
    let num = match n {
        1 => a,
        2 => -a,
        3 => a * (a * (2.0 * g + 1.0) + 1.0),
        4 => -a * (a2 * (3.0 * g2 + 3.0 * g + 1.0) + a * (5.0 * g + 4.0) + 1.0),
        5 => a
            * (a3 * (4.0 * g3 + 6.0 * g2 + 4.0 * g + 1.0)
                + a2 * (16.0 * g2 + 25.0 * g + 11.0)
                + a * (13.0 * g + 11.0)
                + 1.0),
        _ => -a
            * (a4 * (5.0 * g4 + 10.0 * g3 + 10.0 * g2 + 5.0 * g + 1.0)
                + a3 * (33.0 * g3 + 83.0 * g2 + 78.0 * g + 26.0)
                + a2 * (65.0 * g2 + 129.0 * g + 66.0)
                + 2.0 * a * (14.0 * g + 13.0)
                + 1.0),
    };
    Ok(num / ((1.0 - a).powi(n as i32) * g.powi(n as i32 - 1)))
}

/// f_n in terms of t_1..t_n.
pub fn f_from_t_polynomial(t: &CoeffTable, n: usize) -> Result<f64> {
    check_n(n)?;
    let mut v = [0.0; 7];
    for (k, x) in v.iter_mut().enumerate().take(n + 1).skip(1) {
        *x = get(t, Family::T, k)?;
    }
    let [_, t1, t2, t3, t4, t5, t6] = v;
    Ok(match n {
        1 => -t1,
        2 => t1 * t1 - t2,
        3 => t1 * t2 - t3,
        4 => t1.powi(4) - 2.0 * t2 * t1 * t1 + t3 * t1 + t2 * t2 - t4,
        5 => t2 * t1.powi(3) - t3 * t1 * t1 - t2 * t2 * t1 + t4 * t1 + t2 * t3 - t5,
        _ => {
            t3 * t1.powi(3) + t2 * t2 * t1 * t1 - t4 * t1 * t1 - 3.0 * t2 * t3 * t1 + t5 * t1 + t3 * t3 + t2 * t4
                - t6
        }
    })
}

/// f_n from t_n computed by the Stirling sum.
pub fn f_from_t_closed(params: &Params, n: usize) -> Result<f64> {
    check_n(n)?;
    f_from_t_polynomial(&t_table(params, 6), n)
}

/// a_n in terms of t_1..t_n.
pub fn a_from_t_closed(t: &CoeffTable, n: usize) -> Result<f64> {
    check_n(n)?;
    let mut v = [0.0; 7];
    for (k, x) in v.iter_mut().enumerate().take(n + 1).skip(1) {
        *x = get(t, Family::T, k)?;
    }
    let [_, t1, t2, t3, t4, t5, t6] = v;
    Ok(match n {
        1 => -t1,
        2 => -t2 + t1 * t1,
        3 => -t3 + 2.0 * t2 * t1 - t1.powi(3),
        4 => -t4 + 2.0 * t3 * t1 + t2 * t2 - 3.0 * t2 * t1 * t1 + t1.powi(4),
        5 => {
            -t5 + 2.0 * t4 * t1 + 2.0 * t3 * t2 - 3.0 * t3 * t1 * t1 - 3.0 * t2 * t2 * t1 + 4.0 * t2 * t1.powi(3)
                - t1.powi(5)
        }
        _ => {
            -t6 + 2.0 * t5 * t1 + 2.0 * t4 * t2 - 3.0 * t4 * t1 * t1 + t3 * t3 - 6.0 * t3 * t2 * t1
                + 4.0 * t3 * t1.powi(3)
                - t2.powi(3)
                + 6.0 * t2 * t2 * t1 * t1
                - 5.0 * t2 * t1.powi(4)
                + t1.powi(6)
        }
    })
}

/// f_n in terms of a_1..a_n.
pub fn f_from_a_closed(a: &CoeffTable, n: usize) -> Result<f64> {
    check_n(n)?;
    let mut v = [0.0; 7];
    for (k, x) in v.iter_mut().enumerate().take(n + 1).skip(1) {
        *x = get(a, Family::A, k)?;
    }
    let [_, a1, a2, a3, a4, a5, a6] = v;
    Ok(match n {
        1 => a1,
        2 => a2,
        3 => a3 - a2 * a1,
        4 => a4 - a3 * a1 + a2 * a1 * a1,
        5 => a5 - a4 * a1 - a3 * a2 + a3 * a1 * a1 + a2 * a2 * a1 - a1.powi(3) * a2,
        _ => {
            a2 * a1.powi(4) - a3 * a1.powi(3) - a2 * a2 * a1 * a1 + a4 * a1 * a1 + a2 * a3 * a1 - a5 * a1 - a2 * a4
                + a6
        }
    })
}

/// a_n in terms of f_1..f_n.
pub fn a_from_f_closed(f: &CoeffTable, n: usize) -> Result<f64> {
    check_n(n)?;
    let mut v = [0.0; 7];
    for (k, x) in v.iter_mut().enumerate().take(n + 1).skip(1) {
        *x = get(f, Family::F, k)?;
    }
    let [_, f1, f2, f3, f4, f5, f6] = v;
    Ok(match n {
        1 => f1,
        2 => f2,
        3 => f3 + f1 * f2,
        4 => f4 + f1 * f3,
        5 => f5 + f1 * f4 + f2 * f3,
        _ => f6 + f1 * f5 + f2 * f4 + f1 * f2 * f3,
    })
}
