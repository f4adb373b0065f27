//! Exact rational recomputation of the coefficient families at rational
//! parameters, used as an extended-precision oracle.

#![allow(clippy::needless_range_loop)]

use alphasun_core::sequences::{a_from_t, d_from_t, f_from_divisors, f_ppe_recursive, t_recurrence, t_stirling, t_table};
use alphasun_core::Params;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// t_0..t_nmax from (-1)^n g^-n sum_i S(n,i) (g)_i r^i with exact Stirling numbers.
fn exact_t(g: &BigRational, r: &BigRational, n_max: usize) -> Vec<BigRational> {
    let mut s = vec![vec![BigInt::zero(); n_max + 1]; n_max + 1];
    s[0][0] = BigInt::one();
    for n in 1..=n_max {
        for k in 1..=n {
            s[n][k] = BigInt::from(k) * &s[n - 1][k] + &s[n - 1][k - 1];
        }
    }
    let mut poch = vec![BigRational::one()];
    for i in 0..n_max {
        let next = &poch[i] * (g + BigRational::from_integer(BigInt::from(i)));
        poch.push(next);
    }
    (0..=n_max)
        .map(|n| {
            let mut acc = BigRational::zero();
            let mut rp = BigRational::one();
            for i in 0..=n {
                acc += BigRational::from_integer(s[n][i].clone()) * &poch[i] * &rp;
                rp *= r;
            }
            let sign = if n % 2 == 0 { BigRational::one() } else { -BigRational::one() };
            sign * acc / g.pow(n as i32)
        })
        .collect()
}

fn exact_d(t: &[BigRational]) -> Vec<BigRational> {
    let mut d = vec![BigRational::zero(); t.len()];
    for m in 1..t.len() {
        let mut s = -BigRational::from_integer(BigInt::from(m)) * &t[m];
        for k in 1..m {
            s -= &d[k] * &t[m - k];
        }
        d[m] = s;
    }
    d
}

fn exact_f(d: &[BigRational]) -> Vec<BigRational> {
    let mut f = vec![BigRational::zero(); d.len()];
    for n in 1..d.len() {
        let mut v = &d[n] / BigRational::from_integer(BigInt::from(n));
        for e in 2..=n {
            if n % e == 0 {
                let base = -f[n / e].clone();
                v += base.pow(e as i32) / BigRational::from_integer(BigInt::from(e));
            }
        }
        f[n] = v;
    }
    f
}

fn close(x: f64, exact: &BigRational, tol: f64) -> bool {
    let e = exact.to_f64().unwrap();
    if exact.is_zero() {
        return x == 0.0;
    }
    ((x - e) / e).abs() < tol
}

#[test]
fn t_matches_rational_arithmetic() {
    // alpha = 3/10, gamma = 3/2: r = 3/7
    let p = Params::new(0.3, 1.5).unwrap();
    let t = exact_t(&q(3, 2), &q(3, 7), 40);
    let rec = t_recurrence(&p, 30);
    for n in 0..=40 {
        assert!(close(t_stirling(&p, n), &t[n], 1e-13), "n = {n}");
        if n <= 30 {
            assert!(close(rec.get(n).unwrap(), &t[n], 1e-12), "recurrence n = {n}");
        }
    }
}

#[test]
fn d_and_f_match_rational_arithmetic() {
    let p = Params::new(0.3, 1.0).unwrap();
    let t = exact_t(&q(1, 1), &q(3, 7), 60);
    let d = exact_d(&t);
    let f = exact_f(&d);
    let dt = d_from_t(&t_table(&p, 60)).unwrap();
    let fd = f_from_divisors(&dt, 60).unwrap();
    let fr = f_ppe_recursive(&p, 20).unwrap();
    for n in 1..=60 {
        assert!(close(dt.get(n).unwrap(), &d[n], 1e-10), "d n = {n}");
        assert!(close(fd.get(n).unwrap(), &f[n], 1e-6), "f n = {n}");
        if n <= 20 {
            assert!(close(fr.get(n).unwrap(), &f[n], 1e-9), "f recursive n = {n}");
        }
    }
}

#[test]
fn a_matches_rational_reciprocal() {
    let p = Params::new(0.5, 2.0).unwrap();
    let t = exact_t(&q(2, 1), &q(1, 1), 25);
    let mut a = vec![BigRational::one()];
    for m in 1..t.len() {
        let mut s = BigRational::zero();
        for k in 1..=m {
            s -= &t[k] * &a[m - k];
        }
        a.push(s);
    }
    let at = a_from_t(&t_table(&p, 25)).unwrap();
    for n in 1..=25 {
        assert!(close(at.get(n).unwrap(), &a[n], 1e-11), "a n = {n}: {} vs {}", at.get(n).unwrap(), a[n].abs());
    }
}
