//! Power-product expansion coefficients f_n: prod_n (1 + f_n x^n) = 1 / sum_n t_n x^n.

use super::{t_table, CoeffTable, Family, Method};
use crate::error::{Error, Result};
use crate::specfun::Params;
use crate::sum::NeumaierSum;

/// Largest order accepted by the partition-enumerating recursion.
pub const PPE_M_MAX: usize = 64;

/// Strict partitions (distinct parts, listed in decreasing order) of every
/// k up to `n_max`, built by memoised descent on the largest part.
#[derive(Debug, Clone)]
pub struct StrictPartitions {
    lists: Vec<Vec<Vec<u8>>>,
}

impl StrictPartitions {
    pub fn new(n_max: usize) -> Self {
        assert!(n_max <= 255);
        let mut lists: Vec<Vec<Vec<u8>>> = vec![vec![vec![]]];
        for k in 1..=n_max {
            let mut here = Vec::new();
            for top in (1..=k).rev() {
                for rest in &lists[k - top] {
                    if rest.first().map_or(true, |&r| (r as usize) < top) {
                        let mut p = Vec::with_capacity(rest.len() + 1);
                        p.push(top as u8);
                        p.extend_from_slice(rest);
                        here.push(p);
                    }
                }
            }
            lists.push(here);
        }
        Self { lists }
    }

    pub fn of(&self, k: usize) -> &[Vec<u8>] {
        &self.lists[k]
    }

    pub fn count(&self, k: usize) -> usize {
        self.lists[k].len()
    }
}

/// f_1..f_mmax from an arbitrary t table via
/// f_{m+1} = -t_{m+1} - sum_n t_n sum_{strict partitions of m+1-n, parts <= m} prod f.
pub fn f_ppe_from_t(t: &CoeffTable, m_max: usize) -> Result<CoeffTable> {
    if t.family() != Family::T {
        return Err(Error::Domain("PPE recursion needs a t table".into()));
    }
    if m_max > PPE_M_MAX {
        return Err(Error::Complexity(format!(
            "strict-partition recursion is limited to m <= {PPE_M_MAX}, got {m_max}"
        )));
    }
    if t.n_max() < m_max {
        return Err(Error::Domain(format!("t table stops at {}, need {m_max}", t.n_max())));
    }
    let tv = t.padded();
    let parts = StrictPartitions::new(m_max);
    let mut f = vec![1.0; m_max + 1]; // f[0] unused
    // psum[k] = sum over strict partitions of k of prod f, once f_1..f_k are known
    let mut psum = vec![1.0; m_max + 1];
    let prod = |p: &[u8], f: &[f64]| p.iter().fold(1.0, |acc, &l| acc * f[l as usize]);
    for m in 0..m_max {
        let k = m + 1;
        let mut own = NeumaierSum::new();
        for p in parts.of(k) {
            if p.len() > 1 {
                own.add(prod(p, &f));
            }
        }
        let mut s = NeumaierSum::new();
        s.add(tv[k]);
        s.add(own.value());
        for n in 1..k {
            s.add(tv[n] * psum[k - n]);
        }
        f[k] = -s.value();
        psum[k] = own.value() + f[k];
    }
    Ok(CoeffTable::new(Family::F, Method::PpeRecursion, t.params(), t.log_scale(), f[1..].to_vec()))
}

/// f_1..f_mmax for the given parameters, m_max <= 64.
pub fn f_ppe_recursive(params: &Params, m_max: usize) -> Result<CoeffTable> {
    if m_max > PPE_M_MAX {
        return Err(Error::Complexity(format!(
            "strict-partition recursion is limited to m <= {PPE_M_MAX}, got {m_max}"
        )));
    }
    f_ppe_from_t(&t_table(params, m_max), m_max)
}

/// f_n = d_n / n + sum_{e | n, e > 1} (-f_{n/e})^e / e.
pub fn f_from_divisors(d: &CoeffTable, n_max: usize) -> Result<CoeffTable> {
    if d.family() != Family::D {
        return Err(Error::Domain("divisor formula needs a d table".into()));
    }
    if d.n_max() < n_max {
        return Err(Error::Domain(format!("d table stops at {}, need {n_max}", d.n_max())));
    }
    let dv = d.padded();
    let mut f = vec![0.0f64; n_max + 1];
    for n in 1..=n_max {
        let mut s = NeumaierSum::new();
        s.add(dv[n] / n as f64);
        for e in 2..=n {
            if n % e == 0 {
                s.add((-f[n / e]).powi(e as i32) / e as f64);
            }
        }
        f[n] = s.value();
    }
    Ok(CoeffTable::new(Family::F, Method::DivisorFormula, d.params(), d.log_scale(), f[1..].to_vec()))
}

/// max over k <= m + 1 of |sum_n t_n P_{k-n}| / sum_n |t_n P_{k-n}|, where P_j sums
/// prod f over the strict partitions of j. Zero when f and t belong together.
pub fn unified_relation_residual(t: &CoeffTable, f: &CoeffTable, m: usize) -> Result<f64> {
    if t.family() != Family::T || f.family() != Family::F {
        return Err(Error::Domain("need a t table and an f table".into()));
    }
    let k_max = m + 1;
    if t.n_max() < k_max || f.n_max() < k_max {
        return Err(Error::Domain(format!("tables must reach index {k_max}")));
    }
    let f = f.rescaled(t.log_scale());
    let fv = f.padded();
    let tv = t.padded();
    let parts = StrictPartitions::new(k_max);
    let psum: Vec<f64> = (0..=k_max)
        .map(|j| {
            let mut s = NeumaierSum::new();
            for p in parts.of(j) {
                s.add(p.iter().fold(1.0, |a, &l| a * fv[l as usize]));
            }
            s.value()
        })
        .collect();
    let mut worst = 0.0f64;
    for k in 1..=k_max {
        let mut s = NeumaierSum::new();
        let mut mag = 0.0;
        for n in 0..=k {
            let x = tv[n] * psum[k - n];
            s.add(x);
            mag += x.abs();
        }
        if mag > 0.0 {
            worst = worst.max(s.value().abs() / mag);
        }
    }
    Ok(worst)
}
