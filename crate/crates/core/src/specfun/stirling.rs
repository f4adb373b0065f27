//! Stirling numbers of the second kind as exact big integers.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

/// Rows S(n, 0..=n) for n = 0..=n_max. Read-only once built, so it can be
/// shared across threads.
#[derive(Debug, Clone)]
pub struct StirlingTable {
    rows: Vec<Vec<BigUint>>,
}

impl StirlingTable {
    pub fn new(n_max: usize) -> Self {
        let mut t = Self {
            rows: vec![vec![BigUint::from(1u32)]],
        };
        t.extend_to(n_max);
        t
    }

    fn extend_to(&mut self, n_max: usize) {
        while self.rows.len() <= n_max {
            let prev = self.rows.last().unwrap();
            let n = self.rows.len();
            let mut row = vec![BigUint::zero(); n + 1];
            for k in 1..=n {
                let mut v = if k < prev.len() { &prev[k] * BigUint::from(k) } else { BigUint::zero() };
                v += &prev[k - 1];
                row[k] = v;
            }
            self.rows.push(row);
        }
    }

    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    /// S(n, k); zero when k > n. Panics if n exceeds the table.
    pub fn get(&self, n: usize, k: usize) -> BigUint {
        self.rows[n].get(k).cloned().unwrap_or_default()
    }

    pub fn row(&self, n: usize) -> &[BigUint] {
        &self.rows[n]
    }

    /// S(n, k) rounded to f64 (may be +inf beyond the f64 range).
    pub fn to_f64(&self, n: usize, k: usize) -> f64 {
        self.rows[n].get(k).map(big_to_f64).unwrap_or(0.0)
    }

    /// ln S(n, k), -inf when S(n, k) = 0. Safe for any size.
    pub fn ln(&self, n: usize, k: usize) -> f64 {
        self.rows[n].get(k).map(big_ln).unwrap_or(f64::NEG_INFINITY)
    }
}

pub(crate) fn big_to_f64(x: &BigUint) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}

pub(crate) fn big_ln(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        return big_to_f64(x).ln();
    }
    let shift = bits - 64;
    big_to_f64(&(x >> shift)).ln() + shift as f64 * std::f64::consts::LN_2
}

fn cache() -> &'static Mutex<StirlingTable> {
    static CACHE: OnceLock<Mutex<StirlingTable>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(StirlingTable::new(32)))
}

/// S(n, k) from a process-wide, lock-protected memo table.
pub fn stirling2(n: usize, k: usize) -> BigUint {
    let mut t = cache().lock().unwrap_or_else(|e| e.into_inner());
    t.extend_to(n);
    t.get(n, k)
}

pub fn stirling2_f64(n: usize, k: usize) -> f64 {
    big_to_f64(&stirling2(n, k))
}
