//! Shared fixtures for the benchmarks.

use alphasun_core::Params;

/// Parameter points covering small and large gamma.
pub const POINTS: [(f64, f64); 3] = [(0.3, 1.0), (0.5, 0.5), (0.7, 4.0)];

pub fn params(i: usize) -> Params {
    let (a, g) = POINTS[i];
    Params::new(a, g).expect("fixture parameters are valid")
}

/// Evenly spaced positive abscissae on [lo, hi].
pub fn x_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2);
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}
