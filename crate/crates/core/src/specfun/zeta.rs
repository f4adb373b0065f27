//! Riemann zeta for real s > 1 and power-sum tails.

/// sum_{j > n} j^-p for p > 1, by Euler-Maclaurin.
pub fn hurwitz_tail(p: f64, n: usize) -> f64 {
    assert!(p > 1.0);
    // direct terms until the base is big enough for a short expansion
    let mut acc = 0.0;
    let mut m = n + 1;
    while m < 50 {
        acc += (m as f64).powf(-p);
        m += 1;
    }
    let a = m as f64;
    // sum_{j >= a} j^-p
    let tail = a.powf(1.0 - p) / (p - 1.0) + 0.5 * a.powf(-p) + p / 12.0 * a.powf(-p - 1.0)
        - p * (p + 1.0) * (p + 2.0) / 720.0 * a.powf(-p - 3.0)
        + p * (p + 1.0) * (p + 2.0) * (p + 3.0) * (p + 4.0) / 30240.0 * a.powf(-p - 5.0);
    acc + tail
}

/// zeta(s) for real s > 1.
pub fn zeta(s: f64) -> f64 {
    assert!(s > 1.0, "zeta needs s > 1, got {s}");
    if s > 60.0 {
        return 1.0 + 2f64.powf(-s) + 3f64.powf(-s);
    }
    1.0 + hurwitz_tail(s, 1)
}
