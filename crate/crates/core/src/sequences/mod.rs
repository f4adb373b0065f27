//! The coefficient families t, a, d and f and the routes between them.
//!
//! Tables may carry a log scale s: the stored entry for index n is the true
//! coefficient times e^(n s). All four families are graded (replacing t_n by
//! t_n lambda^n multiplies every a_n, d_n, f_n by lambda^n), so convolutions
//! and divisor sums act on stored values directly and large n never overflow.

mod closed;
mod convolution;
mod ppe;
mod t;

pub use closed::{
    a_from_f_closed, a_from_t_closed, f_closed, f_from_a_closed, f_from_t_closed, f_from_t_polynomial,
    t_closed,
};
pub use convolution::{
    a_from_f, a_from_t, a_multinomial, d_a_check, d_a_relative_check, d_from_t, reciprocal_series, t_from_a,
};
pub use ppe::{f_from_divisors, f_ppe_recursive, unified_relation_residual, StrictPartitions, PPE_M_MAX};
pub use t::{
    power_sum_identity_check, t_alpha_series, t_egf_check, t_loop_integral, t_recurrence, t_stirling,
    t_stirling_ln, t_table, t_table_scaled,
};

use crate::specfun::Params;

/// Which sequence a table holds. `T` starts at index 0, the rest at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    T,
    A,
    D,
    F,
}

impl Family {
    pub fn base(self) -> usize {
        match self {
            Family::T => 0,
            _ => 1,
        }
    }
}

/// How a table was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    StirlingSum,
    Recurrence,
    AlphaSeries,
    ToeplitzSolve,
    Convolution,
    PpeRecursion,
    DivisorFormula,
    ClosedPolynomial,
    Multinomial,
    Supplied,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoeffTable {
    params: Option<Params>,
    family: Family,
    method: Method,
    log_scale: f64,
    values: Vec<f64>,
}

impl CoeffTable {
    /// Wrap stored values starting at the family's base index.
    pub fn new(family: Family, method: Method, params: Option<Params>, log_scale: f64, values: Vec<f64>) -> Self {
        Self {
            params,
            family,
            method,
            log_scale,
            values,
        }
    }

    /// A user supplied, unscaled sequence (e.g. a_1..a_N).
    pub fn from_values(family: Family, values: Vec<f64>) -> Self {
        Self::new(family, Method::Supplied, None, 0.0, values)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn params(&self) -> Option<Params> {
        self.params
    }

    pub fn log_scale(&self) -> f64 {
        self.log_scale
    }

    pub fn base(&self) -> usize {
        self.family.base()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest index held.
    pub fn n_max(&self) -> usize {
        (self.base() + self.values.len()).saturating_sub(1)
    }

    /// Stored (scaled) entries, starting at `base()`.
    pub fn scaled_values(&self) -> &[f64] {
        &self.values
    }

    pub fn scaled(&self, n: usize) -> Option<f64> {
        n.checked_sub(self.base()).and_then(|i| self.values.get(i).copied())
    }

    /// The true coefficient at index n.
    pub fn get(&self, n: usize) -> Option<f64> {
        self.scaled(n).map(|v| unscale(v, n, self.log_scale))
    }

    /// ln |coefficient| at index n, finite even when the value itself overflows.
    pub fn ln_abs(&self, n: usize) -> Option<f64> {
        self.scaled(n).map(|v| v.abs().ln() - n as f64 * self.log_scale)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        let b = self.base();
        let s = self.log_scale;
        self.values.iter().enumerate().map(move |(i, &v)| (b + i, unscale(v, b + i, s)))
    }

    /// True coefficients as a vector starting at `base()`.
    pub fn to_vec(&self) -> Vec<f64> {
        self.iter().map(|(_, v)| v).collect()
    }

    /// The same table re-expressed with another log scale.
    pub fn rescaled(&self, log_scale: f64) -> Self {
        let b = self.base();
        let ds = log_scale - self.log_scale;
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(i, &v)| if v == 0.0 { 0.0 } else { v * ((b + i) as f64 * ds).exp() })
            .collect();
        Self {
            log_scale,
            values,
            ..self.clone()
        }
    }

    /// Stored values indexed from 0. For the a family index 0 holds a_0 = 1,
    /// for d it holds 0; f has no index 0 and is returned with f_0 = 1.
    pub(crate) fn padded(&self) -> Vec<f64> {
        match self.family {
            Family::T => self.values.clone(),
            Family::A | Family::F => std::iter::once(1.0).chain(self.values.iter().copied()).collect(),
            Family::D => std::iter::once(0.0).chain(self.values.iter().copied()).collect(),
        }
    }
}

#[inline]
fn unscale(v: f64, n: usize, s: f64) -> f64 {
    if s == 0.0 || v == 0.0 {
        v
    } else {
        v * (-(n as f64) * s).exp()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rescaling_round_trip() {
        let t = CoeffTable::from_values(Family::A, vec![1.0, -2.0, 4.0]);
        let s = t.rescaled(0.7);
        assert_eq!(s.base(), 1);
        assert!((s.scaled(2).unwrap() - -2.0 * 1.4f64.exp()).abs() < 1e-15);
        for (n, v) in s.iter() {
            assert!((v - t.get(n).unwrap()).abs() < 1e-15);
        }
        assert_eq!(t.n_max(), 3);
        assert_eq!(t.get(0), None);
    }
}
