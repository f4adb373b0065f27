//! Numerics for the generalised sun-tree fixed point: special functions, the
//! coefficient families t, a, d, f, rigorous bounds and asymptotic estimates
//! for t_n, and the limiting density with its Mellin-Barnes representation.

// Series coefficients are kept at full published precision, and
// `!(x > 0.0)` guards are meant to reject NaN too.
#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
mod dd;
pub mod density;
pub mod error;
pub mod quad;
pub mod sequences;
pub mod specfun;
pub mod sum;
pub mod verify;

pub use error::{Error, Result};
pub use sequences::{CoeffTable, Family, Method};
pub use specfun::{Params, Precision};
