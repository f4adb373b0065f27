//! F_j, the products G built from it, the small-x constant of the density,
//! Gamma-product identities, and the density itself: first- and second-order
//! approximations, the small-x form, and a Mellin-Barnes quadrature.

mod approx;
mod constant;
mod fseq;
mod gamma_products;
mod mellin_barnes;

pub use approx::{
    density_first_order, density_second_order, density_second_order_laplace, density_second_order_series,
    density_smallx_second, ln_density_first_order, ln_density_second_order, ln_density_smallx_second,
    second_order_beta, DensityCurve, DensityOrder,
};
pub use constant::{first_order_constant, second_order_constant, simon_constant, ConstantReport};
pub use fseq::{
    big_f, g_interpolated, g_k, ln_g_interpolated_complex, mellin_transform, HypergeometricSequence, MellinReport,
};
pub use gamma_products::{
    gamma_product_identity, ppe_decay_slope, ppe_truncation_residual, truncated_ppe_gamma_product,
    truncated_ppe_gamma_product_complex,
    GammaProductReport, GammaRatioSpec,
};
pub use mellin_barnes::{density_mellin_barnes, mellin_barnes_band, MbOptions};
