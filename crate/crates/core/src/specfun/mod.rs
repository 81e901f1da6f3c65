//! Complex special functions: log-gamma, Gauss `₂F₁`, Kummer `₁F₁`,
//! Tricomi `U` at large argument, and associated Laguerre polynomials.

mod gamma;
mod hyp2f1;
mod kummer;
mod laguerre;

use num_complex::Complex64;

pub use gamma::{gamma, gamma_ratio, log_gamma, rgamma, sin_pi};
pub use hyp2f1::{hyp2f1, hyp2f1_inverse, hyp2f1_pfaff, hyp2f1_series};
pub use kummer::{
    hyp1f1, hyp1f1_asymptotic, hyp1f1_series, hyp_u_asymptotic, hyp_u_from_kummer,
    KUMMER_ASYMPTOTIC_SWITCH,
};
pub use laguerre::assoc_laguerre;

/// Hard cap on power-series terms.
pub const SERIES_MAX_TERMS: usize = 10_000;

/// Series stop rule: three consecutive terms below `1e-16` of the partial sum.
pub(crate) fn series_converged(term: Complex64, sum: Complex64, small: &mut u32) -> bool {
    if term.norm() < 1e-16 * sum.norm() {
        *small += 1;
    } else {
        *small = 0;
    }
    *small >= 3
}
