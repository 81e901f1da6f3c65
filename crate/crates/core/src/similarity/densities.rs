use num_complex::Complex64;

use super::{eta, Superpotential, SwansonParams};
use crate::error::Result;
use crate::grid::GridFunction;

/// `χ = ψ* η ψ`, returned as a grid function with zero imaginary part.
pub fn charge_density<S: Superpotential + ?Sized>(
    params: &SwansonParams,
    sp: &S,
    psi: &GridFunction,
) -> Result<GridFunction> {
    let mut out = Vec::with_capacity(psi.n_points());
    for (i, v) in psi.values().iter().enumerate() {
        out.push(Complex64::new(eta(params, sp, psi.x(i))? * v.norm_sqr(), 0.0));
    }
    psi.with_values(out)
}

/// `j̄ = i η (∂ψ*/∂x ψ - ψ* ∂ψ/∂x) = 2 η Im(ψ* ψ')` at interior nodes;
/// zero at the stencil margins.
pub fn current_density<S: Superpotential + ?Sized>(
    params: &SwansonParams,
    sp: &S,
    psi: &GridFunction,
) -> Result<GridFunction> {
    psi.require_stencil()?;
    let mut out = vec![Complex64::new(0.0, 0.0); psi.n_points()];
    for i in psi.interior() {
        let j = 2.0 * (psi.values()[i].conj() * psi.d1(i)).im;
        out[i] = Complex64::new(eta(params, sp, psi.x(i))? * j, 0.0);
    }
    psi.with_values(out)
}

/// Trapezoid approximation of `⟨ψ_m|η|ψ_n⟩ = ∫ ψ_m* η ψ_n dx`.
pub fn eta_inner_product<S: Superpotential + ?Sized>(
    params: &SwansonParams,
    sp: &S,
    psi_m: &GridFunction,
    psi_n: &GridFunction,
) -> Result<Complex64> {
    psi_m.check_same_grid(psi_n)?;
    let mut integrand = Vec::with_capacity(psi_m.n_points());
    for (i, (a, b)) in psi_m.values().iter().zip(psi_n.values()).enumerate() {
        integrand.push(a.conj() * b * eta(params, sp, psi_m.x(i))?);
    }
    Ok(psi_m.with_values(integrand)?.trapezoid())
}
