use num_complex::Complex64;

use super::{Superpotential, SwansonParams};
use crate::error::{Error, Result};
use crate::grid::GridFunction;

/// Largest exponent accepted before `exp` leaves the double range.
pub const MAX_EXPONENT: f64 = 709.0;

fn checked_exp(x: f64, exponent: f64) -> Result<f64> {
    if exponent.abs() > MAX_EXPONENT || !exponent.is_finite() {
        return Err(Error::Overflow { x, exponent });
    }
    Ok(exponent.exp())
}

/// `ρ⁻¹(x) = exp(+mu ∫₀ˣ W)`, so that `ψ = ρ⁻¹ φ`.
pub fn rho_inverse<S: Superpotential + ?Sized>(params: &SwansonParams, sp: &S, x: f64) -> Result<f64> {
    if params.mu() == 0.0 {
        return Ok(1.0);
    }
    checked_exp(x, params.mu() * sp.antiderivative(x))
}

/// `ρ(x) = exp(-mu ∫₀ˣ W)`.
pub fn rho<S: Superpotential + ?Sized>(params: &SwansonParams, sp: &S, x: f64) -> Result<f64> {
    if params.mu() == 0.0 {
        return Ok(1.0);
    }
    checked_exp(x, -params.mu() * sp.antiderivative(x))
}

/// The metric `η = ρ²`.
pub fn eta<S: Superpotential + ?Sized>(params: &SwansonParams, sp: &S, x: f64) -> Result<f64> {
    if params.mu() == 0.0 {
        return Ok(1.0);
    }
    checked_exp(x, -2.0 * params.mu() * sp.antiderivative(x))
}

/// The Hermitian partner potential
/// `V = (sqrt(1-4αβ)/(1-α-β) · W)² - W'/(1-α-β)`.
#[derive(Debug, Clone, Copy)]
pub struct HermitianPotential<S> {
    params: SwansonParams,
    sp: S,
}

impl<S: Superpotential> HermitianPotential<S> {
    pub fn value(&self, x: f64) -> f64 {
        let w = self.params.w_scale() * self.sp.value(x);
        w * w - self.sp.derivative(x) / self.params.one_minus_sum()
    }

    pub fn params(&self) -> &SwansonParams {
        &self.params
    }

    pub fn superpotential(&self) -> &S {
        &self.sp
    }
}

pub fn riccati_map<S: Superpotential>(params: &SwansonParams, sp: S) -> HermitianPotential<S> {
    HermitianPotential {
        params: *params,
        sp,
    }
}

/// `(-D² + V) f` at interior nodes; zero at the stencil margins.
pub fn apply_hermitian<V>(potential: V, f: &GridFunction) -> Result<GridFunction>
where
    V: Fn(f64) -> f64,
{
    f.require_stencil()?;
    let mut out = vec![Complex64::new(0.0, 0.0); f.n_points()];
    for i in f.interior() {
        out[i] = -f.d2(i) + f.values()[i] * potential(f.x(i));
    }
    f.with_values(out)
}

/// The non-Hermitian Swanson Hamiltonian acting on `f`, written out as
///
/// `Hf = -f'' + 2(α-β)/(1-α-β) W f' + (-1+α-β)/(1-α-β) W' f + (1+α+β)/(1-α-β) W² f`,
///
/// which is `A†A + αA² + βA†²` with `A = (D + W)/sqrt(1-α-β)`.
/// Values at the stencil margins are zero.
pub fn apply_swanson<S: Superpotential + ?Sized>(
    params: &SwansonParams,
    sp: &S,
    f: &GridFunction,
) -> Result<GridFunction> {
    f.require_stencil()?;
    let (a, b) = (params.alpha(), params.beta());
    let s = params.one_minus_sum();
    let c_first = 2.0 * (a - b) / s;
    let c_wprime = (-1.0 + a - b) / s;
    let c_wsq = (1.0 + a + b) / s;
    let mut out = vec![Complex64::new(0.0, 0.0); f.n_points()];
    for i in f.interior() {
        let x = f.x(i);
        let w = sp.value(x);
        let wp = sp.derivative(x);
        let v = f.values()[i];
        out[i] = -f.d2(i) + f.d1(i) * (c_first * w) + v * (c_wprime * wp + c_wsq * w * w);
    }
    f.with_values(out)
}

/// `H f` built by composing the first-order ladder operators as given,
/// `[(-D+W)(D+W) + α(D+W)² + β(-D+W)²] f / (1-α-β)`, each `D` a
/// five-point difference. Carries roughly twice the truncation error of
/// [`apply_swanson`] and twice the stencil margin; kept as a cross-check.
pub fn apply_swanson_composed<S: Superpotential + ?Sized>(
    params: &SwansonParams,
    sp: &S,
    f: &GridFunction,
) -> Result<GridFunction> {
    f.require_stencil()?;
    let n = f.n_points();
    let zero = Complex64::new(0.0, 0.0);
    let ladder = |g: &GridFunction, sign: f64| -> Result<GridFunction> {
        // (sign·D + W) g
        let mut out = vec![zero; n];
        for i in g.interior() {
            out[i] = g.d1(i) * sign + g.values()[i] * sp.value(g.x(i));
        }
        g.with_values(out)
    };
    let dw = ladder(f, 1.0)?;
    let mdw = ladder(f, -1.0)?;
    let a_dag_a = ladder(&dw, -1.0)?;
    let a_sq = ladder(&dw, 1.0)?;
    let a_dag_sq = ladder(&mdw, -1.0)?;
    let s = params.one_minus_sum();
    let mut out = vec![zero; n];
    let margin = 2 * crate::grid::STENCIL_MARGIN;
    for (i, o) in out.iter_mut().enumerate().take(n.saturating_sub(margin)).skip(margin) {
        *o = (a_dag_a.values()[i]
            + a_sq.values()[i] * params.alpha()
            + a_dag_sq.values()[i] * params.beta())
            / s;
    }
    f.with_values(out)
}
