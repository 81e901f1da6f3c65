//! The generalized Swanson Hamiltonian `H = A†A + αA² + βA†²` and its
//! similarity map to a Hermitian Schrödinger operator.
//!
//! With `A = (D + W)/sqrt(1-α-β)` and `ρ = exp(-μ ∫W)`, the operator
//! `h = ρ H ρ⁻¹ = -D² + V` is Hermitian, where `V` is given by
//! [`riccati_map`]. States of `H` are `ψ = ρ⁻¹ φ` for states `φ` of `h`,
//! and the metric making `H` self-adjoint is the multiplicative `η = ρ²`.

mod densities;
mod operators;
mod params;
mod superpotential;

pub use densities::{charge_density, current_density, eta_inner_product};
pub use operators::{
    apply_hermitian, apply_swanson, apply_swanson_composed, eta, rho, rho_inverse, riccati_map,
    HermitianPotential, MAX_EXPONENT,
};
pub use params::SwansonParams;
pub(crate) use superpotential::ln_cosh;
pub use superpotential::{
    ExponentialSuperpotential, NumericSuperpotential, Superpotential, TanhSuperpotential,
};
