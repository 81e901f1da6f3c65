use num_complex::Complex64;

use super::ModelSuperpotential;
use crate::error::{Error, Result};
use crate::grid::GridFunction;
use crate::similarity::{ln_cosh, rho_inverse, SwansonParams};
use crate::specfun::{assoc_laguerre, hyp1f1, hyp2f1, hyp_u_asymptotic};
use crate::error::SpecialFunctionError;

/// Below this `z` the Morse continuum uses the two Kummer functions; above
/// it, Tricomi's `U` when its expansion converges.
const MORSE_U_SWITCH: f64 = 20.0;

/// Beyond this `z` the Morse factor `e^{-z/2}` underflows.
const MORSE_Z_UNDERFLOW: f64 = 1400.0;

/// The unnormalized closed-form profile of a bound state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum BoundProfile {
    /// `cosh^{-λ₁}(σx) · F(-m, p; 1/2; -sinh²σx)` for even parity and
    /// `cosh^{-λ₁}(σx) sinh(σx) · F(-m, p; 3/2; -sinh²σx)` for odd parity.
    PoschlTeller {
        lambda1: f64,
        sigma: f64,
        m: usize,
        p: f64,
        odd: bool,
    },
    /// `e^{-z/2} z^s L_n^{2s}(z)` with `z = 2b₁e^{-σx}`.
    Morse {
        n: usize,
        s: f64,
        two_b1: f64,
        sigma: f64,
    },
}

/// `F(-m, p; c; z)` as a finite polynomial.
fn terminating_2f1(m: usize, p: f64, c: f64, z: f64) -> f64 {
    let mut term = 1.0;
    let mut sum = 1.0;
    for j in 0..m {
        let jf = j as f64;
        term *= (jf - m as f64) * (p + jf) / ((c + jf) * (jf + 1.0)) * z;
        sum += term;
    }
    sum
}

impl BoundProfile {
    pub(crate) fn eval(&self, x: f64) -> f64 {
        match *self {
            Self::PoschlTeller {
                lambda1,
                sigma,
                m,
                p,
                odd,
            } => {
                let t = sigma * x;
                let sh = t.sinh();
                let envelope = (-lambda1 * ln_cosh(t)).exp();
                if odd {
                    envelope * sh * terminating_2f1(m, p, 1.5, -sh * sh)
                } else {
                    envelope * terminating_2f1(m, p, 0.5, -sh * sh)
                }
            }
            Self::Morse { n, s, two_b1, sigma } => {
                let ln_z = two_b1.ln() - sigma * x;
                let z = ln_z.exp();
                if z > MORSE_Z_UNDERFLOW {
                    return 0.0;
                }
                (-0.5 * z + s * ln_z).exp() * assoc_laguerre(n, 2.0 * s, z)
            }
        }
    }
}

/// A normalizable eigenstate `φ_n` of `h` with its image `ψ_n = ρ⁻¹φ_n`,
/// an eigenstate of `H` with the same eigenvalue.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundState {
    pub(crate) n: usize,
    pub(crate) epsilon: f64,
    pub(crate) energy: f64,
    pub(crate) excitation: f64,
    pub(crate) norm: f64,
    pub(crate) profile: BoundProfile,
    pub(crate) params: SwansonParams,
    pub(crate) sp: ModelSuperpotential,
}

impl BoundState {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `ε_n = E_n - V∞`.
    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// The eigenvalue `E_n` of `h` and `H`.
    pub fn energy(&self) -> f64 {
        self.energy
    }

    /// `E_n - E_0`, zero for the ground state.
    pub fn excitation(&self) -> f64 {
        self.excitation
    }

    /// `φ_n(x)`, normalized to `∫|φ_n|² = 1`.
    pub fn phi(&self, x: f64) -> Complex64 {
        Complex64::new(self.norm * self.profile.eval(x), 0.0)
    }

    /// `ψ_n(x) = ρ⁻¹(x) φ_n(x)`.
    pub fn psi(&self, x: f64) -> Result<Complex64> {
        Ok(self.phi(x) * rho_inverse(&self.params, &self.sp, x)?)
    }

    pub fn phi_grid(&self, x_min: f64, x_max: f64, n_points: usize) -> Result<GridFunction> {
        GridFunction::from_fn(x_min, x_max, n_points, |x| self.phi(x))
    }

    pub fn psi_grid(&self, x_min: f64, x_max: f64, n_points: usize) -> Result<GridFunction> {
        GridFunction::try_from_fn(x_min, x_max, n_points, |x| self.psi(x))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum ContinuumProfile {
    /// `φ₁ = cosh^{λ₁+1} F(a, b; 1/2; -sinh²)` and
    /// `φ₂ = cosh^{λ₁+1} sinh F(a+1/2, b+1/2; 3/2; -sinh²)`.
    PoschlTeller {
        lambda1: f64,
        sigma: f64,
        a: Complex64,
        b: Complex64,
    },
    /// `y₁ = e^{-z/2} z^{iκ} M(iκ-a₁, 2iκ+1, z)`,
    /// `y₂ = e^{-z/2} z^{-iκ} M(-iκ-a₁, 1-2iκ, z)`, and the physical
    /// combination `u_coeff · e^{-z/2} z^{iκ} U(iκ-a₁, 2iκ+1, z)`.
    Morse {
        a1: f64,
        sigma: f64,
        kappa: f64,
        ln_two_b1: f64,
        u_coeff: Complex64,
    },
}

/// A positive-energy solution `φ = A₁φ₁ + A₂φ₂` of `h` and its image
/// `ψ = ρ⁻¹φ` under the similarity map.
#[derive(Debug, Clone, PartialEq)]
pub struct ContinuumState {
    pub(crate) k: f64,
    pub(crate) v_infinity: f64,
    pub(crate) coeff_a1: Complex64,
    pub(crate) coeff_a2: Complex64,
    pub(crate) profile: ContinuumProfile,
    pub(crate) params: SwansonParams,
    pub(crate) sp: ModelSuperpotential,
}

impl ContinuumState {
    pub fn k(&self) -> f64 {
        self.k
    }

    /// `ε = k²`.
    pub fn epsilon(&self) -> f64 {
        self.k * self.k
    }

    /// `E = V∞ + k²`.
    pub fn energy(&self) -> f64 {
        self.v_infinity + self.k * self.k
    }

    pub fn coeff_a1(&self) -> Complex64 {
        self.coeff_a1
    }

    pub fn coeff_a2(&self) -> Complex64 {
        self.coeff_a2
    }

    pub fn phi(&self, x: f64) -> Result<Complex64> {
        match self.profile {
            ContinuumProfile::PoschlTeller {
                lambda1,
                sigma,
                a,
                b,
            } => {
                let t = sigma * x;
                let sh = t.sinh();
                let z = Complex64::new(-sh * sh, 0.0);
                let envelope = ((lambda1 + 1.0) * ln_cosh(t)).exp();
                let half = Complex64::new(0.5, 0.0);
                let mut phi = Complex64::new(0.0, 0.0);
                if self.coeff_a1 != Complex64::new(0.0, 0.0) {
                    phi += self.coeff_a1 * envelope * hyp2f1(a, b, half, z)?;
                }
                if self.coeff_a2 != Complex64::new(0.0, 0.0) {
                    let f = hyp2f1(a + 0.5, b + 0.5, Complex64::new(1.5, 0.0), z)?;
                    phi += self.coeff_a2 * envelope * sh * f;
                }
                Ok(phi)
            }
            ContinuumProfile::Morse {
                a1,
                sigma,
                kappa,
                ln_two_b1,
                u_coeff,
            } => {
                let ln_z = ln_two_b1 - sigma * x;
                let z = ln_z.exp();
                if z > MORSE_Z_UNDERFLOW {
                    return Ok(Complex64::new(0.0, 0.0));
                }
                let ik = Complex64::new(0.0, kappa);
                if z > MORSE_U_SWITCH {
                    match hyp_u_asymptotic(ik - a1, ik * 2.0 + 1.0, z) {
                        Ok(u) => return Ok(u_coeff * (ik * ln_z - 0.5 * z).exp() * u),
                        Err(SpecialFunctionError::AsymptoticDivergence { .. }) => {}
                        Err(e) => return Err(Error::from(e)),
                    }
                }
                let y1 = (ik * ln_z - 0.5 * z).exp() * hyp1f1(ik - a1, ik * 2.0 + 1.0, z)?;
                let y2 = (-ik * ln_z - 0.5 * z).exp() * hyp1f1(-ik - a1, 1.0 - ik * 2.0, z)?;
                Ok(self.coeff_a1 * y1 + self.coeff_a2 * y2)
            }
        }
    }

    /// `ψ(x) = ρ⁻¹(x) φ(x)`.
    pub fn psi(&self, x: f64) -> Result<Complex64> {
        Ok(self.phi(x)? * rho_inverse(&self.params, &self.sp, x)?)
    }

    pub fn phi_grid(&self, x_min: f64, x_max: f64, n_points: usize) -> Result<GridFunction> {
        GridFunction::try_from_fn(x_min, x_max, n_points, |x| self.phi(x))
    }

    pub fn psi_grid(&self, x_min: f64, x_max: f64, n_points: usize) -> Result<GridFunction> {
        GridFunction::try_from_fn(x_min, x_max, n_points, |x| self.psi(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn terminating_polynomial_matches_expansion() {
        // F(-2, p; 1/2; z) = 1 - 4pz + 4p(p+1)z²/3
        let (p, z) = (0.7, -1.3);
        let want = 1.0 - 4.0 * p * z + 4.0 * p * (p + 1.0) * z * z / 3.0;
        assert!((terminating_2f1(2, p, 0.5, z) - want).abs() < 1e-13);
        assert_eq!(terminating_2f1(0, p, 0.5, z), 1.0);
    }
}
