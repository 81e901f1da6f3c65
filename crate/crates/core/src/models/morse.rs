use num_complex::Complex64;

use super::states::{BoundProfile, ContinuumProfile};
use super::{
    check_positive, check_wavenumber, simpson, Asymptotics, BoundState, ContinuumState,
    EnvelopeKind, ModelSuperpotential, ScatteringData,
};
use crate::error::Result;
use crate::similarity::{ExponentialSuperpotential, SwansonParams};
use crate::specfun::gamma_ratio;

/// Normalization window in `z = 2b₁e^{-σx}`: from where `e^{-z/2}`
/// underflows down to where the `z → 0` asymptotics are exact to 1e-10.
const NORM_Z_MAX: f64 = 1400.0;
const NORM_Z_MIN: f64 = 1e-10;
const NORM_PANELS: usize = 20_000;

/// `W = σ(a₂ - b₂e^{-σx})`. The Hermitian partner is the Morse potential
/// `V = V∞ + b₁²σ²e^{-2σx} - (2a₁+1)b₁σ²e^{-σx}` with `V∞ = (1-4αβ)a₂²σ²/(1-α-β)²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MorseModel {
    a2: f64,
    b2: f64,
    sigma: f64,
    params: SwansonParams,
    a1: f64,
    b1: f64,
}

impl MorseModel {
    pub fn new(a2: f64, b2: f64, sigma: f64, params: SwansonParams) -> Result<Self> {
        check_positive("a2", a2)?;
        check_positive("b2", b2)?;
        check_positive("sigma", sigma)?;
        let c = params.w_scale();
        let a1 = c * a2 + 0.5 / params.sqrt_discriminant() - 0.5;
        Ok(Self {
            a2,
            b2,
            sigma,
            params,
            a1,
            b1: c * b2,
        })
    }

    pub fn a2(&self) -> f64 {
        self.a2
    }

    pub fn b2(&self) -> f64 {
        self.b2
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn params(&self) -> &SwansonParams {
        &self.params
    }

    pub fn a1(&self) -> f64 {
        self.a1
    }

    pub fn b1(&self) -> f64 {
        self.b1
    }

    pub fn superpotential(&self) -> ExponentialSuperpotential {
        ExponentialSuperpotential {
            a: self.a2,
            b: self.b2,
            sigma: self.sigma,
        }
    }

    fn sp(&self) -> ModelSuperpotential {
        ModelSuperpotential::Exponential(self.superpotential())
    }

    /// `lim V(x)` as `x → +∞`.
    pub fn v_infinity(&self) -> f64 {
        let c = self.params.w_scale();
        c * c * self.a2 * self.a2 * self.sigma * self.sigma
    }

    pub fn potential(&self, x: f64) -> f64 {
        let e = (-self.sigma * x).exp();
        let s2 = self.sigma * self.sigma;
        self.v_infinity() + self.b1 * self.b1 * s2 * e * e - (2.0 * self.a1 + 1.0) * self.b1 * s2 * e
    }

    /// `(-4/σ, L/σ)` with `L = 12`, widened so that `|φ_n|²` of the most
    /// weakly bound level falls below `e^{-18}` on the right; at most `L = 40`.
    pub fn default_window(&self) -> (f64, f64) {
        let n = (self.a1.ceil() - 1.0).max(0.0);
        let gap = (self.a1 > 0.0).then_some(self.a1 - n);
        (-4.0 / self.sigma, super::decay_extent(gap, 12.0) / self.sigma)
    }

    fn z_to_x(&self, z: f64) -> f64 {
        ((2.0 * self.b1).ln() - z.ln()) / self.sigma
    }

    /// Bound states for `0 <= n < a₁`, with `ε_n = -(a₁-n)²σ²` and
    /// excitation energy `(2a₁-n)nσ²`. Empty when `a₁ <= 0`.
    pub fn bound_spectrum(&self) -> Vec<BoundState> {
        let s2 = self.sigma * self.sigma;
        let mut out = Vec::new();
        let mut n = 0usize;
        while (n as f64) < self.a1 {
            let s = self.a1 - n as f64;
            let profile = BoundProfile::Morse {
                n,
                s,
                two_b1: 2.0 * self.b1,
                sigma: self.sigma,
            };
            let epsilon = -s * s * s2;
            out.push(BoundState {
                n,
                epsilon,
                energy: self.v_infinity() + epsilon,
                excitation: (2.0 * self.a1 - n as f64) * n as f64 * s2,
                norm: self.norm_of(&profile, s),
                profile,
                params: self.params,
                sp: self.sp(),
            });
            n += 1;
        }
        out
    }

    /// Simpson between the underflow point and `z = 1e-10`, plus the
    /// `φ ~ C e^{-sσx}` tail in closed form.
    fn norm_of(&self, profile: &BoundProfile, s: f64) -> f64 {
        let x_lo = self.z_to_x(NORM_Z_MAX);
        let x_hi = self.z_to_x(NORM_Z_MIN);
        let core = simpson(|x| profile.eval(x).powi(2), x_lo, x_hi, NORM_PANELS);
        let edge = profile.eval(x_hi);
        let tail = edge * edge / (2.0 * s * self.sigma);
        1.0 / (core + tail).sqrt()
    }

    /// `A₂/A₁ = -Γ(2iκ+1)Γ(-iκ-a₁) / [Γ(1-2iκ)Γ(iκ-a₁)]`, the ratio that
    /// removes the branch growing like `e^{z/2}` under the wall.
    pub fn coefficient_ratio(&self, k: f64) -> Result<Complex64> {
        check_wavenumber(k)?;
        let ik = Complex64::new(0.0, k / self.sigma);
        Ok(-gamma_ratio(&[ik * 2.0 + 1.0, -ik - self.a1], &[1.0 - ik * 2.0, ik - self.a1])?)
    }

    /// The continuum state vanishing under the wall, normalized so that
    /// the incident wave `e^{-ikx}` from `x → +∞` has unit amplitude.
    /// Here `ε = k²`.
    pub fn continuum_state(&self, k: f64) -> Result<ContinuumState> {
        let ratio = self.coefficient_ratio(k)?;
        let kappa = k / self.sigma;
        let ik = Complex64::new(0.0, kappa);
        let ln_two_b1 = (2.0 * self.b1).ln();
        let a1 = (-ik * ln_two_b1).exp();
        let u_coeff = a1 * gamma_ratio(&[-ik - self.a1], &[-ik * 2.0])?;
        Ok(ContinuumState {
            k,
            v_infinity: self.v_infinity(),
            coeff_a1: a1,
            coeff_a2: ratio * a1,
            profile: ContinuumProfile::Morse {
                a1: self.a1,
                sigma: self.sigma,
                kappa,
                ln_two_b1,
                u_coeff,
            },
            params: self.params,
            sp: self.sp(),
        })
    }

    /// `R = (A₂/A₁)(2b₁)^{-2iκ}`, the amplitude of `e^{ikx}` against a unit
    /// incident `e^{-ikx}`; `T = 0`.
    pub fn scattering(&self, k: f64) -> Result<ScatteringData> {
        let ratio = self.coefficient_ratio(k)?;
        let ik = Complex64::new(0.0, k / self.sigma);
        let r = ratio * (-ik * 2.0 * (2.0 * self.b1).ln()).exp();
        Ok(ScatteringData {
            r,
            t: Complex64::new(0.0, 0.0),
            phase_even: None,
            phase_odd: None,
        })
    }

    /// `ρ⁻¹ → e^{μa₂σx}` as `x → +∞`.
    pub fn psi_asymptotics(&self, k: f64) -> Result<Asymptotics> {
        check_wavenumber(k)?;
        let mu = self.params.mu();
        Ok(Asymptotics {
            kind: EnvelopeKind::from_mu(mu),
            rate: mu * self.a2 * self.sigma,
        })
    }
}
