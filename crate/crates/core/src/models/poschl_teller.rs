use std::f64::consts::PI;

use num_complex::Complex64;

use super::states::{BoundProfile, ContinuumProfile};
use super::{
    check_positive, check_wavenumber, simpson, Asymptotics, BoundState, ContinuumState,
    EnvelopeKind, ModelSuperpotential, ScatteringData,
};
use crate::error::{Error, Result};
use crate::similarity::{SwansonParams, TanhSuperpotential};
use crate::specfun::gamma_ratio;

/// Half-width, in units of `1/σ`, of the window on which bound states are
/// integrated before the exponential tails are added analytically.
const NORM_HALF_WIDTH: f64 = 20.0;
const NORM_PANELS: usize = 4000;

/// `W = λ₂σ tanh σx`. The Hermitian partner is the sech² well
/// `V = V∞ - ζσ² sech²σx` with `ζ = λ₁(λ₁+1)` and `V∞ = (1-4αβ)λ₂²σ²/(1-α-β)²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PoschlTellerModel {
    lambda2: f64,
    sigma: f64,
    params: SwansonParams,
    zeta: f64,
    lambda1: f64,
}

impl PoschlTellerModel {
    pub fn new(lambda2: f64, sigma: f64, params: SwansonParams) -> Result<Self> {
        check_positive("lambda2", lambda2)?;
        check_positive("sigma", sigma)?;
        let s = params.one_minus_sum();
        let d = 1.0 - 4.0 * params.alpha() * params.beta();
        let zeta = (lambda2 * lambda2 * d + lambda2 * s) / (s * s);
        let disc = 1.0 + 4.0 * zeta;
        if disc < 0.0 {
            return Err(Error::InvalidModel(format!("1 + 4 zeta = {disc} is negative")));
        }
        Ok(Self {
            lambda2,
            sigma,
            params,
            zeta,
            lambda1: 0.5 * (disc.sqrt() - 1.0),
        })
    }

    /// The model whose Hermitian well has the given `λ₁`, found by solving
    /// `(1-4αβ)λ₂² + (1-α-β)λ₂ = λ₁(λ₁+1)(1-α-β)²` for `λ₂ > 0`.
    pub fn from_lambda1(lambda1: f64, sigma: f64, params: SwansonParams) -> Result<Self> {
        check_positive("lambda1", lambda1)?;
        let s = params.one_minus_sum();
        let d = 1.0 - 4.0 * params.alpha() * params.beta();
        let zeta = lambda1 * (lambda1 + 1.0);
        let lambda2 = (-s + (s * s + 4.0 * d * zeta * s * s).sqrt()) / (2.0 * d);
        Self::new(lambda2, sigma, params)
    }

    pub fn lambda2(&self) -> f64 {
        self.lambda2
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn params(&self) -> &SwansonParams {
        &self.params
    }

    pub fn zeta(&self) -> f64 {
        self.zeta
    }

    pub fn lambda1(&self) -> f64 {
        self.lambda1
    }

    pub fn superpotential(&self) -> TanhSuperpotential {
        TanhSuperpotential {
            strength: self.lambda2,
            sigma: self.sigma,
        }
    }

    fn sp(&self) -> ModelSuperpotential {
        ModelSuperpotential::Tanh(self.superpotential())
    }

    /// `lim V(x)` as `|x| → ∞`.
    pub fn v_infinity(&self) -> f64 {
        let c = self.params.w_scale();
        c * c * self.lambda2 * self.lambda2 * self.sigma * self.sigma
    }

    /// The Hermitian potential in closed form, `V∞ - ζσ² sech²σx`.
    pub fn potential(&self, x: f64) -> f64 {
        let sech = 1.0 / (self.sigma * x).cosh();
        self.v_infinity() - self.zeta * self.sigma * self.sigma * sech * sech
    }

    /// `±L/σ` with `L = 10`, widened so that `|φ_n|²` of the most weakly
    /// bound level falls below `e^{-18}` at the edges; at most `L = 40`.
    pub fn default_window(&self) -> (f64, f64) {
        let l = super::decay_extent(self.weakest_decay(), 10.0) / self.sigma;
        (-l, l)
    }

    /// `λ₁ - n` of the highest bound level.
    fn weakest_decay(&self) -> Option<f64> {
        let n = (self.lambda1.ceil() - 1.0).max(0.0);
        (self.lambda1 > 0.0).then_some(self.lambda1 - n)
    }

    /// Bound states `n = 0, 1, …` with `n < λ₁` and `ε_n = -(λ₁-n)²σ²`.
    /// The zero-energy state at integer `λ₁` is not normalizable and is
    /// left out.
    pub fn bound_spectrum(&self) -> Vec<BoundState> {
        let l = self.lambda1;
        let s2 = self.sigma * self.sigma;
        let eps0 = -l * l * s2;
        let mut out = Vec::new();
        let mut n = 0usize;
        while (n as f64) < l {
            let kappa = l - n as f64;
            let m = n / 2;
            let odd = n % 2 == 1;
            let p = if odd {
                1.0 + m as f64 - l
            } else {
                m as f64 - l
            };
            let profile = BoundProfile::PoschlTeller {
                lambda1: l,
                sigma: self.sigma,
                m,
                p,
                odd,
            };
            let epsilon = -kappa * kappa * s2;
            out.push(BoundState {
                n,
                epsilon,
                energy: self.v_infinity() + epsilon,
                excitation: epsilon - eps0,
                norm: self.norm_of(&profile, kappa),
                profile,
                params: self.params,
                sp: self.sp(),
            });
            n += 1;
        }
        out
    }

    /// `1 / sqrt(∫|φ|²)`: Simpson on `|σx| <= 20`, plus the tails of
    /// `φ ~ C e^{-κσ|x|}` in closed form.
    fn norm_of(&self, profile: &BoundProfile, kappa: f64) -> f64 {
        let l0 = NORM_HALF_WIDTH / self.sigma;
        let core = 2.0 * simpson(|x| profile.eval(x).powi(2), 0.0, l0, NORM_PANELS);
        let edge = profile.eval(l0);
        let tails = 2.0 * edge * edge / (2.0 * kappa * self.sigma);
        1.0 / (core + tails).sqrt()
    }

    fn hyp_params(&self, k: f64) -> (Complex64, Complex64) {
        let a = Complex64::new(0.5 * (self.lambda1 + 1.0), 0.5 * k / self.sigma);
        (a, a.conj())
    }

    /// The continuum state `A₁φ₁ + A₂φ₂` at wavenumber `k` (`ε = k²`).
    pub fn continuum_state(
        &self,
        k: f64,
        coeff_a1: Complex64,
        coeff_a2: Complex64,
    ) -> Result<ContinuumState> {
        check_wavenumber(k)?;
        let (a, b) = self.hyp_params(k);
        Ok(ContinuumState {
            k,
            v_infinity: self.v_infinity(),
            coeff_a1,
            coeff_a2,
            profile: ContinuumProfile::PoschlTeller {
                lambda1: self.lambda1,
                sigma: self.sigma,
                a,
                b,
            },
            params: self.params,
            sp: self.sp(),
        })
    }

    /// Coefficients `c_e`, `c_o` of `e^{+ik|x|}` in the large-`|x|` forms
    /// `φ₁ ≈ c_e e^{ik|x|} + c.c.` and `φ₂ ≈ sgn(x)(c_o e^{ik|x|} + c.c.)`.
    fn outgoing_coefficients(&self, k: f64) -> Result<(Complex64, Complex64)> {
        let kappa = k / self.sigma;
        let q = 0.5 * kappa;
        let l = self.lambda1;
        let ik = Complex64::new(0.0, kappa);
        let two_pow = (-ik * std::f64::consts::LN_2).exp();
        let sqrt_pi = PI.sqrt();
        let c_even = gamma_ratio(
            &[ik],
            &[Complex64::new(0.5 * (l + 1.0), q), Complex64::new(-0.5 * l, q)],
        )? * sqrt_pi
            * two_pow;
        let c_odd = gamma_ratio(
            &[ik],
            &[Complex64::new(0.5 * l + 1.0, q), Complex64::new(0.5 * (1.0 - l), q)],
        )? * (0.5 * sqrt_pi)
            * two_pow;
        Ok((c_even, c_odd))
    }

    /// The state that behaves as `e^{ikx} + R e^{-ikx}` for `x → -∞` and
    /// `T e^{ikx}` for `x → +∞`.
    pub fn scattering_state(&self, k: f64) -> Result<ContinuumState> {
        check_wavenumber(k)?;
        let (c_even, c_odd) = self.outgoing_coefficients(k)?;
        let a1 = 0.5 / c_even.conj();
        let a2 = -0.5 / c_odd.conj();
        self.continuum_state(k, a1, a2)
    }

    /// `R = (e^{2iφ_e} + e^{2iφ_o})/2`, `T = (e^{2iφ_e} - e^{2iφ_o})/2`
    /// with `φ_e = arg c_e`, `φ_o = arg c_o`.
    pub fn scattering(&self, k: f64) -> Result<ScatteringData> {
        check_wavenumber(k)?;
        let (c_even, c_odd) = self.outgoing_coefficients(k)?;
        let (pe, po) = (c_even.arg(), c_odd.arg());
        let ue = Complex64::from_polar(1.0, 2.0 * pe);
        let uo = Complex64::from_polar(1.0, 2.0 * po);
        Ok(ScatteringData {
            r: (ue + uo) * 0.5,
            t: (ue - uo) * 0.5,
            phase_even: Some(pe),
            phase_odd: Some(po),
        })
    }

    /// `ρ⁻¹ = cosh^{λ₂μ}(σx)`, so `|ψ|` carries the envelope
    /// `e^{λ₂μσ|x|}` at large `|x|`.
    pub fn psi_asymptotics(&self, k: f64) -> Result<Asymptotics> {
        check_wavenumber(k)?;
        let mu = self.params.mu();
        Ok(Asymptotics {
            kind: EnvelopeKind::from_mu(mu),
            rate: self.lambda2 * mu * self.sigma,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig2() -> PoschlTellerModel {
        PoschlTellerModel::new(1.0, 1.0, SwansonParams::new(0.5, 0.25).unwrap()).unwrap()
    }

    #[test]
    fn derived_parameters() {
        let m = fig2();
        assert!((m.zeta() - 12.0).abs() < 1e-12);
        assert!((m.lambda1() - 3.0).abs() < 1e-12);
        assert!((m.v_infinity() - 8.0).abs() < 1e-12);
        let m = PoschlTellerModel::new(5.0, 1.0, SwansonParams::new(0.125, 0.25).unwrap()).unwrap();
        assert!((m.zeta() - 64.0).abs() < 1e-12);
        assert!((m.lambda1() - 0.5 * (257f64.sqrt() - 1.0)).abs() < 1e-12);
    }

    #[test]
    fn from_lambda1_inverts() {
        let p = SwansonParams::new(0.5, 0.25).unwrap();
        let m = PoschlTellerModel::from_lambda1(2.5, 1.3, p).unwrap();
        assert!((m.lambda1() - 2.5).abs() < 1e-12);
        assert!((PoschlTellerModel::from_lambda1(3.0, 1.0, p).unwrap().lambda2() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn closed_form_potential_matches_riccati_map() {
        let m = fig2();
        let v = crate::similarity::riccati_map(m.params(), m.superpotential());
        for &x in &[-3.0, -0.4, 0.0, 1.1, 7.0] {
            assert!((v.value(x) - m.potential(x)).abs() < 1e-12);
        }
    }

    #[test]
    fn spectrum_excludes_threshold() {
        let eps: Vec<f64> = fig2().bound_spectrum().iter().map(|s| s.epsilon()).collect();
        assert_eq!(eps, vec![-9.0, -4.0, -1.0]);
        let half = PoschlTellerModel::from_lambda1(0.5, 2.0, SwansonParams::hermitian()).unwrap();
        let states = half.bound_spectrum();
        assert_eq!(states.len(), 1);
        assert!((states[0].epsilon() + 0.25 * 4.0).abs() < 1e-12);
    }

    #[test]
    fn bound_states_have_parity_and_unit_norm() {
        for s in fig2().bound_spectrum() {
            let sign = if s.n() % 2 == 0 { 1.0 } else { -1.0 };
            for &x in &[0.3, 1.7, 4.0] {
                assert!((s.phi(-x) - s.phi(x) * sign).norm() < 1e-14);
            }
            let g = s.phi_grid(-30.0, 30.0, 30001).unwrap();
            let norm: f64 = g.values().iter().map(|v| v.norm_sqr()).sum::<f64>() * g.spacing();
            assert!((norm - 1.0).abs() < 1e-10, "n={} norm={norm}", s.n());
        }
    }

    #[test]
    fn continuum_basis_at_origin() {
        let m = fig2();
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let even = m.continuum_state(2.0, one, zero).unwrap();
        let odd = m.continuum_state(2.0, zero, one).unwrap();
        assert!((even.phi(0.0).unwrap() - one).norm() < 1e-15);
        assert!(odd.phi(0.0).unwrap().norm() < 1e-15);
        for &x in &[0.5, 2.0, 6.0] {
            assert!((even.phi(-x).unwrap() - even.phi(x).unwrap()).norm() < 1e-10);
            assert!((odd.phi(-x).unwrap() + odd.phi(x).unwrap()).norm() < 1e-10);
        }
    }

    #[test]
    fn reflection_known_closed_form() {
        // |R|² = cos²(π(λ+1/2)) / (cos²(π(λ+1/2)) + sinh²(πk/σ))
        let p = SwansonParams::new(0.5, 0.25).unwrap();
        for &l in &[2.5, 1.3] {
            let m = PoschlTellerModel::from_lambda1(l, 1.0, p).unwrap();
            for &k in &[0.3, 1.0, 2.0] {
                let c2 = (PI * (l + 0.5)).cos().powi(2);
                let want = c2 / (c2 + (PI * k).sinh().powi(2));
                let got = m.scattering(k).unwrap().r.norm_sqr();
                assert!((got - want).abs() < 1e-12, "l={l} k={k}: {got} vs {want}");
            }
        }
    }

    #[test]
    fn scattering_state_has_unit_incident_wave() {
        let m = PoschlTellerModel::from_lambda1(2.5, 1.0, SwansonParams::new(0.5, 0.25).unwrap()).unwrap();
        let k = 0.7;
        let st = m.scattering_state(k).unwrap();
        let sd = m.scattering(k).unwrap();
        let ik = Complex64::new(0.0, k);
        for &x in &[9.0, 11.0] {
            let right = sd.t * (ik * x).exp();
            assert!((st.phi(x).unwrap() - right).norm() < 1e-6);
            let left = (-ik * x).exp() + sd.r * (ik * x).exp();
            assert!((st.phi(-x).unwrap() - left).norm() < 1e-6);
        }
    }

    #[test]
    fn asymptotic_rate() {
        let a = fig2().psi_asymptotics(1.0).unwrap();
        assert_eq!(a.kind, EnvelopeKind::Progressive);
        assert!((a.rate - 1.0).abs() < 1e-12);
    }
}
