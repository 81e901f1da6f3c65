//! Closed-form solutions of the two exactly solvable realizations: the
//! Pöschl-Teller model `W = λ₂σ tanh σx` and the Morse model
//! `W = σ(a₂ - b₂e^{-σx})`.
//!
//! Energies are reported two ways. `epsilon` is measured from the
//! asymptotic value `V∞` of the Hermitian potential, so bound states have
//! `ε < 0` and a continuum state of wavenumber `k` has `ε = k²`. `energy`
//! is the actual eigenvalue `V∞ + ε` of both `h` and `H`.

mod morse;
mod poschl_teller;
mod states;

use num_complex::Complex64;
use serde::Serialize;

pub use morse::MorseModel;
pub use poschl_teller::PoschlTellerModel;
pub use states::{BoundState, ContinuumState};

use crate::error::{Error, Result};
use crate::similarity::{
    ExponentialSuperpotential, HermitianPotential, Superpotential, SwansonParams,
    TanhSuperpotential,
};

/// The superpotential of either bundled model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModelSuperpotential {
    Tanh(TanhSuperpotential),
    Exponential(ExponentialSuperpotential),
}

impl Superpotential for ModelSuperpotential {
    fn value(&self, x: f64) -> f64 {
        match self {
            Self::Tanh(w) => w.value(x),
            Self::Exponential(w) => w.value(x),
        }
    }

    fn derivative(&self, x: f64) -> f64 {
        match self {
            Self::Tanh(w) => w.derivative(x),
            Self::Exponential(w) => w.derivative(x),
        }
    }

    fn antiderivative(&self, x: f64) -> f64 {
        match self {
            Self::Tanh(w) => w.antiderivative(x),
            Self::Exponential(w) => w.antiderivative(x),
        }
    }
}

/// Large-`|x|` behavior of the envelope of `ψ = ρ⁻¹φ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EnvelopeKind {
    Damped,
    Progressive,
    Neutral,
}

impl EnvelopeKind {
    pub fn from_mu(mu: f64) -> Self {
        if mu > 0.0 {
            Self::Progressive
        } else if mu < 0.0 {
            Self::Damped
        } else {
            Self::Neutral
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Damped => "Damped",
            Self::Progressive => "Progressive",
            Self::Neutral => "Neutral",
        }
    }
}

/// `|ψ| ~ e^{rate·|x|}` on the side where the waves propagate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Asymptotics {
    pub kind: EnvelopeKind,
    pub rate: f64,
}

/// Reflection and transmission amplitudes for a wave of unit amplitude
/// incident from the open side. The parity phases exist only for the
/// symmetric Pöschl-Teller well.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScatteringData {
    pub r: Complex64,
    pub t: Complex64,
    pub phase_even: Option<f64>,
    pub phase_odd: Option<f64>,
}

impl ScatteringData {
    /// `|R|² + |T|²`.
    pub fn flux(&self) -> f64 {
        self.r.norm_sqr() + self.t.norm_sqr()
    }
}

pub(crate) fn check_wavenumber(k: f64) -> Result<()> {
    if k.is_finite() && k > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidWavenumber(k))
    }
}

pub(crate) fn check_positive(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidModel(format!("{name} must be finite and positive, got {v}")))
    }
}

/// Either bundled model behind one interface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SuperpotentialModel {
    PoschlTeller(PoschlTellerModel),
    Morse(MorseModel),
}

impl SuperpotentialModel {
    pub fn params(&self) -> &SwansonParams {
        match self {
            Self::PoschlTeller(m) => m.params(),
            Self::Morse(m) => m.params(),
        }
    }

    pub fn superpotential(&self) -> ModelSuperpotential {
        match self {
            Self::PoschlTeller(m) => ModelSuperpotential::Tanh(m.superpotential()),
            Self::Morse(m) => ModelSuperpotential::Exponential(m.superpotential()),
        }
    }

    pub fn hermitian_potential(&self) -> HermitianPotential<ModelSuperpotential> {
        crate::similarity::riccati_map(self.params(), self.superpotential())
    }

    pub fn sigma(&self) -> f64 {
        match self {
            Self::PoschlTeller(m) => m.sigma(),
            Self::Morse(m) => m.sigma(),
        }
    }

    pub fn v_infinity(&self) -> f64 {
        match self {
            Self::PoschlTeller(m) => m.v_infinity(),
            Self::Morse(m) => m.v_infinity(),
        }
    }

    pub fn bound_spectrum(&self) -> Vec<BoundState> {
        match self {
            Self::PoschlTeller(m) => m.bound_spectrum(),
            Self::Morse(m) => m.bound_spectrum(),
        }
    }

    /// The continuum state with unit incident amplitude.
    pub fn scattering_state(&self, k: f64) -> Result<ContinuumState> {
        match self {
            Self::PoschlTeller(m) => m.scattering_state(k),
            Self::Morse(m) => m.continuum_state(k),
        }
    }

    pub fn scattering(&self, k: f64) -> Result<ScatteringData> {
        match self {
            Self::PoschlTeller(m) => m.scattering(k),
            Self::Morse(m) => m.scattering(k),
        }
    }

    pub fn psi_asymptotics(&self, k: f64) -> Result<Asymptotics> {
        match self {
            Self::PoschlTeller(m) => m.psi_asymptotics(k),
            Self::Morse(m) => m.psi_asymptotics(k),
        }
    }

    /// Default evaluation window.
    pub fn default_window(&self) -> (f64, f64) {
        match self {
            Self::PoschlTeller(m) => m.default_window(),
            Self::Morse(m) => m.default_window(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::PoschlTeller(_) => "poschl-teller",
            Self::Morse(_) => "morse",
        }
    }
}

/// Half-width in units of `1/σ` at which `e^{-2 gap L}` reaches `e^{-18}`,
/// clamped to `[base, 40]`.
pub(crate) fn decay_extent(gap: Option<f64>, base: f64) -> f64 {
    gap.map_or(base, |g| (9.0 / g).clamp(base, 40.0))
}

/// Composite Simpson rule for `∫ f` on `[a, b]` with `2m` panels.
pub(crate) fn simpson<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, m: usize) -> f64 {
    let n = 2 * m;
    let h = (b - a) / n as f64;
    let mut sum = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        sum += w * f(a + i as f64 * h);
    }
    sum * h / 3.0
}
