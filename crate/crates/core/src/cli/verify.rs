//! The invariant battery behind `swanson verify`.

use std::fmt::Write as _;

use num_complex::Complex64;

use super::commands::grid_for;
use super::config::RunConfig;
use crate::error::Result;
use crate::grid::GridFunction;
use crate::models::SuperpotentialModel;
use crate::oracle::residual;
use crate::similarity::{
    apply_hermitian, apply_swanson, charge_density, current_density, eta_inner_product, rho,
    SwansonParams,
};

/// Shift applied to `μ` by `--corrupt-mu`.
pub const CORRUPTION: f64 = 0.1;
const TEST_FUNCTIONS: usize = 8;
/// Levels entering the Gram matrix.
const GRAM_LEVELS: usize = 3;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckRow {
    pub name: &'static str,
    pub measured: Option<f64>,
    pub tolerance: f64,
    pub note: Option<String>,
}

impl CheckRow {
    pub fn passed(&self) -> bool {
        self.measured.is_none_or(|m| m <= self.tolerance)
    }
}

#[derive(Debug, Clone)]
pub struct Battery {
    pub rows: Vec<CheckRow>,
    pub notes: Vec<String>,
}

impl Battery {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(CheckRow::passed)
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        self.rows.iter().find(|r| !r.passed()).map(|r| r.name)
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{:<22} {:>12} {:>10}  status", "invariant", "measured", "tolerance");
        for r in &self.rows {
            let measured = r.measured.map_or("n/a".to_owned(), |m| format!("{m:.3e}"));
            let status = if r.passed() { "PASS" } else { "FAIL" };
            let _ = write!(s, "{:<22} {measured:>12} {:>10.1e}  {status}", r.name, r.tolerance);
            if let Some(n) = &r.note {
                let _ = write!(s, "  ({n})");
            }
            s.push('\n');
        }
        for n in &self.notes {
            let _ = writeln!(s, "NOTE {n}");
        }
        match self.first_failure() {
            None => s.push_str("verify: all invariants PASS\n"),
            Some(name) => {
                let _ = writeln!(s, "verify: FAIL, first failing invariant: {name}");
            }
        }
        s
    }
}

/// Gaussians with a phase, centered in the inner half of the window.
fn test_function(j: usize, x_min: f64, x_max: f64, n: usize) -> Result<GridFunction> {
    let width = x_max - x_min;
    let t = (j as f64 + 0.5) / TEST_FUNCTIONS as f64;
    let center = x_min + width * (0.25 + 0.5 * t);
    let w = width / 24.0;
    let q = (j as f64 - 3.5) * 0.6;
    let amp = Complex64::from_polar(1.0, 0.7 * j as f64);
    GridFunction::from_fn(x_min, x_max, n, |x| {
        amp * (-(x - center).powi(2) / (2.0 * w * w)).exp() * Complex64::new(0.0, q * x).exp()
    })
}

fn intertwining(model: &SuperpotentialModel, params: &SwansonParams, cfg: &RunConfig) -> Result<f64> {
    let g = grid_for(cfg, model);
    let sp = model.superpotential();
    let v = model.hermitian_potential();
    let mut worst: f64 = 0.0;
    for j in 0..TEST_FUNCTIONS {
        let f = test_function(j, g.x_min, g.x_max, g.n_points)?;
        let hf = apply_swanson(params, &sp, &f)?;
        let mut rf = f.clone();
        let mut r = Vec::with_capacity(f.n_points());
        for (i, val) in rf.values_mut().iter_mut().enumerate() {
            let ri = rho(params, &sp, f.x(i))?;
            *val *= ri;
            r.push(ri);
        }
        let h_rf = apply_hermitian(|x| v.value(x), &rf)?;
        let scale = rf.max_abs();
        for i in f.interior() {
            worst = worst.max((hf.values()[i] * r[i] - h_rf.values()[i]).norm() / scale);
        }
    }
    Ok(worst)
}

pub fn run(cfg: &RunConfig, corrupt_mu: bool) -> Result<Battery> {
    let model = cfg.build_model()?;
    let true_params = *model.params();
    let params = if corrupt_mu {
        true_params.with_corrupted_mu(CORRUPTION)
    } else {
        true_params
    };
    let sp = model.superpotential();
    let g = grid_for(cfg, &model);
    let mut notes = Vec::new();
    if corrupt_mu {
        notes.push(format!("mu deliberately shifted by {CORRUPTION} in rho and eta"));
    }
    if true_params.is_hermitian() {
        notes.push("mu = 0: rho = eta = 1, H = h, and charge and current reduce to the standard ones".into());
    }

    let mut rows = vec![CheckRow {
        name: "intertwining",
        measured: Some(intertwining(&model, &params, cfg)?),
        tolerance: 1e-6,
        note: Some(format!("{TEST_FUNCTIONS} test functions, relative to max |rho f|")),
    }];

    let states = model.bound_spectrum();
    let psis: Vec<GridFunction> = states
        .iter()
        .map(|s| s.psi_grid(g.x_min, g.x_max, g.n_points))
        .collect::<Result<_>>()?;
    let mut worst_residual: Option<f64> = None;
    for (s, psi) in states.iter().zip(&psis) {
        let r = residual(|f| apply_swanson(&params, &sp, f), psi, s.energy())?;
        worst_residual = Some(worst_residual.map_or(r, |w: f64| w.max(r)));
    }
    rows.push(CheckRow {
        name: "bound-state residual",
        measured: worst_residual,
        tolerance: 1e-4,
        note: Some(format!("{} states", states.len())),
    });

    let mut worst_gram: Option<f64> = None;
    let levels = psis.len().min(GRAM_LEVELS);
    for (i, a) in psis[..levels].iter().enumerate() {
        for (j, b) in psis[..levels].iter().enumerate() {
            let want = if i == j { 1.0 } else { 0.0 };
            let d = (eta_inner_product(&params, &sp, a, b)? - want).norm();
            worst_gram = Some(worst_gram.map_or(d, |w: f64| w.max(d)));
        }
    }
    rows.push(CheckRow {
        name: "eta-orthonormality",
        measured: worst_gram,
        tolerance: 1e-6,
        note: Some(format!("levels n < {levels}")),
    });

    let k = cfg.continuum_k.or(cfg.scatter_k.first().copied()).unwrap_or(1.0);
    let state = model.scattering_state(k)?;
    let psi = state.psi_grid(g.x_min, g.x_max, g.n_points)?;
    let phi = state.phi_grid(g.x_min, g.x_max, g.n_points)?;
    let j = current_density(&params, &sp, &psi)?;
    let vals: Vec<f64> = psi.interior().map(|i| j.values()[i].re).collect();
    let max = vals.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let min = vals.iter().copied().fold(f64::INFINITY, f64::min);
    let mean = vals.iter().sum::<f64>() / vals.len() as f64;
    let flux = 2.0 * k;
    let (scale, basis) = if mean.abs() > 1e-3 * flux {
        (mean.abs(), "mean current")
    } else {
        (flux, "incident flux 2k")
    };
    rows.push(CheckRow {
        name: "current constancy",
        measured: Some((max - min) / scale),
        tolerance: 1e-6,
        note: Some(format!("k = {k}, spread relative to {basis}")),
    });

    let chi = charge_density(&params, &sp, &psi)?;
    let peak = phi.values().iter().map(|v| v.norm_sqr()).fold(0.0, f64::max);
    let chi_err = chi
        .values()
        .iter()
        .zip(phi.values())
        .map(|(a, b)| (a.re - b.norm_sqr()).abs())
        .fold(0.0, f64::max)
        / peak;
    rows.push(CheckRow {
        name: "charge = |phi|^2",
        measured: Some(chi_err),
        tolerance: 1e-12,
        note: None,
    });
    Ok(Battery { rows, notes })
}
