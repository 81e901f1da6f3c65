use std::fmt::Write as _;

use serde_json::Value;

use super::config::{GridSpec, RunConfig};
use super::output::{Cell, Table};
use crate::error::{Error, Result};
use crate::models::SuperpotentialModel;
use crate::oracle::{fd_eigen, fd_scatter, FdProblem};
use crate::similarity::{charge_density, current_density, Superpotential, SwansonParams};

/// Grid spacing used when the config leaves the grid open, in units of `1/σ`.
const DEFAULT_SPACING: f64 = 1e-3;
/// Largest `|2 μ ∫W|` proposed in window suggestions (η must stay finite).
const SAFE_EXPONENT: f64 = 700.0;

pub(crate) fn grid_for(cfg: &RunConfig, model: &SuperpotentialModel) -> GridSpec {
    cfg.grid.unwrap_or_else(|| {
        let (x_min, x_max) = model.default_window();
        uniform(x_min, x_max, DEFAULT_SPACING / model.sigma())
    })
}

fn uniform(x_min: f64, x_max: f64, h: f64) -> GridSpec {
    GridSpec {
        x_min,
        x_max,
        n_points: ((x_max - x_min) / h).round() as usize + 1,
    }
}

/// Left edge of the Morse wall, where `V` exceeds `100 max(V∞, σ²)`.
fn morse_wall(m: &crate::models::MorseModel) -> f64 {
    let s = m.sigma();
    let scale = m.v_infinity().max(s * s).sqrt();
    -(10.0 * scale / (m.b1() * s)).ln() / s
}

fn eigen_window(cfg: &RunConfig, model: &SuperpotentialModel) -> GridSpec {
    cfg.oracle.grid.unwrap_or_else(|| match model {
        SuperpotentialModel::PoschlTeller(m) => GridSpec {
            x_min: -20.0 / m.sigma(),
            x_max: 20.0 / m.sigma(),
            n_points: 4000,
        },
        SuperpotentialModel::Morse(m) => GridSpec {
            x_min: morse_wall(m),
            x_max: 25.0 / m.sigma(),
            n_points: 4000,
        },
    })
}

fn scatter_window(cfg: &RunConfig, model: &SuperpotentialModel) -> GridSpec {
    cfg.oracle.grid.unwrap_or_else(|| match model {
        SuperpotentialModel::PoschlTeller(m) => {
            uniform(-20.0 / m.sigma(), 20.0 / m.sigma(), DEFAULT_SPACING / m.sigma())
        }
        SuperpotentialModel::Morse(m) => uniform(
            morse_wall(m) - 1.0 / m.sigma(),
            30.0 / m.sigma(),
            DEFAULT_SPACING / m.sigma(),
        ),
    })
}

fn fd_problem(model: &SuperpotentialModel, g: &GridSpec) -> Result<FdProblem> {
    let v = model.hermitian_potential();
    FdProblem::new(move |x| v.value(x), g.x_min, g.x_max, g.n_points)
}

fn model_meta(t: &mut Table, model: &SuperpotentialModel) {
    let p = model.params();
    t.meta("model", model.name());
    t.meta("alpha", p.alpha());
    t.meta("beta", p.beta());
    t.meta("mu", p.mu());
    match model {
        SuperpotentialModel::PoschlTeller(m) => {
            t.meta("lambda2", m.lambda2());
            t.meta("sigma", m.sigma());
            t.meta("zeta", m.zeta());
            t.meta("lambda1", m.lambda1());
        }
        SuperpotentialModel::Morse(m) => {
            t.meta("a2", m.a2());
            t.meta("b2", m.b2());
            t.meta("sigma", m.sigma());
            t.meta("a1", m.a1());
            t.meta("b1", m.b1());
        }
    }
    t.meta("v_infinity", model.v_infinity());
    t.meta("energy_convention", "E = v_infinity + epsilon, continuum epsilon = k^2");
}

/// Exit status and printed report of `check`.
pub struct CheckReport {
    pub text: String,
    pub passed: bool,
}

pub fn check(cfg: &RunConfig) -> CheckReport {
    let mut s = String::new();
    let (a, b) = (cfg.alpha, cfg.beta);
    let _ = writeln!(s, "alpha = {a:?}");
    let _ = writeln!(s, "beta = {b:?}");
    if a + b != 1.0 {
        let _ = writeln!(s, "mu = {:?}", (a - b) / (1.0 - a - b));
    } else {
        let _ = writeln!(s, "mu = undefined");
    }
    let params = match SwansonParams::new(a, b) {
        Ok(p) => p,
        Err(Error::ConstraintViolation { which }) => {
            let _ = writeln!(s, "constraints: FAIL {which}");
            return CheckReport { text: s, passed: false };
        }
        Err(e) => {
            let _ = writeln!(s, "constraints: FAIL {e}");
            return CheckReport { text: s, passed: false };
        }
    };
    let _ = writeln!(s, "constraints: PASS (alpha+beta<1, 4*alpha*beta<1)");
    if params.is_hermitian() {
        let _ = writeln!(s, "NOTE mu = 0: rho = eta = 1 and H coincides with h");
    }
    let model = match cfg.build_model() {
        Ok(m) => m,
        Err(e) => {
            let _ = writeln!(s, "model: FAIL {e}");
            return CheckReport { text: s, passed: false };
        }
    };
    let _ = writeln!(s, "model = {}", model.name());
    match &model {
        SuperpotentialModel::PoschlTeller(m) => {
            let _ = writeln!(s, "zeta = {:?}", m.zeta());
            let _ = writeln!(s, "lambda1 = {:?}", m.lambda1());
            let _ = writeln!(
                s,
                "NOTE zeta is evaluated as (lambda2^2 (1-4 alpha beta) + lambda2 (1-alpha-beta)) / (1-alpha-beta)^2 = {:?}",
                m.zeta()
            );
        }
        SuperpotentialModel::Morse(m) => {
            let _ = writeln!(s, "a1 = {:?}", m.a1());
            let _ = writeln!(s, "b1 = {:?}", m.b1());
        }
    }
    let _ = writeln!(s, "v_infinity = {:?}", model.v_infinity());
    let _ = writeln!(s, "bound_states = {}", model.bound_spectrum().len());
    let _ = writeln!(s, "envelope = {}", crate::models::EnvelopeKind::from_mu(params.mu()).as_str());
    CheckReport { text: s, passed: true }
}

pub const SPECTRUM_COLUMNS: &[&str] = &["n", "epsilon_n", "E_n", "oracle_epsilon_n", "abs_rel_err"];

pub fn spectrum(cfg: &RunConfig, oracle: bool) -> Result<Table> {
    let model = cfg.build_model()?;
    let mut states = model.bound_spectrum();
    if let Some(keep) = &cfg.spectrum_n {
        states.retain(|s| keep.contains(&s.n()));
    }
    let mut t = Table::new(SPECTRUM_COLUMNS);
    model_meta(&mut t, &model);
    t.meta("bound_states", states.len() as u64);
    let fd = match (oracle, states.last()) {
        (true, Some(last)) => {
            let g = eigen_window(cfg, &model);
            t.meta("oracle", format!("fd_eigen [{:?}, {:?}] n_points = {}", g.x_min, g.x_max, g.n_points));
            fd_eigen(&fd_problem(&model, &g)?, last.n() + 1)?
        }
        _ => {
            t.meta("oracle", "skipped");
            Vec::new()
        }
    };
    for s in &states {
        let fd_eps = fd.get(s.n()).map(|(e, _)| e - model.v_infinity());
        let err = fd_eps.map(|f| ((s.epsilon() - f) / s.epsilon()).abs());
        t.push(vec![
            Cell::Int(s.n() as i64),
            s.epsilon().into(),
            s.energy().into(),
            fd_eps.into(),
            err.into(),
        ]);
    }
    Ok(t)
}

pub const CONTINUUM_COLUMNS: &[&str] = &["x", "re_phi", "im_phi", "re_psi", "im_psi", "chi", "j_bar", "tau"];

/// Largest window inside `[x_min, x_max]` on which `η` stays representable.
fn suggested_window(model: &SuperpotentialModel, x_min: f64, x_max: f64) -> (f64, f64) {
    let mu = model.params().mu();
    let sp = model.superpotential();
    let ok = |x: f64| (2.0 * mu * sp.antiderivative(x)).abs() <= SAFE_EXPONENT;
    let shrink = |edge: f64| {
        if ok(edge) {
            return edge;
        }
        let (mut good, mut bad) = (0.0, edge);
        for _ in 0..100 {
            let mid = 0.5 * (good + bad);
            if ok(mid) {
                good = mid;
            } else {
                bad = mid;
            }
        }
        good
    };
    (shrink(x_min), shrink(x_max))
}

pub fn continuum(cfg: &RunConfig) -> Result<Table> {
    let model = cfg.build_model()?;
    let k = cfg
        .continuum_k
        .ok_or_else(|| Error::Config("[continuum] k is required".into()))?;
    let g = grid_for(cfg, &model);
    let overflow = |e: Error| match e {
        Error::Overflow { x, exponent } => {
            let (lo, hi) = suggested_window(&model, g.x_min, g.x_max);
            Error::WindowOverflow {
                x,
                exponent,
                x_min: lo,
                x_max: hi,
            }
        }
        other => other,
    };
    let state = model.scattering_state(k)?;
    let phi = state.phi_grid(g.x_min, g.x_max, g.n_points)?;
    let psi = state.psi_grid(g.x_min, g.x_max, g.n_points).map_err(overflow)?;
    let sp = model.superpotential();
    let chi = charge_density(model.params(), &sp, &psi).map_err(overflow)?;
    let j = current_density(model.params(), &sp, &psi).map_err(overflow)?;
    let asym = model.psi_asymptotics(k)?;

    let mut t = Table::new(CONTINUUM_COLUMNS);
    model_meta(&mut t, &model);
    t.meta("k", k);
    t.meta("epsilon", state.epsilon());
    t.meta("energy", state.energy());
    t.meta("classification", asym.kind.as_str());
    t.meta("rate", asym.rate);
    t.meta("x_min", g.x_min);
    t.meta("x_max", g.x_max);
    t.meta("n_points", g.n_points as u64);
    t.meta("j_bar_margin", Value::String("empty on the two nodes at each edge".into()));
    let interior = psi.interior();
    for i in 0..psi.n_points() {
        let (f, p) = (phi.values()[i], psi.values()[i]);
        let current = if interior.contains(&i) {
            Cell::Float(j.values()[i].re)
        } else {
            Cell::Null
        };
        t.push(vec![
            psi.x(i).into(),
            f.re.into(),
            f.im.into(),
            p.re.into(),
            p.im.into(),
            chi.values()[i].re.into(),
            current,
            p.norm_sqr().into(),
        ]);
    }
    Ok(t)
}

pub const SCATTER_COLUMNS: &[&str] = &[
    "k",
    "re_R",
    "im_R",
    "re_T",
    "im_T",
    "abs_R2",
    "abs_T2",
    "flux",
    "phase_even",
    "phase_odd",
    "oracle_re_R",
    "oracle_im_R",
    "oracle_re_T",
    "oracle_im_T",
    "dev_R",
    "dev_T",
];

pub fn scatter(cfg: &RunConfig, oracle: bool) -> Result<Table> {
    let model = cfg.build_model()?;
    if cfg.scatter_k.is_empty() {
        return Err(Error::Config("[scatter] k list is required".into()));
    }
    let mut t = Table::new(SCATTER_COLUMNS);
    model_meta(&mut t, &model);
    let problem = if oracle {
        let g = scatter_window(cfg, &model);
        t.meta("oracle", format!("fd_scatter [{:?}, {:?}] n_points = {}", g.x_min, g.x_max, g.n_points));
        Some(fd_problem(&model, &g)?)
    } else {
        t.meta("oracle", "skipped");
        None
    };
    let rows: Vec<Result<Vec<Cell>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = cfg
            .scatter_k
            .iter()
            .map(|&k| {
                let problem = problem.as_ref();
                scope.spawn(move || scatter_row(&model, problem, k))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scatter worker panicked"))
            .collect()
    });
    for row in rows {
        t.push(row?);
    }
    Ok(t)
}

fn scatter_row(model: &SuperpotentialModel, problem: Option<&FdProblem>, k: f64) -> Result<Vec<Cell>> {
    let s = model.scattering(k)?;
    let fd = problem.map(|p| fd_scatter(p, k)).transpose()?;
    Ok(vec![
        k.into(),
        s.r.re.into(),
        s.r.im.into(),
        s.t.re.into(),
        s.t.im.into(),
        s.r.norm_sqr().into(),
        s.t.norm_sqr().into(),
        s.flux().into(),
        s.phase_even.into(),
        s.phase_odd.into(),
        fd.map(|f| f.r.re).into(),
        fd.map(|f| f.r.im).into(),
        fd.map(|f| f.t.re).into(),
        fd.map(|f| f.t.im).into(),
        fd.map(|f| (f.r - s.r).norm()).into(),
        fd.map(|f| (f.t - s.t).norm()).into(),
    ])
}
