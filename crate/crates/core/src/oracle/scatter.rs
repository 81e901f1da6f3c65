use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;

use super::FdProblem;
use crate::error::{Error, Result};

/// Edge flatness demanded of the potential, absolute.
const FLAT_TOLERANCE: f64 = 1e-8;
/// Fraction of the window over which flatness is measured at each edge.
const FLAT_PROBE: f64 = 0.05;
const RESCALE_ABOVE: f64 = 1e100;

/// How the window edges are treated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScatterSetup {
    /// Both edges are asymptotically flat. The wave enters from the left
    /// and is transmitted to the right.
    Transmitting,
    /// The left edge lies deep under a classically forbidden wall; the
    /// wave enters from the right and is totally reflected.
    WallOnLeft,
}

/// Amplitudes from direct integration. For [`ScatterSetup::Transmitting`],
/// `φ = e^{ikx} + R e^{-ikx}` on the left and `T e^{ikx}` on the right,
/// with `T` flux-normalized when the two edge wavenumbers differ. For
/// [`ScatterSetup::WallOnLeft`], `φ = e^{-ikx} + R e^{ikx}` on the right
/// and `T = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdScattering {
    pub setup: ScatterSetup,
    pub r: Complex64,
    pub t: Complex64,
}

fn edge_deviation(problem: &FdProblem, left: bool) -> (f64, f64) {
    let width = problem.x_max() - problem.x_min();
    let (edge, probe) = if left {
        (problem.x_min(), problem.x_min() + FLAT_PROBE * width)
    } else {
        (problem.x_max(), problem.x_max() - FLAT_PROBE * width)
    };
    (edge, (problem.potential(edge) - problem.potential(probe)).abs())
}

/// Numerov integration of `φ'' = (V - E)φ` at `E = V(x_max) + k²`.
///
/// The right edge must be flat to 1e-8. A left edge where `V(x_min) > E`
/// selects [`ScatterSetup::WallOnLeft`]; otherwise the left edge must be
/// flat as well and [`ScatterSetup::Transmitting`] is used.
pub fn fd_scatter(problem: &FdProblem, k: f64) -> Result<FdScattering> {
    if !(k.is_finite() && k > 0.0) {
        return Err(Error::InvalidWavenumber(k));
    }
    let (right, dev_r) = edge_deviation(problem, false);
    if dev_r > FLAT_TOLERANCE {
        return Err(Error::NonAsymptoticWindow {
            x: right,
            deviation: dev_r,
        });
    }
    let energy = problem.potential(right) + k * k;
    let (left, dev_l) = edge_deviation(problem, true);
    if problem.potential(left) > energy {
        wall_on_left(problem, k, energy)
    } else if dev_l <= FLAT_TOLERANCE {
        let k_left2 = energy - problem.potential(left);
        if k_left2 <= 0.0 {
            return Err(Error::NonAsymptoticWindow {
                x: left,
                deviation: dev_l,
            });
        }
        transmitting(problem, k, k_left2.sqrt(), energy)
    } else {
        Err(Error::NonAsymptoticWindow {
            x: left,
            deviation: dev_l,
        })
    }
}

/// Numerov weight `1 - h²(V - E)/12`-style factors for one node.
fn numerov_f(problem: &FdProblem, i: usize, energy: f64) -> f64 {
    let h = problem.spacing();
    h * h * (problem.potential(problem.x(i)) - energy) / 12.0
}

/// Fits `φ = a e^{ikx} + b e^{-ikx}` through nodes `i` and `j`.
fn plane_wave_fit(
    problem: &FdProblem,
    phi: &[Complex64],
    k: f64,
    i: usize,
    j: usize,
) -> (Complex64, Complex64) {
    let ik = Complex64::new(0.0, k);
    let (xi, xj) = (problem.x(i), problem.x(j));
    let (pi, mi) = ((ik * xi).exp(), (-ik * xi).exp());
    let (pj, mj) = ((ik * xj).exp(), (-ik * xj).exp());
    let det = pi * mj - mi * pj;
    let a = (phi[i] * mj - mi * phi[j]) / det;
    let b = (pi * phi[j] - phi[i] * pj) / det;
    (a, b)
}

/// Node offset closest to a quarter wavelength, for a well-conditioned fit.
fn quarter_wave(problem: &FdProblem, k: f64) -> usize {
    let n = (FRAC_PI_2 / k / problem.spacing()).round() as usize;
    n.clamp(1, problem.n_points() / 4)
}

fn transmitting(problem: &FdProblem, k: f64, k_left: f64, energy: f64) -> Result<FdScattering> {
    let n = problem.n_points();
    let ik = Complex64::new(0.0, k);
    let mut phi = vec![Complex64::new(0.0, 0.0); n];
    phi[n - 1] = (ik * problem.x(n - 1)).exp();
    phi[n - 2] = (ik * problem.x(n - 2)).exp();
    let mut f_next = numerov_f(problem, n - 1, energy);
    let mut f_cur = numerov_f(problem, n - 2, energy);
    for i in (1..n - 1).rev() {
        let f_prev = numerov_f(problem, i - 1, energy);
        phi[i - 1] = (phi[i] * (2.0 + 10.0 * f_cur) - phi[i + 1] * (1.0 - f_next)) / (1.0 - f_prev);
        f_next = f_cur;
        f_cur = f_prev;
    }
    let (a, b) = plane_wave_fit(problem, &phi, k_left, 0, quarter_wave(problem, k_left));
    Ok(FdScattering {
        setup: ScatterSetup::Transmitting,
        r: b / a,
        t: a.inv() * (k / k_left).sqrt(),
    })
}

fn wall_on_left(problem: &FdProblem, k: f64, energy: f64) -> Result<FdScattering> {
    let n = problem.n_points();
    let mut phi = vec![Complex64::new(0.0, 0.0); n];
    phi[1] = Complex64::new(1e-30, 0.0);
    let mut f_prev = numerov_f(problem, 0, energy);
    let mut f_cur = numerov_f(problem, 1, energy);
    for i in 1..n - 1 {
        let f_next = numerov_f(problem, i + 1, energy);
        phi[i + 1] = (phi[i] * (2.0 + 10.0 * f_cur) - phi[i - 1] * (1.0 - f_prev)) / (1.0 - f_next);
        if phi[i + 1].norm() > RESCALE_ABOVE {
            let s = 1.0 / RESCALE_ABOVE;
            phi[..=i + 1].iter_mut().for_each(|v| *v *= s);
        }
        f_prev = f_cur;
        f_cur = f_next;
    }
    let last = n - 1;
    let (a, b) = plane_wave_fit(problem, &phi, k, last - quarter_wave(problem, k), last);
    // φ = a e^{ikx} + b e^{-ikx}; the incident wave is e^{-ikx}.
    Ok(FdScattering {
        setup: ScatterSetup::WallOnLeft,
        r: a / b,
        t: Complex64::new(0.0, 0.0),
    })
}
