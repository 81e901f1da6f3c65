//! Finite-difference ground truth for `h = -D² + V`: a Dirichlet-box
//! eigensolver, fixed-energy Numerov integration for scattering
//! amplitudes, and residual and envelope-slope utilities.
//!
//! This module works from a potential function and grids alone. It shares
//! nothing with the closed-form evaluators it is used to check.

mod eigen;
mod scatter;

use num_complex::Complex64;

pub use eigen::fd_eigen;
pub use scatter::{fd_scatter, FdScattering, ScatterSetup};

use crate::error::{Error, Result};
use crate::grid::GridFunction;

/// Smallest admissible grid.
pub const MIN_FD_POINTS: usize = 100;

/// A potential on a uniform grid with Dirichlet walls at both ends.
pub struct FdProblem {
    potential: Box<dyn Fn(f64) -> f64 + Send + Sync>,
    x_min: f64,
    x_max: f64,
    n_points: usize,
}

impl std::fmt::Debug for FdProblem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FdProblem")
            .field("x_min", &self.x_min)
            .field("x_max", &self.x_max)
            .field("n_points", &self.n_points)
            .finish_non_exhaustive()
    }
}

impl FdProblem {
    pub fn new<V>(potential: V, x_min: f64, x_max: f64, n_points: usize) -> Result<Self>
    where
        V: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        if !(x_min.is_finite() && x_max.is_finite() && x_max > x_min) {
            return Err(Error::InvalidGrid { x_min, x_max });
        }
        if n_points < MIN_FD_POINTS {
            return Err(Error::GridTooCoarse {
                n_points,
                required: MIN_FD_POINTS,
            });
        }
        Ok(Self {
            potential: Box::new(potential),
            x_min,
            x_max,
            n_points,
        })
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn spacing(&self) -> f64 {
        (self.x_max - self.x_min) / (self.n_points - 1) as f64
    }

    pub fn x(&self, i: usize) -> f64 {
        if i + 1 == self.n_points {
            self.x_max
        } else {
            self.x_min + i as f64 * self.spacing()
        }
    }

    pub fn potential(&self, x: f64) -> f64 {
        (self.potential)(x)
    }

    /// `h · sqrt(max |V|)` over the nodes; below 0.5 the three-point
    /// kinetic stencil resolves the local wavelength.
    pub fn resolution(&self) -> f64 {
        let vmax = (0..self.n_points)
            .map(|i| self.potential(self.x(i)).abs())
            .fold(0.0, f64::max);
        self.spacing() * vmax.sqrt()
    }

    pub fn is_resolved(&self) -> bool {
        self.resolution() < 0.5
    }

    /// `(-D² + V) f` with the three-point stencil on the nodes strictly
    /// inside the walls; zero on the walls.
    pub fn apply(&self, f: &GridFunction) -> Result<GridFunction> {
        if f.n_points() != self.n_points || f.x_min() != self.x_min || f.x_max() != self.x_max {
            return Err(Error::GridMismatch);
        }
        let h2 = self.spacing() * self.spacing();
        let v = f.values();
        let mut out = vec![Complex64::new(0.0, 0.0); self.n_points];
        for i in 1..self.n_points - 1 {
            out[i] = (v[i] * 2.0 - v[i - 1] - v[i + 1]) / h2 + v[i] * self.potential(self.x(i));
        }
        f.with_values(out)
    }
}

/// `max_interior |apply(f) - E f| / max |f|`, over the nodes where
/// five-point stencils are defined.
pub fn residual<F>(apply: F, f: &GridFunction, energy: f64) -> Result<f64>
where
    F: FnOnce(&GridFunction) -> Result<GridFunction>,
{
    let hf = apply(f)?;
    if !hf.same_grid(f) {
        return Err(Error::GridMismatch);
    }
    let scale = f.max_abs();
    let worst = f
        .interior()
        .map(|i| (hf.values()[i] - f.values()[i] * energy).norm())
        .fold(0.0, f64::max);
    Ok(worst / scale)
}

/// Least-squares slope of `log |f|` against `x` on `[x_lo, x_hi]`.
///
/// Oscillating data is reduced to its envelope, the strict local maxima
/// of `|f|`; fewer than three maxima is an error. Data without interior
/// extrema is fitted point by point.
pub fn slope_fit(f: &GridFunction, x_lo: f64, x_hi: f64) -> Result<f64> {
    let n = f.n_points();
    let mag: Vec<f64> = f.values().iter().map(|v| v.norm()).collect();
    let inside: Vec<usize> = (0..n).filter(|&i| f.x(i) >= x_lo && f.x(i) <= x_hi).collect();
    let is_max = |i: usize| i > 0 && i + 1 < n && mag[i] > mag[i - 1] && mag[i] > mag[i + 1];
    let is_min = |i: usize| i > 0 && i + 1 < n && mag[i] < mag[i - 1] && mag[i] < mag[i + 1];
    let peaks: Vec<usize> = inside.iter().copied().filter(|&i| is_max(i)).collect();
    let troughs = inside.iter().filter(|&&i| is_min(i)).count();
    let points = if peaks.is_empty() && troughs == 0 {
        inside
    } else if peaks.len() < 3 {
        return Err(Error::InsufficientPeaks { found: peaks.len() });
    } else {
        peaks
    };
    let samples: Vec<(f64, f64)> = points
        .into_iter()
        .filter(|&i| mag[i] > 0.0)
        .map(|i| (f.x(i), mag[i].ln()))
        .collect();
    if samples.len() < 2 {
        return Err(Error::InsufficientPeaks {
            found: samples.len(),
        });
    }
    let m = samples.len() as f64;
    let (sx, sy) = samples
        .iter()
        .fold((0.0, 0.0), |(a, b), &(x, y)| (a + x, b + y));
    let (mx, my) = (sx / m, sy / m);
    let (sxy, sxx) = samples.iter().fold((0.0, 0.0), |(a, b), &(x, y)| {
        (a + (x - mx) * (y - my), b + (x - mx) * (x - mx))
    });
    Ok(sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(x_min: f64, x_max: f64, n: usize, f: impl Fn(f64) -> f64) -> GridFunction {
        GridFunction::from_fn(x_min, x_max, n, |x| Complex64::new(f(x), 0.0)).unwrap()
    }

    #[test]
    fn slope_of_pure_exponential() {
        let g = real(0.0, 3.0, 301, |x| (2.0 * x).exp());
        assert!((slope_fit(&g, 0.5, 2.5).unwrap() - 2.0).abs() < 1e-6);
    }

    #[test]
    fn slope_through_oscillation() {
        let g = real(0.0, 10.0, 10001, |x| (-x).exp() * (5.0 * x).cos());
        assert!((slope_fit(&g, 1.0, 9.0).unwrap() + 1.0).abs() < 1e-2);
    }

    #[test]
    fn too_few_peaks() {
        let g = real(0.0, 10.0, 1001, |x| (0.5 * x).sin());
        assert!(matches!(
            slope_fit(&g, 0.0, 10.0),
            Err(Error::InsufficientPeaks { found: 2 })
        ));
    }

    #[test]
    fn residual_negative_control() {
        let g = real(-1.0, 1.0, 201, |x| (3.0 * x).sin() + 0.2);
        let p = FdProblem::new(|_| 0.0, -1.0, 1.0, 201).unwrap();
        assert!(residual(|f| p.apply(f), &g, 1.0).unwrap() > 1.0);
        assert!(matches!(
            residual(|_| GridFunction::zeros(0.0, 1.0, 201), &g, 1.0),
            Err(Error::GridMismatch)
        ));
    }

    #[test]
    fn rejects_coarse_problems() {
        assert!(FdProblem::new(|_| 0.0, 0.0, 1.0, 50).is_err());
        assert!(FdProblem::new(|_| 0.0, 1.0, 0.0, 500).is_err());
    }

    #[test]
    fn oracle_is_independent_of_closed_forms() {
        let sources = [
            include_str!("mod.rs"),
            include_str!("eigen.rs"),
            include_str!("scatter.rs"),
        ];
        let banned = [
            ["crate::", "models"].concat(),
            ["crate::", "specfun"].concat(),
            ["crate::", "similarity"].concat(),
            ["super::super::", "models"].concat(),
            ["super::super::", "specfun"].concat(),
        ];
        for src in sources {
            for b in &banned {
                assert!(!src.contains(b.as_str()), "oracle source references {b}");
            }
        }
    }
}
