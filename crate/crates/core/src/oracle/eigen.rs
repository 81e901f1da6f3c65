use num_complex::Complex64;

use super::FdProblem;
use crate::error::{Error, Result};
use crate::grid::GridFunction;

/// Largest wall amplitude of the ground state, relative to its peak.
const WALL_TOLERANCE: f64 = 1e-6;
const BISECTION_STEPS: usize = 200;
const INVERSE_ITERATIONS: usize = 6;

/// The symmetric tridiagonal `-D² + V` on the nodes strictly inside the walls.
struct Tridiagonal {
    diag: Vec<f64>,
    off: f64,
}

impl Tridiagonal {
    fn new(problem: &FdProblem) -> Self {
        let h2 = problem.spacing() * problem.spacing();
        let diag = (1..problem.n_points() - 1)
            .map(|i| 2.0 / h2 + problem.potential(problem.x(i)))
            .collect();
        Self { diag, off: -1.0 / h2 }
    }

    /// Number of eigenvalues below `lambda` (Sturm sequence).
    fn count_below(&self, lambda: f64) -> usize {
        let e2 = self.off * self.off;
        let mut q = 1.0;
        let mut count = 0;
        for (i, &d) in self.diag.iter().enumerate() {
            q = if i == 0 { d - lambda } else { d - lambda - e2 / q };
            if q == 0.0 {
                q = f64::EPSILON * (d.abs() + self.off.abs());
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    fn bounds(&self) -> (f64, f64) {
        let r = 2.0 * self.off.abs();
        let lo = self.diag.iter().copied().fold(f64::INFINITY, f64::min) - r;
        let hi = self.diag.iter().copied().fold(f64::NEG_INFINITY, f64::max) + r;
        (lo, hi)
    }

    /// The `j`-th smallest eigenvalue by bisection.
    fn eigenvalue(&self, j: usize) -> f64 {
        let (mut lo, mut hi) = self.bounds();
        for _ in 0..BISECTION_STEPS {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) > j {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    /// Solves `(T - shift) x = b` by Gaussian elimination without pivoting.
    fn solve_shifted(&self, shift: f64, b: &[f64]) -> Vec<f64> {
        let n = self.diag.len();
        let e = self.off;
        let tiny = f64::EPSILON * (self.diag[0].abs() + e.abs());
        let mut c = vec![0.0; n];
        let mut y = vec![0.0; n];
        let mut piv = self.diag[0] - shift;
        if piv.abs() < tiny {
            piv = tiny;
        }
        c[0] = e / piv;
        y[0] = b[0] / piv;
        for i in 1..n {
            let mut p = self.diag[i] - shift - e * c[i - 1];
            if p.abs() < tiny {
                p = tiny;
            }
            c[i] = e / p;
            y[i] = (b[i] - e * y[i - 1]) / p;
        }
        for i in (0..n - 1).rev() {
            y[i] -= c[i] * y[i + 1];
        }
        y
    }

    fn apply(&self, v: &[f64]) -> Vec<f64> {
        let n = v.len();
        (0..n)
            .map(|i| {
                let mut s = self.diag[i] * v[i];
                if i > 0 {
                    s += self.off * v[i - 1];
                }
                if i + 1 < n {
                    s += self.off * v[i + 1];
                }
                s
            })
            .collect()
    }

    fn eigenvector(&self, lambda: f64) -> Result<Vec<f64>> {
        let n = self.diag.len();
        let scale = self.bounds().1.abs().max(self.bounds().0.abs());
        let shift = lambda + 1e-12 * scale;
        // Deterministic start with components along every eigenvector.
        let mut v: Vec<f64> = (0..n).map(|i| 1.0 + 0.5 * ((i as f64) * 0.618_034).sin()).collect();
        for _ in 0..INVERSE_ITERATIONS {
            v = self.solve_shifted(shift, &v);
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if !norm.is_finite() || norm == 0.0 {
                return Err(Error::EigenConvergence(format!(
                    "inverse iteration broke down at lambda = {lambda}"
                )));
            }
            v.iter_mut().for_each(|x| *x /= norm);
        }
        let tv = self.apply(&v);
        let res = tv
            .iter()
            .zip(&v)
            .map(|(a, b)| (a - lambda * b).powi(2))
            .sum::<f64>()
            .sqrt();
        if res > 1e-8 * scale {
            return Err(Error::EigenConvergence(format!(
                "residual {res:.3e} at lambda = {lambda}"
            )));
        }
        Ok(v)
    }
}

/// The lowest `count` eigenpairs of the three-point `-D² + V` with
/// Dirichlet walls, ascending. Eigenvectors are normalized to unit
/// trapezoid norm and signed so that their largest component is positive.
pub fn fd_eigen(problem: &FdProblem, count: usize) -> Result<Vec<(f64, GridFunction)>> {
    if count == 0 {
        return Err(Error::EigenConvergence("count must be at least 1".into()));
    }
    let t = Tridiagonal::new(problem);
    let n_inner = t.diag.len();
    if count > n_inner {
        return Err(Error::EigenConvergence(format!(
            "requested {count} eigenpairs of a {n_inner}-dimensional problem"
        )));
    }
    let h = problem.spacing();
    let mut out = Vec::with_capacity(count);
    for j in 0..count {
        let lambda = t.eigenvalue(j);
        let inner = t.eigenvector(lambda)?;
        let norm = (inner.iter().map(|x| x * x).sum::<f64>() * h).sqrt();
        let peak = inner
            .iter()
            .copied()
            .fold(0.0f64, |m, x| if x.abs() > m.abs() { x } else { m });
        let sign = peak.signum() / norm;
        if j == 0 {
            let wall = inner[0].abs().max(inner[n_inner - 1].abs());
            let amplitude = wall / peak.abs();
            if amplitude > WALL_TOLERANCE {
                return Err(Error::WindowTooSmall { amplitude });
            }
        }
        let mut values = vec![Complex64::new(0.0, 0.0); problem.n_points()];
        for (i, x) in inner.iter().enumerate() {
            values[i + 1] = Complex64::new(x * sign, 0.0);
        }
        out.push((
            lambda,
            GridFunction::from_values(problem.x_min(), problem.x_max(), values)?,
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::residual;

    fn harmonic(n: usize) -> FdProblem {
        FdProblem::new(|x| x * x, -10.0, 10.0, n).unwrap()
    }

    #[test]
    fn harmonic_anchor() {
        let pairs = fd_eigen(&harmonic(4000), 3).unwrap();
        for (n, (e, _)) in pairs.iter().enumerate() {
            assert!((e - (2 * n + 1) as f64).abs() < 1e-3, "n={n} e={e}");
        }
        assert!((pairs[0].0 - 1.0).abs() < 1e-4);
    }

    #[test]
    fn second_order_convergence() {
        let err = |n: usize| (fd_eigen(&harmonic(n), 1).unwrap()[0].0 - 1.0).abs();
        let ratio = err(1001) / err(2001);
        assert!((ratio - 4.0).abs() < 0.1, "ratio {ratio}");
    }

    #[test]
    fn eigenvectors_are_normalized_and_self_consistent() {
        let p = harmonic(2000);
        for (e, v) in fd_eigen(&p, 3).unwrap() {
            let norm: f64 = v.values().iter().map(|z| z.norm_sqr()).sum::<f64>() * v.spacing();
            assert!((norm - 1.0).abs() < 1e-12);
            assert!(residual(|f| p.apply(f), &v, e).unwrap() < 1e-10);
        }
    }

    #[test]
    fn window_too_small() {
        let p = FdProblem::new(|x| x * x, -1.5, 1.5, 400).unwrap();
        assert!(matches!(fd_eigen(&p, 1), Err(Error::WindowTooSmall { .. })));
    }
}
