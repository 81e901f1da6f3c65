//! Uniform one-dimensional grids carrying complex samples.
//!
//! Derivatives use five-point central stencils, so the first and last
//! [`STENCIL_MARGIN`] samples of any differentiated quantity are not
//! meaningful. Operators in this crate write zero there.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Number of samples at each end excluded from derivative-based results.
pub const STENCIL_MARGIN: usize = 2;

/// The minimum number of points for a grid function.
pub const MIN_POINTS: usize = 3;

#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    x_min: f64,
    x_max: f64,
    values: Vec<Complex64>,
}

impl GridFunction {
    /// A zero-valued function on `n_points` equally spaced nodes spanning
    /// `[x_min, x_max]` inclusive.
    pub fn zeros(x_min: f64, x_max: f64, n_points: usize) -> Result<Self> {
        Self::from_values(x_min, x_max, vec![Complex64::new(0.0, 0.0); n_points])
    }

    pub fn from_values(x_min: f64, x_max: f64, values: Vec<Complex64>) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite() && x_max > x_min) {
            return Err(Error::InvalidGrid { x_min, x_max });
        }
        if values.len() < MIN_POINTS {
            return Err(Error::GridTooCoarse {
                n_points: values.len(),
                required: MIN_POINTS,
            });
        }
        Ok(Self {
            x_min,
            x_max,
            values,
        })
    }

    /// Samples `f` at every node.
    pub fn from_fn<F>(x_min: f64, x_max: f64, n_points: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(f64) -> Complex64,
    {
        let mut g = Self::zeros(x_min, x_max, n_points)?;
        for i in 0..n_points {
            let x = g.x(i);
            g.values[i] = f(x);
        }
        Ok(g)
    }

    /// Like [`GridFunction::from_fn`] for samplers that can fail.
    pub fn try_from_fn<F>(x_min: f64, x_max: f64, n_points: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(f64) -> Result<Complex64>,
    {
        let mut g = Self::zeros(x_min, x_max, n_points)?;
        for i in 0..n_points {
            let x = g.x(i);
            g.values[i] = f(x)?;
        }
        Ok(g)
    }

    /// A function on the same grid with new values.
    pub fn with_values(&self, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != self.values.len() {
            return Err(Error::GridMismatch);
        }
        Ok(Self {
            x_min: self.x_min,
            x_max: self.x_max,
            values,
        })
    }

    /// Pointwise map keeping the grid.
    pub fn map<F>(&self, mut f: F) -> Self
    where
        F: FnMut(f64, Complex64) -> Complex64,
    {
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(i, &v)| f(self.x(i), v))
            .collect();
        Self {
            x_min: self.x_min,
            x_max: self.x_max,
            values,
        }
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn n_points(&self) -> usize {
        self.values.len()
    }

    pub fn spacing(&self) -> f64 {
        (self.x_max - self.x_min) / (self.values.len() - 1) as f64
    }

    pub fn x(&self, i: usize) -> f64 {
        if i + 1 == self.values.len() {
            self.x_max
        } else {
            self.x_min + i as f64 * self.spacing()
        }
    }

    pub fn xs(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.values.len()).map(move |i| self.x(i))
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    /// Index range where five-point derivatives are defined.
    pub fn interior(&self) -> std::ops::Range<usize> {
        STENCIL_MARGIN..self.values.len().saturating_sub(STENCIL_MARGIN)
    }

    pub fn same_grid(&self, other: &GridFunction) -> bool {
        self.values.len() == other.values.len()
            && self.x_min == other.x_min
            && self.x_max == other.x_max
    }

    pub(crate) fn check_same_grid(&self, other: &GridFunction) -> Result<()> {
        if self.same_grid(other) {
            Ok(())
        } else {
            Err(Error::GridMismatch)
        }
    }

    /// Fails unless the grid supports the five-point stencils.
    pub(crate) fn require_stencil(&self) -> Result<()> {
        let required = 2 * STENCIL_MARGIN + 1;
        if self.values.len() < required {
            return Err(Error::GridTooCoarse {
                n_points: self.values.len(),
                required,
            });
        }
        Ok(())
    }

    /// Fourth-order central first derivative at interior node `i`.
    pub fn d1(&self, i: usize) -> Complex64 {
        let v = &self.values;
        let h = self.spacing();
        (v[i - 2] - v[i - 1] * 8.0 + v[i + 1] * 8.0 - v[i + 2]) / (12.0 * h)
    }

    /// Fourth-order central second derivative at interior node `i`.
    pub fn d2(&self, i: usize) -> Complex64 {
        let v = &self.values;
        let h = self.spacing();
        (-v[i - 2] + v[i - 1] * 16.0 - v[i] * 30.0 + v[i + 1] * 16.0 - v[i + 2]) / (12.0 * h * h)
    }

    /// `max |f|` over all nodes.
    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// `max |f|` over the interior nodes.
    pub fn max_abs_interior(&self) -> f64 {
        self.values[self.interior()]
            .iter()
            .map(|v| v.norm())
            .fold(0.0, f64::max)
    }

    /// Composite trapezoid rule over the whole grid.
    pub fn trapezoid(&self) -> Complex64 {
        let v = &self.values;
        let n = v.len();
        let inner: Complex64 = v[1..n - 1].iter().sum();
        (inner + (v[0] + v[n - 1]) * 0.5) * self.spacing()
    }
}
