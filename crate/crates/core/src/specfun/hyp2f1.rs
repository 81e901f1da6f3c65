//! Gauss hypergeometric function `₂F₁(a, b; c; z)`.
//!
//! Region strategy:
//! - `|z| <= 0.5`: the defining power series.
//! - `|z/(z-1)| <= 0.75` (this covers `-3 <= z < 0`): Pfaff's transformation
//!   `F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1))`.
//! - `|z| > 1.1`: the `1/z` connection formula
//!   `F = Γ(c)Γ(b-a)/(Γ(b)Γ(c-a)) (-z)^{-a} F(a, a-c+1; a-b+1; 1/z) + (a ↔ b)`,
//!   which needs `b - a` off the integers.
//! - otherwise, if `|z| < 0.95`, the power series again.
//!
//! Terminating series (`a` or `b` a non-positive integer) are summed
//! directly for any `z`.

use num_complex::Complex64;

use super::gamma::{gamma_ratio, is_nonpositive_integer};
use super::{series_converged, SERIES_MAX_TERMS};
use crate::error::SpecialFunctionError;

const FN: &str = "hyp2f1";
const INTEGER_TOL: f64 = 1e-12;

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

fn terminates(a: Complex64) -> bool {
    is_nonpositive_integer(a)
}

/// True when `z` is within `INTEGER_TOL` of an integer.
fn near_integer(z: Complex64) -> bool {
    z.im.abs() < INTEGER_TOL && (z.re - z.re.round()).abs() < INTEGER_TOL
}

/// The power series, valid for `|z| < 1` or when it terminates.
pub fn hyp2f1_series(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    z: Complex64,
) -> Result<Complex64, SpecialFunctionError> {
    check_c(c)?;
    let finite = terminates(a) || terminates(b);
    if !finite && z.norm() >= 1.0 {
        return Err(SpecialFunctionError::UnsupportedRegion {
            function: FN,
            re: z.re,
            im: z.im,
        });
    }
    let mut term = one();
    let mut sum = one();
    let mut small = 0;
    for n in 0..SERIES_MAX_TERMS {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        sum += term;
        if term.norm() == 0.0 && finite {
            return Ok(sum);
        }
        if series_converged(term, sum, &mut small) {
            return Ok(sum);
        }
    }
    Err(SpecialFunctionError::ConvergenceFailure {
        function: FN,
        terms: SERIES_MAX_TERMS,
    })
}

/// Pfaff's transformation; requires `|z/(z-1)| < 1`, i.e. `Re z < 1/2`.
pub fn hyp2f1_pfaff(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    z: Complex64,
) -> Result<Complex64, SpecialFunctionError> {
    check_c(c)?;
    let w = z / (z - 1.0);
    if w.norm() >= 1.0 {
        return Err(SpecialFunctionError::UnsupportedRegion {
            function: FN,
            re: z.re,
            im: z.im,
        });
    }
    let prefactor = (-a * (one() - z).ln()).exp();
    Ok(prefactor * hyp2f1_series(a, c - b, c, w)?)
}

/// The `1/z` connection formula; requires `|z| > 1` and `b - a` not an integer.
pub fn hyp2f1_inverse(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    z: Complex64,
) -> Result<Complex64, SpecialFunctionError> {
    check_c(c)?;
    if z.norm() <= 1.0 {
        return Err(SpecialFunctionError::UnsupportedRegion {
            function: FN,
            re: z.re,
            im: z.im,
        });
    }
    let d = b - a;
    if near_integer(d) {
        return Err(SpecialFunctionError::DegenerateConnection(d.re));
    }
    let inv = z.inv();
    let log_mz = (-z).ln();
    let branch = |p: Complex64, q: Complex64| -> Result<Complex64, SpecialFunctionError> {
        // Γ(c)Γ(q-p)/(Γ(q)Γ(c-p)) (-z)^{-p} F(p, p-c+1; p-q+1; 1/z)
        let coeff = gamma_ratio(&[c, q - p], &[q, c - p])?;
        if coeff.norm() == 0.0 {
            return Ok(coeff);
        }
        let power = (-p * log_mz).exp();
        Ok(coeff * power * hyp2f1_series(p, p - c + 1.0, p - q + 1.0, inv)?)
    };
    Ok(branch(a, b)? + branch(b, a)?)
}

fn check_c(c: Complex64) -> Result<(), SpecialFunctionError> {
    if is_nonpositive_integer(c) {
        return Err(SpecialFunctionError::Pole {
            function: FN,
            re: c.re,
            im: c.im,
        });
    }
    Ok(())
}

/// `₂F₁(a, b; c; z)` on the region described in the module docs.
pub fn hyp2f1(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    z: Complex64,
) -> Result<Complex64, SpecialFunctionError> {
    check_c(c)?;
    if z == Complex64::new(0.0, 0.0) {
        return Ok(one());
    }
    if terminates(a) || terminates(b) {
        return hyp2f1_series(a, b, c, z);
    }
    let r = z.norm();
    if r <= 0.5 {
        return hyp2f1_series(a, b, c, z);
    }
    if (z / (z - 1.0)).norm() <= 0.75 {
        return hyp2f1_pfaff(a, b, c, z);
    }
    if r > 1.1 {
        return hyp2f1_inverse(a, b, c, z);
    }
    if r < 0.95 {
        return hyp2f1_series(a, b, c, z);
    }
    Err(SpecialFunctionError::UnsupportedRegion {
        function: FN,
        re: z.re,
        im: z.im,
    })
}
