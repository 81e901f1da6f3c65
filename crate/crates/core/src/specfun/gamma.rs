use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::SpecialFunctionError;

const LN_PI: f64 = 1.144_729_885_849_400_2;
const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

// B_{2m} / (2m (2m - 1)) for m = 1..=8.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// Recurrence shift target: Stirling is used once `Re z >= SHIFT_TO`.
const SHIFT_TO: f64 = 10.0;

pub(crate) fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.floor()
}

/// `sin(πz)` with the real part reduced first, so large `Re z` keeps accuracy.
pub fn sin_pi(z: Complex64) -> Complex64 {
    let n = z.re.round();
    let r = z.re - n;
    let (s, c) = (PI * r).sin_cos();
    let b = PI * z.im;
    let v = Complex64::new(s * b.cosh(), c * b.sinh());
    if n.rem_euclid(2.0) == 1.0 {
        -v
    } else {
        v
    }
}

fn stirling(w: Complex64) -> Complex64 {
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut p = inv;
    for c in STIRLING {
        series += p * c;
        p *= inv2;
    }
    (w - 0.5) * w.ln() - w + HALF_LN_2PI + series
}

/// Principal branch of `log Γ(z)`: analytic off the negative real axis and
/// real on the positive real axis, so `log Γ(z+1) = log Γ(z) + log z` holds
/// with the principal `log z`. The imaginary part is not reduced mod 2π.
///
/// Uses the Stirling series for `Re z >= 10` after upward recurrence, and
/// the reflection formula `Γ(z)Γ(1-z) = π / sin(πz)` for `Re z < 1/2`.
pub fn log_gamma(z: Complex64) -> Result<Complex64, SpecialFunctionError> {
    if !(z.re.is_finite() && z.im.is_finite()) || is_nonpositive_integer(z) {
        return Err(SpecialFunctionError::Pole {
            function: "log_gamma",
            re: z.re,
            im: z.im,
        });
    }
    if z.re < 0.5 {
        // The 2πi k term keeps the result on the same sheet as the
        // recurrence-continued function.
        let k = (0.5 * z.re + 0.25).floor();
        let branch = Complex64::new(LN_PI, (2.0 * PI).copysign(z.im) * k);
        return Ok(branch - sin_pi(z).ln() - log_gamma(Complex64::new(1.0, 0.0) - z)?);
    }
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.re < SHIFT_TO {
        shift += w.ln();
        w += 1.0;
    }
    Ok(stirling(w) - shift)
}

/// `Γ(z)`.
pub fn gamma(z: Complex64) -> Result<Complex64, SpecialFunctionError> {
    Ok(log_gamma(z)?.exp())
}

/// `1/Γ(z)`, which is entire: zero at the poles of Γ.
pub fn rgamma(z: Complex64) -> Complex64 {
    match log_gamma(z) {
        Ok(l) => (-l).exp(),
        Err(_) => Complex64::new(0.0, 0.0),
    }
}

/// `∏ Γ(num) / ∏ Γ(den)` through log-gamma sums. A pole in the denominator
/// makes the ratio zero; a pole in the numerator is an error.
pub fn gamma_ratio(num: &[Complex64], den: &[Complex64]) -> Result<Complex64, SpecialFunctionError> {
    let mut acc = Complex64::new(0.0, 0.0);
    for &z in num {
        acc += log_gamma(z)?;
    }
    for &z in den {
        if is_nonpositive_integer(z) {
            return Ok(Complex64::new(0.0, 0.0));
        }
        acc -= log_gamma(z)?;
    }
    Ok(acc.exp())
}
