use crate::error::{Constraint, Error, Result};

/// The Swanson couplings `(alpha, beta)` of `H = A†A + alpha A² + beta A†²`
/// together with the similarity exponent `mu = (alpha - beta)/(1 - alpha - beta)`.
///
/// Construction enforces `alpha + beta < 1` and `4 alpha beta < 1`.
/// `alpha == beta` is accepted and gives the Hermitian reduction `mu = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SwansonParams {
    alpha: f64,
    beta: f64,
    mu: f64,
}

impl SwansonParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha.is_finite() && beta.is_finite()) {
            return Err(Error::ConstraintViolation {
                which: Constraint::NonFinite,
            });
        }
        let sum = alpha + beta;
        if sum == 1.0 {
            return Err(Error::ConstraintViolation {
                which: Constraint::SumEqualsOne,
            });
        }
        if sum > 1.0 {
            return Err(Error::ConstraintViolation {
                which: Constraint::SumTooLarge,
            });
        }
        if 4.0 * alpha * beta >= 1.0 {
            return Err(Error::ConstraintViolation {
                which: Constraint::ProductTooLarge,
            });
        }
        Ok(Self {
            alpha,
            beta,
            mu: (alpha - beta) / (1.0 - sum),
        })
    }

    /// The Hermitian point `alpha = beta = 0`.
    pub fn hermitian() -> Self {
        Self {
            alpha: 0.0,
            beta: 0.0,
            mu: 0.0,
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    /// `1 - alpha - beta`, positive by construction.
    pub fn one_minus_sum(&self) -> f64 {
        1.0 - self.alpha - self.beta
    }

    /// `sqrt(1 - 4 alpha beta)`.
    pub fn sqrt_discriminant(&self) -> f64 {
        (1.0 - 4.0 * self.alpha * self.beta).sqrt()
    }

    /// Scale between the two superpotentials, `sqrt(1 - 4 alpha beta)/(1 - alpha - beta)`.
    pub fn w_scale(&self) -> f64 {
        self.sqrt_discriminant() / self.one_minus_sum()
    }

    pub fn is_hermitian(&self) -> bool {
        self.alpha == self.beta
    }

    /// A copy whose `mu` is shifted by `delta` while `alpha`, `beta` stay put.
    /// Breaks the similarity map on purpose; used by negative-control checks.
    #[doc(hidden)]
    pub fn with_corrupted_mu(&self, delta: f64) -> Self {
        Self {
            mu: self.mu + delta,
            ..*self
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu_for_reference_pairs() {
        assert_eq!(SwansonParams::new(0.5, 0.25).unwrap().mu(), 1.0);
        let p = SwansonParams::new(0.125, 0.25).unwrap();
        assert!((p.mu() + 0.2).abs() < 1e-15);
        assert_eq!(SwansonParams::new(0.0, 0.0).unwrap().mu(), 0.0);
    }

    #[test]
    fn constraint_violations_are_distinguished() {
        let which = |a, b| match SwansonParams::new(a, b) {
            Err(Error::ConstraintViolation { which }) => Some(which),
            _ => None,
        };
        assert_eq!(which(0.6, 0.5), Some(Constraint::SumTooLarge));
        assert_eq!(which(0.5, 0.5), Some(Constraint::SumEqualsOne));
        assert_eq!(which(-1.0, -0.3), Some(Constraint::ProductTooLarge));
        assert_eq!(which(f64::NAN, 0.0), Some(Constraint::NonFinite));
        assert_eq!(which(0.3, 0.2), None);
    }

    #[test]
    fn equal_couplings_are_hermitian() {
        let p = SwansonParams::new(0.2, 0.2).unwrap();
        assert!(p.is_hermitian());
        assert_eq!(p.mu(), 0.0);
    }
}
