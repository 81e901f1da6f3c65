/// A superpotential `W(x)` together with `W'(x)` and the antiderivative
/// `∫₀ˣ W`. The additive constant is fixed by `antiderivative(0) = 0`.
pub trait Superpotential {
    fn value(&self, x: f64) -> f64;
    fn derivative(&self, x: f64) -> f64;
    fn antiderivative(&self, x: f64) -> f64;
}

impl<T: Superpotential + ?Sized> Superpotential for &T {
    fn value(&self, x: f64) -> f64 {
        (**self).value(x)
    }
    fn derivative(&self, x: f64) -> f64 {
        (**self).derivative(x)
    }
    fn antiderivative(&self, x: f64) -> f64 {
        (**self).antiderivative(x)
    }
}

/// `W(x) = strength · sigma · tanh(sigma x)`, the Pöschl-Teller form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TanhSuperpotential {
    pub strength: f64,
    pub sigma: f64,
}

/// `ln cosh t` without overflow for large `|t|`.
pub(crate) fn ln_cosh(t: f64) -> f64 {
    let a = t.abs();
    a + (-2.0 * a).exp().ln_1p() - std::f64::consts::LN_2
}

impl Superpotential for TanhSuperpotential {
    fn value(&self, x: f64) -> f64 {
        self.strength * self.sigma * (self.sigma * x).tanh()
    }

    fn derivative(&self, x: f64) -> f64 {
        let sech = 1.0 / (self.sigma * x).cosh();
        self.strength * self.sigma * self.sigma * sech * sech
    }

    fn antiderivative(&self, x: f64) -> f64 {
        self.strength * ln_cosh(self.sigma * x)
    }
}

/// `W(x) = a sigma - b sigma e^{-sigma x}`, the Morse form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExponentialSuperpotential {
    pub a: f64,
    pub b: f64,
    pub sigma: f64,
}

impl Superpotential for ExponentialSuperpotential {
    fn value(&self, x: f64) -> f64 {
        self.sigma * (self.a - self.b * (-self.sigma * x).exp())
    }

    fn derivative(&self, x: f64) -> f64 {
        self.b * self.sigma * self.sigma * (-self.sigma * x).exp()
    }

    fn antiderivative(&self, x: f64) -> f64 {
        self.a * self.sigma * x + self.b * (-self.sigma * x).exp_m1()
    }
}

/// A user-supplied `W`. The derivative is taken by central differences
/// unless a closed form is attached, and the antiderivative is integrated
/// from `x = 0` by adaptive Simpson quadrature.
pub struct NumericSuperpotential<F> {
    w: F,
    w_prime: Option<Box<dyn Fn(f64) -> f64 + Send + Sync>>,
    tolerance: f64,
}

impl<F: Fn(f64) -> f64> NumericSuperpotential<F> {
    pub fn new(w: F) -> Self {
        Self {
            w,
            w_prime: None,
            tolerance: 1e-12,
        }
    }

    pub fn with_derivative<G>(mut self, w_prime: G) -> Self
    where
        G: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        self.w_prime = Some(Box::new(w_prime));
        self
    }

    pub fn with_tolerance(mut self, tolerance: f64) -> Self {
        self.tolerance = tolerance;
        self
    }

    #[allow(clippy::too_many_arguments)]
    fn simpson(&self, a: f64, fa: f64, b: f64, fb: f64, m: f64, fm: f64, whole: f64, tol: f64, depth: u32) -> f64 {
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = (self.w)(lm);
        let frm = (self.w)(rm);
        let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
        let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
        let delta = left + right - whole;
        if depth == 0 || delta.abs() <= 15.0 * tol {
            return left + right + delta / 15.0;
        }
        self.simpson(a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1)
            + self.simpson(m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1)
    }
}

impl<F: Fn(f64) -> f64> Superpotential for NumericSuperpotential<F> {
    fn value(&self, x: f64) -> f64 {
        (self.w)(x)
    }

    fn derivative(&self, x: f64) -> f64 {
        if let Some(d) = &self.w_prime {
            return d(x);
        }
        let h = 1e-4 * (1.0 + x.abs());
        let w = &self.w;
        (w(x - 2.0 * h) - 8.0 * w(x - h) + 8.0 * w(x + h) - w(x + 2.0 * h)) / (12.0 * h)
    }

    fn antiderivative(&self, x: f64) -> f64 {
        if x == 0.0 {
            return 0.0;
        }
        let (a, b) = (0.0, x);
        let fa = (self.w)(a);
        let fb = (self.w)(b);
        let m = 0.5 * (a + b);
        let fm = (self.w)(m);
        let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
        self.simpson(a, fa, b, fb, m, fm, whole, self.tolerance, 40)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn central(sp: &dyn Superpotential, x: f64) -> f64 {
        let h = 1e-4;
        (sp.value(x + h) - sp.value(x - h)) / (2.0 * h)
    }

    #[test]
    fn handles_are_consistent() {
        let tanh = TanhSuperpotential {
            strength: 1.7,
            sigma: 0.8,
        };
        let morse = ExponentialSuperpotential {
            a: 2.0,
            b: 1.0,
            sigma: 1.3,
        };
        for sp in [&tanh as &dyn Superpotential, &morse] {
            assert_eq!(sp.antiderivative(0.0), 0.0);
            for &x in &[-2.0, -0.3, 0.0, 0.9, 3.5] {
                let d = sp.derivative(x);
                assert!((d - central(sp, x)).abs() <= 1e-6 * d.abs().max(1e-3), "x={x}");
                let h = 1e-4;
                let fd = (sp.antiderivative(x + h) - sp.antiderivative(x - h)) / (2.0 * h);
                assert!((fd - sp.value(x)).abs() < 1e-6 * (1.0 + sp.value(x).abs()));
            }
        }
    }

    #[test]
    fn ln_cosh_is_stable() {
        assert!((ln_cosh(0.3) - 0.3f64.cosh().ln()).abs() < 1e-15);
        assert!((ln_cosh(-800.0) - (800.0 - std::f64::consts::LN_2)).abs() < 1e-12);
    }

    #[test]
    fn numeric_matches_closed_form() {
        let exact = TanhSuperpotential {
            strength: 2.0,
            sigma: 1.0,
        };
        let numeric = NumericSuperpotential::new(|x: f64| 2.0 * x.tanh());
        for &x in &[-4.0, -1.0, 0.5, 2.5] {
            assert!((numeric.antiderivative(x) - exact.antiderivative(x)).abs() < 1e-10);
            assert!((numeric.derivative(x) - exact.derivative(x)).abs() < 1e-8);
        }
    }
}
