//! Evaluates the special functions behind the closed-form states.

use num_complex::Complex64;
use swanson::specfun::{assoc_laguerre, gamma, hyp1f1, hyp2f1, hyp_u_asymptotic, log_gamma};

fn main() -> Result<(), swanson::error::SpecialFunctionError> {
    let z = Complex64::new(0.5, 2.0);
    println!("Gamma({z}) = {}", gamma(z)?);
    println!("log Gamma(100 + 3i) = {}", log_gamma(Complex64::new(100.0, 3.0))?);

    let (a, b, c) = (Complex64::new(2.0, 0.5), Complex64::new(2.0, -0.5), Complex64::new(0.5, 0.0));
    for x in [-0.5, -5.0, -100.0] {
        println!("2F1(a, conj a; 1/2; {x}) = {}", hyp2f1(a, b, c, Complex64::new(x, 0.0))?);
    }

    let (a, b) = (Complex64::new(-5.0, 1.0), Complex64::new(3.0, 2.0));
    for x in [1.0, 50.0, 120.0] {
        println!("M(a, b, {x}) = {:.6e}", hyp1f1(a, b, x)?);
    }
    println!("U(a, b, 40) = {:.6e}", hyp_u_asymptotic(a, b, 40.0)?);
    println!("L_5^(1.7)(3) = {}", assoc_laguerre(5, 1.7, 3.0));
    Ok(())
}
