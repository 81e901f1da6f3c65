//! The finite-difference oracle on a potential with known answers.

use num_complex::Complex64;
use swanson::grid::GridFunction;
use swanson::oracle::{fd_eigen, fd_scatter, slope_fit, FdProblem};

fn main() -> swanson::error::Result<()> {
    let well = FdProblem::new(|x| -12.0 / x.cosh().powi(2), -20.0, 20.0, 4000)?;
    for (e, _) in fd_eigen(&well, 3)? {
        println!("eigenvalue {e:.6}");
    }
    let wide = FdProblem::new(|x| -12.0 / x.cosh().powi(2), -20.0, 20.0, 40001)?;
    let s = fd_scatter(&wide, 1.0)?;
    println!("|R| = {:.2e}, |T| = {:.9}", s.r.norm(), s.t.norm());
    let f = GridFunction::from_fn(0.0, 10.0, 10001, |x| Complex64::new((-0.7 * x).exp() * (6.0 * x).cos(), 0.0))?;
    println!("envelope slope = {:.4}", slope_fit(&f, 1.0, 9.0)?);
    Ok(())
}
