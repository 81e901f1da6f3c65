//! Maps a Swanson Hamiltonian to its Hermitian partner and checks
//! `ρ H f = h ρ f` on a test function.

use num_complex::Complex64;
use swanson::grid::GridFunction;
use swanson::similarity::{
    apply_hermitian, apply_swanson, rho, riccati_map, SwansonParams, TanhSuperpotential,
};

fn main() -> swanson::error::Result<()> {
    let params = SwansonParams::new(0.5, 0.25)?;
    let w = TanhSuperpotential { strength: 1.0, sigma: 1.0 };
    let v = riccati_map(&params, w);
    println!("mu = {}, w_scale = {:.6}", params.mu(), params.w_scale());
    for x in [0.0, 1.0, 5.0] {
        println!("V({x}) = {:.6}", v.value(x));
    }

    let f = GridFunction::from_fn(-6.0, 6.0, 12001, |x| {
        Complex64::new((-x * x).exp(), 0.3 * x * (-x * x / 2.0).exp())
    })?;
    let hf = apply_swanson(&params, &w, &f)?;
    let rf = f.map(|x, val| val * rho(&params, &w, x).unwrap());
    let h_rf = apply_hermitian(|x| v.value(x), &rf)?;
    let worst = f
        .interior()
        .map(|i| (hf.values()[i] * rho(&params, &w, f.x(i)).unwrap() - h_rf.values()[i]).norm())
        .fold(0.0, f64::max);
    println!("max |rho H f - h rho f| = {worst:.2e}");
    Ok(())
}
