//! The envelope of Re ψ decays for μ < 0 and grows for μ > 0.

use num_complex::Complex64;
use swanson::models::{PoschlTellerModel, SuperpotentialModel};
use swanson::oracle::slope_fit;
use swanson::similarity::SwansonParams;

fn main() -> swanson::error::Result<()> {
    for (alpha, beta, lambda2) in [(0.125, 0.25, 5.0), (0.5, 0.25, 1.0), (0.2, 0.2, 1.0)] {
        let m = SuperpotentialModel::PoschlTeller(PoschlTellerModel::new(
            lambda2,
            1.0,
            SwansonParams::new(alpha, beta)?,
        )?);
        let k = 3.0;
        let a = m.psi_asymptotics(k)?;
        let psi = m.scattering_state(k)?.psi_grid(0.0, 12.0, 12001)?;
        let re = psi.map(|_, v| Complex64::new(v.re, 0.0));
        let fit = slope_fit(&re, 4.0, 10.0)?;
        println!(
            "alpha = {alpha}, beta = {beta}: {} rate {:+.4}, fitted {:+.4}",
            a.kind.as_str(),
            a.rate,
            fit
        );
    }
    Ok(())
}
