//! Modified charge and current densities of a continuum state.

use swanson::models::{MorseModel, PoschlTellerModel, SuperpotentialModel};
use swanson::similarity::{charge_density, current_density, SwansonParams};

fn main() -> swanson::error::Result<()> {
    let params = SwansonParams::new(0.5, 0.25)?;
    let models = [
        (SuperpotentialModel::PoschlTeller(PoschlTellerModel::from_lambda1(2.5, 1.0, params)?), -10.0),
        (SuperpotentialModel::Morse(MorseModel::new(2.0, 1.0, 1.0, params)?), -4.0),
    ];
    for (m, lo) in models {
        let psi = m.scattering_state(1.0)?.psi_grid(lo, 12.0, 16001)?;
        let sp = m.superpotential();
        let j = current_density(m.params(), &sp, &psi)?;
        let chi = charge_density(m.params(), &sp, &psi)?;
        let vals: Vec<f64> = psi.interior().map(|i| j.values()[i].re).collect();
        let (min, max) = vals
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| (a.min(v), b.max(v)));
        println!(
            "{}: j in [{min:.12}, {max:.12}], chi(0) = {:.6}",
            m.name(),
            chi.values()[psi.n_points() / 2].re
        );
    }
    Ok(())
}
