//! Bound states of the Pöschl-Teller realization and their η-norms.

use swanson::models::PoschlTellerModel;
use swanson::similarity::{eta_inner_product, SwansonParams};

fn main() -> swanson::error::Result<()> {
    let m = PoschlTellerModel::new(1.0, 1.0, SwansonParams::new(0.5, 0.25)?)?;
    println!("zeta = {}, lambda1 = {}, V_inf = {}", m.zeta(), m.lambda1(), m.v_infinity());
    let sp = m.superpotential();
    let states = m.bound_spectrum();
    for s in &states {
        let psi = s.psi_grid(-20.0, 20.0, 40001)?;
        let norm = eta_inner_product(m.params(), &sp, &psi, &psi)?;
        println!(
            "n = {}  epsilon = {:>5}  E = {:.6}  <psi|eta|psi> = {:.9}",
            s.n(),
            s.epsilon(),
            s.energy(),
            norm.re
        );
    }
    Ok(())
}
