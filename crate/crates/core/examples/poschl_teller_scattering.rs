//! Reflection and transmission for integer and half-integer λ₁.

use swanson::models::PoschlTellerModel;
use swanson::similarity::SwansonParams;

fn main() -> swanson::error::Result<()> {
    let params = SwansonParams::new(0.5, 0.25)?;
    for lambda1 in [3.0, 2.5] {
        let m = PoschlTellerModel::from_lambda1(lambda1, 1.0, params)?;
        println!("lambda1 = {lambda1} (lambda2 = {:.6})", m.lambda2());
        for k in [0.5, 1.0, 2.0, 5.0] {
            let s = m.scattering(k)?;
            println!(
                "  k = {k}: |R|^2 = {:.3e}  |T|^2 = {:.6}  sum - 1 = {:.1e}",
                s.r.norm_sqr(),
                s.t.norm_sqr(),
                s.flux() - 1.0
            );
        }
    }
    Ok(())
}
