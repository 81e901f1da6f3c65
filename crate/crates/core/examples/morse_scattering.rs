//! Total reflection from the Morse wall, checked against Numerov integration.

use swanson::models::MorseModel;
use swanson::oracle::{fd_scatter, FdProblem};
use swanson::similarity::SwansonParams;

fn main() -> swanson::error::Result<()> {
    let m = MorseModel::new(2.0, 1.0, 1.0, SwansonParams::new(0.5, 0.25)?)?;
    let pot = m;
    let problem = FdProblem::new(move |x| pot.potential(x), -4.0, 30.0, 34001)?;
    for k in [0.5, 1.0, 2.0, 4.0] {
        let s = m.scattering(k)?;
        let fd = fd_scatter(&problem, k)?;
        println!(
            "k = {k}: R = {:.9}  |R| = {:.12}  fd R = {:.9}",
            s.r,
            s.r.norm(),
            fd.r
        );
    }
    Ok(())
}
