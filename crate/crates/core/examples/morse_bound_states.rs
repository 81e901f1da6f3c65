//! Morse realization: levels, excitation energies and the FD comparison.

use swanson::models::MorseModel;
use swanson::oracle::{fd_eigen, FdProblem};
use swanson::similarity::SwansonParams;

fn main() -> swanson::error::Result<()> {
    let m = MorseModel::new(2.0, 1.0, 1.0, SwansonParams::new(0.5, 0.25)?)?;
    println!("a1 = {:.6}, b1 = {:.6}, V_inf = {}", m.a1(), m.b1(), m.v_infinity());
    let pot = m;
    let problem = FdProblem::new(move |x| pot.potential(x), -3.0, 25.0, 4000)?;
    let states = m.bound_spectrum();
    let fd = fd_eigen(&problem, states.len())?;
    for (s, (e, _)) in states.iter().zip(&fd) {
        println!(
            "n = {}  epsilon = {:>10.6}  excitation = {:>9.6}  fd epsilon = {:>10.6}",
            s.n(),
            s.epsilon(),
            s.excitation(),
            e - m.v_infinity()
        );
    }
    Ok(())
}
