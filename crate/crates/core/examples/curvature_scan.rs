//! Mean curvature and |A|² along the type IV parameter range, with the
//! Einstein constant for reference. The sign change of H marks the minimal
//! orbit, the crossings of |A|² with λ the biharmonic ones.

use std::error::Error;

use g2orbits::classify::closed_form_norm_sq;
use g2orbits::orbit::{action_spec, curvature_invariants};
use g2orbits::roots::linspace;
use g2orbits::ActionType;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let spec = action_spec(ActionType::IV);
    println!("lambda = {}", spec.einstein_constant);
    println!("{:>8} {:>14} {:>14} {:>14}", "t", "H", "|A|^2", "closed form");
    for t in linspace(0.25, 2.9, 12) {
        let (h, n) = curvature_invariants(&spec, t)?;
        println!("{t:>8.4} {h:>+14.8} {n:>14.8} {:>14.8}", closed_form_norm_sq(ActionType::IV, t));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
