//! Dimensions of the orbits through the curve g(t) for each action type,
//! at both ends of the parameter range and in between.

use std::error::Error;

use g2orbits::orbit::{action_spec, orbit_frame};
use g2orbits::ActionType;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for ty in ActionType::ALL {
        let spec = action_spec(ty);
        let (lo, hi) = spec.t_range;
        let dims = [lo, 0.5 * (lo + hi), hi]
            .iter()
            .map(|&t| orbit_frame(&spec, t).map(|f| f.orbit_dim()))
            .collect::<Result<Vec<_>, _>>()?;
        println!(
            "type {ty:<3} in {:<5}: dim at t = {lo:.4} -> {:>2}, interior -> {:>2}, t = {hi:.4} -> {:>2}",
            spec.ambient.name, dims[0], dims[1], dims[2]
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
