//! Reflective structure: the singular type III orbit is totally geodesic,
//! the type II singular orbits are not, and the minimal type III and IV orbits
//! admit isometries reversing their normal.

use std::error::Error;

use g2orbits::orbit::{action_spec, orbit_frame, shape_operator_with_frame, verify_reflection};
use g2orbits::ActionType;

fn largest_second_fundamental_form(ty: ActionType, t: f64) -> Result<f64, Box<dyn Error>> {
    let spec = action_spec(ty);
    let frame = orbit_frame(&spec, t)?;
    let mut worst: f64 = 0.0;
    for n in frame.normal.basis() {
        worst = worst.max(shape_operator_with_frame(&spec, &frame, &n)?.max_abs());
    }
    Ok(worst)
}

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!("type III, t = 0:    max |S_ij| = {:.2e}", largest_second_fundamental_form(ActionType::III, 0.0)?);
    println!("type II,  t = 0:    max |S_ij| = {:.4}", largest_second_fundamental_form(ActionType::II, 0.0)?);
    println!(
        "type II,  t = pi/2: max |S_ij| = {:.4}",
        largest_second_fundamental_form(ActionType::II, std::f64::consts::FRAC_PI_2)?
    );
    for ty in [ActionType::III, ActionType::IV] {
        println!("type {ty}: reflection isometry verified = {}", verify_reflection(&action_spec(ty))?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
