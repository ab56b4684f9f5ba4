//! Minimal, austere and proper biharmonic principal orbits of all four actions.

use std::error::Error;

use g2orbits::classify::classify;
use g2orbits::orbit::action_spec;
use g2orbits::ActionType;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for ty in ActionType::ALL {
        let r = classify(&action_spec(ty))?;
        println!("type {ty}");
        println!("  minimal at t = {:.10} (s = {:.10}), austere: {}", r.minimal_t, r.minimal_s, r.minimal_austere);
        println!("  biharmonic at t = {:.10?}", r.biharmonic_t);
        for o in &r.singular_orbits {
            println!("  singular orbit of dimension {} at t = {:.4}", o.dim, o.t);
        }
        for note in &r.discrepancy_notes {
            println!("  note: {note}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
