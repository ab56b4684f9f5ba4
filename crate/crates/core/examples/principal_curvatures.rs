//! Principal curvatures of one principal orbit per action type, computed from
//! the shape operator and compared with the closed forms.

use std::error::Error;

use g2orbits::classify::closed_form_spectrum;
use g2orbits::orbit::{action_spec, spectrum_report};
use g2orbits::ActionType;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for ty in ActionType::ALL {
        let spec = action_spec(ty);
        let t = 0.7;
        let report = spectrum_report(&spec, t)?;
        let closed = closed_form_spectrum(ty, t, 1e-6)?;
        println!(
            "type {ty} at t = {t} (s = {:.4}): H = {:+.10}, |A|^2 = {:.10}, austere = {}",
            report.s, report.mean_curvature, report.norm_sq, report.austere
        );
        for (&(v, m), &(c, _)) in report.curvatures.iter().zip(&closed) {
            println!("  {v:+.12} x{m:<2} closed form {c:+.12}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
