//! Lifting one-parameter subgroups of SO(7) to Spin(7) through triality, and
//! reading off where the lifted curve sends the unit octonion.

use std::error::Error;

use g2orbits::lie::{v, zeta};
use g2orbits::triality::{apply_triality, spin_lift_exp, TrialityMap};
use g2orbits::Octonion;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let x = v(4, 1.0, 0.0, 1.0);
    println!("X        = V4(1, 0, 1)");
    println!("gamma(X) has |e0 column| = {:.3}", apply_triality(TrialityMap::Gamma, &x).column(0).norm());

    let curves = [
        ("V4(1, 0, 1)", v(4, 1.0, 0.0, 1.0)),
        ("V4(1, 0, 0)", v(4, 1.0, 0.0, 0.0)),
        ("V4(0, 1, 1)", v(4, 0.0, 1.0, 1.0)),
        ("zeta4", zeta(4)),
    ];
    for (name, gen) in curves {
        println!("{name}:");
        for t in [0.3, 0.9, 1.5] {
            let p = spin_lift_exp(&gen, t)?;
            let image = p.chi_prime(&Octonion::one());
            println!(
                "  t = {t:.1}: e0 -> {:+.6} e0 {:+.6} e4   relation defect {:.1e}",
                image[0],
                image[4],
                p.relation_defect()
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
