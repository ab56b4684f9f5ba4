//! Octonion multiplication, its failure of associativity, and a G2 element
//! acting as an algebra automorphism.

use std::error::Error;

use g2orbits::lie::{expm, v};
use g2orbits::triality::is_automorphism;
use g2orbits::Octonion;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let e = Octonion::basis;
    println!("e1 e2 = {}", e(1) * e(2));
    println!("e2 e1 = {}", e(2) * e(1));
    println!("(e1 e2) e4 = {}", (e(1) * e(2)) * e(4));
    println!("e1 (e2 e4) = {}", e(1) * (e(2) * e(4)));

    let x = Octonion::new([0.5, -1.0, 0.25, 2.0, 0.0, -0.75, 1.5, 0.1]);
    let y = Octonion::new([1.0, 0.3, -0.2, 0.0, 0.9, 0.4, -1.1, 0.6]);
    let xy = x * y;
    println!("|xy| = {:.15}, |x||y| = {:.15}", xy.norm(), x.norm() * y.norm());
    println!("conj(xy) - conj(y) conj(x) = {:.1e}", xy.conj().max_abs_diff(&(y.conj() * x.conj())));

    // V_i(λ, μ, ν) with λ + μ + ν = 0 generates automorphisms.
    let g = expm(&v(3, 1.0, 0.5, -1.5), 0.8);
    println!("exp(0.8 V3(1, 0.5, -1.5)) is an automorphism: {}", is_automorphism(&g, 1e-10)?);
    let h = expm(&v(3, 1.0, 1.0, 1.0), 0.8);
    println!("exp(0.8 V3(1, 1, 1)) is an automorphism: {}", is_automorphism(&h, 1e-10)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
