//! Acceptance gate. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::f64::consts::{FRAC_PI_2, PI};
use std::process::ExitCode;

use g2orbits::classify::{classify, compare_spectra};
use g2orbits::lie::{v, zeta, LieMatrix, Mat8};
use g2orbits::orbit::{
    action_spec, orbit_frame, shape_operator_with_frame, spectrum_report, verify_reflection, ActionSpec,
    ActionType,
};
use g2orbits::triality::{named_subalgebra, rp7_invariant, spin_lift_exp, SubalgebraName};
use g2orbits::verify::algebra_suite;
use g2orbits::Octonion;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const SECTION_TOL: f64 = 1e-10;
const SPECTRUM_TOL: f64 = 1e-8;
const MEAN_TOL: f64 = 1e-8;
const PARAM_TOL: f64 = 1e-8;
const GEODESIC_TOL: f64 = 1e-9;
const NONZERO_SHAPE: f64 = 1e-3;
const RP7_TOL: f64 = 1e-10;
const SAMPLES: usize = 20;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Random parameters in the interior of the principal range.
fn principal_samples(spec: &ActionSpec, rng: &mut StdRng) -> Vec<f64> {
    let (lo, hi) = spec.t_range;
    let margin = 0.02 * (hi - lo);
    (0..SAMPLES).map(|_| rng.gen_range(lo + margin..hi - margin)).collect()
}

fn algebra() -> Outcome {
    let checks = algebra_suite();
    let failed: Vec<String> = checks.iter().filter(|c| !c.passed).map(|c| c.name.to_string()).collect();
    ensure(failed.is_empty(), || format!("failing checks: {}", failed.join(", ")))?;
    Ok(format!("{} checks", checks.len()))
}

fn sections() -> Outcome {
    let curves: [(&str, LieMatrix, fn(f64) -> f64); 4] = [
        ("III", v(4, 1.0, 0.0, 1.0), |t| t),
        ("IV", v(4, 1.0, 0.0, 0.0), |t| t / 2.0),
        ("V", v(4, 0.0, 1.0, 1.0), |t| t),
        ("zeta4", zeta(4), |s| 1.5 * s),
    ];
    let mut worst = 0.0f64;
    for (name, generator, angle) in curves {
        for k in 0..SAMPLES {
            let t = -3.0 + 6.0 * k as f64 / (SAMPLES - 1) as f64;
            let lift = spin_lift_exp(&generator, t).map_err(|e| format!("{name}: {e}"))?;
            let image = lift.chi_prime(&Octonion::one());
            let a = angle(t);
            let mut expected = [0.0; 8];
            expected[0] = a.cos();
            expected[4] = a.sin();
            let defect = image.max_abs_diff(&Octonion::new(expected));
            worst = worst.max(defect);
            ensure(defect < SECTION_TOL, || format!("{name} at {t}: defect {defect:.2e}"))?;
        }
    }
    Ok(format!("max defect {worst:.1e}"))
}

fn dimensions() -> Outcome {
    let expected = [
        (ActionType::II, (10, 13, 11)),
        (ActionType::III, (14, 20, 20)),
        (ActionType::IV, (17, 20, 17)),
        (ActionType::V, (15, 20, 19)),
    ];
    for (ty, (at_lo, interior, at_hi)) in expected {
        let spec = action_spec(ty);
        let (lo, hi) = spec.t_range;
        let mut cases = vec![(lo, at_lo), (hi, at_hi)];
        cases.extend([0.25, 0.5, 0.75].map(|f| (lo + f * (hi - lo), interior)));
        for (t, want) in cases {
            let got = orbit_frame(&spec, t).map_err(|e| format!("{ty} at {t}: {e}"))?.orbit_dim();
            ensure(got == want, || format!("{ty} at t = {t}: dim {got}, expected {want}"))?;
        }
    }
    Ok("20 orbits".into())
}

fn spectra(rng: &mut StdRng) -> Outcome {
    let expected: [(ActionType, &[usize]); 4] = [
        (ActionType::II, &[3, 1, 1, 2, 2, 2, 2]),
        (ActionType::III, &[8, 6, 6]),
        (ActionType::IV, &[8, 3, 3, 3, 3]),
        (ActionType::V, &[8, 5, 5, 1, 1]),
    ];
    let mut worst = 0.0f64;
    for (ty, mults) in expected {
        let spec = action_spec(ty);
        let mut want = mults.to_vec();
        want.sort_unstable();
        for t in principal_samples(&spec, rng) {
            let deviation = compare_spectra(&spec, t, 1e-6).map_err(|e| format!("{ty} at {t}: {e}"))?;
            worst = worst.max(deviation);
            ensure(deviation < SPECTRUM_TOL, || format!("{ty} at {t}: deviation {deviation:.2e}"))?;
            let mut got = spectrum_report(&spec, t).map_err(|e| e.to_string())?.multiplicities();
            got.sort_unstable();
            ensure(got == want, || format!("{ty} at {t}: multiplicities {got:?}"))?;
        }
    }
    Ok(format!("max deviation {worst:.1e}"))
}

fn mean_curvature(rng: &mut StdRng) -> Outcome {
    let cot = |x: f64| 1.0 / x.tan();
    let s3 = 3f64.sqrt();
    let s6 = 6f64.sqrt();
    let mut worst = 0.0f64;
    for ty in ActionType::ALL {
        let spec = action_spec(ty);
        for t in principal_samples(&spec, rng) {
            let expected = match ty {
                ActionType::II => {
                    let long = (2.0 / s6) * (-2.0 * cot(t) + t.tan() - 2.0 * cot(2.0 * t));
                    let short = (4.0 * t.tan() - 6.0 * cot(t)) / s6;
                    let gap = (long - short).abs();
                    ensure(gap < MEAN_TOL, || format!("II identity at {t}: gap {gap:.2e}"))?;
                    long
                }
                ActionType::III | ActionType::IV => -3.0 * s3 * cot(t),
                ActionType::V => -s3 * (cot(2.0 * t) + 2.0 * cot(t)),
            };
            let got = spectrum_report(&spec, t).map_err(|e| e.to_string())?.mean_curvature;
            let defect = (got - expected).abs();
            worst = worst.max(defect);
            ensure(defect < MEAN_TOL, || format!("{ty} at {t}: H = {got}, expected {expected}"))?;
        }
    }
    Ok(format!("max defect {worst:.1e}"))
}

fn minimal() -> Outcome {
    let expected = [
        (ActionType::II, 1.5f64.sqrt().atan(), false),
        (ActionType::III, FRAC_PI_2, true),
        (ActionType::IV, FRAC_PI_2, true),
        (ActionType::V, 5f64.sqrt().atan(), false),
    ];
    for (ty, t0, austere) in expected {
        let result = classify(&action_spec(ty)).map_err(|e| format!("{ty}: {e}"))?;
        let gap = (result.minimal_t - t0).abs();
        ensure(gap < PARAM_TOL, || format!("{ty}: minimal t {} vs {t0}", result.minimal_t))?;
        ensure(result.minimal_austere == austere, || format!("{ty}: austere {}", result.minimal_austere))?;
    }
    Ok("4 actions".into())
}

fn biharmonic() -> Outcome {
    let s19 = 19f64.sqrt();
    let iv = (6.0 / 14f64.sqrt()).atan();
    let expected = [
        (ActionType::II, vec![((5.0 - s19) / 2.0).sqrt().atan(), ((5.0 + s19) / 2.0).sqrt().atan()]),
        (ActionType::III, vec![0.75f64.atan()]),
        (ActionType::IV, vec![iv, PI - iv]),
    ];
    for (ty, roots) in expected {
        let got = classify(&action_spec(ty)).map_err(|e| format!("{ty}: {e}"))?.biharmonic_t;
        ensure(got.len() == roots.len(), || format!("{ty}: roots {got:?}"))?;
        for (a, b) in got.iter().zip(&roots) {
            ensure((a - b).abs() < PARAM_TOL, || format!("{ty}: root {a} vs {b}"))?;
        }
    }
    let v_result = classify(&action_spec(ActionType::V)).map_err(|e| format!("V: {e}"))?;
    let s211 = 211f64.sqrt();
    let targets = [(16.0 - s211) / 3.0, (16.0 + s211) / 3.0];
    let tan_sq: Vec<f64> = v_result.biharmonic_t.iter().map(|t| t.tan().powi(2)).collect();
    ensure(tan_sq.len() == 2, || format!("V: roots {:?}", v_result.biharmonic_t))?;
    for (a, b) in tan_sq.iter().zip(&targets) {
        ensure((a - b).abs() < PARAM_TOL, || format!("V: tan² t = {a} vs {b}"))?;
    }
    ensure(!v_result.discrepancy_notes.is_empty(), || "V: discrepancy note missing".into())?;
    Ok(format!("V note: {}", v_result.discrepancy_notes.join("; ")))
}

fn geodesic_and_reflection() -> Outcome {
    let iii = action_spec(ActionType::III);
    let frame = orbit_frame(&iii, 0.0).map_err(|e| e.to_string())?;
    let mut worst = 0.0f64;
    for n in frame.normal.basis() {
        let shape = shape_operator_with_frame(&iii, &frame, &n).map_err(|e| e.to_string())?;
        worst = worst.max(shape.max_abs());
    }
    ensure(worst < GEODESIC_TOL, || format!("III at t = 0: max |S| = {worst:.2e}"))?;

    for ty in [ActionType::III, ActionType::IV] {
        let ok = verify_reflection(&action_spec(ty)).map_err(|e| format!("{ty}: {e}"))?;
        ensure(ok, || format!("{ty}: reflection check failed"))?;
    }

    let ii = action_spec(ActionType::II);
    for t in ii.singular_parameters.clone() {
        let frame = orbit_frame(&ii, t).map_err(|e| e.to_string())?;
        let largest = frame
            .normal
            .basis()
            .iter()
            .map(|n| shape_operator_with_frame(&ii, &frame, n).map(|s| s.max_abs()))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?
            .into_iter()
            .fold(0.0, f64::max);
        ensure(largest > NONZERO_SHAPE, || format!("II at t = {t}: max |S| = {largest:.2e}"))?;
    }
    Ok(format!("III max |S| {worst:.1e}"))
}

fn rp7(rng: &mut StdRng) -> Outcome {
    let spec = action_spec(ActionType::III);
    let g2 = named_subalgebra(SubalgebraName::G2).basis();
    let random_g2 = |rng: &mut StdRng| {
        let x = g2.iter().fold(Mat8::zero(), |acc, b| acc + *b * rng.gen_range(-1.0..1.0));
        spin_lift_exp(&x, rng.gen_range(-PI..PI))
    };
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let t = rng.gen_range(-PI..PI);
        let h = random_g2(rng).map_err(|e| e.to_string())?;
        let k = random_g2(rng).map_err(|e| e.to_string())?;
        let x = spin_lift_exp(&spec.geodesic_generator, t).map_err(|e| e.to_string())?;
        let p = h.mul(&x).mul(&k.inverse());
        let defect = (rp7_invariant(&p) - t.cos().abs()).abs();
        worst = worst.max(defect);
        ensure(defect < RP7_TOL, || format!("t = {t}: defect {defect:.2e}"))?;
    }
    Ok(format!("max defect {worst:.1e}"))
}

fn main() -> ExitCode {
    let mut rng = StdRng::seed_from_u64(0x6532);
    let results: Vec<(&str, Outcome)> = vec![
        ("algebra suite", algebra()),
        ("section formulas", sections()),
        ("orbit dimensions", dimensions()),
        ("spectrum fidelity", spectra(&mut rng)),
        ("mean curvature", mean_curvature(&mut rng)),
        ("minimal parameters", minimal()),
        ("biharmonic parameters", biharmonic()),
        ("geodesic and reflection", geodesic_and_reflection()),
        ("rp7 invariant", rp7(&mut rng)),
    ];
    let mut all = true;
    for (i, (name, outcome)) in results.iter().enumerate() {
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(why) => {
                all = false;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
