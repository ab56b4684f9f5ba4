//! Closed-form principal curvatures, and the search for minimal, austere and
//! proper biharmonic principal orbits.
//!
//! A principal orbit of constant mean curvature in an Einstein manifold with
//! `Ric = λ⟨ , ⟩` is proper biharmonic exactly when it is not minimal and
//! `|A|² = λ`.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use crate::eigen::cluster_sorted;
use crate::error::{Error, Result};
use crate::orbit::{
    curvature_invariants, orbit_frame, spectrum_report, spectrum_report_with_tol, ActionSpec,
    ActionType,
};
use crate::roots::scan_roots;

/// Samples in the sign-change scan for minimal orbits.
pub const MINIMAL_SAMPLES: usize = 200;
/// Samples in the sign-change scan for biharmonic orbits.
pub const BIHARMONIC_SAMPLES: usize = 2000;
/// Distance kept from singular parameters during scans.
pub const SCAN_CLIP: f64 = 1e-4;
/// Computed and reference parameters further apart than this get a note.
pub const DISCREPANCY_TOL: f64 = 1e-6;
/// Mean curvature below this counts as minimal when filtering biharmonic roots.
pub const MINIMAL_TOL: f64 = 1e-6;

fn cot(x: f64) -> f64 {
    1.0 / x.tan()
}

/// Checks that `t` lies strictly inside the principal range.
fn principal_range_check(action_type: ActionType, t: f64) -> Result<()> {
    let (lo, hi, hi_open) = match action_type {
        ActionType::II | ActionType::V => (0.0, FRAC_PI_2, true),
        ActionType::III => (0.0, FRAC_PI_2, false),
        ActionType::IV => (0.0, PI, true),
    };
    let ok = t > lo && if hi_open { t < hi } else { t <= hi };
    if ok {
        Ok(())
    } else {
        Err(Error::OutOfRange { t, lo, hi })
    }
}

/// The pair `(1/(4√6)) (−3√2 c ± √(18c² + 16))` for `c = cot θ`, or the
/// mirrored pair with `+3√2 tan θ`.
fn g_pair(a: f64) -> [f64; 2] {
    let k = 1.0 / (4.0 * 6f64.sqrt());
    let r = (18.0 * a * a + 16.0).sqrt();
    let b = 3.0 * 2f64.sqrt() * a;
    [k * (b - r), k * (b + r)]
}

/// Principal curvatures from the closed forms, as unsorted `(value, multiplicity)`.
pub fn closed_form_terms(action_type: ActionType, t: f64) -> Result<Vec<(f64, usize)>> {
    principal_range_check(action_type, t)?;
    let mut out = Vec::new();
    match action_type {
        ActionType::II => {
            let k = 1.0 / 6f64.sqrt();
            let k2 = 1.0 / (2.0 * 6f64.sqrt());
            let (tn, ct) = (t.tan(), cot(t));
            out.push((0.0, 3));
            out.push((k * (t / 2.0).tan(), 1));
            out.push((-k * cot(t / 2.0), 1));
            let r1 = (4.0 * tn * tn + 3.0).sqrt();
            out.push((k2 * (2.0 * tn + r1), 2));
            out.push((k2 * (2.0 * tn - r1), 2));
            let r2 = (4.0 * ct * ct + 3.0).sqrt();
            out.push((k2 * (-2.0 * ct + r2), 2));
            out.push((k2 * (-2.0 * ct - r2), 2));
        }
        ActionType::III => {
            out.push((0.0, 8));
            out.extend(g_pair(-cot(t)).map(|v| (v, 6)));
        }
        ActionType::IV => {
            out.push((0.0, 8));
            out.extend(g_pair(-cot(t / 2.0)).map(|v| (v, 3)));
            out.extend(g_pair((t / 2.0).tan()).map(|v| (v, 3)));
        }
        ActionType::V => {
            out.push((0.0, 8));
            out.extend(g_pair(-cot(t)).map(|v| (v, 5)));
            out.extend(g_pair(t.tan()).map(|v| (v, 1)));
        }
    }
    Ok(out)
}

/// Closed-form principal curvatures, ascending, with coincident values merged within `tol`.
pub fn closed_form_spectrum(action_type: ActionType, t: f64, tol: f64) -> Result<Vec<(f64, usize)>> {
    let mut values: Vec<f64> = closed_form_terms(action_type, t)?
        .into_iter()
        .flat_map(|(v, m)| std::iter::repeat_n(v, m))
        .collect();
    values.sort_by(f64::total_cmp);
    Ok(cluster_sorted(&values, tol))
}

/// Closed-form mean curvature.
pub fn closed_form_mean_curvature(action_type: ActionType, t: f64) -> f64 {
    let s3 = 3f64.sqrt();
    match action_type {
        ActionType::II => (4.0 * t.tan() - 6.0 * cot(t)) / 6f64.sqrt(),
        ActionType::III | ActionType::IV => -3.0 * s3 * cot(t),
        ActionType::V => -s3 * (cot(2.0 * t) + 2.0 * cot(t)),
    }
}

/// Closed-form `|A|²`.
pub fn closed_form_norm_sq(action_type: ActionType, t: f64) -> f64 {
    let sq = |x: f64| x * x;
    match action_type {
        ActionType::II => {
            (sq((t / 2.0).tan()) + sq(cot(t / 2.0))) / 6.0
                + (16.0 * sq(t.tan()) + 16.0 * sq(cot(t)) + 12.0) / 12.0
        }
        ActionType::III => 4.5 * sq(cot(t)) + 2.0,
        ActionType::IV => 2.25 * (sq(cot(t / 2.0)) + sq((t / 2.0).tan())) + 2.0,
        ActionType::V => (90.0 * sq(cot(t)) + 18.0 * sq(t.tan()) + 48.0) / 24.0,
    }
}

/// Maximum deviation between computed and closed-form principal curvatures,
/// after checking that the multiplicity structure agrees.
pub fn compare_spectra(spec: &ActionSpec, t: f64, tol: f64) -> Result<f64> {
    let report = spectrum_report_with_tol(spec, t, tol)?;
    let closed = closed_form_spectrum(spec.action_type, t, tol)?;
    let engine = report.curvatures;
    let same_shape = engine.len() == closed.len()
        && engine.iter().zip(&closed).all(|(a, b)| a.1 == b.1);
    if !same_shape {
        return Err(Error::StructuralMismatch { engine, closed_form: closed });
    }
    Ok(engine
        .iter()
        .zip(&closed)
        .map(|(a, b)| (a.0 - b.0).abs())
        .fold(0.0, f64::max))
}

/// The interval scanned for principal-orbit roots.
pub fn scan_interval(spec: &ActionSpec) -> (f64, f64) {
    let (lo, hi) = spec.t_range;
    let clip = |x: f64| spec.near_singular(x, SCAN_CLIP / 2.0).is_some();
    (
        if clip(lo) { lo + SCAN_CLIP } else { lo },
        if clip(hi) { hi - SCAN_CLIP } else { hi },
    )
}

/// Parameter of the unique minimal principal orbit.
pub fn find_minimal(spec: &ActionSpec) -> Result<f64> {
    let (lo, hi) = scan_interval(spec);
    let roots = scan_roots(
        |t| curvature_invariants(spec, t).map_or(f64::NAN, |(h, _)| h),
        lo,
        hi,
        MINIMAL_SAMPLES,
    );
    match roots.as_slice() {
        [] => Err(Error::NoRoot(format!("the mean curvature of type {}", spec.action_type))),
        [t] => Ok(*t),
        _ => Err(Error::MultipleRoots(roots)),
    }
}

/// Parameters of the proper biharmonic principal orbits, ascending.
pub fn find_biharmonic(spec: &ActionSpec) -> Vec<f64> {
    let (lo, hi) = scan_interval(spec);
    let lambda = spec.einstein_constant;
    scan_roots(
        |t| curvature_invariants(spec, t).map_or(f64::NAN, |(_, n)| n - lambda),
        lo,
        hi,
        BIHARMONIC_SAMPLES,
    )
    .into_iter()
    .filter(|&t| curvature_invariants(spec, t).is_ok_and(|(h, _)| h.abs() > MINIMAL_TOL))
    .collect()
}

/// Known closed-form parameters of the minimal and biharmonic orbits.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReferenceValues {
    pub minimal_t: f64,
    pub minimal_formula: &'static str,
    pub biharmonic_t: Vec<f64>,
    pub biharmonic_formula: &'static str,
    pub minimal_austere: bool,
}

pub fn reference_values(action_type: ActionType) -> ReferenceValues {
    match action_type {
        ActionType::II => {
            let r19 = 19f64.sqrt();
            ReferenceValues {
                minimal_t: 1.5f64.sqrt().atan(),
                minimal_formula: "arctan(sqrt(3/2))",
                biharmonic_t: vec![((5.0 - r19) / 2.0).sqrt().atan(), ((5.0 + r19) / 2.0).sqrt().atan()],
                biharmonic_formula: "arctan(sqrt((5 ± sqrt(19))/2))",
                minimal_austere: false,
            }
        }
        ActionType::III => ReferenceValues {
            minimal_t: FRAC_PI_2,
            minimal_formula: "pi/2",
            biharmonic_t: vec![(3.0f64 / 4.0).atan()],
            biharmonic_formula: "arccot(4/3)",
            minimal_austere: true,
        },
        ActionType::IV => {
            let a = (6.0 / 14f64.sqrt()).atan();
            ReferenceValues {
                minimal_t: FRAC_PI_2,
                minimal_formula: "pi/2",
                biharmonic_t: vec![a, PI - a],
                biharmonic_formula: "arccot(sqrt(14)/6), pi - arccot(sqrt(14)/6)",
                minimal_austere: true,
            }
        }
        ActionType::V => {
            let r = 211f64.sqrt();
            ReferenceValues {
                minimal_t: 5f64.sqrt().atan(),
                minimal_formula: "arctan(sqrt(5))",
                biharmonic_t: vec![((16.0 - r) / 3.0).atan(), ((16.0 + r) / 3.0).atan()],
                biharmonic_formula: "arctan((16 ± sqrt(211))/3)",
                minimal_austere: false,
            }
        }
    }
}

/// Biharmonic parameters obtained by solving `closed_form_norm_sq = λ`
/// algebraically.
pub fn algebraic_biharmonic_t(action_type: ActionType) -> Vec<f64> {
    match action_type {
        ActionType::II => {
            // With u = tan²t the equation reduces to u² − 5u + 3/2 = 0.
            let r = 19f64.sqrt();
            vec![((5.0 - r) / 2.0).sqrt().atan(), ((5.0 + r) / 2.0).sqrt().atan()]
        }
        // 4.5 cot² t + 2 = 10.
        ActionType::III => vec![(1.0 / (16.0f64 / 9.0).sqrt()).atan()],
        ActionType::IV => {
            // 2.25 (c² + 1/c²) = 8 with c = cot(t/2): c² = (16 ± √175)/9.
            let c2 = [(16.0 + 175f64.sqrt()) / 9.0, (16.0 - 175f64.sqrt()) / 9.0];
            c2.iter().map(|c| 2.0 * (1.0 / c.sqrt()).atan()).collect()
        }
        ActionType::V => {
            // 3 tan⁴t − 32 tan²t + 15 = 0.
            let r = 211f64.sqrt();
            vec![((16.0 - r) / 3.0).sqrt().atan(), ((16.0 + r) / 3.0).sqrt().atan()]
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SingularOrbit {
    pub t: f64,
    pub s: f64,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassificationResult {
    pub action_type: ActionType,
    pub principal_dim: usize,
    pub singular_orbits: Vec<SingularOrbit>,
    pub minimal_t: f64,
    pub minimal_s: f64,
    pub minimal_austere: bool,
    pub biharmonic_t: Vec<f64>,
    pub biharmonic_s: Vec<f64>,
    pub reference: ReferenceValues,
    /// Biharmonic parameters solved algebraically from the closed-form `|A|²`.
    pub algebraic_biharmonic_t: Vec<f64>,
    pub discrepancy_notes: Vec<String>,
}

/// Agreement required by [`ClassificationResult::passes`].
pub const AGREEMENT_TOL: f64 = 1e-8;

impl ClassificationResult {
    /// True when every computed value agrees with its reference.
    pub fn matches_reference(&self) -> bool {
        self.discrepancy_notes.is_empty()
    }

    /// True when the minimal parameter and austerity verdict match the
    /// reference and the biharmonic roots match the algebraic solutions.
    pub fn passes(&self) -> bool {
        let bih = self.biharmonic_t.len() == self.algebraic_biharmonic_t.len()
            && self
                .biharmonic_t
                .iter()
                .zip(&self.algebraic_biharmonic_t)
                .all(|(a, b)| (a - b).abs() < AGREEMENT_TOL);
        (self.minimal_t - self.reference.minimal_t).abs() < AGREEMENT_TOL
            && self.minimal_austere == self.reference.minimal_austere
            && bih
    }
}

pub fn classify(spec: &ActionSpec) -> Result<ClassificationResult> {
    let ty = spec.action_type;
    let reference = reference_values(ty);

    let singular_orbits = spec
        .singular_parameters
        .iter()
        .map(|&t| Ok(SingularOrbit { t, s: spec.s_of_t(t), dim: orbit_frame(spec, t)?.orbit_dim() }))
        .collect::<Result<Vec<_>>>()?;
    let principal_dim = orbit_frame(spec, 0.5 * (spec.t_range.0 + spec.t_range.1))?.orbit_dim();

    let minimal_t = find_minimal(spec)?;
    let minimal_austere = spectrum_report(spec, minimal_t)?.austere;
    let biharmonic_t = find_biharmonic(spec);

    let mut notes = Vec::new();
    if (minimal_t - reference.minimal_t).abs() > DISCREPANCY_TOL {
        notes.push(format!(
            "minimal parameter: computed t = {minimal_t:.12}, reference {} = {:.12}",
            reference.minimal_formula, reference.minimal_t
        ));
    }
    if minimal_austere != reference.minimal_austere {
        notes.push(format!(
            "austerity of the minimal orbit: computed {minimal_austere}, reference {}",
            reference.minimal_austere
        ));
    }
    let agrees = biharmonic_t.len() == reference.biharmonic_t.len()
        && biharmonic_t
            .iter()
            .zip(&reference.biharmonic_t)
            .all(|(a, b)| (a - b).abs() <= DISCREPANCY_TOL);
    if !agrees {
        let fmt = |v: &[f64]| v.iter().map(|x| format!("{x:.12}")).collect::<Vec<_>>().join(", ");
        let tan_sq: Vec<f64> = biharmonic_t.iter().map(|t| t.tan().powi(2)).collect();
        notes.push(format!(
            "biharmonic parameters: computed t = [{}] (tan^2 t = [{}]), reference {} = [{}]",
            fmt(&biharmonic_t),
            fmt(&tan_sq),
            reference.biharmonic_formula,
            fmt(&reference.biharmonic_t),
        ));
    }

    Ok(ClassificationResult {
        action_type: ty,
        principal_dim,
        singular_orbits,
        minimal_t,
        minimal_s: spec.s_of_t(minimal_t),
        minimal_austere,
        biharmonic_s: biharmonic_t.iter().map(|&t| spec.s_of_t(t)).collect(),
        biharmonic_t,
        reference,
        algebraic_biharmonic_t: {
            let mut a = algebraic_biharmonic_t(ty);
            a.sort_by(f64::total_cmp);
            a
        },
        discrepancy_notes: notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::action_spec;

    #[test]
    fn closed_form_examples() {
        let c = 1.0 / 6f64.sqrt();
        let iii = closed_form_spectrum(ActionType::III, FRAC_PI_2, 1e-9).unwrap();
        assert_eq!(iii.len(), 3);
        assert!((iii[0].0 + c).abs() < 1e-12 && iii[0].1 == 6);
        assert!(iii[1].0.abs() < 1e-12 && iii[1].1 == 8);
        assert!((iii[2].0 - c).abs() < 1e-12 && iii[2].1 == 6);

        let ii = closed_form_spectrum(ActionType::II, 0.6, 1e-9).unwrap();
        assert_eq!(ii.iter().find(|v| v.0 == 0.0).unwrap().1, 3);

        let iv = closed_form_spectrum(ActionType::IV, FRAC_PI_2, 1e-9).unwrap();
        for (a, b) in iv.iter().zip(iv.iter().rev()) {
            assert!((a.0 + b.0).abs() < 1e-12 && a.1 == b.1);
        }

        assert!(closed_form_spectrum(ActionType::V, FRAC_PI_2, 1e-9).is_err());
        assert!(closed_form_spectrum(ActionType::II, 0.0, 1e-9).is_err());
    }

    #[test]
    fn multiplicities_sum_to_the_principal_dimension() {
        for (ty, dim) in [(ActionType::II, 13), (ActionType::III, 20), (ActionType::IV, 20), (ActionType::V, 20)] {
            let total: usize = closed_form_terms(ty, 0.77).unwrap().iter().map(|x| x.1).sum();
            assert_eq!(total, dim);
        }
    }

    #[test]
    fn closed_form_sums_match_the_reductions() {
        for ty in ActionType::ALL {
            for &t in &[0.3, 0.81, 1.2] {
                let terms = closed_form_terms(ty, t).unwrap();
                let h: f64 = terms.iter().map(|&(v, m)| v * m as f64).sum();
                let n: f64 = terms.iter().map(|&(v, m)| v * v * m as f64).sum();
                assert!((h - closed_form_mean_curvature(ty, t)).abs() < 1e-10, "{ty}");
                assert!((n - closed_form_norm_sq(ty, t)).abs() < 1e-10, "{ty}");
            }
        }
    }

    #[test]
    fn type_ii_mean_curvature_identity() {
        for &t in &[0.2, 0.7, 1.3] {
            let a = (2.0 / 6f64.sqrt()) * (-2.0 * cot(t) + t.tan() - 2.0 * cot(2.0 * t));
            assert!((a - closed_form_mean_curvature(ActionType::II, t)).abs() < 1e-12);
        }
    }

    #[test]
    fn algebraic_roots_solve_the_closed_forms() {
        for ty in ActionType::ALL {
            let lambda = if ty == ActionType::II { 8.0 } else { 10.0 };
            for t in algebraic_biharmonic_t(ty) {
                assert!((closed_form_norm_sq(ty, t) - lambda).abs() < 1e-9, "{ty} at {t}");
            }
        }
    }

    #[test]
    fn compare_spectra_examples() {
        assert!(compare_spectra(&action_spec(ActionType::III), 1.0, 1e-6).unwrap() < 1e-8);
        assert!(compare_spectra(&action_spec(ActionType::II), 0.3, 1e-6).unwrap() < 1e-8);
        let sp = action_spec(ActionType::V);
        assert!(compare_spectra(&sp, 1.2, 1e-6).unwrap() < 1e-8);
        let mut m = spectrum_report(&sp, 1.2).unwrap().multiplicities();
        m.sort_unstable();
        assert_eq!(m, vec![1, 1, 5, 5, 8]);
    }

    #[test]
    fn minimal_parameters() {
        let expected = [
            (ActionType::II, 1.5f64.sqrt().atan()),
            (ActionType::III, FRAC_PI_2),
            (ActionType::IV, FRAC_PI_2),
            (ActionType::V, 5f64.sqrt().atan()),
        ];
        for (ty, t) in expected {
            let found = find_minimal(&action_spec(ty)).unwrap();
            assert!((found - t).abs() < 1e-8, "{ty}: {found}");
        }
    }
}
