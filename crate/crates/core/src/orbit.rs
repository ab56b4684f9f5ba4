//! Orbits of `H × K` acting on `G` by `(h, k)·x = h x k⁻¹`, along the curve
//! `g(t) = exp(tX₀)`.
//!
//! Everything is translated to the identity: the tangent space at `g(t)` is
//! `Ad(g(t)⁻¹)h + k` and normals live in the ambient Lie algebra. A tangent
//! vector `u` is carried by a pair `(X, Y) ∈ h × k` with
//! `Ad(g(t)⁻¹)X − Y = u`, and the second fundamental form along a unit normal
//! `ξ` is
//!
//! ```text
//! S(u_i, u_j) = −½ ⟨[Ad(g⁻¹)X_i − Y_i, Ad(g⁻¹)X_j + Y_j], ξ⟩.
//! ```

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::eigen::{cluster_sorted, jacobi_eigen, Matrix, DEFAULT_CLUSTER_TOL};
use crate::error::{Error, Result};
use crate::lie::{ad_inv, bracket, expm, inner_g, norm_g, v, zeta, LieMatrix, Mat8};
use crate::subspace::{complement, orthonormalize_tracked, Subspace};
use crate::triality::{
    is_automorphism, named_subalgebra, rp7_invariant, sigma, spin_lift_exp, NamedSubalgebra,
    SpinElement, SubalgebraName,
};

/// Allowed residual of a tangent lift.
pub const LIFT_TOL: f64 = 1e-9;
/// Allowed asymmetry of the raw shape operator.
pub const SHAPE_SYMMETRY_TOL: f64 = 1e-9;
/// Allowed defect of a unit normal.
pub const NORMAL_TOL: f64 = 1e-9;
/// Distance from a singular parameter inside which spectra are refused.
pub const SINGULAR_GUARD: f64 = 1e-6;

/// The four cohomogeneity-one actions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ActionType {
    /// `SO(4) × SU(3)` on `G2`.
    II,
    /// `G2 × G2` on `SO(7)`.
    III,
    /// `SO(3)×SO(4)` × `G2` on `SO(7)`.
    IV,
    /// `U(3) × G2` on `SO(7)`.
    V,
}

impl ActionType {
    pub const ALL: [ActionType; 4] = [ActionType::II, ActionType::III, ActionType::IV, ActionType::V];

    pub fn as_str(&self) -> &'static str {
        match self {
            ActionType::II => "II",
            ActionType::III => "III",
            ActionType::IV => "IV",
            ActionType::V => "V",
        }
    }
}

impl fmt::Display for ActionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ActionType {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim().to_ascii_uppercase().as_str() {
            "II" | "2" => Ok(ActionType::II),
            "III" | "3" => Ok(ActionType::III),
            "IV" | "4" => Ok(ActionType::IV),
            "V" | "5" => Ok(ActionType::V),
            other => Err(format!("unknown action type '{other}', expected II, III, IV or V")),
        }
    }
}

/// Everything needed to compute the geometry of one action.
#[derive(Debug, Clone)]
pub struct ActionSpec {
    pub action_type: ActionType,
    pub ambient: NamedSubalgebra,
    /// `Ric = λ ⟨ , ⟩` on the ambient group.
    pub einstein_constant: f64,
    pub h: NamedSubalgebra,
    pub k: NamedSubalgebra,
    pub geodesic_generator: LieMatrix,
    pub section_generator: LieMatrix,
    pub t_range: (f64, f64),
    /// `t = section_ratio · s`.
    pub section_ratio: f64,
    /// Parameters in `t_range` whose orbits are singular.
    pub singular_parameters: Vec<f64>,
}

impl ActionSpec {
    /// `g(t)`.
    pub fn point(&self, t: f64) -> Mat8 {
        expm(&self.geodesic_generator, t)
    }

    pub fn s_of_t(&self, t: f64) -> f64 {
        t / self.section_ratio
    }

    pub fn t_of_s(&self, s: f64) -> f64 {
        s * self.section_ratio
    }

    pub fn check_range(&self, t: f64) -> Result<()> {
        let (lo, hi) = self.t_range;
        if !(lo..=hi).contains(&t) {
            return Err(Error::OutOfRange { t, lo, hi });
        }
        Ok(())
    }

    /// Nearest singular parameter within `guard` of `t`, if any.
    pub fn near_singular(&self, t: f64, guard: f64) -> Option<f64> {
        self.singular_parameters
            .iter()
            .copied()
            .find(|&p| (t - p).abs() < guard)
    }

    /// Dimension of the principal orbits.
    pub fn principal_dim(&self) -> usize {
        self.ambient.dim() - 1
    }
}

pub fn action_spec(action_type: ActionType) -> ActionSpec {
    let (ambient, einstein, h, k, geodesic, section, hi, ratio) = match action_type {
        ActionType::II => (
            SubalgebraName::G2,
            8.0,
            SubalgebraName::So4G2,
            SubalgebraName::Su3,
            v(4, 1.0, -1.0, 0.0),
            v(4, 2.0, -1.0, -1.0),
            FRAC_PI_2,
            2.0,
        ),
        ActionType::III => (
            SubalgebraName::So7,
            10.0,
            SubalgebraName::G2,
            SubalgebraName::G2,
            v(4, 1.0, 0.0, 1.0),
            zeta(4),
            FRAC_PI_2,
            1.5,
        ),
        ActionType::IV => (
            SubalgebraName::So7,
            10.0,
            SubalgebraName::So3So4,
            SubalgebraName::G2,
            v(4, 1.0, 0.0, 0.0),
            zeta(4),
            PI,
            3.0,
        ),
        ActionType::V => (
            SubalgebraName::So7,
            10.0,
            SubalgebraName::U3,
            SubalgebraName::G2,
            v(4, 0.0, 1.0, 1.0),
            zeta(4),
            FRAC_PI_2,
            1.5,
        ),
    };
    let singular_parameters = match action_type {
        ActionType::II | ActionType::V => vec![0.0, FRAC_PI_2],
        ActionType::III => vec![0.0],
        ActionType::IV => vec![0.0, PI],
    };
    ActionSpec {
        action_type,
        ambient: named_subalgebra(ambient),
        einstein_constant: einstein,
        h: named_subalgebra(h),
        k: named_subalgebra(k),
        geodesic_generator: geodesic,
        section_generator: section,
        t_range: (0.0, hi),
        section_ratio: ratio,
        singular_parameters,
    }
}

/// A pair `(X, Y) ∈ h × k` carrying a tangent vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lift {
    pub h_part: LieMatrix,
    pub k_part: LieMatrix,
    /// `Ad(g(t)⁻¹) h_part`.
    pub h_translated: LieMatrix,
}

impl Lift {
    /// `Ad(g⁻¹)X − Y`.
    pub fn tangent(&self) -> LieMatrix {
        self.h_translated - self.k_part
    }

    pub fn scaled_add(&self, c: f64, other: &Lift) -> Lift {
        Lift {
            h_part: self.h_part + other.h_part * c,
            k_part: self.k_part + other.k_part * c,
            h_translated: self.h_translated + other.h_translated * c,
        }
    }
}

/// Tangent and normal spaces of the orbit through `g(t)`, translated to the identity.
#[derive(Debug, Clone)]
pub struct OrbitFrame {
    pub t: f64,
    pub point: Mat8,
    pub tangent: Subspace,
    pub normal: Subspace,
    /// One lift per tangent basis vector.
    pub lifts: Vec<Lift>,
    /// Pairs with `Ad(g⁻¹)X = Y`: the isotropy directions.
    pub null_directions: Vec<Lift>,
    /// Largest lift residual.
    pub lift_residual: f64,
}

impl OrbitFrame {
    pub fn orbit_dim(&self) -> usize {
        self.tangent.dim()
    }

    pub fn codimension(&self) -> usize {
        self.normal.dim()
    }

    /// A lift of an arbitrary tangent vector, as a combination of basis lifts.
    pub fn lift_of(&self, u: &LieMatrix) -> Lift {
        let zero = Lift { h_part: Mat8::zero(), k_part: Mat8::zero(), h_translated: Mat8::zero() };
        self.tangent
            .components(u)
            .iter()
            .zip(&self.lifts)
            .fold(zero, |acc, (&c, l)| acc.scaled_add(c, l))
    }
}

pub fn orbit_frame(spec: &ActionSpec, t: f64) -> Result<OrbitFrame> {
    let point = spec.point(t);
    let h_basis = spec.h.basis();
    let k_basis = spec.k.basis();
    let h_translated: Vec<LieMatrix> = h_basis.iter().map(|x| ad_inv(&point, x)).collect();

    // Generators Ad(g⁻¹)h_i and −k_j, so that a combination with coefficients
    // (a, b) is carried by the lift (Σ a_i h_i, Σ b_j k_j).
    let mut generators = h_translated.clone();
    generators.extend(k_basis.iter().map(|y| -*y));
    let tracked = orthonormalize_tracked(&generators);
    let tangent = tracked.span;
    let normal = complement(&tangent, &spec.ambient.span)?;

    let build = |coeffs: &[f64]| {
        let mut lift = Lift { h_part: Mat8::zero(), k_part: Mat8::zero(), h_translated: Mat8::zero() };
        for (i, &c) in coeffs.iter().enumerate() {
            if i < h_basis.len() {
                lift.h_part += h_basis[i] * c;
                lift.h_translated += h_translated[i] * c;
            } else {
                lift.k_part += k_basis[i - h_basis.len()] * c;
            }
        }
        lift
    };

    let lifts: Vec<Lift> = tracked.combinations.iter().map(|c| build(c)).collect();
    let lift_residual = lifts
        .iter()
        .zip(tangent.basis())
        .map(|(l, u)| norm_g(&(l.tangent() - u)))
        .fold(0.0, f64::max);
    if lift_residual > LIFT_TOL {
        return Err(Error::LiftFailed(lift_residual));
    }
    let null_directions = tracked.dependencies.iter().map(|c| build(c)).collect();

    Ok(OrbitFrame { t, point, tangent, normal, lifts, null_directions, lift_residual })
}

/// The unit normal of a principal orbit, signed to pair positively with the
/// section generator.
pub fn unit_normal(spec: &ActionSpec, t: f64) -> Result<LieMatrix> {
    spec.check_range(t)?;
    let frame = orbit_frame(spec, t)?;
    frame_unit_normal(spec, &frame)
}

fn frame_unit_normal(spec: &ActionSpec, frame: &OrbitFrame) -> Result<LieMatrix> {
    if frame.codimension() != 1 {
        return Err(Error::SingularOrbit { t: frame.t, codimension: frame.codimension() });
    }
    let n = frame.normal.vector(0);
    Ok(if inner_g(&n, &spec.section_generator) < 0.0 { -n } else { n })
}

fn check_normal(spec: &ActionSpec, frame: &OrbitFrame, normal: &LieMatrix) -> Result<()> {
    let norm_defect = (norm_g(normal) - 1.0).abs();
    let tangential = norm_g(&frame.tangent.project(normal)).max(spec.ambient.span.residual(normal));
    if norm_defect > NORMAL_TOL || tangential > NORMAL_TOL {
        return Err(Error::InvalidNormal { norm_defect, tangential });
    }
    Ok(())
}

/// `S(u, w)` for two lifts.
pub fn second_fundamental_form(a: &Lift, b: &Lift, normal: &LieMatrix) -> f64 {
    let left = a.h_translated - a.k_part;
    let right = b.h_translated + b.k_part;
    -0.5 * inner_g(&bracket(&left, &right), normal)
}

fn raw_shape(lifts: &[Lift], normal: &LieMatrix) -> Matrix {
    let n = lifts.len();
    Matrix::from_fn(n, n, |i, j| second_fundamental_form(&lifts[i], &lifts[j], normal))
}

/// Symmetry tolerance scaled by the squared size of the largest lift, since
/// rounding in the bracket grows with it near singular orbits.
fn symmetry_tolerance(lifts: &[Lift]) -> f64 {
    let size = lifts
        .iter()
        .map(|l| norm_g(&l.h_part).max(norm_g(&l.k_part)))
        .fold(1.0, f64::max);
    SHAPE_SYMMETRY_TOL * size * size
}

fn symmetrized_checked(raw: Matrix, tolerance: f64) -> Result<Matrix> {
    let defect = raw.asymmetry();
    if defect > tolerance {
        return Err(Error::ShapeAsymmetry(defect));
    }
    Ok(raw.symmetrized())
}

/// Shape operator in the frame's orthonormal tangent basis.
pub fn shape_operator_with_frame(
    spec: &ActionSpec,
    frame: &OrbitFrame,
    normal: &LieMatrix,
) -> Result<Matrix> {
    check_normal(spec, frame, normal)?;
    symmetrized_checked(raw_shape(&frame.lifts, normal), symmetry_tolerance(&frame.lifts))
}

/// Shape operator along `normal` at `g(t)`.
pub fn shape_operator(spec: &ActionSpec, t: f64, normal: &LieMatrix) -> Result<Matrix> {
    spec.check_range(t)?;
    let frame = orbit_frame(spec, t)?;
    shape_operator_with_frame(spec, &frame, normal)
}

/// Shape operator evaluated on the given tangent vectors, each lifted from the
/// frame. The vectors need not be orthonormal.
pub fn shape_on_vectors(
    spec: &ActionSpec,
    frame: &OrbitFrame,
    normal: &LieMatrix,
    vectors: &[LieMatrix],
) -> Result<Matrix> {
    check_normal(spec, frame, normal)?;
    let lifts: Vec<Lift> = vectors.iter().map(|u| frame.lift_of(u)).collect();
    symmetrized_checked(raw_shape(&lifts, normal), symmetry_tolerance(&lifts))
}

/// `(mean curvature, |A|²)` at a principal parameter, without an eigensolve.
pub fn curvature_invariants(spec: &ActionSpec, t: f64) -> Result<(f64, f64)> {
    spec.check_range(t)?;
    let frame = orbit_frame(spec, t)?;
    let normal = frame_unit_normal(spec, &frame)?;
    let s = shape_operator_with_frame(spec, &frame, &normal)?;
    Ok((s.trace(), s.frobenius_sq()))
}

/// Shape operator and principal curvatures of a principal orbit.
#[derive(Debug, Clone)]
pub struct SpectrumReport {
    pub action_type: ActionType,
    pub t: f64,
    pub s: f64,
    pub orbit_dim: usize,
    pub normal: LieMatrix,
    pub shape: Matrix,
    /// Ascending `(value, multiplicity)` clusters.
    pub curvatures: Vec<(f64, usize)>,
    pub mean_curvature: f64,
    pub norm_sq: f64,
    pub austere: bool,
    /// Some gap between distinct clusters is within ten times the cluster tolerance.
    pub cluster_ambiguous: bool,
}

impl SpectrumReport {
    pub fn multiplicities(&self) -> Vec<usize> {
        self.curvatures.iter().map(|c| c.1).collect()
    }
}

pub fn spectrum_report(spec: &ActionSpec, t: f64) -> Result<SpectrumReport> {
    spectrum_report_with_tol(spec, t, DEFAULT_CLUSTER_TOL)
}

pub fn spectrum_report_with_tol(spec: &ActionSpec, t: f64, cluster_tol: f64) -> Result<SpectrumReport> {
    spec.check_range(t)?;
    if let Some(singular) = spec.near_singular(t, SINGULAR_GUARD) {
        return Err(Error::NearSingular { t, singular, guard: SINGULAR_GUARD });
    }
    let frame = orbit_frame(spec, t)?;
    let normal = frame_unit_normal(spec, &frame)?;
    let shape = shape_operator_with_frame(spec, &frame, &normal)?;
    let eig = jacobi_eigen(&shape)?;
    let curvatures = cluster_sorted(&eig.values, cluster_tol);
    let cluster_ambiguous = curvatures
        .windows(2)
        .any(|w| w[1].0 - w[0].0 <= 10.0 * cluster_tol);
    Ok(SpectrumReport {
        action_type: spec.action_type,
        t,
        s: spec.s_of_t(t),
        orbit_dim: frame.orbit_dim(),
        normal,
        mean_curvature: shape.trace(),
        norm_sq: shape.frobenius_sq(),
        austere: is_austere(&curvatures, cluster_tol),
        curvatures,
        shape,
        cluster_ambiguous,
    })
}

/// True iff the multiset is symmetric under negation, multiplicities included.
pub fn is_austere(curvatures: &[(f64, usize)], tol: f64) -> bool {
    curvatures.iter().all(|&(value, mult)| {
        curvatures
            .iter()
            .any(|&(other, m)| m == mult && (other + value).abs() <= tol)
    })
}

const REFLECTION_TOL: f64 = 1e-9;

/// Checks the isometry that makes the minimal orbit weakly reflective.
///
/// Type III uses `f(x) = g(π) x⁻¹`, type IV uses `f(x) = a x σ` with
/// `a = g(π/2) σ g(−π/2)`.
pub fn verify_reflection(spec: &ActionSpec) -> Result<bool> {
    match spec.action_type {
        ActionType::III => Ok(reflection_iii(spec)),
        ActionType::IV => Ok(reflection_iv(spec)),
        other => Err(Error::UnsupportedAction(other)),
    }
}

fn reflection_iii(spec: &ActionSpec) -> bool {
    let g_pi = spec.point(PI);
    let in_g2 = matches!(is_automorphism(&g_pi, REFLECTION_TOL), Ok(true));

    let g_half = spec.point(FRAC_PI_2);
    let fixes_section = (g_half * spec.section_generator * g_half.transpose())
        .max_abs_diff(&spec.section_generator)
        < REFLECTION_TOL;

    // f maps h g(t) k to an orbit point with the same ℝP⁷ invariant.
    let lift = |x: &LieMatrix, t: f64| spin_lift_exp(x, t).expect("generator lies in so(7)");
    let Ok(f_elem) = spin_lift_exp(&spec.geodesic_generator, PI) else {
        return false;
    };
    let g2 = spec.h.basis();
    let mut preserves_orbits = true;
    for (n, &t) in [FRAC_PI_2, 0.3, 1.1].iter().enumerate() {
        let h = lift(&(g2[n % g2.len()] + g2[(n + 5) % g2.len()] * 0.5), 0.7 + n as f64);
        let k = lift(&(g2[(n + 3) % g2.len()] - g2[(n + 9) % g2.len()]), -1.3 + n as f64);
        let x: SpinElement = h * lift(&spec.geodesic_generator, t) * k;
        let fx = f_elem * x.inverse();
        if (rp7_invariant(&fx) - rp7_invariant(&x)).abs() > REFLECTION_TOL
            || (rp7_invariant(&x) - t.cos().abs()).abs() > REFLECTION_TOL
        {
            preserves_orbits = false;
        }
    }
    in_g2 && fixes_section && preserves_orbits
}

fn reflection_iv(spec: &ActionSpec) -> bool {
    let s = sigma();
    let a = spec.point(FRAC_PI_2) * s * spec.point(-FRAC_PI_2);
    let commutes = (a * s - s * a).max_abs() < REFLECTION_TOL;
    let negates_section =
        (s * spec.section_generator * s + spec.section_generator).max_abs() < REFLECTION_TOL;
    // f(g(π/2)) = g(π/2): the minimal orbit point is fixed.
    let x = spec.point(FRAC_PI_2);
    let fixes_point = (a * x * s).max_abs_diff(&x) < REFLECTION_TOL;
    // Ad(a) preserves h, so left multiplication by a permutes H-cosets.
    let normalizes_h = spec
        .h
        .basis()
        .iter()
        .all(|b| spec.h.span.residual(&(a * *b * a.transpose())) < REFLECTION_TOL);
    commutes && negates_section && fixes_point && normalizes_h
}
