//! Triality on so(8): the automorphisms α, β, γ, the subalgebras they cut
//! out, and lifts of one-parameter subgroups of SO(7) to Spin(7).
//!
//! α conjugates by octonion conjugation, β sends `G_ij` to `F_ij` and
//! γ = β∘α. For `X ∈ so(8)` the triple `(X, γX, βX)` satisfies
//! `X(a) b + a γX(b) = βX(ab)`; this is what lets [`spin_lift_exp`] produce
//! the second component of a Spin(7) element from an element of so(7).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::lie::{expm, g, so8_pairs, v, LieMatrix, Mat8, SO8_DIM};
use crate::octonion::{oct_mul, Octonion};
use crate::subspace::{orthonormalize, Subspace};

/// Tolerance for membership of a generator in so(7).
pub const SO7_TOL: f64 = 1e-10;

/// `2 F_ij = Σ sign · G_ab` for each `i < j`.
const F_TABLE: [((usize, usize), [(i8, usize, usize); 4]); 28] = [
    ((0, 1), [(1, 0, 1), (1, 2, 3), (1, 4, 5), (1, 6, 7)]),
    ((2, 3), [(1, 0, 1), (1, 2, 3), (-1, 4, 5), (-1, 6, 7)]),
    ((4, 5), [(1, 0, 1), (-1, 2, 3), (1, 4, 5), (-1, 6, 7)]),
    ((6, 7), [(1, 0, 1), (-1, 2, 3), (-1, 4, 5), (1, 6, 7)]),
    ((0, 2), [(1, 0, 2), (-1, 1, 3), (-1, 4, 6), (1, 5, 7)]),
    ((1, 3), [(-1, 0, 2), (1, 1, 3), (-1, 4, 6), (1, 5, 7)]),
    ((4, 6), [(-1, 0, 2), (-1, 1, 3), (1, 4, 6), (1, 5, 7)]),
    ((5, 7), [(1, 0, 2), (1, 1, 3), (1, 4, 6), (1, 5, 7)]),
    ((0, 3), [(1, 0, 3), (1, 1, 2), (1, 4, 7), (1, 5, 6)]),
    ((1, 2), [(1, 0, 3), (1, 1, 2), (-1, 4, 7), (-1, 5, 6)]),
    ((4, 7), [(1, 0, 3), (-1, 1, 2), (1, 4, 7), (-1, 5, 6)]),
    ((5, 6), [(1, 0, 3), (-1, 1, 2), (-1, 4, 7), (1, 5, 6)]),
    ((0, 4), [(1, 0, 4), (-1, 1, 5), (1, 2, 6), (-1, 3, 7)]),
    ((1, 5), [(-1, 0, 4), (1, 1, 5), (1, 2, 6), (-1, 3, 7)]),
    ((2, 6), [(1, 0, 4), (1, 1, 5), (1, 2, 6), (1, 3, 7)]),
    ((3, 7), [(-1, 0, 4), (-1, 1, 5), (1, 2, 6), (1, 3, 7)]),
    ((0, 5), [(1, 0, 5), (1, 1, 4), (-1, 2, 7), (-1, 3, 6)]),
    ((1, 4), [(1, 0, 5), (1, 1, 4), (1, 2, 7), (1, 3, 6)]),
    ((2, 7), [(-1, 0, 5), (1, 1, 4), (1, 2, 7), (-1, 3, 6)]),
    ((3, 6), [(-1, 0, 5), (1, 1, 4), (-1, 2, 7), (1, 3, 6)]),
    ((0, 6), [(1, 0, 6), (-1, 1, 7), (-1, 2, 4), (1, 3, 5)]),
    ((1, 7), [(-1, 0, 6), (1, 1, 7), (-1, 2, 4), (1, 3, 5)]),
    ((2, 4), [(-1, 0, 6), (-1, 1, 7), (1, 2, 4), (1, 3, 5)]),
    ((3, 5), [(1, 0, 6), (1, 1, 7), (1, 2, 4), (1, 3, 5)]),
    ((0, 7), [(1, 0, 7), (1, 1, 6), (1, 2, 5), (1, 3, 4)]),
    ((1, 6), [(1, 0, 7), (1, 1, 6), (-1, 2, 5), (-1, 3, 4)]),
    ((2, 5), [(1, 0, 7), (-1, 1, 6), (1, 2, 5), (-1, 3, 4)]),
    ((3, 4), [(1, 0, 7), (-1, 1, 6), (-1, 2, 5), (1, 3, 4)]),
];

/// `F_ij`; `F_ji = -F_ij`.
pub fn f_basis(i: usize, j: usize) -> Result<LieMatrix> {
    if i == j || i > 7 || j > 7 {
        return Err(Error::InvalidIndex(i, j));
    }
    let (lo, hi, sign) = if i < j { (i, j, 1.0) } else { (j, i, -1.0) };
    let (_, terms) = F_TABLE
        .iter()
        .find(|(key, _)| *key == (lo, hi))
        .expect("F table covers every pair");
    let mut m = Mat8::zero();
    for &(s, a, b) in terms {
        m += g(a, b) * (0.5 * f64::from(s));
    }
    Ok(m * sign)
}

/// One of the three triality automorphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TrialityMap {
    Alpha,
    Beta,
    Gamma,
}

/// α, β, γ as 28x28 matrices acting on `G_ij` coordinates.
#[derive(Debug, Clone)]
pub struct TrialityMaps {
    pub alpha: [[f64; SO8_DIM]; SO8_DIM],
    pub beta: [[f64; SO8_DIM]; SO8_DIM],
    pub gamma: [[f64; SO8_DIM]; SO8_DIM],
}

impl TrialityMaps {
    pub fn new() -> Self {
        let basis: Vec<LieMatrix> = so8_pairs().map(|(i, j)| g(i, j)).collect();
        let column_matrix = |f: &dyn Fn(&LieMatrix) -> LieMatrix| {
            let mut m = [[0.0; SO8_DIM]; SO8_DIM];
            for (c, b) in basis.iter().enumerate() {
                for (r, val) in f(b).so8_coords().into_iter().enumerate() {
                    m[r][c] = val;
                }
            }
            m
        };
        let alpha = column_matrix(&alpha_direct);
        let beta = column_matrix(&|x: &LieMatrix| {
            let mut out = Mat8::zero();
            for (c, (i, j)) in x.so8_coords().into_iter().zip(so8_pairs()) {
                if c != 0.0 {
                    out += f_basis(i, j).expect("valid pair") * c;
                }
            }
            out
        });
        let mut gamma = [[0.0; SO8_DIM]; SO8_DIM];
        for (r, row) in gamma.iter_mut().enumerate() {
            for (c, out) in row.iter_mut().enumerate() {
                *out = (0..SO8_DIM).map(|k| beta[r][k] * alpha[k][c]).sum();
            }
        }
        TrialityMaps { alpha, beta, gamma }
    }

    pub fn matrix(&self, map: TrialityMap) -> &[[f64; SO8_DIM]; SO8_DIM] {
        match map {
            TrialityMap::Alpha => &self.alpha,
            TrialityMap::Beta => &self.beta,
            TrialityMap::Gamma => &self.gamma,
        }
    }

    pub fn apply(&self, map: TrialityMap, x: &LieMatrix) -> LieMatrix {
        let m = self.matrix(map);
        let c = x.so8_coords();
        let out: [f64; SO8_DIM] =
            std::array::from_fn(|r| (0..SO8_DIM).map(|k| m[r][k] * c[k]).sum());
        Mat8::from_so8_coords(&out)
    }
}

impl Default for TrialityMaps {
    fn default() -> Self {
        Self::new()
    }
}

fn maps() -> &'static TrialityMaps {
    static MAPS: std::sync::OnceLock<TrialityMaps> = std::sync::OnceLock::new();
    MAPS.get_or_init(TrialityMaps::new)
}

/// `α(X)(a) = conj(X(conj a))`, i.e. `α(X) = C X C` with `C = diag(1, -1, ..., -1)`.
fn alpha_direct(x: &LieMatrix) -> LieMatrix {
    let c = Mat8::diag([1.0, -1.0, -1.0, -1.0, -1.0, -1.0, -1.0, -1.0]);
    c * *x * c
}

pub fn apply_triality(map: TrialityMap, x: &LieMatrix) -> LieMatrix {
    match map {
        TrialityMap::Alpha => alpha_direct(x),
        _ => maps().apply(map, x),
    }
}

/// The subalgebras used by the actions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubalgebraName {
    G2,
    Su3,
    So4G2,
    U3,
    So3So4,
    So7,
}

impl SubalgebraName {
    pub const ALL: [SubalgebraName; 6] = [
        SubalgebraName::G2,
        SubalgebraName::Su3,
        SubalgebraName::So4G2,
        SubalgebraName::U3,
        SubalgebraName::So3So4,
        SubalgebraName::So7,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SubalgebraName::G2 => "g2",
            SubalgebraName::Su3 => "su3",
            SubalgebraName::So4G2 => "so4_g2",
            SubalgebraName::U3 => "u3",
            SubalgebraName::So3So4 => "so3_so4",
            SubalgebraName::So7 => "so7",
        }
    }

    /// Dimension the subalgebra is known to have.
    pub fn expected_dim(&self) -> usize {
        match self {
            SubalgebraName::G2 => 14,
            SubalgebraName::Su3 => 8,
            SubalgebraName::So4G2 => 6,
            SubalgebraName::U3 => 9,
            SubalgebraName::So3So4 => 9,
            SubalgebraName::So7 => 21,
        }
    }
}

impl fmt::Display for SubalgebraName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SubalgebraName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SubalgebraName::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnknownSubalgebra(s.to_string()))
    }
}

/// A subalgebra with its spanning set and an orthonormal basis.
#[derive(Debug, Clone)]
pub struct NamedSubalgebra {
    pub name: SubalgebraName,
    pub generators: Vec<LieMatrix>,
    pub span: Subspace,
}

impl NamedSubalgebra {
    pub fn dim(&self) -> usize {
        self.span.dim()
    }

    pub fn basis(&self) -> Vec<LieMatrix> {
        self.span.basis()
    }

    /// Largest residual of `[b_i, b_j]` off the span, over basis pairs.
    pub fn closure_residual(&self) -> f64 {
        let basis = self.basis();
        let mut worst: f64 = 0.0;
        for (i, a) in basis.iter().enumerate() {
            for b in &basis[i + 1..] {
                worst = worst.max(self.span.residual(&crate::lie::bracket(a, b)));
            }
        }
        worst
    }
}

/// The two-parameter g2 slice `{V_i(λ, μ, ν) : λ + μ + ν = 0}` of axis `i`.
fn g2_slice(axis: usize) -> [LieMatrix; 2] {
    [v(axis, 1.0, -1.0, 0.0), v(axis, 0.0, 1.0, -1.0)]
}

fn generators(name: SubalgebraName) -> Vec<LieMatrix> {
    match name {
        SubalgebraName::G2 => (1..=7).flat_map(g2_slice).collect(),
        SubalgebraName::Su3 => {
            let mut gens = g2_slice(1).to_vec();
            gens.extend((2..=7).map(|i| v(i, 0.0, 1.0, -1.0)));
            gens
        }
        SubalgebraName::So4G2 => (1..=3).flat_map(g2_slice).collect(),
        SubalgebraName::U3 => {
            let mut gens = vec![v(1, 1.0, 0.0, 0.0), v(1, 0.0, 1.0, 0.0), v(1, 0.0, 0.0, 1.0)];
            gens.extend((2..=7).map(|i| v(i, 0.0, 1.0, -1.0)));
            gens
        }
        SubalgebraName::So3So4 => (1..8)
            .flat_map(|i| ((i + 1)..8).map(move |j| (i, j)))
            .filter(|&(i, j)| j <= 3 || i >= 4)
            .map(|(i, j)| g(i, j))
            .collect(),
        SubalgebraName::So7 => (1..8)
            .flat_map(|i| ((i + 1)..8).map(move |j| g(i, j)))
            .collect(),
    }
}

pub fn named_subalgebra(name: SubalgebraName) -> NamedSubalgebra {
    let generators = generators(name);
    let span = orthonormalize(&generators);
    NamedSubalgebra { name, generators, span }
}

/// Looks a subalgebra up by its string name (`g2`, `su3`, `so4_g2`, `u3`, `so3_so4`, `so7`).
pub fn named_subalgebra_by_name(name: &str) -> Result<NamedSubalgebra> {
    Ok(named_subalgebra(name.parse()?))
}

/// The involution `σ = diag(1, 1, 1, 1, -1, -1, -1, -1)` on `e0, ..., e7`.
pub fn sigma() -> Mat8 {
    Mat8::diag([1.0, 1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -1.0])
}

/// True iff `g(e_i) g(e_j) = g(e_i e_j)` for all basis pairs within `tol`.
pub fn is_automorphism(m: &Mat8, tol: f64) -> Result<bool> {
    let defect = m.orthogonality_defect();
    if defect > tol {
        return Err(Error::NotOrthogonal(defect));
    }
    for i in 0..8 {
        for j in 0..8 {
            let lhs = oct_mul(&m.column(i), &m.column(j));
            let rhs = m.apply(&oct_mul(&Octonion::basis(i), &Octonion::basis(j)));
            if lhs.max_abs_diff(&rhs) > tol {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// An element `(g1, g2, g2)` of Spin(7) ⊂ SO(8)³, stored as its first two
/// components. It satisfies `(g1 a)(g2 b) = g2(ab)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinElement {
    pub g1: Mat8,
    pub g2: Mat8,
}

impl SpinElement {
    pub fn identity() -> Self {
        SpinElement { g1: Mat8::identity(), g2: Mat8::identity() }
    }

    /// Componentwise product.
    pub fn mul(&self, other: &SpinElement) -> SpinElement {
        SpinElement { g1: self.g1 * other.g1, g2: self.g2 * other.g2 }
    }

    pub fn inverse(&self) -> SpinElement {
        SpinElement { g1: self.g1.transpose(), g2: self.g2.transpose() }
    }

    /// `χ'(p)(a) = g2(a)`.
    pub fn chi_prime(&self, a: &Octonion) -> Octonion {
        self.g2.apply(a)
    }

    /// Largest defect of `(g1 a)(g2 b) - g2(ab)` over basis pairs.
    pub fn relation_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..8 {
            for j in 0..8 {
                let lhs = oct_mul(&self.g1.column(i), &self.g2.column(j));
                let rhs = self.g2.apply(&oct_mul(&Octonion::basis(i), &Octonion::basis(j)));
                worst = worst.max(lhs.max_abs_diff(&rhs));
            }
        }
        worst
    }
}

impl std::ops::Mul for SpinElement {
    type Output = SpinElement;
    fn mul(self, rhs: SpinElement) -> SpinElement {
        SpinElement::mul(&self, &rhs)
    }
}

/// Lift of `exp(tX)` for `X ∈ so(7)`: `g1 = exp(tX)`, `g2 = exp(tγ(X))`.
pub fn spin_lift_exp(x: &LieMatrix, t: f64) -> Result<SpinElement> {
    let alpha_defect = apply_triality(TrialityMap::Alpha, x).max_abs_diff(x);
    if alpha_defect > SO7_TOL {
        return Err(Error::NotInSo7(alpha_defect));
    }
    let gx = apply_triality(TrialityMap::Gamma, x);
    Ok(SpinElement { g1: expm(x, t), g2: expm(&gx, t) })
}

/// `|pr_[x](e0)|` at `[x] = χ(p)[e0]`, i.e. `|(g2 e0, e0)|`.
pub fn rp7_invariant(p: &SpinElement) -> f64 {
    p.g2.apply(&Octonion::one()).inner(&Octonion::one()).abs()
}

/// Dimension of `Fix(β) ∩ Fix(γ)`, computed from the 28x28 map matrices.
pub fn g2_fixed_dimension() -> usize {
    let m = maps();
    let mut rows: Vec<LieMatrix> = Vec::with_capacity(2 * SO8_DIM);
    // The fixed space is the kernel of the stacked (β - I; γ - I). Its
    // dimension is 28 minus the rank of the row space.
    for map in [&m.beta, &m.gamma] {
        for (r, row) in map.iter().enumerate() {
            let mut coords = *row;
            coords[r] -= 1.0;
            rows.push(Mat8::from_so8_coords(&coords));
        }
    }
    SO8_DIM - orthonormalize(&rows).dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{bracket, zeta};

    fn e(i: usize) -> Octonion {
        Octonion::basis(i)
    }

    #[test]
    fn f_table_rows() {
        assert_eq!(f_basis(2, 3).unwrap() * 2.0, g(0, 1) + g(2, 3) - g(4, 5) - g(6, 7));
        assert_eq!(f_basis(4, 5).unwrap() * 2.0, g(0, 1) - g(2, 3) + g(4, 5) - g(6, 7));
        assert_eq!(f_basis(5, 4).unwrap(), -f_basis(4, 5).unwrap());
        assert!(f_basis(3, 3).is_err());
    }

    #[test]
    fn f_family_is_a_basis() {
        let fs: Vec<_> = so8_pairs().map(|(i, j)| f_basis(i, j).unwrap()).collect();
        assert_eq!(orthonormalize(&fs).dim(), 28);
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(apply_triality(TrialityMap::Alpha, &g(2, 3)), g(2, 3));
        assert_eq!(apply_triality(TrialityMap::Alpha, &g(0, 1)), -g(0, 1));
    }

    #[test]
    fn involutions() {
        for (i, j) in so8_pairs() {
            let x = g(i, j);
            for map in [TrialityMap::Alpha, TrialityMap::Beta] {
                let twice = apply_triality(map, &apply_triality(map, &x));
                assert!(twice.max_abs_diff(&x) < 1e-14, "{map:?} on G{i}{j}");
            }
        }
    }

    #[test]
    fn gamma_is_beta_after_alpha() {
        let x = g(0, 4) * 0.3 + v(2, 1.0, -2.0, 0.5);
        let direct = apply_triality(
            TrialityMap::Beta,
            &apply_triality(TrialityMap::Alpha, &x),
        );
        assert!(apply_triality(TrialityMap::Gamma, &x).max_abs_diff(&direct) < 1e-14);
    }

    #[test]
    fn maps_preserve_brackets() {
        let x = g(0, 3) + v(5, 0.2, -1.0, 0.4) * 2.0;
        let y = g(1, 6) * -0.7 + g(0, 2) + v(3, 1.0, 1.0, -3.0);
        for map in [TrialityMap::Alpha, TrialityMap::Beta, TrialityMap::Gamma] {
            let lhs = apply_triality(map, &bracket(&x, &y));
            let rhs = bracket(&apply_triality(map, &x), &apply_triality(map, &y));
            assert!(lhs.max_abs_diff(&rhs) < 1e-12, "{map:?}");
        }
    }

    #[test]
    fn triality_relation() {
        let x = g(0, 5) * 1.3 + v(4, 0.5, -0.2, 1.0) + g(2, 7) * -0.4;
        let x2 = apply_triality(TrialityMap::Gamma, &x);
        let x3 = apply_triality(TrialityMap::Beta, &x);
        let a = Octonion::new([0.2, -1.0, 0.3, 0.8, -0.5, 1.1, 0.0, 0.4]);
        let b = Octonion::new([1.0, 0.1, -0.7, 0.2, 0.9, -0.3, 0.6, -1.2]);
        let lhs = oct_mul(&x.apply(&a), &b) + oct_mul(&a, &x2.apply(&b));
        let rhs = x3.apply(&oct_mul(&a, &b));
        assert!(lhs.max_abs_diff(&rhs) < 1e-12);
    }

    #[test]
    fn fixed_space_of_beta_and_gamma_is_g2() {
        assert_eq!(g2_fixed_dimension(), 14);
        for b in named_subalgebra(SubalgebraName::G2).generators {
            assert!(apply_triality(TrialityMap::Beta, &b).max_abs_diff(&b) < 1e-14);
            assert!(apply_triality(TrialityMap::Gamma, &b).max_abs_diff(&b) < 1e-14);
            assert!(apply_triality(TrialityMap::Alpha, &b).max_abs_diff(&b) < 1e-14);
        }
    }

    #[test]
    fn so7_is_fixed_by_alpha_and_beta_equals_gamma_there() {
        for i in 1..8 {
            for j in (i + 1)..8 {
                let x = g(i, j);
                assert_eq!(apply_triality(TrialityMap::Alpha, &x), x);
                let b = apply_triality(TrialityMap::Beta, &x);
                let c = apply_triality(TrialityMap::Gamma, &x);
                assert!(b.max_abs_diff(&c) < 1e-14);
            }
        }
    }

    #[test]
    fn subalgebra_dimensions_and_closure() {
        for name in SubalgebraName::ALL {
            let sub = named_subalgebra(name);
            assert_eq!(sub.dim(), name.expected_dim(), "{name}");
            assert!(sub.closure_residual() < 1e-9, "{name}");
        }
        assert!(named_subalgebra_by_name("g3").is_err());
        assert_eq!(named_subalgebra_by_name("u3").unwrap().dim(), 9);
    }

    #[test]
    fn su3_is_codimension_one_in_u3() {
        let su3 = named_subalgebra(SubalgebraName::Su3);
        let u3 = named_subalgebra(SubalgebraName::U3);
        assert_eq!(u3.dim() - su3.dim(), 1);
        for b in su3.basis() {
            assert!(u3.span.residual(&b) < 1e-12);
        }
    }

    #[test]
    fn so3_so4_commutes_with_sigma() {
        let s = sigma();
        for b in named_subalgebra(SubalgebraName::So3So4).generators {
            assert!((s * b - b * s).max_abs() < 1e-15);
        }
    }

    #[test]
    fn automorphism_checks() {
        assert!(is_automorphism(&Mat8::identity(), 1e-12).unwrap());
        assert!(!is_automorphism(&expm(&g(0, 1), 1.0), 1e-9).unwrap());
        for b in named_subalgebra(SubalgebraName::G2).generators {
            assert!(is_automorphism(&expm(&b, 0.83), 1e-10).unwrap());
        }
        assert!(is_automorphism(&sigma(), 1e-12).unwrap());
        let skewed = Mat8::identity() * 2.0;
        assert!(matches!(is_automorphism(&skewed, 1e-9), Err(Error::NotOrthogonal(_))));
    }

    #[test]
    fn lifts_reproduce_sections() {
        for &t in &[0.0, 0.4, 1.3, 2.9] {
            let iii = spin_lift_exp(&v(4, 1.0, 0.0, 1.0), t).unwrap();
            let target = t.cos() * e(0) + t.sin() * e(4);
            assert!(iii.chi_prime(&e(0)).max_abs_diff(&target) < 1e-12);

            let iv = spin_lift_exp(&v(4, 1.0, 0.0, 0.0), t).unwrap();
            let target = (t / 2.0).cos() * e(0) + (t / 2.0).sin() * e(4);
            assert!(iv.chi_prime(&e(0)).max_abs_diff(&target) < 1e-12);

            let h = spin_lift_exp(&zeta(4), t).unwrap();
            let target = (1.5 * t).cos() * e(0) + (1.5 * t).sin() * e(4);
            assert!(h.chi_prime(&e(0)).max_abs_diff(&target) < 1e-12);
        }
    }

    #[test]
    fn lift_relation_holds() {
        let x = v(2, 0.3, 1.0, -0.4) + v(6, 1.2, 0.0, 0.5);
        let p = spin_lift_exp(&x, 0.9).unwrap();
        assert!(p.relation_defect() < 1e-10);
        let q = spin_lift_exp(&v(7, -1.0, 0.5, 2.0), -0.4).unwrap();
        assert!((p * q).relation_defect() < 1e-10);
        assert!((p * p.inverse()).g2.max_abs_diff(&Mat8::identity()) < 1e-12);
    }

    #[test]
    fn lift_rejects_non_so7_generators() {
        assert!(matches!(spin_lift_exp(&g(0, 1), 1.0), Err(Error::NotInSo7(_))));
    }

    #[test]
    fn g2_lifts_have_equal_components() {
        for b in named_subalgebra(SubalgebraName::G2).generators {
            let p = spin_lift_exp(&b, 1.1).unwrap();
            assert!(p.g1.max_abs_diff(&p.g2) < 1e-13);
        }
    }

    #[test]
    fn rp7_invariant_examples() {
        assert_eq!(rp7_invariant(&SpinElement::identity()), 1.0);
        let p = spin_lift_exp(&v(4, 1.0, 0.0, 1.0), std::f64::consts::FRAC_PI_2).unwrap();
        assert!(rp7_invariant(&p) < 1e-15);
    }

    #[test]
    fn subalgebra_names_round_trip() {
        for name in SubalgebraName::ALL {
            assert_eq!(name.as_str().parse::<SubalgebraName>().unwrap(), name);
        }
    }
}
