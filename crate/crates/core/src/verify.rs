//! Self-checks of the algebraic layer, grouped by identity family.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::lie::{bracket, g, inner_g, so8_pairs, v, zeta, LieMatrix, Mat8};
use crate::octonion::{oct_mul, Octonion, FANO_LINES};
use crate::triality::{
    apply_triality, g2_fixed_dimension, named_subalgebra, SubalgebraName, TrialityMap,
};

/// Outcome of one group of identities.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub cases: usize,
    /// Largest observed defect.
    pub max_defect: f64,
    pub tolerance: f64,
}

impl CheckResult {
    fn new(name: &'static str, cases: usize, max_defect: f64, tolerance: f64) -> Self {
        CheckResult { name, passed: max_defect <= tolerance, cases, max_defect, tolerance }
    }
}

const SEED: u64 = 0x6702;

fn e(i: usize) -> Octonion {
    Octonion::basis(i)
}

/// `e0` is the unit, `e_i² = −1`, and each oriented line multiplies cyclically
/// and anticommutes.
pub fn check_basis_products() -> CheckResult {
    let mut expected = [[Octonion::zero(); 8]; 8];
    for i in 0..8 {
        expected[0][i] = e(i);
        expected[i][0] = e(i);
    }
    for (i, row) in expected.iter_mut().enumerate().skip(1) {
        row[i] = -e(0);
    }
    for &(a, b, c) in &FANO_LINES {
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            expected[x][y] = e(z);
            expected[y][x] = -e(z);
        }
    }
    let mut worst: f64 = 0.0;
    for (i, row) in expected.iter().enumerate() {
        for (j, want) in row.iter().enumerate() {
            worst = worst.max(oct_mul(&e(i), &e(j)).max_abs_diff(want));
        }
    }
    CheckResult::new("octonion basis products", 64, worst, 0.0)
}

/// `|xy| = |x||y|` on random pairs.
pub fn check_composition(pairs: usize) -> CheckResult {
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut random = || Octonion::new(std::array::from_fn(|_| rng.gen_range(-1.0..1.0)));
    let mut worst: f64 = 0.0;
    for _ in 0..pairs {
        let (x, y) = (random(), random());
        worst = worst.max((oct_mul(&x, &y).norm() - x.norm() * y.norm()).abs());
    }
    CheckResult::new("composition |xy| = |x||y|", pairs, worst, 1e-12)
}

type Params = (f64, f64, f64);
type BracketRule = (usize, usize, usize, fn(Params, Params) -> Params);

/// `[V_a(p), V_b(q)] = V_c(rule(p, q))`.
const V_BRACKETS: [BracketRule; 9] = [
    (1, 4, 5, |(l1, m1, n1), (l4, m4, n4)| (m1 * l4, -(l1 * n4 + n1 * m4), -(l1 * m4 + n1 * n4))),
    (1, 5, 4, |(l1, m1, n1), (l5, m5, n5)| (-m1 * l5, l1 * n5 + n1 * m5, l1 * m5 + n1 * n5)),
    (4, 5, 1, |(l4, m4, n4), (l5, m5, n5)| (-(m4 * n5 + n4 * m5), l4 * l5, -(m4 * m5 + n4 * n5))),
    (2, 4, 6, |(l2, m2, n2), (l4, m4, n4)| (l2 * n4 + n2 * l4, -m2 * m4, l2 * l4 + n2 * n4)),
    (2, 6, 4, |(l2, m2, n2), (l6, m6, n6)| (-(l2 * n6 + n2 * l6), m2 * m6, -(l2 * l6 + n2 * n6))),
    (4, 6, 2, |(l4, m4, n4), (l6, m6, n6)| (l4 * n6 + n4 * l6, -m4 * m6, l4 * l6 + n4 * n6)),
    (3, 4, 7, |(l3, m3, n3), (l4, m4, n4)| (-(l3 * m4 + n3 * l4), -(l3 * l4 + n3 * m4), m3 * n4)),
    (3, 7, 4, |(l3, m3, n3), (l7, m7, n7)| (l3 * m7 + n3 * l7, l3 * l7 + n3 * m7, -m3 * n7)),
    (4, 7, 3, |(l4, m4, n4), (l7, m7, n7)| (-(l4 * m7 + m4 * l7), n4 * n7, -(l4 * l7 + m4 * m7))),
];

fn grid() -> Vec<Params> {
    let r = [-2.0, -1.0, 0.0, 1.0, 2.0];
    let mut out = Vec::with_capacity(125);
    for &a in &r {
        for &b in &r {
            for &c in &r {
                out.push((a, b, c));
            }
        }
    }
    out
}

fn vp(axis: usize, p: Params) -> LieMatrix {
    v(axis, p.0, p.1, p.2)
}

/// The nine closed-form brackets between `V_1..V_7`, on the integer grid
/// `{−2..2}³ × {−2..2}³`. Entries are small integers, so the check is exact.
pub fn check_v_brackets() -> Vec<CheckResult> {
    let grid = grid();
    V_BRACKETS
        .iter()
        .map(|&(a, b, c, rule)| {
            let mut worst: f64 = 0.0;
            for &p in &grid {
                for &q in &grid {
                    let lhs = bracket(&vp(a, p), &vp(b, q));
                    let rhs = vp(c, rule(p, q));
                    worst = worst.max(lhs.max_abs_diff(&rhs));
                }
            }
            CheckResult::new(v_bracket_name(a, b), grid.len() * grid.len(), worst, 0.0)
        })
        .collect()
}

fn v_bracket_name(a: usize, b: usize) -> &'static str {
    match (a, b) {
        (1, 4) => "[V1, V4] in V5",
        (1, 5) => "[V1, V5] in V4",
        (4, 5) => "[V4, V5] in V1",
        (2, 4) => "[V2, V4] in V6",
        (2, 6) => "[V2, V6] in V4",
        (4, 6) => "[V4, V6] in V2",
        (3, 4) => "[V3, V4] in V7",
        (3, 7) => "[V3, V7] in V4",
        (4, 7) => "[V4, V7] in V3",
        _ => "[Va, Vb]",
    }
}

/// `[ζ_a, V_b(p)]` and `[V_a(p), ζ_b]` are multiples of `ζ_4` when the
/// coefficients of `p` sum to zero.
pub fn check_zeta_brackets() -> Vec<CheckResult> {
    type ZetaRule = (&'static str, bool, usize, usize, fn(Params) -> f64);
    let rules: [ZetaRule; 6] = [
        ("[zeta1, V5] = -lambda zeta4", true, 1, 5, |p| -p.0),
        ("[V1, zeta5] = -mu zeta4", false, 1, 5, |p| -p.1),
        ("[zeta2, V6] = mu zeta4", true, 2, 6, |p| p.1),
        ("[V2, zeta6] = mu zeta4", false, 2, 6, |p| p.1),
        ("[zeta3, V7] = -nu zeta4", true, 3, 7, |p| -p.2),
        ("[V3, zeta7] = -mu zeta4", false, 3, 7, |p| -p.1),
    ];
    let params: Vec<Params> = grid().into_iter().filter(|p| p.0 + p.1 + p.2 == 0.0).collect();
    rules
        .iter()
        .map(|&(name, zeta_left, a, b, coeff)| {
            let mut worst: f64 = 0.0;
            for &p in &params {
                let lhs = if zeta_left {
                    bracket(&zeta(a), &vp(b, p))
                } else {
                    bracket(&vp(a, p), &zeta(b))
                };
                worst = worst.max(lhs.max_abs_diff(&(zeta(4) * coeff(p))));
            }
            CheckResult::new(name, params.len(), worst, 0.0)
        })
        .collect()
}

fn random_so8(rng: &mut StdRng) -> LieMatrix {
    so8_pairs().fold(Mat8::zero(), |acc, (i, j)| acc + g(i, j) * rng.gen_range(-1.0..1.0))
}

/// `α² = β² = Id`, `γ = β∘α`, and all three preserve brackets.
pub fn check_triality() -> Vec<CheckResult> {
    let mut rng = StdRng::seed_from_u64(SEED + 1);
    let mut involution: f64 = 0.0;
    for (i, j) in so8_pairs() {
        for map in [TrialityMap::Alpha, TrialityMap::Beta] {
            let x = g(i, j);
            involution = involution.max(apply_triality(map, &apply_triality(map, &x)).max_abs_diff(&x));
        }
    }
    let mut homomorphism: f64 = 0.0;
    let mut composition: f64 = 0.0;
    for _ in 0..50 {
        let (x, y) = (random_so8(&mut rng), random_so8(&mut rng));
        for map in [TrialityMap::Alpha, TrialityMap::Beta, TrialityMap::Gamma] {
            let lhs = apply_triality(map, &bracket(&x, &y));
            let rhs = bracket(&apply_triality(map, &x), &apply_triality(map, &y));
            homomorphism = homomorphism.max(lhs.max_abs_diff(&rhs));
        }
        let direct = apply_triality(TrialityMap::Beta, &apply_triality(TrialityMap::Alpha, &x));
        composition = composition.max(apply_triality(TrialityMap::Gamma, &x).max_abs_diff(&direct));
    }
    vec![
        CheckResult::new("alpha^2 = beta^2 = Id", 56, involution, 1e-14),
        CheckResult::new("gamma = beta o alpha", 50, composition, 1e-12),
        CheckResult::new("alpha, beta, gamma preserve brackets", 150, homomorphism, 1e-10),
        CheckResult::new(
            "dim Fix(beta) n Fix(gamma) = 14",
            1,
            (g2_fixed_dimension() as f64 - 14.0).abs(),
            0.0,
        ),
    ]
}

/// Dimensions and bracket closure of every named subalgebra.
pub fn check_subalgebras() -> Vec<CheckResult> {
    SubalgebraName::ALL
        .iter()
        .flat_map(|&name| {
            let sub = named_subalgebra(name);
            let dim_name: &'static str = match name {
                SubalgebraName::G2 => "dim g2 = 14",
                SubalgebraName::Su3 => "dim su3 = 8",
                SubalgebraName::So4G2 => "dim so4 = 6",
                SubalgebraName::U3 => "dim u3 = 9",
                SubalgebraName::So3So4 => "dim so3+so4 = 9",
                SubalgebraName::So7 => "dim so7 = 21",
            };
            let closure_name: &'static str = match name {
                SubalgebraName::G2 => "g2 closed under brackets",
                SubalgebraName::Su3 => "su3 closed under brackets",
                SubalgebraName::So4G2 => "so4 closed under brackets",
                SubalgebraName::U3 => "u3 closed under brackets",
                SubalgebraName::So3So4 => "so3+so4 closed under brackets",
                SubalgebraName::So7 => "so7 closed under brackets",
            };
            let d = sub.dim();
            [
                CheckResult::new(dim_name, 1, (d as f64 - name.expected_dim() as f64).abs(), 0.0),
                CheckResult::new(closure_name, d * (d - 1) / 2, sub.closure_residual(), 1e-9),
            ]
        })
        .collect()
}

/// Jacobi identity, ad-invariance of the inner product, and commutativity inside each `V_i`.
pub fn check_lie_identities() -> Vec<CheckResult> {
    let mut rng = StdRng::seed_from_u64(SEED + 2);
    let mut jacobi: f64 = 0.0;
    let mut invariance: f64 = 0.0;
    for _ in 0..500 {
        let (x, y, z) = (random_so8(&mut rng), random_so8(&mut rng), random_so8(&mut rng));
        let j = bracket(&x, &bracket(&y, &z)) + bracket(&y, &bracket(&z, &x)) + bracket(&z, &bracket(&x, &y));
        jacobi = jacobi.max(j.max_abs());
        invariance = invariance.max((inner_g(&bracket(&z, &x), &y) + inner_g(&x, &bracket(&z, &y))).abs());
    }
    let mut abelian: f64 = 0.0;
    for axis in 1..=7 {
        for _ in 0..20 {
            let mut p = || rng.gen_range(-2.0..2.0);
            let a = v(axis, p(), p(), p());
            let b = v(axis, p(), p(), p());
            abelian = abelian.max(bracket(&a, &b).max_abs());
        }
    }
    vec![
        CheckResult::new("Jacobi identity", 500, jacobi, 1e-10),
        CheckResult::new("ad-invariance of the inner product", 500, invariance, 1e-10),
        CheckResult::new("each V_i is abelian", 140, abelian, 0.0),
    ]
}

/// Every group, in reporting order.
pub fn algebra_suite() -> Vec<CheckResult> {
    let mut out = vec![check_basis_products(), check_composition(1000)];
    out.extend(check_v_brackets());
    out.extend(check_zeta_brackets());
    out.extend(check_triality());
    out.extend(check_subalgebras());
    out.extend(check_lie_identities());
    out
}
