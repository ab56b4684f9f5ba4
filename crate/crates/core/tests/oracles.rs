//! Independent derivations checked against the library.

use g2orbits::lie::{expm, g_basis, v, Mat8};
use g2orbits::octonion::CAYLEY;
use g2orbits::triality::f_basis;
use g2orbits::Octonion;

const LINES: [(usize, usize, usize); 7] = [(1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 6, 4), (2, 5, 7), (3, 4, 7), (3, 5, 6)];

/// `table[i][j] = (sign, index)` with each line oriented forwards or backwards
/// according to the bits of `mask`.
fn table_for(mask: u32) -> [[(f64, usize); 8]; 8] {
    let mut t = [[(0.0, 0); 8]; 8];
    for i in 0..8 {
        t[0][i] = (1.0, i);
        t[i][0] = (1.0, i);
        if i > 0 {
            t[i][i] = (-1.0, 0);
        }
    }
    for (l, &(a, b, c)) in LINES.iter().enumerate() {
        let (a, b, c) = if mask & (1 << l) == 0 { (a, b, c) } else { (b, a, c) };
        for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
            t[x][y] = (1.0, z);
            t[y][x] = (-1.0, z);
        }
    }
    t
}

fn mul(t: &[[(f64, usize); 8]; 8], a: &[f64; 8], b: &[f64; 8]) -> [f64; 8] {
    let mut out = [0.0; 8];
    for i in 0..8 {
        for j in 0..8 {
            let (s, k) = t[i][j];
            out[k] += s * a[i] * b[j];
        }
    }
    out
}

fn apply(m: &Mat8, x: &[f64; 8]) -> [f64; 8] {
    std::array::from_fn(|r| (0..8).map(|c| m.0[r][c] * x[c]).sum())
}

fn basis(i: usize) -> [f64; 8] {
    std::array::from_fn(|k| if k == i { 1.0 } else { 0.0 })
}

/// `X(xy) − X(x) y − x X(y)` over basis pairs.
fn derivation_defect(t: &[[(f64, usize); 8]; 8], x: &Mat8) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..8 {
        for j in 0..8 {
            let (a, b) = (basis(i), basis(j));
            let lhs = apply(x, &mul(t, &a, &b));
            let r1 = mul(t, &apply(x, &a), &b);
            let r2 = mul(t, &a, &apply(x, &b));
            for k in 0..8 {
                worst = worst.max((lhs[k] - r1[k] - r2[k]).abs());
            }
        }
    }
    worst
}

#[test]
fn line_orientation_is_forced_by_the_derivation_property() {
    let g2_generators: Vec<Mat8> = (1..=7)
        .flat_map(|i| [v(i, 1.0, -1.0, 0.0), v(i, 0.0, 1.0, -1.0)])
        .collect();
    let admissible: Vec<u32> = (0..128u32)
        .filter(|&mask| {
            let t = table_for(mask);
            g2_generators.iter().all(|x| derivation_defect(&t, x) < 1e-12)
        })
        .collect();
    // Only the all-forward and the all-reversed orientations qualify, and
    // e1 e2 = e3 selects the forward one.
    assert_eq!(admissible, vec![0, 127]);
    let forward = table_for(0);
    for i in 0..8 {
        for j in 0..8 {
            assert_eq!(forward[i][j].1, CAYLEY.index(i, j));
            assert_eq!(forward[i][j].0, f64::from(CAYLEY.sign(i, j)));
        }
    }
}

#[test]
fn f_table_is_half_left_multiplication_twice() {
    // x ↦ ½ e_i (e_j x), built from octonion products.
    for i in 0..8 {
        for j in (i + 1)..8 {
            let f = f_basis(i, j).unwrap();
            for k in 0..8 {
                let x = Octonion::basis(k);
                let expected = 0.5 * (Octonion::basis(i) * (Octonion::basis(j) * x));
                assert!(f.apply(&x).max_abs_diff(&expected) < 1e-15, "F{i}{j} on e{k}");
            }
        }
    }
}

#[test]
fn exponential_of_plane_rotations() {
    // exp(t(a G01 + b G23 + c G45)) rotates three independent planes.
    let (a, b, c) = (0.7, -1.3, 2.1);
    let x = g_basis(0, 1).unwrap() * a + g_basis(2, 3).unwrap() * b + g_basis(4, 5).unwrap() * c;
    for &t in &[0.0, 0.4, 2.5, -7.0] {
        let e = expm(&x, t);
        for (i, j, w) in [(0, 1, a), (2, 3, b), (4, 5, c)] {
            let (cs, sn) = ((w * t).cos(), (w * t).sin());
            assert!((e.0[i][i] - cs).abs() < 1e-12);
            assert!((e.0[j][i] - sn).abs() < 1e-12);
            assert!((e.0[i][j] + sn).abs() < 1e-12);
            assert!((e.0[j][j] - cs).abs() < 1e-12);
        }
        assert!((e.0[6][6] - 1.0).abs() < 1e-15 && (e.0[7][7] - 1.0).abs() < 1e-15);
    }
}

#[test]
fn exponential_of_a_generic_generator_agrees_with_a_long_series() {
    let x = v(2, 0.3, -1.1, 0.8) + v(5, 1.0, 0.2, -0.4) + g_basis(0, 6).unwrap() * 0.5;
    let t = 1.7;
    // Plain Taylor series with many terms at a moderate norm.
    let a = x * t;
    let mut sum = Mat8::identity();
    let mut term = Mat8::identity();
    for k in 1..80 {
        term = term * a * (1.0 / k as f64);
        sum += term;
    }
    assert!(expm(&x, t).max_abs_diff(&sum) < 1e-11);
}
