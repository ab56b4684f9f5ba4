//! Dense 8x8 matrices and the Lie-algebra layer of so(8).
//!
//! Matrices act on octonion coefficient vectors: column `k` of a matrix is
//! the image of `e_k`. `G_ij` sends `e_i` to `e_j` and `e_j` to `-e_i`, so
//! the family `{G_ij : i < j}` is an orthonormal basis of so(8) for the
//! invariant inner product `⟨X, Y⟩ = -tr(XY)/2`.

use std::fmt;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::octonion::Octonion;

/// Dimension of so(8).
pub const SO8_DIM: usize = 28;

/// A dense real 8x8 matrix. Elements of so(8) and of SO(8) share this type.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Mat8(pub [[f64; 8]; 8]);

/// An element of so(8), stored as a skew-symmetric [`Mat8`].
pub type LieMatrix = Mat8;

impl Mat8 {
    pub const fn zero() -> Self {
        Mat8([[0.0; 8]; 8])
    }

    pub const fn identity() -> Self {
        let mut m = [[0.0; 8]; 8];
        let mut i = 0;
        while i < 8 {
            m[i][i] = 1.0;
            i += 1;
        }
        Mat8(m)
    }

    pub fn diag(d: [f64; 8]) -> Self {
        let mut m = Self::zero();
        for (i, v) in d.into_iter().enumerate() {
            m.0[i][i] = v;
        }
        m
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zero();
        for i in 0..8 {
            for j in 0..8 {
                t.0[j][i] = self.0[i][j];
            }
        }
        t
    }

    pub fn trace(&self) -> f64 {
        (0..8).map(|i| self.0[i][i]).sum()
    }

    pub fn apply(&self, x: &Octonion) -> Octonion {
        let mut out = [0.0; 8];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..8).map(|j| self.0[i][j] * x.coeffs[j]).sum();
        }
        Octonion::new(out)
    }

    /// Column `k`, i.e. the image of `e_k`.
    pub fn column(&self, k: usize) -> Octonion {
        Octonion::new(std::array::from_fn(|i| self.0[i][k]))
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn frobenius(&self) -> f64 {
        self.0.iter().flatten().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    /// Largest entry of `X + Xᵀ`.
    pub fn skew_defect(&self) -> f64 {
        (*self + self.transpose()).max_abs()
    }

    /// Largest entry of `XᵀX - I`.
    pub fn orthogonality_defect(&self) -> f64 {
        (self.transpose() * *self - Self::identity()).max_abs()
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn det(&self) -> f64 {
        let mut a = self.0;
        let mut det = 1.0;
        for c in 0..8 {
            let p = (c..8)
                .max_by(|&x, &y| a[x][c].abs().total_cmp(&a[y][c].abs()))
                .unwrap_or(c);
            if a[p][c] == 0.0 {
                return 0.0;
            }
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            det *= a[c][c];
            for r in (c + 1)..8 {
                let f = a[r][c] / a[c][c];
                for k in c..8 {
                    a[r][k] -= f * a[c][k];
                }
            }
        }
        det
    }

    /// Coordinates in the orthonormal basis `{G_ij : 0 ≤ i < j ≤ 7}`, in
    /// lexicographic order of `(i, j)`.
    pub fn so8_coords(&self) -> [f64; SO8_DIM] {
        let mut c = [0.0; SO8_DIM];
        for (slot, (i, j)) in c.iter_mut().zip(so8_pairs()) {
            *slot = 0.5 * (self.0[j][i] - self.0[i][j]);
        }
        c
    }

    pub fn from_so8_coords(c: &[f64]) -> Self {
        debug_assert_eq!(c.len(), SO8_DIM);
        let mut m = Self::zero();
        for (&v, (i, j)) in c.iter().zip(so8_pairs()) {
            m.0[j][i] += v;
            m.0[i][j] -= v;
        }
        m
    }
}

/// The index pairs `(i, j)` with `0 ≤ i < j ≤ 7`, lexicographically.
pub fn so8_pairs() -> impl Iterator<Item = (usize, usize)> {
    (0..8).flat_map(|i| ((i + 1)..8).map(move |j| (i, j)))
}

impl Index<(usize, usize)> for Mat8 {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.0[i][j]
    }
}

impl IndexMut<(usize, usize)> for Mat8 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.0[i][j]
    }
}

impl Add for Mat8 {
    type Output = Mat8;
    fn add(mut self, rhs: Mat8) -> Mat8 {
        self += rhs;
        self
    }
}

impl AddAssign for Mat8 {
    fn add_assign(&mut self, rhs: Mat8) {
        for (r, s) in self.0.iter_mut().zip(rhs.0.iter()) {
            for (a, b) in r.iter_mut().zip(s) {
                *a += b;
            }
        }
    }
}

impl Sub for Mat8 {
    type Output = Mat8;
    fn sub(self, rhs: Mat8) -> Mat8 {
        self + (-rhs)
    }
}

impl Neg for Mat8 {
    type Output = Mat8;
    fn neg(self) -> Mat8 {
        self * -1.0
    }
}

impl Mul for Mat8 {
    type Output = Mat8;
    fn mul(self, rhs: Mat8) -> Mat8 {
        let mut out = Mat8::zero();
        for i in 0..8 {
            for k in 0..8 {
                let a = self.0[i][k];
                if a == 0.0 {
                    continue;
                }
                for j in 0..8 {
                    out.0[i][j] += a * rhs.0[k][j];
                }
            }
        }
        out
    }
}

impl Mul<f64> for Mat8 {
    type Output = Mat8;
    fn mul(self, rhs: f64) -> Mat8 {
        Mat8(self.0.map(|r| r.map(|v| v * rhs)))
    }
}

impl Mul<Mat8> for f64 {
    type Output = Mat8;
    fn mul(self, rhs: Mat8) -> Mat8 {
        rhs * self
    }
}

impl fmt::Display for Mat8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.0 {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>9.5}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `G_ij`: `e_i ↦ e_j`, `e_j ↦ -e_i`, other basis vectors to zero.
pub fn g_basis(i: usize, j: usize) -> Result<LieMatrix> {
    if i == j || i > 7 || j > 7 {
        return Err(Error::InvalidIndex(i, j));
    }
    let mut m = Mat8::zero();
    m.0[j][i] = 1.0;
    m.0[i][j] = -1.0;
    Ok(m)
}

/// Infallible `G_ij` for indices known to be valid.
pub(crate) fn g(i: usize, j: usize) -> LieMatrix {
    g_basis(i, j).expect("valid G index")
}

/// Signed `G` terms making up `V_axis(λ, μ, ν)`, one per parameter.
const V_TERMS: [[(f64, usize, usize); 3]; 7] = [
    [(1.0, 2, 3), (1.0, 4, 5), (1.0, 6, 7)],
    [(-1.0, 1, 3), (-1.0, 4, 6), (1.0, 5, 7)],
    [(1.0, 1, 2), (1.0, 4, 7), (1.0, 5, 6)],
    [(-1.0, 1, 5), (1.0, 2, 6), (-1.0, 3, 7)],
    [(1.0, 1, 4), (-1.0, 2, 7), (-1.0, 3, 6)],
    [(-1.0, 1, 7), (-1.0, 2, 4), (1.0, 3, 5)],
    [(1.0, 1, 6), (1.0, 2, 5), (1.0, 3, 4)],
];

/// The element `V_axis(λ, μ, ν)` of so(7).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VElement {
    pub axis: usize,
    pub lambda: f64,
    pub mu: f64,
    pub nu: f64,
}

impl VElement {
    pub fn new(axis: usize, lambda: f64, mu: f64, nu: f64) -> Result<Self> {
        if !(1..=7).contains(&axis) {
            return Err(Error::InvalidAxis(axis));
        }
        Ok(VElement { axis, lambda, mu, nu })
    }

    /// `ζ_axis = V_axis(1, 1, 1)`.
    pub fn zeta(axis: usize) -> Result<Self> {
        Self::new(axis, 1.0, 1.0, 1.0)
    }

    pub fn params(&self) -> [f64; 3] {
        [self.lambda, self.mu, self.nu]
    }

    pub fn matrix(&self) -> Result<LieMatrix> {
        v_elem(self)
    }
}

/// Realizes a [`VElement`] as a matrix.
pub fn v_elem(spec: &VElement) -> Result<LieMatrix> {
    if !(1..=7).contains(&spec.axis) {
        return Err(Error::InvalidAxis(spec.axis));
    }
    let mut m = Mat8::zero();
    for (&(sign, i, j), coeff) in V_TERMS[spec.axis - 1].iter().zip(spec.params()) {
        if coeff != 0.0 {
            m += g(i, j) * (sign * coeff);
        }
    }
    Ok(m)
}

/// Shorthand for `V_axis(λ, μ, ν)`.
///
/// # Panics
///
/// If `axis` is not in `1..=7`.
pub fn v(axis: usize, lambda: f64, mu: f64, nu: f64) -> LieMatrix {
    VElement::new(axis, lambda, mu, nu)
        .and_then(|e| e.matrix())
        .expect("V axis must be in 1..=7")
}

/// `ζ_axis = V_axis(1, 1, 1)`.
pub fn zeta(axis: usize) -> LieMatrix {
    v(axis, 1.0, 1.0, 1.0)
}

/// `[X, Y] = XY - YX`.
pub fn bracket(x: &LieMatrix, y: &LieMatrix) -> LieMatrix {
    *x * *y - *y * *x
}

/// The invariant inner product `-tr(XY)/2`.
pub fn inner_g(x: &LieMatrix, y: &LieMatrix) -> f64 {
    let mut s = 0.0;
    for i in 0..8 {
        for k in 0..8 {
            s += x.0[i][k] * y.0[k][i];
        }
    }
    -0.5 * s
}

pub fn norm_g(x: &LieMatrix) -> f64 {
    inner_g(x, x).max(0.0).sqrt()
}

/// `exp(tX)` by scaling and squaring a truncated Taylor series.
///
/// The scaled argument has max-row-sum norm at most 1/4; eighteen series terms
/// then leave a truncation error far below double precision.
pub fn expm(x: &LieMatrix, t: f64) -> Mat8 {
    let a = *x * t;
    let norm = a
        .0
        .iter()
        .map(|r| r.iter().map(|v| v.abs()).sum::<f64>())
        .fold(0.0, f64::max);
    let mut squarings = 0u32;
    let mut scale = 1.0;
    while norm * scale > 0.25 {
        scale *= 0.5;
        squarings += 1;
    }
    let a = a * scale;
    let mut sum = Mat8::identity();
    let mut term = Mat8::identity();
    for k in 1..=18 {
        term = term * a * (1.0 / k as f64);
        sum += term;
        if term.max_abs() < 1e-18 {
            break;
        }
    }
    for _ in 0..squarings {
        sum = sum * sum;
    }
    sum
}

/// `Ad(x⁻¹)X = x⁻¹ X x` for orthogonal `x`.
pub fn ad_inv(x: &Mat8, y: &LieMatrix) -> LieMatrix {
    x.transpose() * *y * *x
}
