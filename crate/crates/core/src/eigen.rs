//! Small dense matrices and a cyclic Jacobi eigensolver for symmetric input.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::error::{Error, Result};

/// Symmetry tolerance accepted by [`sym_eigen`].
pub const SYMMETRY_TOL: f64 = 1e-9;

/// Default tolerance for merging nearby eigenvalues.
pub const DEFAULT_CLUSTER_TOL: f64 = 1e-6;

const OFF_DIAGONAL_TOL: f64 = 1e-12;
const MAX_SWEEPS: usize = 100;

/// A dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![0.0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.concat() }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> f64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn diag(values: &[f64]) -> Self {
        let mut m = Self::zeros(values.len(), values.len());
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn trace(&self) -> f64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_sq(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Largest `|a_ij - a_ji|`.
    pub fn asymmetry(&self) -> f64 {
        let mut d: f64 = 0.0;
        for i in 0..self.rows {
            for j in (i + 1)..self.cols.min(self.rows) {
                d = d.max((self[(i, j)] - self[(j, i)]).abs());
            }
        }
        if self.is_square() {
            d
        } else {
            f64::INFINITY
        }
    }

    /// `(A + Aᵀ) / 2`.
    pub fn symmetrized(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| 0.5 * (self[(i, j)] + self[(j, i)]))
    }

    /// Restriction to the given rows and columns, in order.
    pub fn submatrix(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), idx.len(), |i, j| self[(idx[i], idx[j])])
    }

    /// Characteristic polynomial `det(λI - A)` at `lambda`, by elimination.
    pub fn char_poly_at(&self, lambda: f64) -> f64 {
        let n = self.rows;
        let mut a = Self::from_fn(n, n, |i, j| if i == j { lambda } else { 0.0 } - self[(i, j)]);
        let mut det = 1.0;
        for c in 0..n {
            let p = (c..n)
                .max_by(|&x, &y| a[(x, c)].abs().total_cmp(&a[(y, c)].abs()))
                .unwrap_or(c);
            if a[(p, c)] == 0.0 {
                return 0.0;
            }
            if p != c {
                for k in 0..n {
                    a.data.swap(p * n + k, c * n + k);
                }
                det = -det;
            }
            let pivot = a[(c, c)];
            det *= pivot;
            for r in (c + 1)..n {
                let f = a[(r, c)] / pivot;
                if f != 0.0 {
                    for k in c..n {
                        let v = a[(c, k)];
                        a[(r, k)] -= f * v;
                    }
                }
            }
        }
        det
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|v| format!("{v:>10.6}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Eigenvalues (ascending) with matching unit eigenvectors as columns.
#[derive(Debug, Clone)]
pub struct SymEigen {
    pub values: Vec<f64>,
    pub vectors: Matrix,
}

fn off_diagonal_norm(a: &Matrix) -> f64 {
    let n = a.rows();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)] * a[(i, j)];
            }
        }
    }
    s.sqrt()
}

/// Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// Sweeps stop once the off-diagonal Frobenius norm drops below
/// `1e-12 · max(1, ‖A‖_F)`.
pub fn jacobi_eigen(s: &Matrix) -> Result<SymEigen> {
    if !s.is_square() {
        return Err(Error::Asymmetric(f64::INFINITY));
    }
    let defect = s.asymmetry();
    if defect > SYMMETRY_TOL {
        return Err(Error::Asymmetric(defect));
    }
    let n = s.rows();
    let mut a = s.symmetrized();
    let mut vecs = Matrix::identity(n);
    let target = OFF_DIAGONAL_TOL * a.frobenius_sq().sqrt().max(1.0);

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) < target {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let sn = t * c;
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = c * akp - sn * akq;
                    a[(k, q)] = sn * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = c * apk - sn * aqk;
                    a[(q, k)] = sn * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = vecs[(k, p)];
                    let vkq = vecs[(k, q)];
                    vecs[(k, p)] = c * vkp - sn * vkq;
                    vecs[(k, q)] = sn * vkp + c * vkq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(i, i)].total_cmp(&a[(j, j)]));
    let values = order.iter().map(|&i| a[(i, i)]).collect();
    let vectors = Matrix::from_fn(n, n, |r, c| vecs[(r, order[c])]);
    Ok(SymEigen { values, vectors })
}

/// Merges ascending values into `(value, multiplicity)` clusters. A value joins
/// the current cluster when it lies within `tol` of the previous value; the
/// cluster reports its mean.
pub fn cluster_sorted(values: &[f64], tol: f64) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize)> = Vec::new();
    let mut sum = 0.0;
    let mut prev = f64::NEG_INFINITY;
    for &v in values {
        match out.last_mut() {
            Some(last) if v - prev <= tol => {
                sum += v;
                last.1 += 1;
                last.0 = sum / last.1 as f64;
            }
            _ => {
                sum = v;
                out.push((v, 1));
            }
        }
        prev = v;
    }
    out
}

/// Eigenvalues of a symmetric matrix, ascending, clustered within `cluster_tol`.
pub fn sym_eigen(s: &Matrix, cluster_tol: f64) -> Result<Vec<(f64, usize)>> {
    let eig = jacobi_eigen(s)?;
    Ok(cluster_sorted(&eig.values, cluster_tol))
}

/// Expands `(value, multiplicity)` pairs into a sorted list.
pub fn expand(clusters: &[(f64, usize)]) -> Vec<f64> {
    let mut v: Vec<f64> = clusters
        .iter()
        .flat_map(|&(x, m)| std::iter::repeat_n(x, m))
        .collect();
    v.sort_by(f64::total_cmp);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_input() {
        let m = Matrix::diag(&[1.0, 1.0, 2.0]);
        assert_eq!(sym_eigen(&m, 1e-6).unwrap(), vec![(1.0, 2), (2.0, 1)]);
    }

    #[test]
    fn reflection() {
        let m = Matrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]);
        let ev = sym_eigen(&m, 1e-6).unwrap();
        assert_eq!(ev.len(), 2);
        assert!((ev[0].0 + 1.0).abs() < 1e-14 && ev[0].1 == 1);
        assert!((ev[1].0 - 1.0).abs() < 1e-14 && ev[1].1 == 1);
    }

    #[test]
    fn rejects_asymmetric_input() {
        let m = Matrix::from_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]);
        assert!(matches!(sym_eigen(&m, 1e-6), Err(Error::Asymmetric(_))));
    }

    #[test]
    fn eigenvectors_diagonalize() {
        let m = Matrix::from_fn(7, 7, |i, j| 1.0 / (1.0 + i as f64 + j as f64) + if i == j { i as f64 } else { 0.0 });
        let eig = jacobi_eigen(&m).unwrap();
        let d = eig.vectors.transpose().matmul(&m).matmul(&eig.vectors);
        for i in 0..7 {
            for j in 0..7 {
                let expected = if i == j { eig.values[i] } else { 0.0 };
                assert!((d[(i, j)] - expected).abs() < 1e-12);
            }
        }
        assert!(eig.values.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn block_with_quadratic_factor() {
        // B = 2√6 A restricted to the first invariant block of the type II
        // shape operator, with det(λI - B) = λ²(λ² + 4 cot t λ - 4).
        let t = std::f64::consts::FRAC_PI_4;
        let cot = 1.0 / t.tan();
        let r3 = 3f64.sqrt();
        let b = Matrix::from_rows(&[
            vec![0.0, 0.0, 0.0, r3],
            vec![0.0, 0.0, 0.0, -1.0],
            vec![0.0, 0.0, 0.0, 0.0],
            vec![r3, -1.0, 0.0, -4.0 * cot],
        ]);
        let scale = 1.0 / (2.0 * 6f64.sqrt());
        let a = Matrix::from_fn(4, 4, |i, j| b[(i, j)] * scale);
        let ev = sym_eigen(&a, 1e-6).unwrap();
        let disc = (16.0 * cot * cot + 16.0).sqrt();
        let r1 = (-4.0 * cot - disc) / 2.0 * scale;
        let r2 = (-4.0 * cot + disc) / 2.0 * scale;
        assert_eq!(ev.len(), 3);
        assert!((ev[0].0 - r1).abs() < 1e-12 && ev[0].1 == 1);
        assert!(ev[1].0.abs() < 1e-12 && ev[1].1 == 2);
        assert!((ev[2].0 - r2).abs() < 1e-12 && ev[2].1 == 1);
        for lambda in [-1.0, 0.3, 2.0] {
            let expected = lambda * lambda * (lambda * lambda + 4.0 * cot * lambda - 4.0);
            assert!((b.char_poly_at(lambda) - expected).abs() < 1e-10);
        }
    }

    #[test]
    fn clustering_chains_neighbours() {
        let c = cluster_sorted(&[0.0, 5e-7, 1e-6, 1.0], 1e-6);
        assert_eq!(c.len(), 2);
        assert_eq!(c[0].1, 3);
        assert_eq!(expand(&[(2.0, 2), (-1.0, 1)]), vec![-1.0, 2.0, 2.0]);
    }
}
