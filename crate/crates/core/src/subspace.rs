//! Orthonormal subspaces of so(8) under the invariant inner product.
//!
//! Vectors are held in `G_ij` coordinates, where the invariant inner product
//! is the Euclidean one.

use crate::error::{Error, Result};
use crate::lie::{LieMatrix, Mat8, SO8_DIM};

/// Relative threshold below which a Gram-Schmidt residual counts as zero.
pub const RANK_TOL: f64 = 1e-9;

/// Containment tolerance for [`complement`].
pub const CONTAINMENT_TOL: f64 = 1e-9;

pub type Coords = [f64; SO8_DIM];

fn dot(a: &Coords, b: &Coords) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &Coords) -> f64 {
    dot(a, a).sqrt()
}

fn axpy(y: &mut Coords, alpha: f64, x: &Coords) {
    for (a, b) in y.iter_mut().zip(x) {
        *a += alpha * b;
    }
}

/// An orthonormal family spanning a subspace of so(8).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Subspace {
    coords: Vec<Coords>,
}

impl Subspace {
    pub fn zero() -> Self {
        Subspace { coords: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn basis(&self) -> Vec<LieMatrix> {
        self.coords.iter().map(|c| Mat8::from_so8_coords(c)).collect()
    }

    pub fn vector(&self, i: usize) -> LieMatrix {
        Mat8::from_so8_coords(&self.coords[i])
    }

    pub fn coords(&self) -> &[Coords] {
        &self.coords
    }

    /// Orthogonal projection onto the subspace.
    pub fn project(&self, x: &LieMatrix) -> LieMatrix {
        Mat8::from_so8_coords(&self.project_coords(&x.so8_coords()))
    }

    pub fn project_coords(&self, x: &Coords) -> Coords {
        let mut out = [0.0; SO8_DIM];
        for b in &self.coords {
            axpy(&mut out, dot(b, x), b);
        }
        out
    }

    /// Norm of the component of `x` orthogonal to the subspace.
    pub fn residual(&self, x: &LieMatrix) -> f64 {
        let c = x.so8_coords();
        let p = self.project_coords(&c);
        let d: Coords = std::array::from_fn(|i| c[i] - p[i]);
        norm(&d)
    }

    /// Coefficients of `x` against the basis.
    pub fn components(&self, x: &LieMatrix) -> Vec<f64> {
        let c = x.so8_coords();
        self.coords.iter().map(|b| dot(b, &c)).collect()
    }

    /// Largest deviation of the Gram matrix from the identity.
    pub fn orthonormality_defect(&self) -> f64 {
        let mut d: f64 = 0.0;
        for (i, a) in self.coords.iter().enumerate() {
            for (j, b) in self.coords.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                d = d.max((dot(a, b) - target).abs());
            }
        }
        d
    }
}

/// Gram-Schmidt with pivoting: at every step the generator with the largest
/// remaining residual is normalized, until all residuals fall below
/// `RANK_TOL` times the largest generator norm.
pub fn orthonormalize(generators: &[LieMatrix]) -> Subspace {
    orthonormalize_tracked(generators).span
}

/// [`orthonormalize`] together with the linear combinations that produce
/// each basis vector.
#[derive(Debug, Clone)]
pub struct TrackedSpan {
    pub span: Subspace,
    /// `basis_k = Σ_i combinations[k][i] · generators_i`.
    pub combinations: Vec<Vec<f64>>,
    /// Unit coefficient vectors of the discarded residuals; each combination of
    /// the generators is zero up to the rank threshold.
    pub dependencies: Vec<Vec<f64>>,
}

pub fn orthonormalize_tracked(generators: &[LieMatrix]) -> TrackedSpan {
    let n = generators.len();
    let mut residuals: Vec<(Coords, Vec<f64>)> = generators
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut c = vec![0.0; n];
            c[i] = 1.0;
            (g.so8_coords(), c)
        })
        .collect();
    let scale = residuals.iter().map(|r| norm(&r.0)).fold(0.0, f64::max);
    let threshold = RANK_TOL * scale;
    let mut basis: Vec<(Coords, Vec<f64>)> = Vec::new();
    let sub = |r: &mut (Coords, Vec<f64>), c: f64, b: &(Coords, Vec<f64>)| {
        axpy(&mut r.0, -c, &b.0);
        for (x, y) in r.1.iter_mut().zip(&b.1) {
            *x -= c * y;
        }
    };
    while scale > 0.0 && basis.len() < SO8_DIM {
        let Some((pivot, best)) = residuals
            .iter()
            .enumerate()
            .map(|(i, r)| (i, norm(&r.0)))
            .max_by(|a, b| a.1.total_cmp(&b.1))
        else {
            break;
        };
        if best <= threshold {
            break;
        }
        let mut q = residuals.swap_remove(pivot);
        // second pass against the accepted basis
        for b in &basis {
            let c = dot(&b.0, &q.0);
            sub(&mut q, c, b);
        }
        let nq = norm(&q.0);
        if nq <= threshold {
            residuals.push(q);
            continue;
        }
        for v in &mut q.0 {
            *v /= nq;
        }
        for v in &mut q.1 {
            *v /= nq;
        }
        for r in &mut residuals {
            let c = dot(&q.0, &r.0);
            sub(r, c, &q);
        }
        basis.push(q);
    }
    let dependencies = residuals
        .into_iter()
        .map(|(_, c)| {
            let nc = c.iter().map(|x| x * x).sum::<f64>().sqrt();
            c.into_iter().map(|x| x / nc).collect()
        })
        .collect();
    let (coords, combinations) = basis.into_iter().unzip();
    TrackedSpan { span: Subspace { coords }, combinations, dependencies }
}

/// Orthonormal basis of the orthogonal complement of `sub` inside `ambient`.
pub fn complement(sub: &Subspace, ambient: &Subspace) -> Result<Subspace> {
    let worst = sub
        .coords
        .iter()
        .map(|c| {
            let p = ambient.project_coords(c);
            let d: Coords = std::array::from_fn(|i| c[i] - p[i]);
            norm(&d)
        })
        .fold(0.0, f64::max);
    if worst > CONTAINMENT_TOL {
        return Err(Error::NotASubspace(worst));
    }
    let remainders: Vec<LieMatrix> = ambient
        .coords
        .iter()
        .map(|a| {
            let p = sub.project_coords(a);
            let d: Coords = std::array::from_fn(|i| a[i] - p[i]);
            Mat8::from_so8_coords(&d)
        })
        .collect();
    // Ambient vectors are unit length, so the rank threshold is absolute here.
    let mut comp = orthonormalize(&remainders);
    // Reorthogonalize against `sub` to remove round-off leakage.
    for c in &mut comp.coords {
        for b in &sub.coords {
            let k = dot(b, c);
            axpy(c, -k, b);
        }
        let n = norm(c);
        for v in c.iter_mut() {
            *v /= n;
        }
    }
    let expected = ambient.dim() - sub.dim();
    comp.coords.truncate(expected);
    Ok(comp)
}
