//! The octonion algebra on the basis `e0, ..., e7`.
//!
//! `e0` is the unit. The imaginary units multiply along the seven lines of
//! [`FANO_LINES`]: for a line `(i, j, k)` we have `e_i e_j = e_k` and its
//! cyclic shifts, and anticommutativity gives the reversed products.

use std::fmt;
use std::ops::{Add, AddAssign, Index, Mul, Neg, Sub};

/// The seven oriented lines `(i, j, k)` with `e_i e_j = e_k` cyclically.
pub const FANO_LINES: [(usize, usize, usize); 7] = [
    (1, 2, 3),
    (1, 4, 5),
    (1, 6, 7),
    (2, 6, 4),
    (2, 5, 7),
    (3, 4, 7),
    (3, 5, 6),
];

/// Structure constants of a basis multiplication: `e_i e_j = sign(i, j) e_idx(i, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CayleyTable {
    sign: [[i8; 8]; 8],
    index: [[usize; 8]; 8],
}

impl CayleyTable {
    /// Builds the table for a unit `e0`, `e_i² = -e0` and the given oriented lines.
    pub const fn from_lines(lines: &[(usize, usize, usize); 7]) -> Self {
        let mut sign = [[0i8; 8]; 8];
        let mut index = [[0usize; 8]; 8];
        let mut i = 0;
        while i < 8 {
            sign[0][i] = 1;
            index[0][i] = i;
            sign[i][0] = 1;
            index[i][0] = i;
            if i > 0 {
                sign[i][i] = -1;
                index[i][i] = 0;
            }
            i += 1;
        }
        let mut l = 0;
        while l < 7 {
            let (a, b, c) = lines[l];
            let cyc = [(a, b, c), (b, c, a), (c, a, b)];
            let mut r = 0;
            while r < 3 {
                let (x, y, z) = cyc[r];
                sign[x][y] = 1;
                index[x][y] = z;
                sign[y][x] = -1;
                index[y][x] = z;
                r += 1;
            }
            l += 1;
        }
        CayleyTable { sign, index }
    }

    #[inline]
    pub fn sign(&self, i: usize, j: usize) -> i8 {
        self.sign[i][j]
    }

    #[inline]
    pub fn index(&self, i: usize, j: usize) -> usize {
        self.index[i][j]
    }

    /// `e_i e_j` as an octonion.
    pub fn basis_product(&self, i: usize, j: usize) -> Octonion {
        let mut out = Octonion::zero();
        out.coeffs[self.index[i][j]] = f64::from(self.sign[i][j]);
        out
    }
}

/// The multiplication table used throughout the crate.
pub const CAYLEY: CayleyTable = CayleyTable::from_lines(&FANO_LINES);

/// An octonion `Σ coeffs[i] e_i`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Octonion {
    pub coeffs: [f64; 8],
}

impl Octonion {
    pub const fn new(coeffs: [f64; 8]) -> Self {
        Octonion { coeffs }
    }

    pub const fn zero() -> Self {
        Octonion { coeffs: [0.0; 8] }
    }

    pub const fn one() -> Self {
        Self::basis(0)
    }

    /// The basis element `e_i`.
    ///
    /// # Panics
    ///
    /// If `i > 7`.
    pub const fn basis(i: usize) -> Self {
        assert!(i < 8, "octonion basis index out of range");
        let mut coeffs = [0.0; 8];
        coeffs[i] = 1.0;
        Octonion { coeffs }
    }

    pub fn real(&self) -> f64 {
        self.coeffs[0]
    }

    pub fn is_imaginary(&self) -> bool {
        self.coeffs[0] == 0.0
    }

    /// `x̄ = x0 - Σ x_i e_i`.
    pub fn conj(&self) -> Self {
        let mut c = self.coeffs;
        for v in &mut c[1..] {
            *v = -*v;
        }
        Octonion { coeffs: c }
    }

    /// Euclidean inner product `Σ x_i y_i`.
    pub fn inner(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm_sq(&self) -> f64 {
        self.inner(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Product under an explicit table; `*` uses [`CAYLEY`].
    pub fn mul_with(&self, other: &Self, table: &CayleyTable) -> Self {
        let mut out = [0.0; 8];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[table.index(i, j)] += f64::from(table.sign(i, j)) * a * b;
            }
        }
        Octonion { coeffs: out }
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// `oct_mul`.
pub fn oct_mul(a: &Octonion, b: &Octonion) -> Octonion {
    a.mul_with(b, &CAYLEY)
}

/// `oct_conj`.
pub fn oct_conj(a: &Octonion) -> Octonion {
    a.conj()
}

/// `oct_inner`.
pub fn oct_inner(a: &Octonion, b: &Octonion) -> f64 {
    a.inner(b)
}

impl Index<usize> for Octonion {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.coeffs[i]
    }
}

impl Mul for Octonion {
    type Output = Octonion;
    fn mul(self, rhs: Octonion) -> Octonion {
        oct_mul(&self, &rhs)
    }
}

impl Mul<f64> for Octonion {
    type Output = Octonion;
    fn mul(self, rhs: f64) -> Octonion {
        Octonion::new(self.coeffs.map(|c| c * rhs))
    }
}

impl Mul<Octonion> for f64 {
    type Output = Octonion;
    fn mul(self, rhs: Octonion) -> Octonion {
        rhs * self
    }
}

impl Add for Octonion {
    type Output = Octonion;
    fn add(mut self, rhs: Octonion) -> Octonion {
        self += rhs;
        self
    }
}

impl AddAssign for Octonion {
    fn add_assign(&mut self, rhs: Octonion) {
        for (a, b) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *a += b;
        }
    }
}

impl Sub for Octonion {
    type Output = Octonion;
    fn sub(self, rhs: Octonion) -> Octonion {
        self + (-rhs)
    }
}

impl Neg for Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion::new(self.coeffs.map(|c| -c))
    }
}

impl fmt::Display for Octonion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            if !first {
                write!(f, " {} ", if c < 0.0 { '-' } else { '+' })?;
            } else if c < 0.0 {
                write!(f, "-")?;
            }
            write!(f, "{}e{}", c.abs(), i)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
