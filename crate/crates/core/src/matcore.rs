//! Dense complex square matrices and the predicates every other module is
//! built on: unimodularity, (scaled) unitarity, polar decomposition,
//! dephasing and numerical nullity.
//!
//! Storage is row-major. Orders stay in the low hundreds at most, so all
//! products are plain triple loops.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use nalgebra::DMatrix;
pub use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

pub mod io;

/// Absolute tolerance used by the predicates.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerance(f64);

impl Tolerance {
    pub const DEFAULT: Tolerance = Tolerance(1e-10);

    pub fn new(eps: f64) -> Result<Self> {
        if eps > 0.0 && eps.is_finite() {
            Ok(Tolerance(eps))
        } else {
            Err(Error::Config(format!("tolerance must be positive, got {eps}")))
        }
    }

    pub fn eps(self) -> f64 {
        self.0
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self::DEFAULT
    }
}

/// Unit-modulus complex number `exp(2πi·t)`.
pub fn phase(turns: f64) -> C64 {
    C64::from_polar(1.0, std::f64::consts::TAU * turns)
}

/// `exp(2πi·k/q)` with the exponent reduced first, so equal residues give
/// bitwise-equal values.
pub fn root_of_unity(k: i64, q: u32) -> C64 {
    let r = k.rem_euclid(q as i64);
    match (4 * r).checked_rem(q as i64) {
        // exact quarter turns
        Some(0) => match 4 * r / q as i64 {
            0 => C64::new(1.0, 0.0),
            1 => C64::new(0.0, 1.0),
            2 => C64::new(-1.0, 0.0),
            _ => C64::new(0.0, -1.0),
        },
        _ => phase(r as f64 / q as f64),
    }
}

/// A dense square complex matrix.
#[derive(Clone, PartialEq)]
pub struct CMatrix {
    n: usize,
    data: Vec<C64>,
}

impl CMatrix {
    pub fn new(n: usize, data: Vec<C64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::shape(format!("{} entries", n * n), data.len()));
        }
        Ok(CMatrix { n, data })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        CMatrix { n, data }
    }

    pub fn zeros(n: usize) -> Self {
        CMatrix {
            n,
            data: vec![C64::new(0.0, 0.0); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) })
    }

    pub fn ones(n: usize) -> Self {
        CMatrix {
            n,
            data: vec![C64::new(1.0, 0.0); n * n],
        }
    }

    pub fn diagonal(diag: &[C64]) -> Self {
        Self::from_fn(diag.len(), |i, j| if i == j { diag[i] } else { C64::new(0.0, 0.0) })
    }

    /// Real matrix given row-major.
    pub fn from_real(n: usize, values: &[f64]) -> Result<Self> {
        Self::new(n, values.iter().map(|&v| C64::new(v, 0.0)).collect())
    }

    /// Permutation matrix with a one at row `cols[c]` of every column `c`
    /// (0-based).
    pub fn permutation(cols: &[usize]) -> Result<Self> {
        let n = cols.len();
        let mut seen = vec![false; n];
        for &r in cols {
            if r >= n || std::mem::replace(&mut seen[r], true) {
                return Err(Error::Domain(format!("{cols:?} is not a permutation")));
            }
        }
        let mut m = Self::zeros(n);
        for (c, &r) in cols.iter().enumerate() {
            m[(r, c)] = C64::new(1.0, 0.0);
        }
        Ok(m)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[C64] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<C64> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[C64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> Self {
        CMatrix {
            n: self.n,
            data: self.data.iter().map(|&z| f(z)).collect(),
        }
    }

    pub fn scale(&self, c: f64) -> Self {
        self.map(|z| z * c)
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)])
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.n, |i, j| self[(j, i)].conj())
    }

    pub fn matmul(&self, rhs: &CMatrix) -> Self {
        assert_eq!(self.n, rhs.n, "matmul order mismatch");
        let n = self.n;
        let mut out = vec![C64::new(0.0, 0.0); n * n];
        for i in 0..n {
            let orow = &mut out[i * n..(i + 1) * n];
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for (o, b) in orow.iter_mut().zip(rhs.row(k)) {
                    *o += a * b;
                }
            }
        }
        CMatrix { n, data: out }
    }

    /// `X·X†`.
    pub fn gram(&self) -> Self {
        let n = self.n;
        let mut out = vec![C64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for j in i..n {
                let s: C64 = self.row(i).iter().zip(self.row(j)).map(|(a, b)| a * b.conj()).sum();
                out[i * n + j] = s;
                out[j * n + i] = s.conj();
            }
        }
        CMatrix { n, data: out }
    }

    pub fn kron(&self, rhs: &CMatrix) -> Self {
        let (a, b) = (self.n, rhs.n);
        Self::from_fn(a * b, |i, j| self[(i / b, j / b)] * rhs[(i % b, j % b)])
    }

    /// `diag(left) · X · diag(right)`.
    pub fn dress(&self, left: &[C64], right: &[C64]) -> Result<Self> {
        if left.len() != self.n || right.len() != self.n {
            return Err(Error::shape(
                format!("diagonals of length {}", self.n),
                format!("{} and {}", left.len(), right.len()),
            ));
        }
        Ok(Self::from_fn(self.n, |i, j| left[i] * self[(i, j)] * right[j]))
    }

    pub fn trace(&self) -> C64 {
        (0..self.n).map(|i| self[(i, i)]).sum()
    }

    pub fn frobenius_sq(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Squared Frobenius distance.
    pub fn dist_sq(&self, other: &CMatrix) -> f64 {
        assert_eq!(self.n, other.n);
        self.data.iter().zip(&other.data).map(|(a, b)| (a - b).norm_sqr()).sum()
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &CMatrix) -> f64 {
        assert_eq!(self.n, other.n);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &CMatrix, tol: Tolerance) -> bool {
        self.n == other.n && self.max_abs_diff(other) <= tol.eps()
    }

    pub fn is_real(&self, tol: Tolerance) -> bool {
        self.data.iter().all(|z| z.im.abs() <= tol.eps())
    }

    /// True when every row and column holds exactly one entry of modulus
    /// one and zeros elsewhere.
    pub fn is_monomial(&self, tol: Tolerance) -> bool {
        let n = self.n;
        let mut col_hits = vec![0usize; n];
        for i in 0..n {
            let mut hits = 0;
            for j in 0..n {
                let m = self[(i, j)].norm();
                if (m - 1.0).abs() <= tol.eps() {
                    hits += 1;
                    col_hits[j] += 1;
                } else if m > tol.eps() {
                    return false;
                }
            }
            if hits != 1 {
                return false;
            }
        }
        col_hits.iter().all(|&h| h == 1)
    }

    pub fn to_nalgebra(&self) -> DMatrix<C64> {
        DMatrix::from_row_slice(self.n, self.n, &self.data)
    }

    pub fn from_nalgebra(m: &DMatrix<C64>) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::shape("square matrix", format!("{}x{}", m.nrows(), m.ncols())));
        }
        let n = m.nrows();
        Ok(Self::from_fn(n, |i, j| m[(i, j)]))
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.n + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.n + j]
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        self.matmul(rhs)
    }
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMatrix({})", self.n)?;
        for i in 0..self.n {
            for z in self.row(i) {
                write!(f, " {:+.4}{:+.4}i", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Every entry satisfies `||X_jk| − 1| ≤ eps`.
pub fn is_unimodular(x: &CMatrix, tol: Tolerance) -> bool {
    x.as_slice().iter().all(|z| (z.norm() - 1.0).abs() <= tol.eps())
}

/// `max |XX† − scale·I| ≤ eps·scale`.
pub fn is_unitary(x: &CMatrix, scale: f64, tol: Tolerance) -> bool {
    assert!(scale > 0.0, "unitarity scale must be positive");
    let g = x.gram();
    let n = x.order();
    for i in 0..n {
        for j in 0..n {
            let target = if i == j { scale } else { 0.0 };
            if (g[(i, j)] - target).norm() > tol.eps() * scale {
                return false;
            }
        }
    }
    true
}

/// Unimodular and unitary up to the factor `N`.
pub fn is_hadamard(x: &CMatrix, tol: Tolerance) -> bool {
    is_unimodular(x, tol) && is_unitary(x, x.order() as f64, tol)
}

/// Unitary factor `W·V†` of the SVD `X = W·Σ·V†`.
pub fn polar_unitary(x: &CMatrix) -> Result<CMatrix> {
    polar_unitary_with(x, Tolerance::DEFAULT)
}

/// As [`polar_unitary`], rejecting inputs whose smallest singular value is
/// below `eps` times the largest.
pub fn polar_unitary_with(x: &CMatrix, tol: Tolerance) -> Result<CMatrix> {
    let n = x.order();
    if n == 0 {
        return Ok(CMatrix::zeros(0));
    }
    let svd = x.to_nalgebra().svd(true, true);
    let smax = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let smin = svd.singular_values.iter().cloned().fold(f64::INFINITY, f64::min);
    if !(smin > tol.eps() * smax) {
        return Err(Error::RankDeficient { sigma_min: smin });
    }
    let (Some(u), Some(v_t)) = (svd.u, svd.v_t) else {
        unreachable!("SVD requested with both factors");
    };
    CMatrix::from_nalgebra(&(u * v_t))
}

/// `D_L·H·D_R` with the first row and column turned into ones. The left
/// diagonal `conj(H_j0/|H_j0|)` is applied first, then the right one fixes
/// the first row.
pub fn dephase(h: &CMatrix, tol: Tolerance) -> Result<CMatrix> {
    let n = h.order();
    for k in 0..n {
        if h[(k, 0)].norm() < tol.eps() {
            return Err(Error::ZeroEntry { row: k, col: 0 });
        }
        if h[(0, k)].norm() < tol.eps() {
            return Err(Error::ZeroEntry { row: 0, col: k });
        }
    }
    let left: Vec<C64> = (0..n).map(|j| unit(h[(j, 0)]).conj()).collect();
    let mut right = vec![C64::new(1.0, 0.0); n];
    // after the left dressing the first row is h[0][k]·conj(h00/|h00|)
    for (k, r) in right.iter_mut().enumerate() {
        *r = unit(left[0] * h[(0, k)]).conj();
    }
    let mut out = h.dress(&left, &right)?;
    // the corner and border are exact by construction; remove rounding
    for k in 0..n {
        out[(0, k)] = snap_unit(out[(0, k)]);
        out[(k, 0)] = snap_unit(out[(k, 0)]);
    }
    Ok(out)
}

fn unit(z: C64) -> C64 {
    z / z.norm()
}

fn snap_unit(z: C64) -> C64 {
    // border entries are |z| (≈ 1 for Hadamard input) times a phase that
    // cancelled exactly up to rounding
    C64::new(z.norm(), 0.0)
}

pub fn is_dephased(h: &CMatrix, tol: Tolerance) -> bool {
    let one = C64::new(1.0, 0.0);
    (0..h.order()).all(|k| (h[(0, k)] - one).norm() <= tol.eps() && (h[(k, 0)] - one).norm() <= tol.eps())
}

/// Trailing `(n−1)×(n−1)` block of a dephased matrix.
pub fn core(h: &CMatrix, tol: Tolerance) -> Result<CMatrix> {
    if !is_dephased(h, tol) {
        return Err(Error::NotDephased);
    }
    let m = h.order().saturating_sub(1);
    Ok(CMatrix::from_fn(m, |i, j| h[(i + 1, j + 1)]))
}

/// Inverse of [`core`]: border a block with a first row and column of ones.
pub fn border_with_ones(core: &CMatrix) -> CMatrix {
    let n = core.order() + 1;
    CMatrix::from_fn(n, |i, j| {
        if i == 0 || j == 0 {
            C64::new(1.0, 0.0)
        } else {
            core[(i - 1, j - 1)]
        }
    })
}

/// Number of columns minus the numerical rank, where singular values below
/// `rel_eps` times the largest count as zero.
pub fn nullspace_dim(a: &DMatrix<f64>, rel_eps: f64) -> usize {
    let cols = a.ncols();
    if a.nrows() == 0 || cols == 0 {
        return cols;
    }
    let sv = a.clone().svd(false, false).singular_values;
    let smax = sv.iter().cloned().fold(0.0, f64::max);
    if smax == 0.0 {
        return cols;
    }
    let rank = sv.iter().filter(|&&s| s >= rel_eps * smax).count();
    cols - rank
}
