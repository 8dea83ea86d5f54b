//! Linear entropy of operators and the objectives derived from it.
//!
//! For `A = XX†` of order `n`,
//!
//! `S(X) = n/(n−1) · (1 − Tr(A²)/Tr(A)²)`.
//!
//! Since `Tr(A²) − Tr(A)²/n = ‖A − (Tr A/n)·I‖²`, the deficit `1 − S` is a
//! sum of squares. It is evaluated in that form, which keeps full relative
//! precision close to unitarity where the subtraction would cancel.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matcore::{self, is_hadamard, nullspace_dim, CMatrix, Tolerance, C64};
use crate::rearrange::{partial_transpose, reshuffle};

/// Relative threshold for the defect rank decision.
pub const DEFECT_RANK_EPS: f64 = 1e-8;

/// `1 − S(X)`, always in `[0, 1]`.
pub fn entropy_deficit(x: &CMatrix) -> Result<f64> {
    let n = x.order();
    let a = x.gram();
    let tr = a.trace().re;
    if !(tr >= f64::MIN_POSITIVE) || n < 2 {
        return Err(Error::ZeroMatrix);
    }
    let mean = tr / n as f64;
    let mut off = 0.0;
    for i in 0..n {
        for j in 0..n {
            let z = a[(i, j)];
            off += if i == j {
                (z.re - mean).powi(2) + z.im * z.im
            } else {
                z.norm_sqr()
            };
        }
    }
    Ok(n as f64 / (n as f64 - 1.0) * off / (tr * tr))
}

pub fn linear_entropy(x: &CMatrix) -> Result<f64> {
    if x.frobenius_sq() < Tolerance::DEFAULT.eps() {
        return Err(Error::ZeroMatrix);
    }
    Ok(1.0 - entropy_deficit(x)?)
}

/// `(S(X), S(X^R), S(X^Γ))`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(into = "[f64; 3]", from = "[f64; 3]")]
pub struct EntropyTriple {
    pub s: f64,
    pub s_r: f64,
    pub s_g: f64,
}

impl EntropyTriple {
    pub fn as_array(self) -> [f64; 3] {
        [self.s, self.s_r, self.s_g]
    }

    pub fn approx_eq(self, other: [f64; 3], tol: f64) -> bool {
        self.as_array().iter().zip(other).all(|(a, b)| (a - b).abs() <= tol)
    }
}

impl From<EntropyTriple> for [f64; 3] {
    fn from(t: EntropyTriple) -> Self {
        t.as_array()
    }
}

impl From<[f64; 3]> for EntropyTriple {
    fn from([s, s_r, s_g]: [f64; 3]) -> Self {
        EntropyTriple { s, s_r, s_g }
    }
}

pub fn entropy_triple(x: &CMatrix, d: usize) -> Result<EntropyTriple> {
    let r = reshuffle(x, d)?;
    let g = partial_transpose(x, d)?;
    Ok(EntropyTriple {
        s: linear_entropy(x)?,
        s_r: linear_entropy(&r)?,
        s_g: linear_entropy(&g)?,
    })
}

/// `|S(U)−1| + |S(U^Γ)−1| + |S(U^R)−1|`; zero exactly on 2-unitaries.
pub fn chi(u: &CMatrix, d: usize) -> Result<f64> {
    Target::TwoUnitary.objective(u, d)
}

/// What a search or a verification aims at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Target {
    #[serde(rename = "2u")]
    TwoUnitary,
    #[serde(rename = "r-dual")]
    RDual,
    #[serde(rename = "gamma-dual")]
    GammaDual,
    #[serde(rename = "self-r-dual")]
    SelfRDual,
    #[serde(rename = "self-gamma-dual")]
    SelfGammaDual,
}

impl Target {
    pub const ALL: [Target; 5] = [
        Target::TwoUnitary,
        Target::RDual,
        Target::GammaDual,
        Target::SelfRDual,
        Target::SelfGammaDual,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::TwoUnitary => "2u",
            Target::RDual => "r-dual",
            Target::GammaDual => "gamma-dual",
            Target::SelfRDual => "self-r-dual",
            Target::SelfGammaDual => "self-gamma-dual",
        }
    }

    pub fn parse(s: &str) -> Option<Target> {
        match s.to_ascii_lowercase().as_str() {
            "2u" | "two-unitary" => Some(Target::TwoUnitary),
            "r-dual" | "dual" => Some(Target::RDual),
            "gamma-dual" | "g-dual" => Some(Target::GammaDual),
            "self-r-dual" | "self-dual" => Some(Target::SelfRDual),
            "self-gamma-dual" => Some(Target::SelfGammaDual),
            _ => None,
        }
    }

    /// Nonnegative objective vanishing exactly on matrices with the target
    /// property. Duality targets keep the relevant entropy terms of `χ`;
    /// self-duality targets replace the rearranged term by the relative
    /// squared distance `‖Y − Y'‖²/‖Y‖²`.
    pub fn objective(self, y: &CMatrix, d: usize) -> Result<f64> {
        let base = entropy_deficit(y)?;
        let rel = |other: &CMatrix| y.dist_sq(other) / y.frobenius_sq();
        Ok(match self {
            Target::TwoUnitary => {
                base + entropy_deficit(&reshuffle(y, d)?)? + entropy_deficit(&partial_transpose(y, d)?)?
            }
            Target::RDual => base + entropy_deficit(&reshuffle(y, d)?)?,
            Target::GammaDual => base + entropy_deficit(&partial_transpose(y, d)?)?,
            Target::SelfRDual => base + rel(&reshuffle(y, d)?),
            Target::SelfGammaDual => base + rel(&partial_transpose(y, d)?),
        })
    }
}

impl std::fmt::Display for Target {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// `Z(X, α; β) = objective(diag(e^{iα})·X·diag(e^{iβ}))`, phases in radians.
pub fn objective_z(x: &CMatrix, alpha: &[f64], beta: &[f64], d: usize, target: Target) -> Result<f64> {
    let n = x.order();
    if alpha.len() != n || beta.len() != n {
        return Err(Error::shape(
            format!("phase vectors of length {n}"),
            format!("{} and {}", alpha.len(), beta.len()),
        ));
    }
    if n != d * d {
        return Err(Error::shape(format!("order {}", d * d), n));
    }
    let l: Vec<C64> = alpha.iter().map(|&a| C64::from_polar(1.0, a)).collect();
    let r: Vec<C64> = beta.iter().map(|&b| C64::from_polar(1.0, b)).collect();
    target.objective(&x.dress(&l, &r)?, d)
}

/// Dimension of the space of first-order phase deformations of `h` that
/// keep it Hadamard, after removing the `2N − 1` trivial directions of
/// diagonal dressing. Unknowns are real `R_ik` with the first row and
/// column held at zero; each pair of rows `i < j` contributes the real and
/// imaginary parts of `Σ_k H_ik·conj(H_jk)·(R_ik − R_jk) = 0`.
pub fn defect(h: &CMatrix, tol: Tolerance) -> Result<usize> {
    if !is_hadamard(h, tol) {
        return Err(Error::NotHadamard);
    }
    let h = matcore::dephase(h, tol)?;
    let n = h.order();
    if n < 2 {
        return Ok(0);
    }
    let m = n - 1;
    let var = |i: usize, k: usize| -> Option<usize> { (i > 0 && k > 0).then(|| (i - 1) * m + (k - 1)) };
    let pairs = n * (n - 1) / 2;
    let mut a = nalgebra::DMatrix::<f64>::zeros(2 * pairs, m * m);
    let mut row = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                let c = h[(i, k)] * h[(j, k)].conj();
                if let Some(v) = var(i, k) {
                    a[(row, v)] += c.re;
                    a[(row + 1, v)] += c.im;
                }
                if let Some(v) = var(j, k) {
                    a[(row, v)] -= c.re;
                    a[(row + 1, v)] -= c.im;
                }
            }
            row += 2;
        }
    }
    Ok(nullspace_dim(&a, DEFECT_RANK_EPS))
}
