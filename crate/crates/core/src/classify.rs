//! Membership predicates, k-unitarity and the local-unitary constructions of
//! 2-unitary complex Hadamard matrices.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::catalog::{fourier, fourier_f4, ortho_o16, perm_p16, perm_p9};
use crate::error::{Error, Result};
use crate::matcore::{is_hadamard, is_unitary, CMatrix, Tolerance, C64};
use crate::measures::{entropy_triple, EntropyTriple};
use crate::rearrange::{balanced_bipartitions, partial_transpose, rearrange, reshuffle, TensorShape};

/// Largest root order tried when reporting Butson membership.
pub const MAX_BUTSON_Q: u32 = 64;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub chm: bool,
    pub butson_q: Option<u32>,
    pub r_dual: bool,
    pub gamma_dual: bool,
    pub self_r_dual: bool,
    pub self_gamma_dual: bool,
    pub two_unitary: bool,
    pub strong_two_unitary: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ClassReport {
    pub n: usize,
    pub d: usize,
    pub triple: EntropyTriple,
    pub flags: Flags,
}

impl ClassReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data serializes")
    }
}

/// `X` is unitary up to its own scale `Tr(XX†)/n`.
pub fn is_scaled_unitary(x: &CMatrix, tol: Tolerance) -> bool {
    let s = x.frobenius_sq() / x.order() as f64;
    s > 0.0 && is_unitary(x, s, tol)
}

fn entrywise_eq(x: &CMatrix, y: &CMatrix, tol: Tolerance) -> bool {
    let scale = x.as_slice().iter().map(|z| z.norm()).fold(0.0, f64::max);
    x.max_abs_diff(y) <= tol.eps() * scale.max(f64::MIN_POSITIVE)
}

/// Smallest `q ≤ MAX_BUTSON_Q` with `X ∈ BH(n, q)`.
pub fn butson_order(x: &CMatrix, tol: Tolerance) -> Option<u32> {
    if !is_hadamard(x, tol) {
        return None;
    }
    (2..=MAX_BUTSON_Q).find(|&q| crate::butson::LogMatrix::from_complex(x, q, tol).is_some())
}

/// Evaluates every predicate on `X` of order `d²`. Self-duality is literal
/// entrywise equality with the rearranged matrix.
pub fn classify(x: &CMatrix, d: usize, tol: Tolerance) -> Result<ClassReport> {
    let n = x.order();
    if d < 2 || n != d * d {
        return Err(Error::shape(format!("order {}", d * d), n));
    }
    let triple = entropy_triple(x, d)?;
    let xr = reshuffle(x, d)?;
    let xg = partial_transpose(x, d)?;
    let (u, ur, ug) = (
        is_scaled_unitary(x, tol),
        is_scaled_unitary(&xr, tol),
        is_scaled_unitary(&xg, tol),
    );
    let chm = is_hadamard(x, tol);
    let self_r_dual = entrywise_eq(x, &xr, tol);
    let self_gamma_dual = entrywise_eq(x, &xg, tol);
    let two_unitary = u && ur && ug;
    let flags = Flags {
        chm,
        butson_q: if chm { butson_order(x, tol) } else { None },
        r_dual: u && ur,
        gamma_dual: u && ug,
        self_r_dual,
        self_gamma_dual,
        two_unitary,
        strong_two_unitary: two_unitary && self_r_dual && self_gamma_dual,
    };
    Ok(ClassReport { n, d, triple, flags })
}

/// True iff `U` stays unitary, at its own scale, under every balanced
/// bipartition of its `2k` legs.
pub fn is_k_unitary(u: &CMatrix, shape: TensorShape, tol: Tolerance) -> Result<bool> {
    if u.order() != shape.order() {
        return Err(Error::shape(format!("order {}", shape.order()), u.order()));
    }
    for b in balanced_bipartitions(shape.k()) {
        if !is_scaled_unitary(&rearrange(u, shape, &b)?, tol) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Columns (0-based) that coincide in any `X` with `X = X^R = X^Γ`.
pub fn strong_two_unitary_obstruction(d: usize) -> (usize, usize) {
    assert!(d >= 2, "local dimension must be at least 2");
    (1, d)
}

/// Checks on a concrete `X` that the obstruction columns coincide, which
/// makes `X` singular.
pub fn obstruction_columns_equal(x: &CMatrix, d: usize, tol: Tolerance) -> bool {
    let (c1, c2) = strong_two_unitary_obstruction(d);
    (0..x.order()).all(|r| (x[(r, c1)] - x[(r, c2)]).norm() <= tol.eps())
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Classes of entries of a formal `d² × d²` matrix identified by imposing
/// both `X = X^R` and `X = X^Γ`; entry `(r, c)` has label `r·d² + c`.
pub fn strong_duality_classes(d: usize) -> Vec<usize> {
    let n = d * d;
    let mut parent: Vec<usize> = (0..n * n).collect();
    let at = |a: usize, b: usize, c: usize, e: usize| (a * d + b) * n + c * d + e;
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                for e in 0..d {
                    let here = at(a, b, c, e);
                    for other in [at(a, c, b, e), at(a, e, c, b)] {
                        let (x, y) = (find(&mut parent, here), find(&mut parent, other));
                        parent[x] = y;
                    }
                }
            }
        }
    }
    (0..n * n).map(|i| find(&mut parent, i)).collect()
}

/// Symbolic form of the obstruction: every row has its two obstruction
/// entries in the same class.
pub fn obstruction_forced(d: usize) -> bool {
    let n = d * d;
    let classes = strong_duality_classes(d);
    let (c1, c2) = strong_two_unitary_obstruction(d);
    (0..n).all(|r| classes[r * n + c1] == classes[r * n + c2])
}

/// Orthogonal projection onto `{X = X^R = X^Γ}`: averages each class.
pub fn project_strong_dual(x: &CMatrix, d: usize) -> Result<CMatrix> {
    let n = x.order();
    if n != d * d {
        return Err(Error::shape(format!("order {}", d * d), n));
    }
    let classes = strong_duality_classes(d);
    let mut sum = vec![C64::new(0.0, 0.0); n * n];
    let mut count = vec![0usize; n * n];
    for (i, &c) in classes.iter().enumerate() {
        sum[c] += x.as_slice()[i];
        count[c] += 1;
    }
    Ok(CMatrix::from_fn(n, |r, c| {
        let k = classes[r * n + c];
        sum[k] / count[k] as f64
    }))
}

/// `(U₁ ⊗ U₂)·X·(U₃ ⊗ U₄)` for unitary factors of order `d`.
pub fn lu_apply(u: [&CMatrix; 4], x: &CMatrix, tol: Tolerance) -> Result<CMatrix> {
    let d = u[0].order();
    if x.order() != d * d {
        return Err(Error::shape(format!("order {}", d * d), x.order()));
    }
    for f in u {
        if f.order() != d {
            return Err(Error::shape(format!("local factor of order {d}"), f.order()));
        }
        if !is_unitary(f, 1.0, tol) {
            return Err(Error::NotUnitary);
        }
    }
    Ok(u[0].kron(u[1]).matmul(x).matmul(&u[2].kron(u[3])))
}

/// `M = D·P` with `P` sending basis vector `c` to `perm[c]`.
#[derive(Clone, Debug, PartialEq)]
pub struct MonomialMatrix {
    pub perm: Vec<usize>,
    pub phases: Vec<C64>,
}

impl MonomialMatrix {
    pub fn identity(n: usize) -> Self {
        MonomialMatrix {
            perm: (0..n).collect(),
            phases: vec![C64::new(1.0, 0.0); n],
        }
    }

    pub fn order(&self) -> usize {
        self.perm.len()
    }

    pub fn to_matrix(&self) -> CMatrix {
        let n = self.order();
        let mut m = CMatrix::zeros(n);
        for (c, &r) in self.perm.iter().enumerate() {
            m[(r, c)] = self.phases[r];
        }
        m
    }
}

/// Uniform random permutation with independent uniform phases.
pub fn random_monomial(n: usize, rng: &mut impl Rng) -> MonomialMatrix {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let phases = (0..n)
        .map(|_| C64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU)))
        .collect();
    MonomialMatrix { perm, phases }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LuBase {
    P9,
    P16,
    O16,
}

impl LuBase {
    pub fn d(self) -> usize {
        match self {
            LuBase::P9 => 3,
            LuBase::P16 | LuBase::O16 => 4,
        }
    }

    /// Required number of Fourier slots.
    pub fn fourier_slots(self) -> usize {
        match self {
            LuBase::O16 => 1,
            _ => 2,
        }
    }

    pub fn matrix(self) -> CMatrix {
        match self {
            LuBase::P9 => perm_p9(),
            LuBase::P16 => perm_p16(),
            LuBase::O16 => ortho_o16(),
        }
    }

    /// Every valid placement mask, lexicographic with Fourier slots first.
    pub fn masks(self) -> Vec<[bool; 4]> {
        let mut out: Vec<[bool; 4]> = (0..16u8)
            .map(|m| [m & 8 != 0, m & 4 != 0, m & 2 != 0, m & 1 != 0])
            .filter(|m| m.iter().filter(|&&f| f).count() == self.fourier_slots())
            .collect();
        out.reverse();
        out
    }
}

/// `(M₁·s₁·M₂ ⊗ M₃·s₂·M₄)·BASE·(M₅·s₃·M₆ ⊗ M₇·s₄·M₈)` where `sᵢ` is a
/// Fourier matrix where `mask` is set and the identity elsewhere. For
/// `d = 4` the Fourier slots take `F4(α)`, one phase (in turns) per slot in
/// slot order; `F3` has no parameter.
pub fn lu_family(
    base: LuBase,
    mask: [bool; 4],
    monomials: &[MonomialMatrix; 8],
    fourier_params: &[f64],
) -> Result<CMatrix> {
    let d = base.d();
    let slots = mask.iter().filter(|&&f| f).count();
    if slots != base.fourier_slots() {
        return Err(Error::BadPlacement(format!(
            "{base:?} takes {} Fourier slot(s), mask has {slots}",
            base.fourier_slots()
        )));
    }
    let params_needed = if d == 4 { slots } else { 0 };
    if fourier_params.len() != params_needed {
        return Err(Error::BadPlacement(format!(
            "{params_needed} Fourier phase(s) needed, got {}",
            fourier_params.len()
        )));
    }
    if let Some(m) = monomials.iter().find(|m| m.order() != d) {
        return Err(Error::shape(format!("monomials of order {d}"), m.order()));
    }
    let mut params = fourier_params.iter();
    let local: Vec<CMatrix> = (0..4)
        .map(|i| {
            let s = match (mask[i], d) {
                (false, _) => CMatrix::identity(d),
                (true, 4) => fourier_f4(*params.next().unwrap()),
                (true, _) => fourier(d),
            };
            monomials[2 * i]
                .to_matrix()
                .matmul(&s)
                .matmul(&monomials[2 * i + 1].to_matrix())
        })
        .collect();
    Ok(local[0]
        .kron(&local[1])
        .matmul(&base.matrix())
        .matmul(&local[2].kron(&local[3])))
}

/// True iff `p` is a 0/1 permutation matrix that is 2-unitary.
pub fn is_two_unitary_permutation(p: &CMatrix, d: usize, tol: Tolerance) -> bool {
    let binary = p
        .as_slice()
        .iter()
        .all(|z| z.im.abs() <= tol.eps() && (z.re.abs() <= tol.eps() || (z.re - 1.0).abs() <= tol.eps()));
    binary
        && p.is_monomial(tol)
        && p.order() == d * d
        && classify(p, d, tol).map(|r| r.flags.two_unitary).unwrap_or(false)
}

/// `(h ⊗ h)·p` for a Hadamard `h` of order `d` and a 2-unitary permutation
/// `p` of order `d²`.
pub fn tensor_construct(h: &CMatrix, p: &CMatrix, tol: Tolerance) -> Result<CMatrix> {
    if !is_hadamard(h, tol) {
        return Err(Error::NotHadamard);
    }
    let d = h.order();
    if !is_two_unitary_permutation(p, d, tol) {
        return Err(Error::NotTwoUnitaryPermutation);
    }
    Ok(h.kron(h).matmul(p))
}
