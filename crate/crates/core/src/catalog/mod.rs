//! Explicit matrices, parametric families and the diagonal dressings that
//! turn them dual, self-dual or 2-unitary.
//!
//! Phase parameters are given in turns: a parameter `t` stands for the
//! unimodular number `exp(2πi·t)`, so the natural range is `[0, 1)`.

use std::f64::consts::PI;

use crate::butson::LogMatrix;
use crate::error::{Error, Result};
use crate::matcore::{phase, root_of_unity, CMatrix, C64};

mod tables;

/// Column positions of the ones in `P9`, 1-based as usually printed.
pub const P9_COLUMNS: [usize; 9] = [1, 9, 5, 6, 2, 7, 8, 4, 3];
/// Column positions of the ones in `P16`, 1-based.
pub const P16_COLUMNS: [usize; 16] = [1, 16, 6, 11, 15, 2, 12, 5, 8, 9, 3, 14, 10, 7, 13, 4];

fn one() -> C64 {
    C64::new(1.0, 0.0)
}

/// `F_N` with entries `exp(2πi·jk/N)`.
pub fn fourier(n: usize) -> CMatrix {
    assert!(n >= 1, "Fourier order must be positive");
    CMatrix::from_fn(n, |j, k| root_of_unity((j * k % n) as i64, n as u32))
}

/// One-parameter affine family of order 4: `F_4` with the phase
/// `exp(2πi·a)` on the entries whose row and column indices are both odd.
/// Symmetric for every `a`.
pub fn fourier_f4(a: f64) -> CMatrix {
    let f = fourier(4);
    CMatrix::from_fn(4, |j, k| {
        if j % 2 == 1 && k % 2 == 1 {
            f[(j, k)] * phase(a)
        } else {
            f[(j, k)]
        }
    })
}

/// Four-parameter affine family of order 9: `F_9` with entry `(j, k)`
/// multiplied by `exp(2πi·p)`, where `p` is selected by
/// `(j mod 3, k mod 3)`: `(1,1) → a`, `(1,2) → b`, `(2,1) → c`, `(2,2) → d`,
/// and `p = 0` whenever either residue vanishes.
pub fn fourier_f9_4(params: [f64; 4]) -> CMatrix {
    let f = fourier(9);
    CMatrix::from_fn(9, |j, k| {
        let p = match (j % 3, k % 3) {
            (1, 1) => params[0],
            (1, 2) => params[1],
            (2, 1) => params[2],
            (2, 2) => params[3],
            _ => return f[(j, k)],
        };
        f[(j, k)] * phase(p)
    })
}

fn permutation_1based(cols: &[usize]) -> CMatrix {
    let zero_based: Vec<usize> = cols.iter().map(|c| c - 1).collect();
    CMatrix::permutation(&zero_based).expect("embedded permutation is valid")
}

/// 2-unitary permutation of order 9.
pub fn perm_p9() -> CMatrix {
    permutation_1based(&P9_COLUMNS)
}

/// 2-unitary permutation of order 16.
pub fn perm_p16() -> CMatrix {
    permutation_1based(&P16_COLUMNS)
}

/// The `{−1, 0, 1}` matrix `O16` with `O16·O16ᵀ = 4·I`.
pub fn ortho_o16() -> CMatrix {
    CMatrix::from_fn(16, |i, j| C64::new(tables::O16[i][j] as f64, 0.0))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CatMapParams {
    pub n: usize,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl CatMapParams {
    pub fn new(n: usize, a: f64, b: f64, c: f64) -> Result<Self> {
        if n < 2 {
            return Err(Error::Domain(format!("cat map order must be ≥ 2, got {n}")));
        }
        Ok(CatMapParams { n, a, b, c })
    }
}

/// Quantized cat map, `exp{(iπ/N)(a·j² + b·k² + c·j·k)}` with `j, k`
/// running over `1..=N`.
pub fn cat_map(p: &CatMapParams) -> CMatrix {
    let n = p.n as f64;
    CMatrix::from_fn(p.n, |j, k| {
        let (j, k) = ((j + 1) as f64, (k + 1) as f64);
        // reduce the (exact, integral for integer a, b, c) exponent mod 2N
        let e = (p.a * j * j + p.b * k * k + p.c * j * k).rem_euclid(2.0 * n);
        C64::from_polar(1.0, PI * e / n)
    })
}

/// Parameter of the Karlsson family, restricted to
/// `{|1−ζ| ≤ 4} ∩ {|1+ζ| ≤ 4} ∖ {−1, 1}`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct KarlssonParam(C64);

impl KarlssonParam {
    const SLACK: f64 = 1e-12;

    pub fn new(zeta: C64) -> Result<Self> {
        let (m, p) = ((one() - zeta).norm(), (one() + zeta).norm());
        if !(m <= 4.0 + Self::SLACK && p <= 4.0 + Self::SLACK) {
            return Err(Error::Domain(format!("ζ = {zeta} lies outside both discs of radius 4")));
        }
        if m < Self::SLACK || p < Self::SLACK {
            return Err(Error::Domain(format!("ζ = {zeta} is an excluded point ±1")));
        }
        Ok(KarlssonParam(zeta))
    }

    pub fn zeta(self) -> C64 {
        self.0
    }

    /// `(x, y, u, w)` of the block-circulant construction.
    pub fn entries(self) -> (C64, C64, C64, C64) {
        let z = self.0;
        let pair = |s: C64| {
            let r = (16.0 / s.norm_sqr() - 1.0).max(0.0).sqrt();
            (s / 4.0 * C64::new(1.0, r), s / 4.0 * C64::new(1.0, -r))
        };
        let (x, y) = pair(one() + z);
        let (u, w) = pair(one() - z);
        (x, y, u, w)
    }
}

/// Symmetric block-circulant Hadamard matrix of order 9 with circulant
/// blocks, first block row `[1 x x | y u w | y w u]`.
pub fn karlsson(z: KarlssonParam) -> CMatrix {
    let (x, y, u, w) = z.entries();
    let circ = |r: [C64; 3]| move |i: usize, j: usize| r[(j + 3 - i) % 3];
    let a = circ([one(), x, x]);
    let b = circ([y, u, w]);
    let c = circ([y, w, u]);
    CMatrix::from_fn(9, |i, j| {
        let (bi, bj, ii, jj) = (i / 3, j / 3, i % 3, j % 3);
        match (bj + 3 - bi) % 3 {
            0 => a(ii, jj),
            1 => b(ii, jj),
            _ => c(ii, jj),
        }
    })
}

fn from_exponents<const N: usize>(t: &[[u8; N]; N], q: u32) -> LogMatrix {
    let exps = t.iter().flat_map(|r| r.iter().map(|&e| e as u32)).collect();
    LogMatrix::new(N, q, exps).expect("embedded table is reduced")
}

/// Logarithmic form of every Butson-type constant in the catalog.
pub fn named_log(name: &str) -> Option<LogMatrix> {
    Some(match name {
        "b9_selfdual" => from_exponents(&tables::B9_SELFDUAL, 3),
        "c9" => from_exponents(&tables::C9_TWO_UNITARY, 3),
        "b9_0" => from_exponents(&tables::B9_0, 6),
        "h8" => from_exponents(&tables::H8, 2),
        "b16_2u" => from_exponents(&tables::B16_1_P16, 2),
        "b16_8" => from_exponents(&tables::B16_8, 4),
        "b16_1" => {
            // undo the column permutation: (B·P)[r][c] = B[r][P16_COLUMNS[c] − 1]
            let mut exps = vec![0u32; 256];
            for r in 0..16 {
                for (c, &col) in P16_COLUMNS.iter().enumerate() {
                    exps[r * 16 + col - 1] = tables::B16_1_P16[r][c] as u32;
                }
            }
            LogMatrix::new(16, 2, exps).expect("reduced")
        }
        _ => return None,
    })
}

/// `y = −1/4 + i·√15/4`.
pub fn n9_y() -> C64 {
    C64::new(-0.25, 15f64.sqrt() / 4.0)
}

/// `ξ = 7/2⁷ + i·33√15/2⁷`.
pub fn n9_xi() -> C64 {
    C64::new(7.0 / 128.0, 33.0 * 15f64.sqrt() / 128.0)
}

/// Isolated order-9 matrix in its dephased form with entries `±y^p`.
pub fn n9_0() -> CMatrix {
    let y = n9_y();
    CMatrix::from_fn(9, |i, j| {
        let (s, p) = tables::N9_0[i][j];
        y.powi(p as i32) * s as f64
    })
}

/// `T16^(1)(a)` with `a = exp(2πi·t)` and `b = a²`: the printed core
/// bordered by ones.
pub fn t16_1(t: f64) -> CMatrix {
    let a = phase(t);
    let core = CMatrix::from_fn(15, |i, j| {
        let (m, p) = tables::T16_1_CORE[i][j];
        root_of_unity(m as i64, 4) * a.powi(p as i32)
    });
    crate::matcore::border_with_ones(&core)
}

/// Real Hadamard matrix `F2 ⊗ F2` of order 4.
pub fn h4() -> CMatrix {
    fourier(2).kron(&fourier(2))
}

/// Left and right unimodular diagonals.
#[derive(Clone, Debug, PartialEq)]
pub struct Dressing {
    pub left: Vec<C64>,
    pub right: Vec<C64>,
}

impl Dressing {
    pub fn identity(n: usize) -> Self {
        Dressing {
            left: vec![one(); n],
            right: vec![one(); n],
        }
    }

    /// `D·X·D†` style dressing.
    pub fn conjugate(diag: Vec<C64>) -> Self {
        let right = diag.iter().map(|z| z.conj()).collect();
        Dressing { left: diag, right }
    }

    pub fn apply(&self, x: &CMatrix) -> Result<CMatrix> {
        x.dress(&self.left, &self.right)
    }

    /// Phases in radians, `(α, β)`.
    pub fn phases(&self) -> (Vec<f64>, Vec<f64>) {
        (
            self.left.iter().map(|z| z.arg()).collect(),
            self.right.iter().map(|z| z.arg()).collect(),
        )
    }
}

/// An undressed base matrix together with the dressing printed for it.
#[derive(Clone, Debug)]
pub struct DressedMatrix {
    pub base: CMatrix,
    pub dressing: Dressing,
}

impl DressedMatrix {
    pub fn matrix(&self) -> CMatrix {
        self.dressing.apply(&self.base).expect("dressing matches base order")
    }
}

fn roots(exps: &[i64], q: u32) -> Vec<C64> {
    exps.iter().map(|&e| root_of_unity(e, q)).collect()
}

/// Entry of the catalog name table: name, parameter count, description.
pub struct NameInfo {
    pub name: &'static str,
    pub arity: usize,
    pub about: &'static str,
}

macro_rules! names {
    ($(($n:expr, $a:expr, $d:expr)),* $(,)?) => {
        &[$(NameInfo { name: $n, arity: $a, about: $d }),*]
    };
}

/// Every name accepted by [`named_matrix`].
pub const NAMES: &[NameInfo] = names![
    ("p9", 0, "2-unitary permutation of order 9"),
    ("p16", 0, "2-unitary permutation of order 16"),
    ("o16", 0, "orthogonal {-1,0,1} 2-unitary representative (O·Oᵀ = 4I)"),
    ("h8", 0, "3-unitary real Hadamard matrix of order 8"),
    ("b9_selfdual", 0, "self-R-dual Butson matrix BH(9,3)"),
    ("c9", 0, "2-unitary dressing D·B·D† of b9_selfdual"),
    ("b9_0", 0, "isolated Butson matrix BH(9,6)"),
    ("n9_0", 0, "isolated order-9 matrix with y = -1/4 + i√15/4"),
    ("b16_1", 0, "first record of BH(16,2)"),
    ("b16_2u", 0, "b16_1 · P16, 2-unitary BH(16,2)"),
    ("b16_8", 0, "eighth record of BH(16,4)"),
    ("y16_2", 2, "D_L(α1)·b16_8·P16·D_R(α2), 2-unitary"),
    ("t16_1", 1, "affine order-16 family T(a), a = e^{2πi t}"),
    ("y16_1", 1, "D_L(a)·T(a)·D_R(a), 2-unitary"),
    ("f4", 1, "F4(a)"),
    ("f9_4", 4, "F9^(4)(a,b,c,d)"),
    ("f3f3_2u", 0, "D_L·(F3⊗F3)·D_R, 2-unitary"),
    ("f9_4_2u", 4, "D_L·F9^(4)(α)·D_R, 2-unitary"),
    ("y9_selfdual", 5, "D_L(α)·F9^(4)(a,b,c,d)·D_R, self-R-dual"),
    ("b9_0_gamma", 0, "dressed b9_0, self-Γ-dual"),
    ("n9_0_gamma", 0, "dressed n9_0, self-Γ-dual"),
    ("k9_3_gamma", 0, "dressed Karlsson K9(3), self-Γ-dual"),
    ("f3f3_gamma", 1, "(diag(1,1,e^{2πiα})⊗I)·(F3⊗F3), self-Γ-dual"),
    ("f4f4_gamma", 2, "F4(a1)⊗F4(a2), self-Γ-dual"),
    ("h16_tensor", 0, "(H4⊗H4)·P16 with H4 = F2⊗F2"),
    ("h16_real", 0, "(F2⊗F2⊗I4)·O16, real 2-unitary Hadamard"),
];

fn check_arity(name: &str, params: &[f64], expected: usize) -> Result<()> {
    if params.len() != expected {
        return Err(Error::ArityMismatch {
            name: name.to_string(),
            expected,
            found: params.len(),
        });
    }
    Ok(())
}

/// Base matrix and dressing for every catalog entry built by diagonal
/// dressing.
pub fn dressed(name: &str, params: &[f64]) -> Result<DressedMatrix> {
    let arity = NAMES
        .iter()
        .find(|i| i.name == name)
        .map(|i| i.arity)
        .ok_or_else(|| Error::UnknownName(name.to_string()))?;
    check_arity(name, params, arity)?;
    let w3 = |e: i64| root_of_unity(e, 3);
    let (base, dressing) = match name {
        "c9" => {
            let d = roots(&[0, 0, 0, 0, 4, 2, 0, 2, 4], 3);
            (named_log("b9_selfdual").unwrap().to_complex(), Dressing::conjugate(d))
        }
        "f3f3_2u" | "f9_4_2u" => {
            let base = if name == "f3f3_2u" {
                fourier(3).kron(&fourier(3))
            } else {
                fourier_f9_4([params[0], params[1], params[2], params[3]])
            };
            let left = roots(&[0, 1, 1, 1, 1, 0, 0, 2, 0], 3);
            let right = roots(&[0, 1, 1, 1, 0, 1, 2, 2, 1], 3);
            (base, Dressing { left, right })
        }
        "y16_2" => {
            let (e1, e2) = (phase(params[0]), phase(params[1]));
            let (i, m) = (C64::new(0.0, 1.0), -one());
            let o = one();
            let left = vec![o, o, o, o, o, o, e1, e1, w3(1), w3(1), m, m, m, o, m, o];
            let right = vec![o, o, o, o, o, i, o, i, e2, e2, e2, e2, o, i, o, i];
            let base = named_log("b16_8").unwrap().to_complex().matmul(&perm_p16());
            (base, Dressing { left, right })
        }
        "y16_1" => {
            let a = phase(params[0]);
            let (o, m, i) = (one(), -one(), C64::new(0.0, 1.0));
            let w = |e: i64| root_of_unity(e, 12);
            let left = vec![o, o, o, o, o, o, m, o, o, a, -a, m, o, m, m, o];
            let right = vec![
                o,
                o,
                o,
                o,
                o,
                -i,
                -i * a * a,
                -a * a,
                w(1),
                w(4),
                w(7),
                w(10),
                -i,
                m,
                i,
                o,
            ];
            (t16_1(params[0]), Dressing { left, right })
        }
        "y9_selfdual" => {
            let al = phase(params[0]);
            let [a, b, c, d] = [params[1], params[2], params[3], params[4]].map(phase);
            let w = |e: i64| root_of_unity(e, 18);
            let o = one();
            let left = vec![o, o, o, o, o, o, al, al, al];
            let right = vec![o, o, o, o, a * w(2), b * w(4), o, c * w(4), d * w(8)];
            let base = fourier_f9_4([params[1], params[2], params[3], params[4]]);
            (base, Dressing { left, right })
        }
        "b9_0_gamma" => {
            let o = one();
            let left = vec![o, o, o, o, w3(1), o, o, o, w3(1)];
            let right = vec![o, o, o, o, w3(1), o, o, w3(1), w3(2)];
            (named_log("b9_0").unwrap().to_complex(), Dressing { left, right })
        }
        "n9_0_gamma" => {
            let (y, xi, o) = (n9_y(), n9_xi(), one());
            let left = vec![o, o, o, o, -y.powi(4), -y.powi(3), o, y, o];
            let right = vec![o, o, o, o, -o, -y, -y.powi(3), xi, xi * y];
            (n9_0(), Dressing { left, right })
        }
        "k9_3_gamma" => {
            let o = one();
            let d = vec![o, o, o, o, w3(2), w3(1), w3(1), w3(2), o];
            let k = karlsson(KarlssonParam::new(C64::new(3.0, 0.0))?);
            (
                k,
                Dressing {
                    left: d.clone(),
                    right: d,
                },
            )
        }
        "f3f3_gamma" => {
            let e = phase(params[0]);
            let o = one();
            let left = vec![o, o, o, o, o, o, e, e, e];
            (
                fourier(3).kron(&fourier(3)),
                Dressing {
                    left,
                    right: vec![o; 9],
                },
            )
        }
        _ => {
            let base = named_matrix(name, params)?;
            let n = base.order();
            (base, Dressing::identity(n))
        }
    };
    Ok(DressedMatrix { base, dressing })
}

/// Builds a catalog matrix by name; see [`NAMES`].
pub fn named_matrix(name: &str, params: &[f64]) -> Result<CMatrix> {
    let info = NAMES
        .iter()
        .find(|i| i.name == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))?;
    check_arity(name, params, info.arity)?;
    if let Some(log) = named_log(name) {
        return Ok(log.to_complex());
    }
    Ok(match name {
        "p9" => perm_p9(),
        "p16" => perm_p16(),
        "o16" => ortho_o16(),
        "n9_0" => n9_0(),
        "t16_1" => t16_1(params[0]),
        "f4" => fourier_f4(params[0]),
        "f9_4" => fourier_f9_4([params[0], params[1], params[2], params[3]]),
        "f4f4_gamma" => fourier_f4(params[0]).kron(&fourier_f4(params[1])),
        "h16_tensor" => h4().kron(&h4()).matmul(&perm_p16()),
        "h16_real" => h4().kron(&CMatrix::identity(4)).matmul(&ortho_o16()),
        _ => dressed(name, params)?.matrix(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::{is_hadamard, is_unitary, Tolerance};

    fn tol() -> Tolerance {
        Tolerance::DEFAULT
    }

    #[test]
    fn f2_exact() {
        let f = fourier(2);
        assert_eq!(f.as_slice(), &[one(), one(), one(), -one()]);
    }

    #[test]
    fn fourier_is_hadamard_and_dephased() {
        for n in 1..=16 {
            let f = fourier(n);
            assert!(is_hadamard(&f, tol()), "F{n}");
            assert!(crate::matcore::is_dephased(&f, tol()));
        }
    }

    #[test]
    fn f4_family_basics() {
        assert!(fourier_f4(0.0).approx_eq(&fourier(4), tol()));
        for k in 0..100 {
            let a = k as f64 / 100.0 + 0.0037;
            let f = fourier_f4(a);
            assert!(is_hadamard(&f, tol()));
            assert_eq!(f, f.transpose());
        }
    }

    #[test]
    fn f9_family_basics() {
        let f = fourier_f9_4([0.0; 4]);
        assert!(f.approx_eq(&fourier(9), tol()));
        assert!(crate::matcore::is_dephased(&f, tol()));
        assert!(is_hadamard(&fourier_f9_4([0.1, 0.7, 0.33, 0.9]), tol()));
    }

    #[test]
    fn f9_family_contains_permuted_f3f3() {
        // residue parameters −(j·k)/9 cancel the twist of F9 against F3⊗F3
        let f = fourier_f9_4([-1.0 / 9.0, -2.0 / 9.0, -2.0 / 9.0, -4.0 / 9.0]);
        let swap_cols = CMatrix::from_fn(9, |r, c| {
            C64::new(if r == (c % 3) * 3 + c / 3 { 1.0 } else { 0.0 }, 0.0)
        });
        let f3 = fourier(3);
        assert!(f.approx_eq(&f3.kron(&f3).matmul(&swap_cols), tol()));
    }

    #[test]
    fn permutations_are_orthogonal() {
        for p in [perm_p9(), perm_p16()] {
            assert!(p.transpose().matmul(&p).approx_eq(&CMatrix::identity(p.order()), tol()));
        }
        // column 2 of P9 has its one in row 9
        assert_eq!(perm_p9()[(8, 1)], one());
    }

    #[test]
    fn o16_is_rescaled_orthogonal() {
        let o = ortho_o16();
        assert!(o
            .matmul(&o.transpose())
            .approx_eq(&CMatrix::identity(16).scale(4.0), tol()));
        assert!(!crate::matcore::is_unimodular(&o, tol()));
        assert!(o
            .as_slice()
            .iter()
            .all(|z| z.im == 0.0 && [-1.0, 0.0, 1.0].contains(&z.re)));
    }

    #[test]
    fn karlsson_domain() {
        assert!(KarlssonParam::new(C64::new(1.0, 0.0)).is_err());
        assert!(KarlssonParam::new(C64::new(-1.0, 0.0)).is_err());
        assert!(KarlssonParam::new(C64::new(0.0, 4.0)).is_err());
        assert!(KarlssonParam::new(C64::new(3.0, 0.0)).is_ok());
        assert!(KarlssonParam::new(C64::new(3.5, 0.0)).is_err());
    }

    #[test]
    fn karlsson_at_zero() {
        let (x, y, u, w) = KarlssonParam::new(C64::new(0.0, 0.0)).unwrap().entries();
        let r = 15f64.sqrt() / 4.0;
        for (z, im) in [(x, r), (y, -r), (u, r), (w, -r)] {
            assert!((z - C64::new(0.25, im)).norm() < 1e-15);
        }
    }

    #[test]
    fn karlsson_structure() {
        let k = karlsson(KarlssonParam::new(C64::new(0.3, 0.1)).unwrap());
        assert!(is_hadamard(&k, tol()));
        assert!(k.approx_eq(&k.transpose(), tol()));
        // first block row as printed
        let (x, y, u, w) = KarlssonParam::new(C64::new(0.3, 0.1)).unwrap().entries();
        let first = [one(), x, x, y, u, w, y, w, u];
        for (j, e) in first.iter().enumerate() {
            assert_eq!(k[(0, j)], *e);
        }
        // block circulant: block (1, 1) equals block (0, 0)
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(k[(i + 3, j + 3)], k[(i, j)]);
                assert_eq!(k[(i + 6, j)], k[(i, j + 3)]);
            }
        }
    }

    #[test]
    fn xi_and_y_are_unimodular() {
        // (7² + 33²·15) / 2¹⁴ = 1 exactly
        assert_eq!(7 * 7 + 33 * 33 * 15, 1 << 14);
        assert!((n9_xi().norm() - 1.0).abs() < 1e-15);
        assert!((n9_y().norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn every_name_builds_a_unitary() {
        for info in NAMES {
            let params: Vec<f64> = (0..info.arity).map(|i| 0.137 * (i + 1) as f64).collect();
            let m = named_matrix(info.name, &params).unwrap();
            let scale = if info.name == "o16" {
                4.0
            } else if ["p9", "p16"].contains(&info.name) {
                1.0
            } else {
                m.order() as f64
            };
            assert!(is_unitary(&m, scale, tol()), "{}", info.name);
        }
    }

    #[test]
    fn name_errors() {
        assert_eq!(named_matrix("nope", &[]), Err(Error::UnknownName("nope".into())));
        assert!(matches!(
            named_matrix("y16_2", &[0.1]),
            Err(Error::ArityMismatch { .. })
        ));
    }

    #[test]
    fn c9_table_matches_conjugate_dressing() {
        let built = dressed("c9", &[]).unwrap().matrix();
        let table = named_log("c9").unwrap().to_complex();
        assert!(built.approx_eq(&table, tol()));
    }

    #[test]
    fn b16_1_is_dephased_binary() {
        let b = named_log("b16_1").unwrap();
        assert!((0..16).all(|k| b.exp(0, k) == 0 && b.exp(k, 0) == 0));
        let prod = b.to_complex().matmul(&perm_p16());
        assert_eq!(prod, named_matrix("b16_2u", &[]).unwrap());
    }
}
