//! Butson matrices in logarithmic form, exact validation and bulk scans.
//!
//! File format: each record starts with a header `BH n q` followed by `n`
//! lines of `n` exponents in `[0, q)`. Records are separated by blank
//! lines and `#` starts a comment.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::error::{Error, Result};
use crate::matcore::{is_hadamard, root_of_unity, CMatrix, Tolerance};
use crate::measures::Target;
use crate::search::{derive_seed, phase_walk, SearchConfig, StepSchedule};

/// Butson matrix stored by exponents: entry `(i, j)` is `exp(2πi·e_ij/q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LogMatrix {
    n: usize,
    q: u32,
    exps: Vec<u32>,
}

impl LogMatrix {
    pub fn new(n: usize, q: u32, exps: Vec<u32>) -> Result<Self> {
        if q < 2 {
            return Err(Error::Domain(format!("root order q = {q} must be at least 2")));
        }
        if exps.len() != n * n {
            return Err(Error::shape(n * n, exps.len()));
        }
        if let Some(&e) = exps.iter().find(|&&e| e >= q) {
            return Err(Error::Range {
                line: 0,
                value: e as i64,
                q,
            });
        }
        Ok(LogMatrix { n, q, exps })
    }

    /// Reduces arbitrary integer exponents mod `q`.
    pub fn from_unreduced(n: usize, q: u32, exps: &[i64]) -> Result<Self> {
        let r = exps.iter().map(|e| e.rem_euclid(q as i64) as u32).collect();
        LogMatrix::new(n, q, r)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, i: usize, j: usize) -> u32 {
        self.exps[i * self.n + j]
    }

    pub fn to_complex(&self) -> CMatrix {
        CMatrix::from_fn(self.n, |i, j| root_of_unity(self.exp(i, j) as i64, self.q))
    }

    /// Reads `X` back as exponents when every entry is within `eps` of a
    /// `q`-th root of unity.
    pub fn from_complex(x: &CMatrix, q: u32, tol: Tolerance) -> Option<Self> {
        let mut exps = Vec::with_capacity(x.order() * x.order());
        for &z in x.as_slice() {
            let k = (z.arg() * q as f64 / std::f64::consts::TAU).round() as i64;
            if (z - root_of_unity(k, q)).norm() > tol.eps() {
                return None;
            }
            exps.push(k.rem_euclid(q as i64) as u32);
        }
        LogMatrix::new(x.order(), q, exps).ok()
    }

    /// Exact Hadamard test: for every pair of rows the exponent differences
    /// are counted into `Σ c_m·x^m`, and the row pair is orthogonal iff that
    /// polynomial vanishes at a primitive `q`-th root, i.e. iff it is
    /// divisible by the cyclotomic polynomial `Φ_q`.
    pub fn is_hadamard_exact(&self) -> bool {
        let phi = cyclotomic(self.q as usize);
        let q = self.q as usize;
        let mut counts = vec![0i64; q];
        for i in 0..self.n {
            for j in i + 1..self.n {
                counts.iter_mut().for_each(|c| *c = 0);
                for k in 0..self.n {
                    let e = (self.exp(i, k) + self.q - self.exp(j, k)) % self.q;
                    counts[e as usize] += 1;
                }
                if !divisible_by_monic(&counts, &phi) {
                    return false;
                }
            }
        }
        true
    }

    pub fn emit(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "BH {} {}", self.n, self.q);
        for i in 0..self.n {
            let row: Vec<String> = (0..self.n).map(|j| self.exp(i, j).to_string()).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }
}

/// Records joined by blank lines.
pub fn emit_all(records: &[LogMatrix]) -> String {
    records.iter().map(LogMatrix::emit).collect::<Vec<_>>().join("\n")
}

fn exact_product(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic polynomial; coefficients are little-endian.
fn div_monic(num: &[i64], den: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    if rem.len() <= dd {
        return (vec![0], rem);
    }
    let mut quot = vec![0; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (t, &dc) in den.iter().enumerate() {
            rem[k + t] -= c * dc;
        }
    }
    rem.truncate(dd);
    (quot, rem)
}

/// `Φ_q` as little-endian integer coefficients.
pub fn cyclotomic(q: usize) -> Vec<i64> {
    assert!(q >= 1);
    let mut xq1 = vec![0i64; q + 1];
    xq1[0] = -1;
    xq1[q] = 1;
    let mut den = vec![1i64];
    for m in (1..q).filter(|m| q.is_multiple_of(*m)) {
        den = exact_product(&den, &cyclotomic(m));
    }
    let (quot, rem) = div_monic(&xq1, &den);
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

fn divisible_by_monic(p: &[i64], den: &[i64]) -> bool {
    div_monic(p, den).1.iter().all(|&r| r == 0)
}

fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

/// Parses every record of a catalog file.
pub fn parse_catalog(text: &str) -> Result<Vec<LogMatrix>> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .peekable();
    let mut out = Vec::new();
    while let Some((hl, header)) = lines.next() {
        let toks: Vec<&str> = header.split_whitespace().collect();
        if toks.len() != 3 || toks[0] != "BH" {
            return Err(parse_err(hl, 1, format!("expected header `BH n q`, found `{header}`")));
        }
        let n: usize = toks[1]
            .parse()
            .map_err(|_| parse_err(hl, 2, format!("bad order `{}`", toks[1])))?;
        let q: u32 = toks[2]
            .parse()
            .ok()
            .filter(|&q| q >= 2)
            .ok_or_else(|| parse_err(hl, 3, format!("bad root order `{}`", toks[2])))?;
        let mut exps = Vec::with_capacity(n * n);
        for r in 0..n {
            let (lno, line) = lines
                .next()
                .ok_or_else(|| parse_err(hl + r + 1, 1, format!("expected {n} rows, found {r}")))?;
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != n {
                return Err(parse_err(
                    lno,
                    1,
                    format!("expected {n} exponents, found {}", toks.len()),
                ));
            }
            for (c, t) in toks.iter().enumerate() {
                let v: i64 = t
                    .parse()
                    .map_err(|_| parse_err(lno, c + 1, format!("bad exponent `{t}`")))?;
                if v < 0 || v >= q as i64 {
                    return Err(Error::Range { line: lno, value: v, q });
                }
                exps.push(v as u32);
            }
        }
        out.push(LogMatrix::new(n, q, exps)?);
    }
    Ok(out)
}

/// Parses a text holding exactly one record.
pub fn parse_log(text: &str) -> Result<LogMatrix> {
    let mut all = parse_catalog(text)?;
    match all.len() {
        1 => Ok(all.pop().unwrap()),
        k => Err(parse_err(1, 1, format!("expected one record, found {k}"))),
    }
}

/// True iff `X` is Hadamard and every entry lies within `eps` of a `q`-th
/// root of unity.
pub fn is_butson(x: &CMatrix, q: u32, tol: Tolerance) -> bool {
    q >= 2 && is_hadamard(x, tol) && LogMatrix::from_complex(x, q, tol).is_some()
}

/// Optional phase search applied to each record.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WalkBudget {
    #[serde(default = "default_walk_iters")]
    pub max_iters: u64,
    #[serde(default = "default_walk_restarts")]
    pub restarts: u32,
    #[serde(default)]
    pub quantum: Option<u32>,
    #[serde(default)]
    pub conjugate: bool,
    #[serde(default)]
    pub frozen: Vec<usize>,
}

fn default_walk_iters() -> u64 {
    100_000
}

fn default_walk_restarts() -> u32 {
    4
}

fn default_chi_tol() -> f64 {
    1e-12
}

/// Declarative per-record procedure, read from JSON:
///
/// ```json
/// {"target": "2u", "permute": "p16", "walk": {"max_iters": 50000}, "seed": 7}
/// ```
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanStrategy {
    #[serde(default = "default_target")]
    pub target: Target,
    /// Named permutation multiplied on the right before anything else.
    #[serde(default)]
    pub permute: Option<String>,
    #[serde(default)]
    pub walk: Option<WalkBudget>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_chi_tol")]
    pub chi_tol: f64,
}

fn default_target() -> Target {
    Target::TwoUnitary
}

impl ScanStrategy {
    pub fn from_json(text: &str) -> Result<Self> {
        let s: ScanStrategy = serde_json::from_str(text).map_err(|e| Error::Config(format!("scan strategy: {e}")))?;
        if !(s.chi_tol > 0.0) {
            return Err(Error::Config("chi_tol must be positive".into()));
        }
        if let Some(p) = &s.permute {
            catalog::named_matrix(p, &[])?;
        }
        Ok(s)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanDressing {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permute: Option<String>,
    /// Left and right phases in radians.
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanRecord {
    /// 1-based record position in the input.
    pub index: usize,
    pub hit: bool,
    pub chi: Option<f64>,
    pub dressing: Option<ScanDressing>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl ScanRecord {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

fn scan_one(index: usize, rec: &LogMatrix, d: usize, s: &ScanStrategy) -> Result<ScanRecord> {
    if rec.order() != d * d {
        return Err(Error::shape(format!("order {}", d * d), rec.order()));
    }
    let mut x = rec.to_complex();
    if let Some(p) = &s.permute {
        let p = catalog::named_matrix(p, &[])?;
        if p.order() != x.order() {
            return Err(Error::shape(format!("permutation of order {}", x.order()), p.order()));
        }
        x = x.matmul(&p);
    }
    let n = x.order();
    let (chi, alpha, beta) = match &s.walk {
        None => (s.target.objective(&x, d)?, vec![0.0; n], vec![0.0; n]),
        Some(w) => {
            let cfg = SearchConfig {
                target: s.target,
                max_iters: w.max_iters,
                restarts: w.restarts,
                chi_tol: s.chi_tol,
                schedule: StepSchedule::default(),
                seed: derive_seed(s.seed, index as u64),
                frozen: w.frozen.clone(),
                quantum: w.quantum,
                conjugate: w.conjugate,
                ..SearchConfig::default()
            };
            let r = phase_walk(&x, d, &cfg)?;
            (r.chi, r.alpha, r.beta)
        }
    };
    Ok(ScanRecord {
        index,
        hit: chi <= s.chi_tol,
        chi: Some(chi),
        dressing: Some(ScanDressing {
            permute: s.permute.clone(),
            alpha,
            beta,
        }),
        error: None,
    })
}

/// Applies the strategy to every record in parallel. Each record draws from
/// its own seed derived from the strategy seed and the record index, so the
/// report does not depend on scheduling. Failures are reported per record.
pub fn scan(records: &[LogMatrix], d: usize, strategy: &ScanStrategy) -> Vec<ScanRecord> {
    records
        .par_iter()
        .enumerate()
        .map(|(i, rec)| {
            scan_one(i + 1, rec, d, strategy).unwrap_or_else(|e| ScanRecord {
                index: i + 1,
                hit: false,
                chi: None,
                dressing: None,
                error: Some(e.to_string()),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{fourier, named_log, named_matrix};
    use proptest::prelude::*;

    #[test]
    fn f2_from_text() {
        let l = parse_log("BH 2 2\n0 0\n0 1\n").unwrap();
        assert_eq!(l.to_complex(), fourier(2));
        assert!(l.is_hadamard_exact());
    }

    #[test]
    fn cyclotomic_small() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(2), vec![1, 1]);
        assert_eq!(cyclotomic(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic(12), vec![1, 0, -1, 0, 1]);
        // Φ_105 is the first with a coefficient outside {−1, 0, 1}
        assert!(cyclotomic(105).contains(&-2));
        for q in 1..60 {
            assert_eq!(cyclotomic(q).len() - 1, (1..=q).filter(|k| gcd(*k, q) == 1).count());
        }
    }

    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_log("BH 2 2\n0 0\n0 2\n"),
            Err(Error::Range {
                line: 3,
                value: 2,
                q: 2
            })
        ));
        assert!(matches!(
            parse_log("BH 2 2\n0 0\n0 x\n"),
            Err(Error::Parse { line: 3, col: 2, .. })
        ));
        assert!(matches!(
            parse_log("HB 2 2\n0 0\n0 1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(parse_log("BH 2 2\n0 0\n"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_log("BH 2 1\n0 0\n0 0\n"),
            Err(Error::Parse { col: 3, .. })
        ));
    }

    #[test]
    fn multi_record_catalog() {
        let text = "# two records\nBH 2 2\n0 0\n0 1\n\nBH 1 3\n2\n";
        let all = parse_catalog(text).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(all[1].exps(), &[2]);
        assert_eq!(parse_catalog(&emit_all(&all)).unwrap(), all);
        assert!(parse_log(text).is_err());
    }

    #[test]
    fn zero_exponents_give_ones() {
        let l = LogMatrix::new(4, 5, vec![0; 16]).unwrap();
        assert_eq!(l.to_complex(), CMatrix::ones(4));
        assert!(!l.is_hadamard_exact());
    }

    #[test]
    fn embedded_tables_are_exact_butson() {
        for name in ["b9_selfdual", "c9", "b9_0", "h8", "b16_1", "b16_2u", "b16_8"] {
            let l = named_log(name).unwrap();
            assert!(l.is_hadamard_exact(), "{name}");
            assert!(is_butson(&l.to_complex(), l.q(), Tolerance::DEFAULT), "{name}");
        }
    }

    #[test]
    fn self_dual_table_round_trip() {
        let b = named_log("b9_selfdual").unwrap();
        let back = parse_log(&b.emit()).unwrap();
        assert_eq!(back.to_complex(), named_matrix("b9_selfdual", &[]).unwrap());
    }

    #[test]
    fn butson_predicate() {
        let t = Tolerance::DEFAULT;
        assert!(is_butson(&fourier(3), 3, t));
        assert!(!is_butson(&fourier(3), 2, t));
        assert!(is_butson(&fourier(3), 6, t));
        let y = named_matrix("y16_2", &[0.1234, 0.377]).unwrap();
        assert!(!is_butson(&y, 4, t));
        assert!(is_butson(&named_matrix("y16_2", &[0.0, 0.0]).unwrap(), 12, t));
    }

    #[test]
    fn strategy_json() {
        let s = ScanStrategy::from_json(r#"{"permute":"p16","target":"2u"}"#).unwrap();
        assert_eq!(s.permute.as_deref(), Some("p16"));
        assert!(s.walk.is_none());
        assert!(ScanStrategy::from_json(r#"{"permute":"nope"}"#).is_err());
        assert!(ScanStrategy::from_json(r#"{"bogus":1}"#).is_err());
    }

    #[test]
    fn scan_reports_errors_per_record() {
        let recs = vec![named_log("b16_1").unwrap(), named_log("b9_selfdual").unwrap()];
        let s = ScanStrategy::from_json(r#"{"permute":"p16"}"#).unwrap();
        let out = scan(&recs, 4, &s);
        assert!(out[0].hit);
        assert!(!out[1].hit && out[1].error.is_some());
        let line = out[0].to_json_line();
        assert!(line.starts_with(r#"{"index":1,"hit":true,"chi":"#), "{line}");
    }

    fn random_log() -> impl Strategy<Value = LogMatrix> {
        (1usize..6, 2u32..13).prop_flat_map(|(n, q)| {
            prop::collection::vec(0..q, n * n).prop_map(move |e| LogMatrix::new(n, q, e).unwrap())
        })
    }

    proptest! {
        #[test]
        fn emit_parse_round_trip(l in random_log()) {
            let back = parse_log(&l.emit()).unwrap();
            prop_assert_eq!(back.to_complex(), l.to_complex());
            prop_assert_eq!(back, l);
        }

        #[test]
        fn exact_agrees_with_float(l in random_log()) {
            let x = l.to_complex();
            prop_assert_eq!(l.is_hadamard_exact(), is_hadamard(&x, Tolerance::DEFAULT));
        }

        #[test]
        fn dephasing_preserves_exact_check(seed in 0u64..50) {
            // Fourier matrices with random row/column shifts of exponents
            use rand::Rng;
            let mut rng = crate::search::stream_rng(seed, 0);
            let q = rng.random_range(2u32..10);
            let n = q as usize;
            let r: Vec<u32> = (0..n).map(|_| rng.random_range(0..q)).collect();
            let c: Vec<u32> = (0..n).map(|_| rng.random_range(0..q)).collect();
            let e: Vec<i64> = (0..n * n)
                .map(|k| ((k / n) * (k % n)) as i64 + r[k / n] as i64 + c[k % n] as i64)
                .collect();
            let l = LogMatrix::from_unreduced(n, q, &e).unwrap();
            prop_assert!(l.is_hadamard_exact());
            prop_assert!(is_butson(&l.to_complex(), q, Tolerance::DEFAULT));
        }
    }
}
