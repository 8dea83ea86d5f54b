//! Numerical searches: a greedy random walk over diagonal dressings and an
//! alternating projection toward 2-unitary complex Hadamard matrices.

use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matcore::{is_unimodular, is_unitary, polar_unitary, CMatrix, Tolerance, C64};
use crate::measures::{chi, objective_z, Target};
use crate::rearrange::{partial_transpose, reshuffle};

/// RNG for stream `stream` of master seed `seed`.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Seed for work item `index` of a run with master seed `seed`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    stream_rng(seed, index.wrapping_add(1 << 32)).random()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct StepSchedule {
    pub initial: f64,
    /// Factor applied after every `batch` rejections.
    pub decay: f64,
    pub floor: f64,
    pub batch: u64,
}

impl Default for StepSchedule {
    fn default() -> Self {
        StepSchedule {
            initial: PI / 8.0,
            decay: 0.95,
            floor: 1e-7,
            batch: 64,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct SearchConfig {
    pub target: Target,
    /// Step budget of a single restart.
    pub max_iters: u64,
    /// Number of attempts.
    pub restarts: u32,
    pub chi_tol: f64,
    pub schedule: StepSchedule,
    pub seed: u64,
    /// Phase coordinates held at zero: `0..n` address the left diagonal,
    /// `n..2n` the right one.
    pub frozen: Vec<usize>,
    /// Restrict phases to multiples of `2π/q`.
    pub quantum: Option<u32>,
    /// Tie the right diagonal to the conjugate of the left one (`D·X·D†`).
    pub conjugate: bool,
    /// Consecutive rejections at the smallest step that end a restart.
    pub stall: u64,
    /// Steps without a `1e-14` improvement of `χ` that end a Sinkhorn restart.
    pub stagnation: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            target: Target::TwoUnitary,
            max_iters: 200_000,
            restarts: 8,
            chi_tol: 1e-12,
            schedule: StepSchedule::default(),
            seed: 0,
            frozen: Vec::new(),
            quantum: None,
            conjugate: false,
            stall: 5_000,
            stagnation: 500,
        }
    }
}

impl SearchConfig {
    pub fn new(target: Target, seed: u64) -> Self {
        SearchConfig {
            target,
            seed,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::Config(m.to_string()));
        let s = &self.schedule;
        if !(self.chi_tol > 0.0) {
            return bad("chi_tol must be positive");
        }
        if self.max_iters < 1 || self.restarts < 1 {
            return bad("max_iters and restarts must be at least 1");
        }
        if !(s.initial > 0.0 && s.floor > 0.0 && s.decay > 0.0 && s.decay <= 1.0 && s.batch >= 1) {
            return bad("step schedule needs positive sizes, decay in (0, 1] and batch ≥ 1");
        }
        if matches!(self.quantum, Some(q) if q < 2) {
            return bad("phase quantum must be at least 2");
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    pub converged: bool,
    /// Final value of the objective.
    pub chi: f64,
    /// Steps summed over all restarts.
    pub iters: u64,
    pub seed: u64,
    /// Restart that produced the result.
    pub restart: u32,
    pub matrix: CMatrix,
    /// Left and right dressing phases in radians; empty for Sinkhorn runs.
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
    pub matrix_file: Option<String>,
}

impl SearchResult {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "converged": self.converged,
            "chi": self.chi,
            "iters": self.iters,
            "seed": self.seed,
            "matrix_file": self.matrix_file,
        })
    }
}

struct Attempt {
    value: f64,
    phases: Vec<f64>,
    steps: u64,
}

/// Greedy random walk over `(α, β)` minimizing the target objective of
/// `diag(e^{iα})·X·diag(e^{iβ})`. Restart 0 starts from zero phases, later
/// restarts from uniformly random ones. Returns the best attempt.
pub fn phase_walk(x: &CMatrix, d: usize, cfg: &SearchConfig) -> Result<SearchResult> {
    cfg.validate()?;
    let n = x.order();
    if n != d * d {
        return Err(Error::shape(format!("order {}", d * d), n));
    }
    let coords = if cfg.conjugate { n } else { 2 * n };
    if let Some(&bad) = cfg.frozen.iter().find(|&&i| i >= coords) {
        return Err(Error::Config(format!("frozen index {bad} out of range 0..{coords}")));
    }
    let free: Vec<usize> = (0..coords).filter(|i| !cfg.frozen.contains(i)).collect();
    let split = |p: &[f64]| -> (Vec<f64>, Vec<f64>) {
        if cfg.conjugate {
            (p.to_vec(), p.iter().map(|a| -a).collect())
        } else {
            (p[..n].to_vec(), p[n..].to_vec())
        }
    };
    let eval = |p: &[f64]| -> Result<f64> {
        let (a, b) = split(p);
        objective_z(x, &a, &b, d, cfg.target)
    };

    let mut best: Option<(u32, Attempt)> = None;
    let mut total = 0;
    for r in 0..cfg.restarts {
        let mut rng = stream_rng(cfg.seed, r as u64);
        let mut p = vec![0.0; coords];
        if r > 0 {
            for &i in &free {
                p[i] = match cfg.quantum {
                    Some(q) => TAU * rng.random_range(0..q) as f64 / q as f64,
                    None => rng.random_range(0.0..TAU),
                };
            }
        }
        let attempt = walk_once(&eval, p, &free, cfg, &mut rng)?;
        total += attempt.steps;
        let done = attempt.value <= cfg.chi_tol;
        if best.as_ref().is_none_or(|(_, b)| attempt.value < b.value) {
            best = Some((r, attempt));
        }
        if done {
            break;
        }
    }
    let (restart, att) = best.expect("at least one restart");
    let (alpha, beta) = split(&att.phases);
    let l: Vec<C64> = alpha.iter().map(|&a| C64::from_polar(1.0, a)).collect();
    let rgt: Vec<C64> = beta.iter().map(|&b| C64::from_polar(1.0, b)).collect();
    Ok(SearchResult {
        converged: att.value <= cfg.chi_tol,
        chi: att.value,
        iters: total,
        seed: cfg.seed,
        restart,
        matrix: x.dress(&l, &rgt)?,
        alpha,
        beta,
        matrix_file: None,
    })
}

fn walk_once(
    eval: &impl Fn(&[f64]) -> Result<f64>,
    mut p: Vec<f64>,
    free: &[usize],
    cfg: &SearchConfig,
    rng: &mut ChaCha8Rng,
) -> Result<Attempt> {
    let s = cfg.schedule;
    let mut cur = eval(&p)?;
    let (mut step, mut rejected, mut run) = (s.initial, 0u64, 0u64);
    let mut steps = 0;
    if free.is_empty() {
        return Ok(Attempt {
            value: cur,
            phases: p,
            steps,
        });
    }
    while steps < cfg.max_iters && cur > cfg.chi_tol {
        steps += 1;
        let i = free[rng.random_range(0..free.len())];
        let delta = match cfg.quantum {
            Some(q) => TAU * rng.random_range(1..q) as f64 / q as f64,
            None => rng.random_range(-step..=step),
        };
        let old = p[i];
        p[i] = old + delta;
        let v = eval(&p)?;
        if v < cur {
            cur = v;
            run = 0;
            continue;
        }
        p[i] = old;
        rejected += 1;
        run += 1;
        if rejected % s.batch == 0 {
            step = (step * s.decay).max(s.floor);
        }
        let at_floor = cfg.quantum.is_some() || step <= s.floor;
        if at_floor && run >= cfg.stall {
            break;
        }
    }
    Ok(Attempt {
        value: cur,
        phases: p,
        steps,
    })
}

fn normalize_entries(x: &CMatrix) -> Result<CMatrix> {
    let eps = Tolerance::DEFAULT.eps();
    let n = x.order();
    let mut out = x.clone();
    for i in 0..n {
        for j in 0..n {
            let z = x[(i, j)];
            let r = z.norm();
            if !(r >= eps) {
                return Err(Error::ZeroEntry { row: i, col: j });
            }
            out[(i, j)] = z / r;
        }
    }
    Ok(out)
}

/// One iteration: normalize entries to unit modulus, take the polar
/// unitary factor, then apply `Γ` and `R` in that order.
pub fn sinkhorn_step(x: &CMatrix, d: usize) -> Result<CMatrix> {
    if x.order() != d * d {
        return Err(Error::shape(format!("order {}", d * d), x.order()));
    }
    let t = normalize_entries(x)?;
    let u = polar_unitary(&t)?;
    reshuffle(&partial_transpose(&u, d)?, d)
}

/// Smallest objective a converged Sinkhorn iterate is polished to.
const POLISH_FLOOR: f64 = 1e-26;
const POLISH_STEPS: u64 = 2_000;
/// Polishing ends after this many steps without improvement.
const POLISH_PATIENCE: u64 = 50;

/// Iterates [`sinkhorn_step`] from complex Gaussian seeds, one RNG stream
/// per restart. `χ` is tracked on the entrywise-normalized iterate. Once
/// it drops below `chi_tol` the iteration continues while it keeps
/// improving, so the returned matrix is unitary to working precision.
pub fn sinkhorn_search(n: usize, cfg: &SearchConfig) -> Result<SearchResult> {
    cfg.validate()?;
    let d = (n as f64).sqrt().round() as usize;
    if d < 2 || d * d != n {
        return Err(Error::shape("order d² with d ≥ 2", n));
    }
    let mut best: Option<SearchResult> = None;
    let mut total = 0;
    for r in 0..cfg.restarts {
        let mut rng = stream_rng(cfg.seed, r as u64);
        let (value, t, steps) = sinkhorn_once(n, d, cfg, &mut rng);
        total += steps;
        let converged = value <= cfg.chi_tol && certified(&t, d);
        let better = match &best {
            None => true,
            Some(b) => (converged && !b.converged) || (converged == b.converged && value < b.chi),
        };
        if better {
            best = Some(SearchResult {
                converged,
                chi: value,
                iters: 0,
                seed: cfg.seed,
                restart: r,
                matrix: t,
                alpha: Vec::new(),
                beta: Vec::new(),
                matrix_file: None,
            });
        }
        if converged {
            break;
        }
    }
    let mut out = best.expect("at least one restart");
    out.iters = total;
    Ok(out)
}

/// Unimodular, and unitary at scale `n` together with both rearrangements.
fn certified(t: &CMatrix, d: usize) -> bool {
    let (n, tol) = (t.order() as f64, Tolerance::DEFAULT);
    let unitary = |x: Result<CMatrix>| x.map(|x| is_unitary(&x, n, tol)).unwrap_or(false);
    is_unimodular(t, tol) && is_unitary(t, n, tol) && unitary(reshuffle(t, d)) && unitary(partial_transpose(t, d))
}

fn gaussian_seed(n: usize, rng: &mut ChaCha8Rng) -> CMatrix {
    CMatrix::from_fn(n, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        C64::new(re, im)
    })
}

fn sinkhorn_once(n: usize, d: usize, cfg: &SearchConfig, rng: &mut ChaCha8Rng) -> (f64, CMatrix, u64) {
    let mut x = gaussian_seed(n, rng);
    let mut best = (f64::INFINITY, CMatrix::zeros(n));
    let mut last_gain = 0;
    let mut polish_left: Option<u64> = None;
    let mut steps = 0;
    while steps < cfg.max_iters {
        let Ok(t) = normalize_entries(&x) else { break };
        let Ok(c) = chi(&t, d) else { break };
        if c < best.0 - 1e-14 || (polish_left.is_some() && c < best.0) {
            last_gain = steps;
        }
        if c < best.0 {
            best = (c, t.clone());
        }
        if c <= cfg.chi_tol && polish_left.is_none() {
            polish_left = Some(POLISH_STEPS);
        }
        match polish_left.as_mut() {
            Some(k) => {
                if *k == 0 || best.0 <= POLISH_FLOOR || steps - last_gain >= POLISH_PATIENCE {
                    break;
                }
                *k -= 1;
            }
            None if steps - last_gain >= cfg.stagnation => break,
            None => {}
        }
        let Ok(u) = polar_unitary(&t) else { break };
        x = match partial_transpose(&u, d).and_then(|g| reshuffle(&g, d)) {
            Ok(y) => y,
            Err(_) => break,
        };
        steps += 1;
    }
    (best.0, best.1, steps)
}

/// Independent Sinkhorn searches for the master seeds `seeds`, evaluated in
/// parallel and returned in input order.
pub fn sinkhorn_many(n: usize, cfg: &SearchConfig, seeds: &[u64]) -> Result<Vec<SearchResult>> {
    seeds
        .par_iter()
        .map(|&s| {
            let c = SearchConfig { seed: s, ..cfg.clone() };
            sinkhorn_search(n, &c)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{fourier, named_log, named_matrix};

    #[test]
    fn config_validation() {
        assert!(SearchConfig::default().validate().is_ok());
        let bad = [
            SearchConfig {
                chi_tol: 0.0,
                ..Default::default()
            },
            SearchConfig {
                max_iters: 0,
                ..Default::default()
            },
            SearchConfig {
                quantum: Some(1),
                ..Default::default()
            },
        ];
        for c in bad {
            assert!(matches!(c.validate(), Err(Error::Config(_))));
        }
    }

    #[test]
    fn streams_differ_and_repeat() {
        let a: u64 = stream_rng(1, 0).random();
        let b: u64 = stream_rng(1, 1).random();
        assert_ne!(a, b);
        assert_eq!(a, stream_rng(1, 0).random::<u64>());
        assert_ne!(derive_seed(5, 0), derive_seed(5, 1));
    }

    #[test]
    fn walk_rejects_wrong_order() {
        let cfg = SearchConfig::default();
        assert!(matches!(
            phase_walk(&fourier(8), 3, &cfg),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn walk_never_increases_objective() {
        let b = named_log("b9_selfdual").unwrap().to_complex();
        let start = chi(&b, 3).unwrap();
        for iters in [1, 10, 300] {
            let cfg = SearchConfig {
                max_iters: iters,
                restarts: 1,
                seed: 3,
                ..Default::default()
            };
            let r = phase_walk(&b, 3, &cfg).unwrap();
            assert!(r.chi <= start);
            assert!(r.iters <= iters);
            assert!((chi(&r.matrix, 3).unwrap() - r.chi).abs() < 1e-12);
        }
    }

    #[test]
    fn frozen_coordinates_stay_zero() {
        let b = named_log("b9_selfdual").unwrap().to_complex();
        let cfg = SearchConfig {
            max_iters: 500,
            restarts: 1,
            frozen: vec![0, 4, 9, 17],
            ..Default::default()
        };
        let r = phase_walk(&b, 3, &cfg).unwrap();
        assert_eq!((r.alpha[0], r.alpha[4], r.beta[0], r.beta[8]), (0.0, 0.0, 0.0, 0.0));
    }

    #[test]
    fn conjugate_walk_on_b_finds_two_unitary() {
        let b = named_log("b9_selfdual").unwrap().to_complex();
        let cfg = SearchConfig {
            quantum: Some(3),
            conjugate: true,
            restarts: 20,
            seed: 1,
            ..Default::default()
        };
        let r = phase_walk(&b, 3, &cfg).unwrap();
        assert!(r.converged, "{}", r.chi);
        for (a, b) in r.alpha.iter().zip(&r.beta) {
            assert_eq!(*a, -*b);
        }
    }

    #[test]
    fn sinkhorn_step_rejects_zeros_and_rank_one() {
        let mut z = CMatrix::ones(9);
        z[(2, 5)] = C64::new(0.0, 0.0);
        assert_eq!(sinkhorn_step(&z, 3), Err(Error::ZeroEntry { row: 2, col: 5 }));
        assert!(matches!(
            sinkhorn_step(&CMatrix::ones(9), 3),
            Err(Error::RankDeficient { .. })
        ));
    }

    #[test]
    fn sinkhorn_fixed_point_on_c() {
        let c = named_matrix("c9", &[]).unwrap();
        let next = sinkhorn_step(&c, 3).unwrap();
        assert!(chi(&normalize_entries(&next).unwrap(), 3).unwrap() <= 1e-12);
    }

    #[test]
    fn sinkhorn_is_deterministic() {
        let cfg = SearchConfig {
            max_iters: 3_000,
            restarts: 2,
            seed: 11,
            ..Default::default()
        };
        let a = sinkhorn_search(9, &cfg).unwrap();
        let b = sinkhorn_search(9, &cfg).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_json().to_string(), b.to_json().to_string());
    }

    #[test]
    fn sinkhorn_order_four_never_converges() {
        let cfg = SearchConfig {
            max_iters: 2_000,
            restarts: 3,
            ..Default::default()
        };
        assert!(!sinkhorn_search(4, &cfg).unwrap().converged);
    }
}
