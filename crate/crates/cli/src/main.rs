use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64 as C64;
use serde_json::json;

use chm_core::butson::{self, parse_catalog, LogMatrix, ScanStrategy};
use chm_core::catalog::{self, CatMapParams, KarlssonParam};
use chm_core::classify::{classify, is_k_unitary};
use chm_core::matcore::io::{parse_entry, parse_matrix, write_matrix};
use chm_core::search::{phase_walk, sinkhorn_many, SearchConfig, SearchResult};
use chm_core::{CMatrix, Error, Target, TensorShape, Tolerance};

#[derive(Parser)]
#[command(
    name = "chm",
    version,
    about = "Complex Hadamard matrices: construct, verify, search, scan"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Print a catalog matrix.
    Construct(ConstructArgs),
    /// Classify a matrix and optionally test one property.
    Verify(VerifyArgs),
    /// Run a numerical search.
    Search(SearchArgs),
    /// Apply a strategy to every record of a Butson catalog file.
    Scan(ScanArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Catalog name; `list` prints all names.
    name: String,
    /// Phase parameters in turns, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    params: Vec<f64>,
    /// Order for `fourier` and `cat`.
    #[arg(long)]
    n: Option<usize>,
    /// Karlsson parameter, e.g. `0.3+0.1j`.
    #[arg(long, allow_hyphen_values = true)]
    zeta: Option<String>,
    /// Print exponents in `BH n q` form.
    #[arg(long, conflicts_with = "complex")]
    log: bool,
    /// Print complex entries (default).
    #[arg(long)]
    complex: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyTarget {
    Chm,
    Dual,
    GammaDual,
    SelfDual,
    SelfGammaDual,
    #[value(name = "2u")]
    TwoU,
    Ku,
}

#[derive(Args)]
struct VerifyArgs {
    /// Matrix file; standard input when absent or `-`.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Local dimension.
    #[arg(long)]
    d: usize,
    #[arg(long, value_enum)]
    target: Option<VerifyTarget>,
    /// Number of parties per side for `--target ku`.
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = Tolerance::DEFAULT.eps())]
    tol: f64,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Algorithm {
    Sinkhorn,
    Phasewalk,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(value_enum)]
    algorithm: Algorithm,
    /// Matrix order.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value = "2u")]
    target: String,
    /// Master seed; chosen from the clock and reported when absent.
    #[arg(long)]
    seed: Option<u64>,
    /// Number of consecutive seeds starting at `--seed` (Sinkhorn only).
    #[arg(long, default_value_t = 1)]
    seeds: u64,
    #[arg(long)]
    max_iters: Option<u64>,
    #[arg(long)]
    restarts: Option<u32>,
    #[arg(long)]
    chi_tol: Option<f64>,
    /// Frozen phase indices, comma separated (`0..n` left, `n..2n` right).
    #[arg(long, value_delimiter = ',')]
    freeze: Vec<usize>,
    /// Restrict phases to multiples of 2π/q.
    #[arg(long)]
    quantum: Option<u32>,
    /// Search `D·X·D†` instead of independent diagonals.
    #[arg(long)]
    conjugate: bool,
    /// Input matrix for the phase walk; standard input when absent.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Directory receiving the resulting matrices.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long)]
    file: PathBuf,
    #[arg(long)]
    d: usize,
    /// JSON strategy file.
    #[arg(long)]
    strategy: PathBuf,
    #[arg(long)]
    jobs: Option<usize>,
}

/// Failure carrying its exit code.
struct Fail(u8, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(2, e.to_string())
    }
}

fn usage(msg: impl Into<String>) -> Fail {
    Fail(2, msg.into())
}

type Outcome = Result<bool, Fail>;

fn read_input(file: Option<&Path>) -> Result<String, Fail> {
    match file {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).map_err(|e| usage(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| usage(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

/// Accepts either the complex text format or a single `BH n q` record.
fn read_matrix(file: Option<&Path>) -> Result<CMatrix, Fail> {
    let text = read_input(file)?;
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    if first.is_some_and(|l| l.starts_with("BH")) {
        Ok(butson::parse_log(&text)?.to_complex())
    } else {
        Ok(parse_matrix(&text)?)
    }
}

fn construct(a: ConstructArgs) -> Outcome {
    if a.name == "list" {
        for i in catalog::NAMES {
            println!("{:<14} {} param(s)  {}", i.name, i.arity, i.about);
        }
        println!("{:<14} --n N          Fourier matrix F_N", "fourier");
        println!("{:<14} --n N --params a,b,c  cat map G_N(a,b,c)", "cat");
        println!("{:<14} --zeta z       Karlsson K9(ζ)", "karlsson");
        println!("{:<14} --zeta z       K9(ζ)·P9", "karlsson_p9");
        return Ok(true);
    }
    let need_n = || a.n.ok_or_else(|| usage(format!("`{}` needs --n", a.name)));
    let zeta = || -> Result<KarlssonParam, Fail> {
        let s = a.zeta.as_deref().ok_or_else(|| usage("karlsson needs --zeta"))?;
        let z: C64 = parse_entry(s).ok_or_else(|| usage(format!("bad complex number `{s}`")))?;
        Ok(KarlssonParam::new(z)?)
    };
    let m = match a.name.as_str() {
        "fourier" => catalog::fourier(need_n()?),
        "cat" => {
            let p = &a.params;
            if p.len() != 3 {
                return Err(usage("cat needs --params a,b,c"));
            }
            catalog::cat_map(&CatMapParams::new(need_n()?, p[0], p[1], p[2])?)
        }
        "karlsson" => catalog::karlsson(zeta()?),
        "karlsson_p9" => catalog::karlsson(zeta()?).matmul(&catalog::perm_p9()),
        name => catalog::named_matrix(name, &a.params)?,
    };
    if a.log {
        let log = catalog::named_log(&a.name)
            .or_else(|| (2..=64).find_map(|q| LogMatrix::from_complex(&m, q, Tolerance::DEFAULT)))
            .ok_or_else(|| usage(format!("`{}` has entries that are not roots of unity", a.name)))?;
        print!("{}", log.emit());
    } else {
        print!("{}", write_matrix(&m));
    }
    Ok(true)
}

fn verify(a: VerifyArgs) -> Outcome {
    let tol = Tolerance::new(a.tol)?;
    let x = read_matrix(a.file.as_deref())?;
    if let Some(VerifyTarget::Ku) = a.target {
        let k = a.k.ok_or_else(|| usage("--target ku needs --k"))?;
        let ok = is_k_unitary(&x, TensorShape::new(a.d, k)?, tol)?;
        if a.json {
            println!("{}", json!({"n": x.order(), "d": a.d, "k": k, "k_unitary": ok}));
        } else {
            println!("{k}-unitary: {ok}");
        }
        return Ok(ok);
    }
    let r = classify(&x, a.d, tol)?;
    let f = r.flags;
    let pass = a.target.map(|t| match t {
        VerifyTarget::Chm => f.chm,
        VerifyTarget::Dual => f.r_dual,
        VerifyTarget::GammaDual => f.gamma_dual,
        VerifyTarget::SelfDual => f.self_r_dual,
        VerifyTarget::SelfGammaDual => f.self_gamma_dual,
        VerifyTarget::TwoU => f.two_unitary,
        VerifyTarget::Ku => unreachable!(),
    });
    if a.json {
        println!("{}", r.to_json());
    } else {
        let [s, sr, sg] = r.triple.as_array();
        println!("n = {}, d = {}", r.n, r.d);
        println!("S = ({s:.12}, {sr:.12}, {sg:.12})");
        let butson = f
            .butson_q
            .map(|q| format!("BH({}, {q})", r.n))
            .unwrap_or_else(|| "no".into());
        println!("chm: {}  butson: {butson}", f.chm);
        println!(
            "dual: {}  gamma-dual: {}  2-unitary: {}",
            f.r_dual, f.gamma_dual, f.two_unitary
        );
        println!("self-dual: {}  self-gamma-dual: {}", f.self_r_dual, f.self_gamma_dual);
        if let Some(p) = pass {
            println!("target: {}", if p { "pass" } else { "fail" });
        }
    }
    Ok(pass.unwrap_or(true))
}

fn clock_seed() -> u64 {
    std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_nanos() as u64)
        .unwrap_or(0)
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Fail> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        if j == 0 {
            return Err(usage("--jobs must be positive"));
        }
        b = b.num_threads(j);
    }
    let pool = b.build().map_err(|e| usage(e.to_string()))?;
    Ok(pool.install(f))
}

fn save(out: Option<&Path>, stem: String, r: &mut SearchResult) -> Result<(), Fail> {
    if let Some(dir) = out {
        std::fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
        let path = dir.join(format!("{stem}.txt"));
        std::fs::write(&path, write_matrix(&r.matrix)).map_err(|e| usage(format!("{}: {e}", path.display())))?;
        r.matrix_file = Some(path.display().to_string());
    }
    Ok(())
}

fn search(a: SearchArgs) -> Outcome {
    let target = Target::parse(&a.target).ok_or_else(|| usage(format!("unknown target `{}`", a.target)))?;
    let seed = a.seed.unwrap_or_else(clock_seed);
    let mut cfg = SearchConfig::new(target, seed);
    if let Some(i) = a.max_iters {
        cfg.max_iters = i;
    }
    if let Some(r) = a.restarts {
        cfg.restarts = r;
    }
    if let Some(t) = a.chi_tol {
        cfg.chi_tol = t;
    }
    cfg.frozen = a.freeze.clone();
    cfg.quantum = a.quantum;
    cfg.conjugate = a.conjugate;
    cfg.validate()?;
    let mut results = match a.algorithm {
        Algorithm::Sinkhorn => {
            let n = a.n.ok_or_else(|| usage("sinkhorn needs --n"))?;
            if target != Target::TwoUnitary {
                return Err(usage("sinkhorn searches for 2-unitary matrices only; use --target 2u"));
            }
            if a.seeds == 0 {
                return Err(usage("--seeds must be positive"));
            }
            let seeds: Vec<u64> = (0..a.seeds).map(|i| seed.wrapping_add(i)).collect();
            with_pool(a.jobs, || sinkhorn_many(n, &cfg, &seeds))??
        }
        Algorithm::Phasewalk => {
            let x = read_matrix(a.file.as_deref())?;
            if a.n.is_some_and(|n| n != x.order()) {
                return Err(usage(format!(
                    "--n {} does not match input order {}",
                    a.n.unwrap(),
                    x.order()
                )));
            }
            let d = (x.order() as f64).sqrt().round() as usize;
            vec![phase_walk(&x, d, &cfg)?]
        }
    };
    let kind = if a.algorithm == Algorithm::Sinkhorn {
        "sinkhorn"
    } else {
        "phasewalk"
    };
    let mut any = false;
    for r in &mut results {
        save(
            a.out.as_deref(),
            format!("{kind}-n{}-seed{}", r.matrix.order(), r.seed),
            r,
        )?;
        any |= r.converged;
        println!("{}", r.to_json());
    }
    Ok(any)
}

fn scan(a: ScanArgs) -> Outcome {
    let text = read_input(Some(&a.file))?;
    let records = parse_catalog(&text)?;
    let s = std::fs::read_to_string(&a.strategy).map_err(|e| usage(format!("{}: {e}", a.strategy.display())))?;
    let strategy = ScanStrategy::from_json(&s)?;
    let report = with_pool(a.jobs, || butson::scan(&records, a.d, &strategy))?;
    for r in &report {
        println!("{}", r.to_json_line());
    }
    Ok(report.iter().any(|r| r.hit))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match cli.verb {
        Verb::Construct(a) => construct(a),
        Verb::Verify(a) => verify(a),
        Verb::Search(a) => search(a),
        Verb::Scan(a) => scan(a),
    };
    match out {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
