//! Batch front-end: parse inputs, dispatch analyses, emit JSON and CSV
//! artifacts. The `cislab` binary is a thin argument parser over [`run`].

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;
use sha2::{Digest, Sha256};

use crate::curve::{
    build_symbol_curve, curve_index, curve_min_modulus, numeric_winding_adaptive, write_curve_csv,
};
use crate::error::{Error, Result};
use crate::interval::IntervalQ;
use crate::lerch::{write_heatmap_csv, zero_free_scan};
use crate::operator::{
    cis_classify_spline, reconstruct_experiment, spline_symbol_samples, toeplitz_section,
    Generator, NotCisReason, SplineConfig, Verdict,
};
use crate::poly::zero_split;
use crate::rational::Rat;
use crate::spline::{gm_poly, gm_poly_f};
use crate::transversal::{
    admissible_region, congruence_decompose, index_formula, validate_transversal, Alpha,
    TransversalSet,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// One batch command with its parameters.
#[derive(Clone, Debug)]
pub enum Command {
    TransversalAnalyze {
        input: PathBuf,
    },
    Winding {
        input: PathBuf,
        alpha: String,
        samples: usize,
    },
    SplineCis {
        m: u32,
        alpha: f64,
    },
    Gm {
        m: u32,
        beta: String,
    },
    Zeros {
        m: u32,
        beta: f64,
    },
    LerchScan {
        m: u32,
        grid: usize,
    },
    ToeplitzSweep {
        m: u32,
        alpha: f64,
        sections: Vec<usize>,
        grid: usize,
    },
    Reconstruct {
        generator_m: Option<u32>,
        input: Option<PathBuf>,
        alpha: f64,
        sections: Vec<usize>,
        seed: u64,
    },
}

/// A command plus its output destinations and parallelism.
#[derive(Clone, Debug)]
pub struct JobSpec {
    pub command: Command,
    /// JSON report destination.
    pub output: PathBuf,
    /// Optional CSV plot-data destination.
    pub csv: Option<PathBuf>,
    /// Worker threads for grid and section fan-out; 0 picks the default.
    pub jobs: usize,
}

fn digest_bytes(bytes: &[u8]) -> String {
    let hash = Sha256::digest(bytes);
    hash.iter().map(|b| format!("{b:02x}")).collect()
}

fn read_input(path: &Path) -> Result<(Vec<u8>, String)> {
    let bytes = fs::read(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    let digest = digest_bytes(&bytes);
    Ok((bytes, digest))
}

#[derive(Deserialize)]
struct SetInput {
    intervals: Vec<IntervalQ>,
}

fn parse_set(path: &Path) -> Result<(TransversalSet, String)> {
    let (bytes, digest) = read_input(path)?;
    let input: SetInput = serde_json::from_slice(&bytes).map_err(|e| Error::Json {
        path: path.display().to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    Ok((validate_transversal(input.intervals)?, digest))
}

fn write_file(path: &Path, contents: &[u8]) -> Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent).map_err(|source| Error::Io {
                path: parent.display().to_string(),
                source,
            })?;
        }
    }
    fs::write(path, contents).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write_json(path: &Path, value: &serde_json::Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    write_file(path, text.as_bytes())
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs == 0 {
        return f();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool")
        .install(f)
}

fn require(ok: bool, message: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidArgument(message.into()))
    }
}

/// Executes the job and writes its artifacts. Output is byte-for-byte
/// deterministic for a fixed spec and seed.
pub fn run(spec: &JobSpec) -> Result<()> {
    match &spec.command {
        Command::TransversalAnalyze { input } => {
            let (set, digest) = parse_set(input)?;
            let cd = congruence_decompose(&set);
            let region = admissible_region(&cd)?;
            let mut report = serde_json::to_value(&region).expect("serializable");
            let extra = json!({
                "version": VERSION,
                "input_digest": digest,
                "command": "transversal-analyze",
                "pieces": set.pieces().len(),
                "nu": cd.nu,
                "rho": cd.rho,
                "lambda": cd.lambda,
            });
            for (key, value) in extra.as_object().unwrap() {
                report[key] = value.clone();
            }
            write_json(&spec.output, &report)
        }
        Command::Winding {
            input,
            alpha,
            samples,
        } => {
            let (set, digest) = parse_set(input)?;
            let cd = congruence_decompose(&set);
            let (alpha_arg, alpha_f64, alpha_text) = match Rat::from_str(alpha) {
                Ok(r) => {
                    let x = r.to_f64();
                    (Alpha::Exact(r.clone()), x, r.to_string())
                }
                Err(_) => {
                    let x: f64 = alpha.parse().map_err(|_| {
                        Error::InvalidArgument(format!("cannot parse shift {alpha:?}"))
                    })?;
                    (Alpha::Float(x), x, alpha.clone())
                }
            };
            let index = index_formula(&cd, alpha_arg)?;
            let curve = build_symbol_curve(&cd, alpha_f64);
            let closed = curve_index(&curve)?;
            let numeric = numeric_winding_adaptive(&curve)?;
            if let Some(csv) = &spec.csv {
                let mut buf = Vec::new();
                write_curve_csv(&curve, (*samples).max(8), &mut buf).map_err(|source| {
                    Error::Io {
                        path: csv.display().to_string(),
                        source,
                    }
                })?;
                write_file(csv, &buf)?;
            }
            let report = json!({
                "version": VERSION,
                "input_digest": digest,
                "command": "winding",
                "alpha": alpha_text,
                "index": index,
                "curve_index": closed,
                "numeric_index": numeric,
                "min_modulus": curve_min_modulus(&curve),
                "closure_defect": curve.closure_defect(),
            });
            write_json(&spec.output, &report)
        }
        Command::SplineCis { m, alpha } => {
            require(*m >= 2, "spline order must be at least 2")?;
            let cfg = SplineConfig::new(*m, *alpha);
            let verdict = cis_classify_spline(&cfg)?;
            let digest = digest_bytes(format!("spline-cis m={m} alpha={alpha}").as_bytes());
            let mut report = json!({
                "version": VERSION,
                "input_digest": digest,
                "command": "spline-cis",
                "m": m,
                "alpha": alpha,
            });
            match verdict {
                Verdict::Cis => {
                    report["verdict"] = json!("CIS");
                }
                Verdict::NotCis(reason) => {
                    report["verdict"] = json!("NotCIS");
                    match reason {
                        NotCisReason::SymbolVanishes => {
                            report["reason"] = json!("SymbolVanishes");
                        }
                        NotCisReason::NonzeroIndex(k) => {
                            report["reason"] = json!("NonzeroIndex");
                            report["index"] = json!(k);
                        }
                    }
                }
            }
            write_json(&spec.output, &report)
        }
        Command::Gm { m, beta } => {
            require(*m >= 1, "the polynomial family starts at order 1")?;
            let digest = digest_bytes(format!("gm m={m} beta={beta}").as_bytes());
            let report = match Rat::from_str(beta) {
                Ok(b) => {
                    let poly = gm_poly(*m, &b);
                    json!({
                        "version": VERSION,
                        "input_digest": digest,
                        "command": "gm",
                        "m": m,
                        "beta": b.to_string(),
                        "exact": true,
                        "coeffs": poly.coeffs(),
                    })
                }
                Err(_) => {
                    let b: f64 = beta.parse().map_err(|_| {
                        Error::InvalidArgument(format!("cannot parse beta {beta:?}"))
                    })?;
                    let poly = gm_poly_f(*m, b);
                    json!({
                        "version": VERSION,
                        "input_digest": digest,
                        "command": "gm",
                        "m": m,
                        "beta": b,
                        "exact": false,
                        "coeffs": poly.coeffs(),
                    })
                }
            };
            write_json(&spec.output, &report)
        }
        Command::Zeros { m, beta } => {
            require(*m >= 2, "a degree-0 member has no zeros to split")?;
            let split = zero_split(&gm_poly_f(*m, *beta))?;
            let digest = digest_bytes(format!("zeros m={m} beta={beta}").as_bytes());
            let report = json!({
                "version": VERSION,
                "input_digest": digest,
                "command": "zeros",
                "m": m,
                "beta": beta,
                "split": split,
            });
            write_json(&spec.output, &report)
        }
        Command::LerchScan { m, grid } => {
            require(*m >= 2, "the doubly infinite sum needs m >= 2")?;
            require(*grid >= 32, "scan grids below 32 are too coarse")?;
            let report = zero_free_scan(*m, *grid, *grid);
            if let Some(csv) = &spec.csv {
                let mut buf = Vec::new();
                write_heatmap_csv(*m, *grid, *grid, &mut buf).map_err(|source| Error::Io {
                    path: csv.display().to_string(),
                    source,
                })?;
                write_file(csv, &buf)?;
            }
            let digest = digest_bytes(format!("lerch-scan m={m} grid={grid}").as_bytes());
            let out = json!({
                "version": VERSION,
                "input_digest": digest,
                "command": "lerch-scan",
                "m": m,
                "lambda_grid": grid,
                "x_grid": grid,
                "min_abs": report.min_abs,
                "argmin": {"lambda": report.lambda, "x": report.x},
            });
            write_json(&spec.output, &out)
        }
        Command::ToeplitzSweep {
            m,
            alpha,
            sections,
            grid,
        } => {
            require(*m >= 2, "spline order must be at least 2")?;
            require(!sections.is_empty(), "no section sizes given")?;
            let cfg = SplineConfig::new(*m, *alpha);
            let needed = sections.iter().copied().max().unwrap_or(4) * 4;
            let grid = (*grid).max(needed).next_power_of_two();
            let samples = spline_symbol_samples(&cfg, grid)?;
            let reports: Result<Vec<_>> = with_pool(spec.jobs, || {
                sections
                    .par_iter()
                    .map(|&n| toeplitz_section(&samples, n))
                    .collect()
            });
            let reports = reports?;
            if let Some(csv) = &spec.csv {
                let mut buf = Vec::new();
                writeln!(buf, "N,singular_min,singular_max,cond").unwrap();
                for r in &reports {
                    writeln!(
                        buf,
                        "{},{},{},{}",
                        r.n, r.singular_min, r.singular_max, r.cond
                    )
                    .unwrap();
                }
                write_file(csv, &buf)?;
            }
            let digest = digest_bytes(
                format!("toeplitz-sweep m={m} alpha={alpha} sections={sections:?} grid={grid}")
                    .as_bytes(),
            );
            let out = json!({
                "version": VERSION,
                "input_digest": digest,
                "command": "toeplitz-sweep",
                "m": m,
                "alpha": alpha,
                "N": reports.iter().map(|r| r.n).collect::<Vec<_>>(),
                "singular_min": reports.iter().map(|r| r.singular_min).collect::<Vec<_>>(),
                "singular_max": reports.iter().map(|r| r.singular_max).collect::<Vec<_>>(),
                "cond": reports.iter().map(|r| r.cond).collect::<Vec<_>>(),
            });
            write_json(&spec.output, &out)
        }
        Command::Reconstruct {
            generator_m,
            input,
            alpha,
            sections,
            seed,
        } => {
            let (generator, label, digest) = match (generator_m, input) {
                (Some(m), None) => (
                    Generator::Spline(*m),
                    format!("spline-{m}"),
                    digest_bytes(format!("reconstruct m={m} alpha={alpha} seed={seed}").as_bytes()),
                ),
                (None, Some(path)) => {
                    let (set, digest) = parse_set(path)?;
                    (
                        Generator::Transversal(set),
                        "transversal".to_string(),
                        digest,
                    )
                }
                _ => {
                    return Err(Error::InvalidArgument(
                        "reconstruct needs exactly one of --m or --input".into(),
                    ))
                }
            };
            require(!sections.is_empty(), "no section sizes given")?;
            let reports: Result<Vec<_>> = with_pool(spec.jobs, || {
                sections
                    .par_iter()
                    .map(|&n| reconstruct_experiment(&generator, *alpha, n, *seed))
                    .collect()
            });
            let reports = reports?;
            let out = json!({
                "version": VERSION,
                "input_digest": digest,
                "command": "reconstruct",
                "generator": label,
                "alpha": alpha,
                "seed": seed,
                "N": reports.iter().map(|r| r.n).collect::<Vec<_>>(),
                "cond": reports.iter().map(|r| r.cond).collect::<Vec<_>>(),
                "recon_error": reports.iter().map(|r| r.max_error).collect::<Vec<_>>(),
                "inner_error": reports.iter().map(|r| r.inner_error).collect::<Vec<_>>(),
                "residual": reports.iter().map(|r| r.residual).collect::<Vec<_>>(),
            });
            write_json(&spec.output, &out)
        }
    }
}

/// Writes the canonical JSON form of a transversal set, the format
/// `transversal-analyze` and `winding` read back.
pub fn write_set_json(path: &Path, set: &[IntervalQ]) -> Result<()> {
    #[derive(Serialize)]
    struct SetOutput<'a> {
        intervals: &'a [IntervalQ],
    }
    let value = serde_json::to_value(SetOutput { intervals: set }).expect("serializable");
    write_json(path, &value)
}
