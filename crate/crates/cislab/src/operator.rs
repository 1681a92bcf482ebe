//! Interpolation operators for spline and transversal generators: the
//! fundamental interpolant, the Toeplitz symbol of the shifted sample set,
//! its index by zero/pole counting, and finite-section experiments.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rustfft::FftPlanner;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{zero_split, PolyF};
use crate::spline::{bspline_eval, euler_frobenius, gm_poly_f, modified_euler_frobenius};
use crate::transversal::TransversalSet;

const TAU: f64 = 2.0 * PI;

/// Lattice offset of the spline generator: 0 for even order, 1/2 for odd.
pub fn lattice_offset(m: u32) -> f64 {
    if m % 2 == 0 {
        0.0
    } else {
        0.5
    }
}

/// Spline space of order m sampled on `offset + N0  ∪  alpha + offset + N^-`.
#[derive(Clone, Copy, Debug)]
pub struct SplineConfig {
    pub m: u32,
    pub alpha: f64,
}

impl SplineConfig {
    pub fn new(m: u32, alpha: f64) -> Self {
        assert!(m >= 2);
        SplineConfig { m, alpha }
    }

    pub fn offset(&self) -> f64 {
        lattice_offset(self.m)
    }
}

/// Symbol of the integer-lattice samples: sum_n Q_m(a + n) e^{2 pi i n x},
/// by the direct B-spline sum. Asserted against the Euler-Frobenius closed form.
pub fn psi_dagger(m: u32, x: f64) -> Complex64 {
    let a = lattice_offset(m);
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 0..=(m as i64) {
        let q = bspline_eval(m, a + n as f64);
        if q != 0.0 {
            sum += Complex64::from_polar(1.0, TAU * n as f64 * x) * q;
        }
    }
    assert!(
        (sum - psi_dagger_closed(m, x)).norm() < 1e-9,
        "lattice symbol routes disagree at m={m}, x={x}"
    );
    sum
}

/// The same symbol through Euler-Frobenius polynomials:
/// z Pi_{m-1}(z)/(m-1)! for even m and MPi_{m-1}(z)/(2^{m-1} (m-1)!) for odd m,
/// with z = e^{2 pi i x}.
pub fn psi_dagger_closed(m: u32, x: f64) -> Complex64 {
    let z = Complex64::from_polar(1.0, TAU * x);
    if m % 2 == 0 {
        z * euler_frobenius(m - 1).to_float().eval_complex(z) / factorial(m - 1)
    } else {
        modified_euler_frobenius(m - 1).to_float().eval_complex(z)
            / (2f64.powi(m as i32 - 1) * factorial(m - 1))
    }
}

fn factorial(n: u32) -> f64 {
    (1..=n as u64).product::<u64>() as f64
}

/// Fourier coefficients of 1/psi_dagger, the coordinates of the fundamental
/// interpolant over the B-spline translates.
#[derive(Clone, Debug)]
pub struct ThetaTable {
    pub m: u32,
    /// Coefficients c_v for v in [-k, k], stored at index v + k.
    pub coeffs: Vec<f64>,
    pub k: usize,
    /// Fitted geometric decay rate r < 1.
    pub decay_rate: f64,
    /// Envelope constant: |c_v| <= decay_bound * decay_rate^|v|.
    pub decay_bound: f64,
    /// Aliasing estimate for the grid used.
    pub aliasing_bound: f64,
}

impl ThetaTable {
    pub fn coeff(&self, v: i64) -> f64 {
        let idx = v + self.k as i64;
        if (0..self.coeffs.len() as i64).contains(&idx) {
            self.coeffs[idx as usize]
        } else {
            0.0
        }
    }
}

/// Computes the centered Fourier coefficients of 1/psi_dagger on a power-of-two
/// grid. `grid` must be at least max(4k, 1024).
pub fn theta_coeffs(m: u32, k: usize, grid: usize) -> Result<ThetaTable> {
    if grid < (4 * k).max(1024) || !grid.is_power_of_two() {
        return Err(Error::InvalidArgument(format!(
            "grid {grid} must be a power of two at least max(4k, 1024)"
        )));
    }
    let mut samples: Vec<rustfft::num_complex::Complex<f64>> = Vec::with_capacity(grid);
    let mut min_modulus = f64::INFINITY;
    for j in 0..grid {
        let x = j as f64 / grid as f64;
        let value = psi_dagger(m, x);
        min_modulus = min_modulus.min(value.norm());
        let inv = 1.0 / value;
        samples.push(rustfft::num_complex::Complex::new(inv.re, inv.im));
    }
    if min_modulus < 1e-8 {
        return Err(Error::NearSingularSymbol { min_modulus });
    }
    FftPlanner::new()
        .plan_fft_forward(grid)
        .process(&mut samples);

    let mut coeffs = vec![0.0f64; 2 * k + 1];
    for v in -(k as i64)..=(k as i64) {
        let idx = v.rem_euclid(grid as i64) as usize;
        let c = samples[idx] / grid as f64;
        debug_assert!(c.im.abs() < 1e-9, "coefficients of 1/psi_dagger are real");
        coeffs[(v + k as i64) as usize] = c.re;
    }

    // fit |c_v| ~ C r^{|v|} on the coefficients that stand above the
    // transform's noise floor; the envelope is only claimed down to there
    let max_coeff = coeffs.iter().fold(0.0f64, |a, &c| a.max(c.abs()));
    let noise_floor = max_coeff * 1e-13;
    let mut pts: Vec<(f64, f64)> = Vec::new();
    for v in -(k as i64)..=(k as i64) {
        let c = coeffs[(v + k as i64) as usize].abs();
        if v.abs() >= 2 && c > noise_floor {
            pts.push((v.abs() as f64, c.ln()));
        }
    }
    let decay_rate = if pts.len() >= 3 {
        let n = pts.len() as f64;
        let sx: f64 = pts.iter().map(|p| p.0).sum();
        let sy: f64 = pts.iter().map(|p| p.1).sum();
        let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
        let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
        ((n * sxy - sx * sy) / (n * sxx - sx * sx))
            .exp()
            .clamp(1e-6, 0.999999)
    } else {
        // the inverse symbol was (numerically) a monomial
        1e-6
    };
    let mut decay_bound = max_coeff;
    for v in -(k as i64)..=(k as i64) {
        let c = coeffs[(v + k as i64) as usize].abs();
        if c > noise_floor {
            decay_bound = decay_bound.max(c / decay_rate.powi(v.abs() as i32));
        }
    }
    let aliasing_bound = decay_bound * decay_rate.powi((grid - k) as i32) / (1.0 - decay_rate);

    Ok(ThetaTable {
        m,
        coeffs,
        k,
        decay_rate,
        decay_bound,
        aliasing_bound,
    })
}

/// Fundamental interpolant at x: sum_v c_v Q_m(x - v), truncated to the table.
/// Only arguments with |x| <= k - m are truncation-safe.
pub fn theta_eval(table: &ThetaTable, x: f64) -> Result<f64> {
    let window = table.k as f64 - table.m as f64;
    if x.abs() > window {
        return Err(Error::Window { x, window });
    }
    let mut sum = 0.0;
    let lo = (x - table.m as f64).ceil() as i64;
    let hi = x.floor() as i64;
    for v in lo..=hi {
        let q = bspline_eval(table.m, x - v as f64);
        if q != 0.0 {
            sum += table.coeff(v) * q;
        }
    }
    Ok(sum)
}

/// The symbol of the shifted spline lattice, prebuilt for repeated
/// evaluation: a polynomial over an Euler-Frobenius denominator and an
/// integer power of z carrying the shift, as a function of z = e^{2 pi i x}.
#[derive(Clone, Debug)]
pub struct SplineSymbol {
    numerator: PolyF,
    denominator: PolyF,
    exponent: i64,
    scale: f64,
}

impl SplineSymbol {
    pub fn build(cfg: &SplineConfig) -> Result<Self> {
        let m = cfg.m;
        let alpha = cfg.alpha;
        let alpha0 = alpha - alpha.floor();
        if m % 2 == 0 {
            Ok(SplineSymbol {
                numerator: gm_poly_f(m, alpha0),
                denominator: euler_frobenius(m - 1).to_float(),
                exponent: alpha.floor() as i64 + 1,
                scale: 1.0,
            })
        } else {
            let alpha1 = {
                let t = alpha0 + 0.5;
                t - t.floor()
            };
            let expected = alpha.floor() as i64 + (alpha0 + 0.5).floor() as i64;
            let raw = alpha - alpha1 + 0.5;
            if (raw - expected as f64).abs() > 1e-9 {
                return Err(Error::NonIntegerExponent {
                    value: raw,
                    expected,
                });
            }
            Ok(SplineSymbol {
                numerator: gm_poly_f(m, alpha1),
                denominator: modified_euler_frobenius(m - 1).to_float(),
                exponent: expected,
                scale: -(2f64.powi(m as i32 - 1)),
            })
        }
    }

    pub fn eval(&self, x: f64) -> Complex64 {
        let z = Complex64::from_polar(1.0, TAU * x);
        self.numerator.eval_complex(z) * self.scale
            / (z.powi(self.exponent as i32) * self.denominator.eval_complex(z))
    }

    /// Index by zero and pole counting inside the unit circle.
    pub fn counted_index(&self) -> Result<i64> {
        let zeros = zero_split(&self.numerator)?.inside as i64;
        let poles = zero_split(&self.denominator)?.inside as i64;
        Ok(zeros - poles - self.exponent)
    }

    /// Index by winding of a dense sampling, doubling the grid as needed.
    pub fn sampled_index(&self) -> Result<i64> {
        let mut grid = 2048;
        loop {
            let samples: Vec<Complex64> = (0..grid)
                .map(|j| self.eval(j as f64 / grid as f64))
                .collect();
            match crate::curve::winding_from_samples(&samples) {
                Ok(w) => return Ok(w),
                Err(Error::Undersampled { .. }) if grid < 1 << 16 => grid *= 2,
                Err(e) => return Err(e),
            }
        }
    }
}

/// Symbol value at a single point; see [`SplineSymbol`] for repeated use.
pub fn spline_symbol(cfg: &SplineConfig, x: f64) -> Result<Complex64> {
    Ok(SplineSymbol::build(cfg)?.eval(x))
}

/// Index of the spline symbol by zero and pole counting inside the unit
/// circle, cross-checked against a sampled winding of the symbol itself.
pub fn spline_index(cfg: &SplineConfig) -> Result<i64> {
    let alpha0 = cfg.alpha - cfg.alpha.floor();
    if (alpha0 - 0.5).abs() < 1e-12 {
        return Err(Error::HalfIntegerAlpha);
    }
    let symbol = SplineSymbol::build(cfg)?;
    let index = symbol.counted_index()?;
    let sampled = symbol.sampled_index()?;
    if sampled != index {
        return Err(Error::NonIntegerIndex {
            value: index as f64 - sampled as f64,
        });
    }
    Ok(index)
}

/// Why a configuration fails to interpolate completely.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NotCisReason {
    /// The symbol vanishes somewhere on [0, 1].
    SymbolVanishes,
    /// The symbol is zero-free but winds around the origin.
    NonzeroIndex(i64),
}

/// Classification verdict for a sample-set configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Cis,
    NotCis(NotCisReason),
}

impl Verdict {
    pub fn is_cis(&self) -> bool {
        matches!(self, Verdict::Cis)
    }
}

/// Complete-interpolation classification of the shifted spline lattice: the
/// verdict is `Cis` exactly when the symbol is zero-free and has index zero.
pub fn cis_classify_spline(cfg: &SplineConfig) -> Result<Verdict> {
    let alpha0 = cfg.alpha - cfg.alpha.floor();
    if (alpha0 - 0.5).abs() < 1e-12 {
        return Ok(Verdict::NotCis(NotCisReason::SymbolVanishes));
    }
    let symbol = SplineSymbol::build(cfg)?;
    let grid = 1024;
    let mut min_modulus = f64::INFINITY;
    for j in 0..=grid {
        min_modulus = min_modulus.min(symbol.eval(j as f64 / grid as f64).norm());
    }
    if min_modulus <= 0.0 {
        return Ok(Verdict::NotCis(NotCisReason::SymbolVanishes));
    }
    let index = symbol.counted_index()?;
    let sampled = symbol.sampled_index()?;
    if sampled != index {
        return Err(Error::NonIntegerIndex {
            value: index as f64 - sampled as f64,
        });
    }
    if index != 0 {
        return Ok(Verdict::NotCis(NotCisReason::NonzeroIndex(index)));
    }
    Ok(Verdict::Cis)
}

/// Singular-value summary of one finite section.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct SectionReport {
    pub n: usize,
    pub singular_min: f64,
    pub singular_max: f64,
    pub cond: f64,
}

/// Builds the N x N Toeplitz finite section whose (r, c) entry is the
/// (r - c)-th Fourier coefficient of the sampled symbol, and reports its
/// extreme singular values.
pub fn toeplitz_section(symbol_samples: &[Complex64], n: usize) -> Result<SectionReport> {
    if n < 4 {
        return Err(Error::InvalidArgument("section size must be >= 4".into()));
    }
    if symbol_samples.len() < 4 * n {
        return Err(Error::InvalidArgument(format!(
            "need at least {} symbol samples for N = {n}",
            4 * n
        )));
    }
    let grid = symbol_samples.len();
    let mut buf: Vec<rustfft::num_complex::Complex<f64>> = symbol_samples
        .iter()
        .map(|z| rustfft::num_complex::Complex::new(z.re, z.im))
        .collect();
    FftPlanner::new().plan_fft_forward(grid).process(&mut buf);
    let coeff = |k: i64| -> Complex64 {
        let idx = k.rem_euclid(grid as i64) as usize;
        Complex64::new(buf[idx].re, buf[idx].im) / grid as f64
    };
    let matrix = DMatrix::<Complex64>::from_fn(n, n, |r, c| coeff(r as i64 - c as i64));
    let svd = matrix.svd(false, false);
    let singular_max = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let singular_min = svd
        .singular_values
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min);
    Ok(SectionReport {
        n,
        singular_min,
        singular_max,
        cond: if singular_min > 0.0 {
            singular_max / singular_min
        } else {
            f64::INFINITY
        },
    })
}

/// Samples the spline symbol on a uniform grid, ready for sectioning.
pub fn spline_symbol_samples(cfg: &SplineConfig, grid: usize) -> Result<Vec<Complex64>> {
    let symbol = SplineSymbol::build(cfg)?;
    Ok((0..grid)
        .map(|j| symbol.eval(j as f64 / grid as f64))
        .collect())
}

/// What generates the space in a reconstruction experiment.
#[derive(Clone, Debug)]
pub enum Generator {
    /// B-spline of order m on its natural lattice offset.
    Spline(u32),
    /// Inverse transform of the indicator of a one-transversal set.
    Transversal(TransversalSet),
}

/// Outcome of one truncated reconstruction.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ReconReport {
    pub n: usize,
    pub seed: u64,
    pub cond: f64,
    /// max |recovered - true| over the full window of unknowns
    pub max_error: f64,
    /// max error over the inner half window |k| <= N/2
    pub inner_error: f64,
    pub residual: f64,
}

/// Interpolant value for a transversal generator: the inverse transform of
/// the indicator, a finite combination of complex exponential kernels.
fn transversal_interpolant(set: &TransversalSet, x: f64) -> Complex64 {
    if x.abs() < 1e-12 {
        // total length is one
        return Complex64::new(1.0, 0.0);
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for piece in set.pieces() {
        let hi = piece.hi.to_f64();
        let lo = piece.lo.to_f64();
        sum += (Complex64::from_polar(1.0, TAU * hi * x)
            - Complex64::from_polar(1.0, TAU * lo * x))
            / Complex64::new(0.0, TAU * x);
    }
    sum
}

/// Synthesizes samples from seeded coefficients on a widened window (the extra
/// `BOUNDARY_BUFFER` coefficients model the part of the signal the truncated
/// system cannot see), solves the truncated system by least squares, and
/// reports recovery errors over the full and inner windows.
pub fn reconstruct_experiment(
    generator: &Generator,
    alpha: f64,
    n: usize,
    seed: u64,
) -> Result<ReconReport> {
    const BOUNDARY_BUFFER: i64 = 24;
    if !(4..=512).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "window half-width {n} outside 4..=512"
        )));
    }
    if alpha.abs() > 3.0 {
        return Err(Error::InvalidArgument(format!(
            "shift {alpha} outside the supported range |alpha| <= 3"
        )));
    }
    let n_i = n as i64;
    let wide = n_i + BOUNDARY_BUFFER;

    // interpolant lookup per generator
    let theta: Box<dyn Fn(f64) -> Complex64> = match generator {
        Generator::Spline(m) => {
            let m = *m;
            let k = (2 * n_i + BOUNDARY_BUFFER) as usize + m as usize + 8;
            let grid = (4 * k).max(1024).next_power_of_two();
            let table = theta_coeffs(m, k, grid)?;
            Box::new(move |x: f64| Complex64::new(theta_eval(&table, x).unwrap(), 0.0))
        }
        Generator::Transversal(set) => {
            let set = set.clone();
            Box::new(move |x: f64| transversal_interpolant(&set, x))
        }
    };
    let offset = match generator {
        Generator::Spline(m) => lattice_offset(*m),
        Generator::Transversal(_) => 0.0,
    };

    // rows: sample points; columns: unknown coefficients in [-N, N]
    let rows = (2 * n_i + 1) as usize;
    let sample_point = |row: i64| -> f64 {
        // rows -N..-1 sit on the shifted branch, rows 0..N on the plain one
        if row < 0 {
            alpha + offset + row as f64
        } else {
            offset + row as f64
        }
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let truth: Vec<f64> = (0..(2 * wide + 1))
        .map(|_| rng.gen_range(-1.0..1.0))
        .collect();
    let coeff_at = |k: i64| truth[(k + wide) as usize];

    let mut rhs = DMatrix::<Complex64>::zeros(rows, 1);
    for (ri, row) in (-n_i..=n_i).enumerate() {
        let point = sample_point(row);
        let mut acc = Complex64::new(0.0, 0.0);
        for k in -wide..=wide {
            let t = theta(point - k as f64);
            if t.norm() != 0.0 {
                acc += t * coeff_at(k);
            }
        }
        rhs[(ri, 0)] = acc;
    }
    let matrix = DMatrix::<Complex64>::from_fn(rows, rows, |r, c| {
        theta(sample_point(r as i64 - n_i) - (c as i64 - n_i) as f64)
    });

    let svd = matrix.clone().svd(true, true);
    let singular_max = svd.singular_values.iter().cloned().fold(0.0, f64::max);
    let singular_min = svd
        .singular_values
        .iter()
        .cloned()
        .fold(f64::INFINITY, f64::min);
    let cond = if singular_min > 1e-300 {
        singular_max / singular_min
    } else {
        f64::INFINITY
    };
    let solution = svd
        .solve(&rhs, singular_max * 1e-13)
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;

    let residual = (&matrix * &solution - &rhs).norm();
    let mut max_error = 0.0f64;
    let mut inner_error = 0.0f64;
    for (ci, k) in (-n_i..=n_i).enumerate() {
        let err = (solution[(ci, 0)] - Complex64::new(coeff_at(k), 0.0)).norm();
        max_error = max_error.max(err);
        if 2 * k.abs() <= n_i {
            inner_error = inner_error.max(err);
        }
    }
    Ok(ReconReport {
        n,
        seed,
        cond,
        max_error,
        inner_error,
        residual,
    })
}
