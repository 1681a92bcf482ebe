//! Lerch zeta sums along three independent routes.
//!
//! The doubly infinite sum H(lambda, x, m) = sum_n e^{2 pi i lambda n} / (n - x)^m
//! is computed (a) by symmetric truncation, (b) through cotangent derivatives
//! expanded with the Leibniz rule, and (c) through the exponential-spline
//! polynomial G_m. Route (c) is the one whose zero-freeness the scan probes.

use std::f64::consts::PI;
use std::io::Write;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::special::{binomial, cot_poly};
use crate::spline::gm_poly_f;

/// A truncated series value together with its tail bound.
#[derive(Clone, Copy, Debug)]
pub struct SeriesValue {
    pub value: Complex64,
    pub tail_bound: f64,
}

/// One-sided Lerch zeta L(lambda, b, s) = sum_{n >= 0} e^{2 pi i lambda n} / (n + b)^s,
/// truncated after `terms` terms.
pub fn lerch_l(lambda: f64, b: Complex64, s: u32, terms: usize) -> Result<SeriesValue> {
    assert!(s >= 2, "absolute convergence needs s >= 2");
    assert!(terms >= 2);
    if b.im == 0.0 && b.re <= 0.0 && (b.re - b.re.round()).abs() < 1e-12 {
        return Err(Error::Pole { b: b.to_string() });
    }
    let rotation = Complex64::from_polar(1.0, 2.0 * PI * lambda);
    let mut phase = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 0..terms {
        let base = b + n as f64;
        sum += phase / base.powu(s);
        phase *= rotation;
    }
    let tail_bound = (terms as f64).powi(1 - s as i32) / (s as f64 - 1.0);
    Ok(SeriesValue {
        value: sum,
        tail_bound,
    })
}

/// Query for the doubly infinite sum.
#[derive(Clone, Copy, Debug)]
pub struct LerchQuery {
    /// Frequency in [0, 1).
    pub lambda: f64,
    /// Evaluation point, not an integer.
    pub x: f64,
    /// Power m >= 2.
    pub m: u32,
    /// Symmetric truncation half-width for the series route.
    pub terms: usize,
}

impl LerchQuery {
    fn check(&self) -> Result<()> {
        assert!(self.m >= 2);
        assert!((0.0..1.0).contains(&self.lambda));
        if (self.x - self.x.round()).abs() < 1e-12 {
            return Err(Error::IntegerPole { x: self.x });
        }
        Ok(())
    }
}

/// Route (a): symmetric truncation of the defining series.
pub fn h_series(q: &LerchQuery) -> Result<SeriesValue> {
    q.check()?;
    let t = q.terms.max(2);
    let rotation = Complex64::from_polar(1.0, 2.0 * PI * q.lambda);
    let mut sum = Complex64::new(0.0, 0.0);
    // n = 0
    sum += Complex64::new(-q.x, 0.0).powi(-(q.m as i32));
    let mut phase_pos = Complex64::new(1.0, 0.0);
    let mut phase_neg = Complex64::new(1.0, 0.0);
    for n in 1..=t {
        phase_pos *= rotation;
        phase_neg *= rotation.conj();
        sum += phase_pos * Complex64::new(n as f64 - q.x, 0.0).powi(-(q.m as i32));
        sum += phase_neg * Complex64::new(-(n as f64) - q.x, 0.0).powi(-(q.m as i32));
    }
    let tail_bound = 2.0 * (t as f64).powi(1 - q.m as i32) / (q.m as f64 - 1.0);
    Ok(SeriesValue {
        value: sum,
        tail_bound,
    })
}

/// Route (b): pi/(m-1)! times the (m-1)-st derivative of
/// (i - cot(pi x)) e^{2 pi i lambda x}, expanded with the Leibniz rule and the
/// cotangent-derivative polynomials. No numerical differentiation.
pub fn h_closed(q: &LerchQuery) -> Result<Complex64> {
    q.check()?;
    let m = q.m as usize;
    let sin = (PI * q.x).sin();
    let cos = (PI * q.x).cos();
    let cot = cos / sin;
    let envelope = Complex64::from_polar(1.0, 2.0 * PI * q.lambda * q.x);
    let two_pi_i_lambda = Complex64::new(0.0, 2.0 * PI * q.lambda);
    let mut sum = Complex64::new(0.0, 0.0);
    for j in 0..m {
        let c = binomial((m - 1) as u64, j as u64).to_f64().unwrap();
        let cot_derivative = if j == 0 {
            Complex64::new(-cot, 1.0)
        } else {
            // d^j/dx^j (-cot pi x) = -pi^j P_j(cos pi x) / sin^{j+1}(pi x)
            Complex64::new(
                -PI.powi(j as i32) * cot_poly(j).to_float().eval(cos) / sin.powi(j as i32 + 1),
                0.0,
            )
        };
        sum += cot_derivative * two_pi_i_lambda.powu((m - 1 - j) as u32) * c;
    }
    Ok(sum * envelope * PI / factorial(m - 1))
}

/// Route (c): the polynomial identity
/// H = (2 pi i)^m / (m-1)! * e^{2 pi i lambda x} / (e^{2 pi i x} - 1)^m * G_m(e^{2 pi i x}, lambda).
pub fn h_from_gm(q: &LerchQuery) -> Result<Complex64> {
    q.check()?;
    let z = Complex64::from_polar(1.0, 2.0 * PI * q.x);
    let g = gm_poly_f(q.m, q.lambda).eval_complex(z);
    let scale = Complex64::new(0.0, 2.0 * PI).powu(q.m) / factorial(q.m as usize - 1);
    Ok(scale * Complex64::from_polar(1.0, 2.0 * PI * q.lambda * q.x) / (z - 1.0).powu(q.m) * g)
}

fn factorial(n: usize) -> f64 {
    (1..=n as u64).product::<u64>() as f64
}

/// Outcome of a zero-free grid scan.
#[derive(Clone, Copy, Debug)]
pub struct ScanReport {
    pub min_abs: f64,
    pub lambda: f64,
    pub x: f64,
}

/// Minimum of |H| over a half-step-offset grid in (0,1) x (0,1); the offsets
/// keep lambda away from 0, 1/2 and 1, where zeros are allowed.
pub fn zero_free_scan(m: u32, lambda_grid: usize, x_grid: usize) -> ScanReport {
    assert!(lambda_grid >= 32 && x_grid >= 32);
    let mut report = ScanReport {
        min_abs: f64::INFINITY,
        lambda: f64::NAN,
        x: f64::NAN,
    };
    for i in 0..lambda_grid {
        let lambda = (i as f64 + 0.5) / lambda_grid as f64;
        let poly = gm_poly_f(m, lambda);
        let scale = Complex64::new(0.0, 2.0 * PI).powu(m) / factorial(m as usize - 1);
        for j in 0..x_grid {
            let x = (j as f64 + 0.5) / x_grid as f64;
            let z = Complex64::from_polar(1.0, 2.0 * PI * x);
            let h = scale * Complex64::from_polar(1.0, 2.0 * PI * lambda * x) / (z - 1.0).powu(m)
                * poly.eval_complex(z);
            if h.norm() < report.min_abs {
                report = ScanReport {
                    min_abs: h.norm(),
                    lambda,
                    x,
                };
            }
        }
    }
    report
}

/// Writes `(lambda, x, abs_h)` rows covering the scan grid.
pub fn write_heatmap_csv<W: Write>(
    m: u32,
    lambda_grid: usize,
    x_grid: usize,
    out: &mut W,
) -> std::io::Result<()> {
    writeln!(out, "lambda,x,abs_h")?;
    for i in 0..lambda_grid {
        let lambda = (i as f64 + 0.5) / lambda_grid as f64;
        for j in 0..x_grid {
            let x = (j as f64 + 0.5) / x_grid as f64;
            let q = LerchQuery {
                lambda,
                x,
                m,
                terms: 0,
            };
            let h = h_from_gm(&q).expect("grid avoids integer x");
            writeln!(out, "{lambda},{x},{}", h.norm())?;
        }
    }
    Ok(())
}
