//! B-splines, the bivariate polynomial family behind exponential splines, and
//! Euler-Frobenius polynomials.
//!
//! The central object is the family G_m(t, beta) defined by
//!
//! ```text
//! G_1 = -1,
//! G_m = [beta (t - 1) - (m - 1) t] G_{m-1} + t (t - 1) G_{m-1}',
//! ```
//!
//! which packages the exponential spline of degree m-1 as a polynomial:
//! Phi_{m-1}(beta, t) = (-1)^m / (m-1)! * G_m(1/t, beta). Its zero locations
//! relative to the unit circle drive the interpolation results in `operator`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::poly::PolyR;
use crate::rational::Rat;

/// Cardinal B-spline Q_m supported on [0, m], by the degree-raising recursion.
pub fn bspline_eval(m: u32, x: f64) -> f64 {
    assert!(m >= 1);
    if !(0.0..(m as f64)).contains(&x) {
        return 0.0;
    }
    // values[j] = Q_1(x - j) for the relevant shifts, then raise the degree
    let base = x.floor();
    let mut values = vec![0.0f64; m as usize];
    let j0 = base as i64;
    if (0..m as i64).contains(&j0) {
        values[j0 as usize] = 1.0;
    }
    for order in 2..=m {
        let o = order as f64;
        for j in 0..values.len() - 1 {
            let t = x - j as f64;
            values[j] = (t * values[j] + (o - t) * values[j + 1]) / (o - 1.0);
        }
        let j = values.len() - 1;
        let t = x - j as f64;
        values[j] = t * values[j] / (o - 1.0);
    }
    values[0]
}

/// Exact B-spline value at a rational point.
pub fn bspline_eval_q(m: u32, x: &Rat) -> Rat {
    assert!(m >= 1);
    if *x < Rat::zero() || *x >= Rat::from_int(m as i64) {
        return Rat::zero();
    }
    let base = x.floor_i64();
    let mut values = vec![Rat::zero(); m as usize];
    if (0..m as i64).contains(&base) {
        values[base as usize] = Rat::one();
    }
    for order in 2..=m {
        let o = Rat::from_int(order as i64);
        let denom = Rat::from_int(order as i64 - 1);
        for j in 0..values.len() {
            let t = x - &Rat::from_int(j as i64);
            let raised = if j + 1 < values.len() {
                &(&t * &values[j]) + &(&(&o - &t) * &values[j + 1])
            } else {
                &t * &values[j]
            };
            values[j] = &raised / &denom;
        }
    }
    values.into_iter().next().unwrap()
}

/// G_m(t, beta) with exact rational beta.
pub fn gm_poly(m: u32, beta: &Rat) -> PolyR {
    assert!(m >= 1);
    let mut g = PolyR::constant(Rat::from_int(-1));
    for order in 2..=m {
        let factor = PolyR::new(vec![-beta.clone(), beta - &Rat::from_int(order as i64 - 1)]);
        let t_t1 = PolyR::new(vec![Rat::zero(), Rat::from_int(-1), Rat::one()]);
        g = factor.mul(&g).add(&t_t1.mul(&g.derivative()));
    }
    g
}

/// G_m(t, beta) with floating beta, as floating coefficients.
pub fn gm_poly_f(m: u32, beta: f64) -> crate::poly::PolyF {
    // exact recurrence in f64; coefficients are polynomials in beta with
    // integer weights, so this stays accurate for moderate m
    assert!(m >= 1);
    let mut g = vec![-1.0f64];
    for order in 2..=m {
        let k = order as f64 - 1.0;
        let mut next = vec![0.0f64; g.len() + 1];
        for (i, &c) in g.iter().enumerate() {
            // [beta (t-1) - k t] c t^i = (beta - k) c t^{i+1} - beta c t^i
            next[i + 1] += (beta - k) * c;
            next[i] -= beta * c;
            // t(t-1) * d/dt (c t^i) = i c t^{i+1} - i c t^i
            let di = i as f64;
            next[i + 1] += di * c;
            next[i] -= di * c;
        }
        g = next;
    }
    crate::poly::PolyF::new(g)
}

/// F_m(u, beta) = G_m(u^2, beta) at a complex argument.
pub fn fm_eval(m: u32, u: Complex64, beta: f64) -> Complex64 {
    gm_poly_f(m, beta).eval_complex(u * u)
}

/// Exponential spline Phi_{m-1}(beta, t) through the polynomial route.
pub fn exp_spline_eval(m: u32, beta: f64, t: Complex64) -> Result<Complex64> {
    assert!(m >= 2);
    if t.norm() == 0.0 {
        return Err(Error::ZeroBase);
    }
    let g = gm_poly_f(m, beta).eval_complex(t.inv());
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    Ok(g * sign / factorial(m - 1))
}

/// Exponential spline by the defining sum over B-spline translates. The
/// compact support makes the sum finite; this is the independent cross-check
/// for `exp_spline_eval`.
pub fn exp_spline_series(m: u32, beta: f64, t: Complex64) -> Result<Complex64> {
    assert!(m >= 2);
    if t.norm() == 0.0 {
        return Err(Error::ZeroBase);
    }
    let mut sum = Complex64::new(0.0, 0.0);
    let lo = beta.ceil() as i64 - m as i64;
    let hi = beta.floor() as i64;
    for k in lo..=hi {
        let q = bspline_eval(m, beta - k as f64);
        if q != 0.0 {
            sum += t.powi(k as i32) * q;
        }
    }
    Ok(sum)
}

fn factorial(n: u32) -> f64 {
    (1..=n as u64).product::<u64>() as f64
}

static EULER_FROBENIUS_CACHE: std::sync::Mutex<Vec<PolyR>> = std::sync::Mutex::new(Vec::new());
static MODIFIED_EULER_FROBENIUS_CACHE: std::sync::Mutex<Vec<PolyR>> =
    std::sync::Mutex::new(Vec::new());

/// Euler-Frobenius polynomial, monic of degree m, by its first-order
/// recurrence; the family is memoized.
pub fn euler_frobenius(m: u32) -> PolyR {
    let mut cache = EULER_FROBENIUS_CACHE.lock().unwrap();
    if cache.is_empty() {
        cache.push(PolyR::constant(Rat::one()));
    }
    while cache.len() <= m as usize {
        let order = cache.len() as i64 - 1;
        let factor = PolyR::new(vec![Rat::one(), Rat::from_int(order)]);
        let t_1t = PolyR::new(vec![Rat::zero(), Rat::one(), Rat::from_int(-1)]);
        let prev = cache.last().unwrap();
        let next = factor.mul(prev).add(&t_1t.mul(&prev.derivative()));
        cache.push(next);
    }
    cache[m as usize].clone()
}

/// Modified Euler-Frobenius polynomial (half-integer lattice samples), memoized.
pub fn modified_euler_frobenius(m: u32) -> PolyR {
    let mut cache = MODIFIED_EULER_FROBENIUS_CACHE.lock().unwrap();
    if cache.is_empty() {
        cache.push(PolyR::constant(Rat::one()));
    }
    while cache.len() <= m as usize {
        let order = cache.len() as i64 - 1;
        let factor = PolyR::new(vec![Rat::one(), Rat::from_int(2 * order + 1)]);
        let t_1t = PolyR::new(vec![Rat::zero(), Rat::from_int(2), Rat::from_int(-2)]);
        let prev = cache.last().unwrap();
        let next = factor.mul(prev).add(&t_1t.mul(&prev.derivative()));
        cache.push(next);
    }
    cache[m as usize].clone()
}

/// Riesz bounds of the B-spline translates: extrema over a frequency grid of
/// the periodized squared transform, with an Euler-Maclaurin tail correction.
pub fn stability_bounds(m: u32, grid: usize) -> (f64, f64) {
    assert!(grid >= 64);
    let cutoff: i64 = 40;
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for i in 0..grid {
        let xi = i as f64 / grid as f64;
        let mut sum = 0.0;
        for n in -cutoff..=cutoff {
            sum += sinc(xi + n as f64).powi(2 * m as i32);
        }
        // |sin(pi (xi + n))| = |sin(pi xi)| factors out of both tails
        let amp = (std::f64::consts::PI * xi).sin().abs() / std::f64::consts::PI;
        if amp > 0.0 {
            let s = 2 * m as usize;
            sum += amp.powi(s as i32)
                * (power_tail(s, cutoff as f64 + 1.0 + xi)
                    + power_tail(s, cutoff as f64 + 1.0 - xi));
        }
        min = min.min(sum);
        max = max.max(sum);
    }
    (min, max)
}

fn sinc(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        (std::f64::consts::PI * x).sin() / (std::f64::consts::PI * x)
    }
}

/// Euler-Maclaurin estimate of sum_{n >= 0} (n + z)^{-s}; remainder is far
/// below 1e-12 for z >= 40.
fn power_tail(s: usize, z: f64) -> f64 {
    let s = s as f64;
    z.powf(1.0 - s) / (s - 1.0) + 0.5 * z.powf(-s) + s / 12.0 * z.powf(-s - 1.0)
        - s * (s + 1.0) * (s + 2.0) / 720.0 * z.powf(-s - 3.0)
}
