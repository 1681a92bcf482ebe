//! Univariate polynomials, exact and floating, with unit-circle zero splitting.

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::Rat;

/// Polynomial with exact rational coefficients, ascending degree, trailing
/// zeros trimmed. The zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyR {
    coeffs: Vec<Rat>,
}

impl PolyR {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        PolyR { coeffs }
    }

    pub fn zero() -> Self {
        PolyR { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        PolyR::new(vec![c])
    }

    /// Monomial c * t^k.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        PolyR::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &PolyR) -> PolyR {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        PolyR::new(coeffs)
    }

    pub fn sub(&self, other: &PolyR) -> PolyR {
        self.add(&other.scale(&Rat::from_int(-1)))
    }

    pub fn mul(&self, other: &PolyR) -> PolyR {
        if self.is_zero() || other.is_zero() {
            return PolyR::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        PolyR::new(coeffs)
    }

    pub fn scale(&self, c: &Rat) -> PolyR {
        PolyR::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> PolyR {
        if self.coeffs.len() <= 1 {
            return PolyR::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, a)| a * &Rat::from_int(k as i64))
            .collect();
        PolyR::new(coeffs)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Coefficients reversed: t^d * p(1/t) for degree-d p.
    pub fn reversed(&self) -> PolyR {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        PolyR::new(coeffs)
    }

    pub fn to_float(&self) -> PolyF {
        PolyF::new(self.coeffs.iter().map(Rat::to_f64).collect())
    }

    /// Euclidean remainder of self by other (other nonzero).
    fn rem(&self, other: &PolyR) -> PolyR {
        assert!(!other.is_zero());
        let mut r = self.clone();
        let d = other.degree().unwrap();
        let lead = other.coeffs.last().unwrap().clone();
        while let Some(rd) = r.degree() {
            if rd < d {
                break;
            }
            let factor = &r.coeff(rd) / &lead;
            let shifted = other.mul(&PolyR::monomial(factor, rd - d));
            r = r.sub(&shifted);
        }
        r
    }
}

impl Serialize for PolyR {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("PolyR", 1)?;
        s.serialize_field("coeffs", &self.coeffs)?;
        s.end()
    }
}

/// Polynomial with floating coefficients, ascending degree.
#[derive(Clone, Debug, PartialEq)]
pub struct PolyF {
    coeffs: Vec<f64>,
}

impl PolyF {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last().is_some_and(|c| c.abs() <= 1e-14) {
            coeffs.pop();
        }
        PolyF { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
    }

    pub fn derivative(&self) -> PolyF {
        if self.coeffs.len() <= 1 {
            return PolyF { coeffs: Vec::new() };
        }
        PolyF::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * k as f64)
                .collect(),
        )
    }

    /// All complex roots by companion-matrix eigenvalues, polished with a few
    /// Newton steps.
    pub fn roots(&self) -> Result<Vec<Complex64>> {
        let d = self.degree().ok_or(Error::Degenerate)?;
        if d == 0 {
            return Ok(Vec::new());
        }
        let lead = *self.coeffs.last().unwrap();
        let monic: Vec<f64> = self.coeffs.iter().map(|c| c / lead).collect();
        let mut companion = DMatrix::<f64>::zeros(d, d);
        for i in 1..d {
            companion[(i, i - 1)] = 1.0;
        }
        for i in 0..d {
            companion[(i, d - 1)] = -monic[i];
        }
        let eigen = companion.complex_eigenvalues();
        let deriv = self.derivative();
        let mut roots: Vec<Complex64> = eigen
            .iter()
            .map(|&z| {
                let mut r = z;
                for _ in 0..3 {
                    let dp = deriv.eval_complex(r);
                    if dp.norm() < 1e-300 {
                        break;
                    }
                    let step = self.eval_complex(r) / dp;
                    if !step.re.is_finite() || !step.im.is_finite() {
                        break;
                    }
                    if step.norm() > 0.5 * (1.0 + r.norm()) {
                        break;
                    }
                    r -= step;
                }
                r
            })
            .collect();
        roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        Ok(roots)
    }
}

/// Root counts of a polynomial relative to the unit circle.
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroSplit {
    pub inside: usize,
    pub on_circle: usize,
    pub outside: usize,
    pub roots: Vec<Complex64>,
}

impl Serialize for ZeroSplit {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let roots: Vec<[f64; 2]> = self.roots.iter().map(|z| [z.re, z.im]).collect();
        let mut s = serializer.serialize_struct("ZeroSplit", 4)?;
        s.serialize_field("inside", &self.inside)?;
        s.serialize_field("on_circle", &self.on_circle)?;
        s.serialize_field("outside", &self.outside)?;
        s.serialize_field("roots", &roots)?;
        s.end()
    }
}

const CIRCLE_TOLERANCE: f64 = 1e-9;

/// Classifies all roots against the unit circle with tolerance 1e-9.
pub fn zero_split(p: &PolyF) -> Result<ZeroSplit> {
    let roots = p.roots()?;
    let mut split = ZeroSplit {
        inside: 0,
        on_circle: 0,
        outside: 0,
        roots,
    };
    for z in &split.roots {
        let r = z.norm();
        if (r - 1.0).abs() <= CIRCLE_TOLERANCE {
            split.on_circle += 1;
        } else if r < 1.0 {
            split.inside += 1;
        } else {
            split.outside += 1;
        }
    }
    Ok(split)
}

/// Sturm chain of an exact polynomial.
pub struct SturmChain {
    chain: Vec<PolyR>,
}

impl SturmChain {
    pub fn new(p: &PolyR) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(r.scale(&Rat::from_int(-1)));
        }
        SturmChain { chain }
    }

    fn variations<F: Fn(&PolyR) -> i8>(&self, sign_of: F) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.chain {
            let s = sign_of(p);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    pub fn variations_at(&self, x: &Rat) -> usize {
        self.variations(|p| {
            let v = p.eval(x);
            if v.is_zero() {
                0
            } else if v > Rat::zero() {
                1
            } else {
                -1
            }
        })
    }

    pub fn variations_at_neg_infinity(&self) -> usize {
        self.variations(|p| match p.degree() {
            None => 0,
            Some(d) => {
                let lead = p.coeffs().last().unwrap();
                let s = if *lead > Rat::zero() { 1 } else { -1 };
                if d % 2 == 0 {
                    s
                } else {
                    -s
                }
            }
        })
    }

    /// Number of distinct real roots in (a, b].
    pub fn count_in(&self, a: &Rat, b: &Rat) -> usize {
        assert!(a <= b);
        self.variations_at(a) - self.variations_at(b)
    }

    /// Number of distinct real roots in (-inf, b].
    pub fn count_below(&self, b: &Rat) -> usize {
        self.variations_at_neg_infinity() - self.variations_at(b)
    }
}

/// Circle split of an exact real-rooted polynomial: floating roots first,
/// with the counts recomputed by Sturm chains whenever any root comes within
/// 1e-6 of the circle.
pub fn zero_split_guarded(p: &PolyR) -> Result<ZeroSplit> {
    let float_split = zero_split(&p.to_float())?;
    let near_circle = float_split
        .roots
        .iter()
        .any(|z| (z.norm() - 1.0).abs() < 1e-6);
    if !near_circle {
        return Ok(float_split);
    }
    let exact = zero_split_exact(p)?;
    Ok(ZeroSplit {
        roots: float_split.roots,
        ..exact
    })
}

/// Exact circle split for polynomials known to have only real roots: counts
/// roots in (-1, 1) by Sturm chains and checks ±1 directly. The root list is
/// still produced in floating point.
pub fn zero_split_exact(p: &PolyR) -> Result<ZeroSplit> {
    let degree = match p.degree() {
        None => return Err(Error::Degenerate),
        Some(d) => d,
    };
    let chain = SturmChain::new(p);
    let one = Rat::one();
    let minus_one = Rat::from_int(-1);
    let strictly_inside = chain.count_in(&minus_one, &one) - usize::from(p.eval(&one).is_zero());
    let on_circle = usize::from(p.eval(&one).is_zero()) + usize::from(p.eval(&minus_one).is_zero());
    let inside = strictly_inside;
    let outside = degree - inside - on_circle;
    Ok(ZeroSplit {
        inside,
        on_circle,
        outside,
        roots: p.to_float().roots()?,
    })
}
