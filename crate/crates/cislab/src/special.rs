//! Bernoulli numbers, Euler polynomials, and cotangent-derivative polynomials.

use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::One;

use crate::poly::PolyR;
use crate::rational::Rat;

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

static BERNOULLI_CACHE: Mutex<Vec<Rat>> = Mutex::new(Vec::new());

/// Bernoulli number B_n (B_1 = -1/2), by the defining recursion, memoized.
pub fn bernoulli(n: usize) -> Rat {
    let mut cache = BERNOULLI_CACHE.lock().unwrap();
    if cache.is_empty() {
        cache.push(Rat::one());
    }
    while cache.len() <= n {
        let m = cache.len();
        let mut sum = Rat::zero();
        for (k, b) in cache.iter().enumerate() {
            let c = Rat::from_big(num_rational::BigRational::from_integer(binomial(
                (m + 1) as u64,
                k as u64,
            )));
            sum = sum + &c * b;
        }
        let value = -(&sum / &Rat::from_int((m + 1) as i64));
        cache.push(value);
    }
    cache[n].clone()
}

/// Euler polynomial E_n(x), exact.
pub fn euler_poly(n: usize) -> PolyR {
    let mut p = PolyR::zero();
    for k in 1..=(n + 1) {
        let c = Rat::from_big(num_rational::BigRational::from_integer(binomial(
            (n + 1) as u64,
            k as u64,
        )));
        let two_minus = Rat::from_int(2)
            - Rat::from_big(num_rational::BigRational::from_integer(
                BigInt::from(2).pow((k + 1) as u32),
            ));
        let coeff = &(&c * &two_minus) * &bernoulli(k);
        p = p.add(&PolyR::monomial(coeff, n + 1 - k));
    }
    p.scale(&Rat::new(1, (n + 1) as i64))
}

/// Cotangent-derivative polynomials: P_0(x) = x and
/// P_{j+1} = -[(j+1) x P_j + (1 - x^2) P_j'], so that
/// P_j(cos pi x) = pi^{-j} sin^{j+1}(pi x) * d^j/dx^j cot(pi x).
pub fn cot_poly(j: usize) -> PolyR {
    let x = PolyR::monomial(Rat::one(), 1);
    let one_minus_x2 = PolyR::new(vec![Rat::one(), Rat::zero(), Rat::from_int(-1)]);
    let mut p = x.clone();
    for step in 0..j {
        let term = x
            .mul(&p)
            .scale(&Rat::from_int((step + 1) as i64))
            .add(&one_minus_x2.mul(&p.derivative()));
        p = term.scale(&Rat::from_int(-1));
    }
    p
}
