//! Exact rational scalars.
//!
//! Thin wrapper around an arbitrary-precision rational that fixes the wire
//! format ("p/q" strings in JSON) and adds the floor/fraction helpers the
//! winding-number formulas need.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::Error;

/// Arbitrary-precision rational in canonical form (reduced, positive denominator).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_big(r: BigRational) -> Self {
        Rat(r)
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rat(self.0.recip())
    }

    /// Largest integer <= self, as a BigInt.
    pub fn floor_big(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Largest integer <= self; panics if it does not fit in i64.
    pub fn floor_i64(&self) -> i64 {
        self.floor_big().to_i64().expect("floor exceeds i64")
    }

    /// Fractional part in [0, 1).
    pub fn fract(&self) -> Self {
        Rat(&self.0 - self.0.floor())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().expect("rational out of f64 range")
    }

    /// Best rational approximation of `x` with denominator at most `max_denom`,
    /// by continued-fraction convergents.
    pub fn approximate(x: f64, max_denom: u64) -> Self {
        assert!(x.is_finite());
        let sign = if x < 0.0 { -1 } else { 1 };
        let mut x = x.abs();
        // convergents p/q
        let (mut p0, mut q0, mut p1, mut q1) = (1i128, 0i128, x.floor() as i128, 1i128);
        x -= x.floor();
        while x > 1e-13 {
            x = 1.0 / x;
            let a = x.floor() as i128;
            let (p2, q2) = (a * p1 + p0, a * q1 + q0);
            if q2 > max_denom as i128 {
                break;
            }
            p0 = p1;
            q0 = q1;
            p1 = p2;
            q1 = q2;
            x -= x.floor();
        }
        Rat(BigRational::new(BigInt::from(sign * p1), BigInt::from(q1)))
    }

    pub fn min(a: Self, b: Self) -> Self {
        if a <= b {
            a
        } else {
            b
        }
    }

    pub fn max(a: Self, b: Self) -> Self {
        if a >= b {
            a
        } else {
            b
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        BigRational::from_str(s.trim())
            .map(Rat)
            .map_err(|e| Error::InvalidArgument(format!("cannot parse rational {s:?}: {e}")))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Rat::from_str(&s).map_err(de::Error::custom)
    }
}

/// lcm of the absolute values, ignoring zeros; 1 when every entry is zero.
pub fn lcm_nonzero(values: &[i64]) -> i64 {
    let mut acc: i64 = 1;
    for &v in values {
        if v != 0 {
            acc = num_integer::lcm(acc, v.abs());
        }
    }
    acc
}

/// Floor of (p + 1/2) for rational p, a building block of every index formula here.
pub fn floor_plus_half(p: &Rat) -> i64 {
    (p + Rat::new(1, 2)).floor_i64()
}

/// Signed distance from `x` to the nearest odd multiple of 1/(2d).
pub fn distance_to_odd_over(x: f64, d: i64) -> f64 {
    let y = x * 2.0 * d as f64;
    // nearest odd integer to y
    let k = ((y - 1.0) / 2.0).round() * 2.0 + 1.0;
    ((y - k) / (2.0 * d as f64)).abs()
}

#[must_use]
pub fn rat(s: &str) -> Rat {
    Rat::from_str(s).expect("literal rational")
}
