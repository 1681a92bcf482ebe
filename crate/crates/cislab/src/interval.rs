//! Rational intervals on the line.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};
use crate::rational::Rat;

fn default_true() -> bool {
    true
}

/// Interval with exact rational endpoints. The closure flags record how the
/// interval was written; set algebra here is up to measure zero, so they do
/// not affect validation or the congruence combinatorics.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalQ {
    pub lo: Rat,
    pub hi: Rat,
    #[serde(default = "default_true")]
    pub lo_closed: bool,
    #[serde(default)]
    pub hi_closed: bool,
}

impl IntervalQ {
    /// Half-open interval [lo, hi). Fails on empty or reversed intervals.
    pub fn new(lo: Rat, hi: Rat) -> Result<Self> {
        Self::with_flags(lo, hi, true, false)
    }

    pub fn with_flags(lo: Rat, hi: Rat, lo_closed: bool, hi_closed: bool) -> Result<Self> {
        if lo >= hi {
            return Err(Error::EmptyInterval {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        Ok(IntervalQ {
            lo,
            hi,
            lo_closed,
            hi_closed,
        })
    }

    pub fn length(&self) -> Rat {
        &self.hi - &self.lo
    }

    /// Membership honoring the closure flags.
    pub fn contains(&self, x: &Rat) -> bool {
        let lo_ok = if self.lo_closed {
            *x >= self.lo
        } else {
            *x > self.lo
        };
        let hi_ok = if self.hi_closed {
            *x <= self.hi
        } else {
            *x < self.hi
        };
        lo_ok && hi_ok
    }
}

impl fmt::Display for IntervalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_closed { ']' } else { ')' },
        )
    }
}

impl fmt::Debug for IntervalQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[must_use]
pub fn ivq(lo: &str, hi: &str) -> IntervalQ {
    IntervalQ::new(crate::rational::rat(lo), crate::rational::rat(hi)).expect("literal interval")
}
