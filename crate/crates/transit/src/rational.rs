//! Exact rational arithmetic: parsing, formatting, and costs with infinity.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// Exact rational number with arbitrary-precision numerator and denominator.
pub type Rat = num::rational::BigRational;

/// Builds `num/den` from machine integers. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Formats a rational as `p/q`, or just `p` when the denominator is 1.
pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses a rational from `p/q`, integer, or decimal text.
///
/// Decimal literals are exact: `0.1` parses to 1/10, never to a binary
/// float. Scientific notation is rejected.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let err = |reason: &str| Error::Number { text: text.to_string(), reason: reason.to_string() };
    let s = text.trim();
    if s.is_empty() {
        return Err(err("empty"));
    }
    if s.contains(['e', 'E']) {
        return Err(err("scientific notation is not supported; use p/q or a plain decimal"));
    }
    if let Some((p, q)) = s.split_once('/') {
        let p = p.trim();
        let q = q.trim();
        let num: BigInt = p.parse().map_err(|_| err("numerator is not an integer"))?;
        if !q.bytes().all(|b| b.is_ascii_digit()) || q.is_empty() {
            return Err(err("denominator must be a positive integer"));
        }
        let den: BigInt = q.parse().map_err(|_| err("denominator is not an integer"))?;
        if den.is_zero() {
            return Err(err("denominator is zero"));
        }
        return Ok(Rat::new(num, den));
    }
    let (negative, digits) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let value = if let Some((int_part, frac_part)) = digits.split_once('.') {
        if int_part.is_empty() || frac_part.is_empty() {
            return Err(err("decimal needs digits on both sides of the point"));
        }
        if !int_part.bytes().all(|b| b.is_ascii_digit()) || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err("not a decimal literal"));
        }
        let scaled: BigInt = format!("{int_part}{frac_part}").parse().map_err(|_| err("not a decimal literal"))?;
        let den = BigInt::from(10u32).pow(frac_part.len() as u32);
        Rat::new(scaled, den)
    } else {
        if !digits.bytes().all(|b| b.is_ascii_digit()) || digits.is_empty() {
            return Err(err("not an integer"));
        }
        let n: BigInt = digits.parse().map_err(|_| err("not an integer"))?;
        Rat::from_integer(n)
    };
    Ok(if negative { -value } else { value })
}

/// A travel cost: either a finite rational or infinity.
///
/// Infinity is first-class: it initializes distance tables, and it is the
/// penalty factor (and resulting cost) of the railway model when no finite
/// discount factor exists. Ordering puts every finite value below
/// [`Cost::Infinite`], and addition absorbs into infinity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cost {
    Finite(Rat),
    Infinite,
}

impl Cost {
    pub fn zero() -> Self {
        Cost::Finite(Rat::zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Cost::Finite(_))
    }

    /// The finite value, if any.
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            Cost::Finite(r) => Some(r),
            Cost::Infinite => None,
        }
    }

    /// Unwraps a finite cost. Panics on infinity.
    pub fn expect_finite(&self, what: &str) -> &Rat {
        self.finite().unwrap_or_else(|| panic!("{what}: cost is infinite"))
    }

    /// `self + rhs`, absorbing into infinity.
    pub fn add_rat(&self, rhs: &Rat) -> Cost {
        match self {
            Cost::Finite(r) => Cost::Finite(r + rhs),
            Cost::Infinite => Cost::Infinite,
        }
    }

    pub fn add(&self, rhs: &Cost) -> Cost {
        match (self, rhs) {
            (Cost::Finite(a), Cost::Finite(b)) => Cost::Finite(a + b),
            _ => Cost::Infinite,
        }
    }

    /// `factor * self`. `factor` must be non-negative; `0 * infinity` is
    /// defined as 0 (a zero-demand pair contributes nothing, whatever the
    /// distance).
    pub fn scale(&self, factor: &Rat) -> Cost {
        debug_assert!(!factor.is_negative());
        if factor.is_zero() {
            return Cost::zero();
        }
        match self {
            Cost::Finite(r) => Cost::Finite(r * factor),
            Cost::Infinite => Cost::Infinite,
        }
    }
}

impl From<Rat> for Cost {
    fn from(r: Rat) -> Self {
        Cost::Finite(r)
    }
}

impl PartialOrd for Cost {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cost {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Cost::Finite(a), Cost::Finite(b)) => a.cmp(b),
            (Cost::Finite(_), Cost::Infinite) => Ordering::Less,
            (Cost::Infinite, Cost::Finite(_)) => Ordering::Greater,
            (Cost::Infinite, Cost::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cost::Finite(r) => write!(f, "{}", fmt_rat(r)),
            Cost::Infinite => write!(f, "inf"),
        }
    }
}

/// Parses `inf` or a rational literal.
pub fn parse_cost(text: &str) -> Result<Cost> {
    if text.trim() == "inf" {
        Ok(Cost::Infinite)
    } else {
        Ok(Cost::Finite(parse_rat(text)?))
    }
}

/// One half, the most common discount factor in tests and examples.
pub fn one_half() -> Rat {
    rat(1, 2)
}

/// Convenience: `n` as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Reciprocal of a positive rational.
pub fn recip(r: &Rat) -> Rat {
    Rat::one() / r
}
