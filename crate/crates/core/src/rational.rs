//! Exact integer foundation: division-based gcd, slope reduction and full
//! Euclidean-algorithm traces.
//!
//! Every value here is arbitrary precision. Consecutive Fibonacci slopes leave
//! the 64-bit range after about ninety iterations of `fib`, and nothing in this
//! module is allowed to overflow silently.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Greatest common divisor by repeated division with remainder.
pub fn gcd(a: &BigUint, b: &BigUint) -> Result<BigUint> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::NotPositive("gcd argument"));
    }
    Ok(gcd_unchecked(a.clone(), b.clone()))
}

fn gcd_unchecked(mut a: BigUint, mut b: BigUint) -> BigUint {
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

/// A positive slope `q/p` in lowest terms.
///
/// In the unfolded billiard picture the slope is the straight line from the
/// origin to the lattice point `(p, q)`: `p` is the horizontal run and `q`
/// the vertical rise.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Slope {
    numer: BigUint,
    denom: BigUint,
}

impl Slope {
    /// The diagonal `1/1`, the starting point of every word.
    pub fn one() -> Self {
        Slope {
            numer: BigUint::one(),
            denom: BigUint::one(),
        }
    }

    /// Builds `q/p`, rejecting zero and non-reduced input.
    pub fn new(q: impl Into<BigUint>, p: impl Into<BigUint>) -> Result<Self> {
        let (numer, denom) = (q.into(), p.into());
        check_positive(&numer, &denom)?;
        if !gcd_unchecked(numer.clone(), denom.clone()).is_one() {
            return Err(Error::NotReduced { numer, denom });
        }
        Ok(Slope { numer, denom })
    }

    /// Callers must guarantee `gcd(numer, denom) = 1` and both positive.
    pub(crate) fn new_unchecked(numer: BigUint, denom: BigUint) -> Self {
        debug_assert!(!numer.is_zero() && !denom.is_zero());
        Slope { numer, denom }
    }

    /// Numerator `q` (vertical extent of the unfolded path).
    pub fn numer(&self) -> &BigUint {
        &self.numer
    }

    /// Denominator `p` (horizontal extent of the unfolded path).
    pub fn denom(&self) -> &BigUint {
        &self.denom
    }

    pub fn is_one(&self) -> bool {
        self.numer.is_one() && self.denom.is_one()
    }

    /// Parses `q/p`, dividing out any common factor instead of rejecting it.
    pub fn parse_reducing(text: &str) -> Result<Self> {
        let (q, p) = split_slope_text(text)?;
        reduce(&q, &p)
    }

    /// `q/p` as an `f64`, correctly rounded.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let ratio = num_rational::BigRational::new(self.numer.clone().into(), self.denom.clone().into());
        ratio.to_f64().unwrap_or(f64::INFINITY)
    }
}

fn check_positive(q: &BigUint, p: &BigUint) -> Result<()> {
    if q.is_zero() {
        return Err(Error::NotPositive("slope numerator"));
    }
    if p.is_zero() {
        return Err(Error::NotPositive("slope denominator"));
    }
    Ok(())
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}

impl fmt::Debug for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Slope({}/{})", self.numer, self.denom)
    }
}

fn split_slope_text(text: &str) -> Result<(BigUint, BigUint)> {
    let invalid = |reason| Error::InvalidSlope {
        token: text.to_owned(),
        reason,
    };
    let (q, p) = text.split_once('/').ok_or_else(|| invalid("expected q/p"))?;
    let digits = |part: &str| {
        if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(invalid("numerator and denominator must be unsigned decimal integers"));
        }
        // all-digit input cannot fail to parse
        Ok(BigUint::parse_bytes(part.as_bytes(), 10).expect("decimal digits"))
    };
    Ok((digits(q)?, digits(p)?))
}

/// Strict parse: `"q/p"` with decimal digits, no whitespace or sign, both
/// parts positive and already coprime.
impl FromStr for Slope {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let (q, p) = split_slope_text(text)?;
        Slope::new(q, p)
    }
}

/// Divides `q` and `p` by their gcd.
pub fn reduce(q: &BigUint, p: &BigUint) -> Result<Slope> {
    check_positive(q, p)?;
    let g = gcd_unchecked(q.clone(), p.clone());
    Ok(Slope::new_unchecked(q / &g, p / &g))
}

/// One division `dividend = quotient * divisor + remainder`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DivisionStep {
    pub dividend: BigUint,
    pub divisor: BigUint,
    pub quotient: BigUint,
    pub remainder: BigUint,
}

impl fmt::Display for DivisionStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {} {}",
            self.dividend, self.divisor, self.quotient, self.remainder
        )
    }
}

/// The ordered division steps of the Euclidean algorithm.
///
/// Every division is counted, including the last one whose remainder is
/// zero, so `(5, 3)` takes three steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EuclidTrace {
    steps: Vec<DivisionStep>,
}

impl EuclidTrace {
    pub fn steps(&self) -> &[DivisionStep] {
        &self.steps
    }

    pub fn step_count(&self) -> usize {
        self.steps.len()
    }

    /// The last nonzero remainder, i.e. the divisor of the final step.
    pub fn gcd(&self) -> &BigUint {
        &self.steps.last().expect("trace is never empty").divisor
    }
}

/// Runs the Euclidean algorithm with `a` as first dividend and `b` as first
/// divisor.
///
/// When `a < b` the first step is the swap `(a, b, 0, a)`, and it counts.
pub fn euclid_trace(a: &BigUint, b: &BigUint) -> Result<EuclidTrace> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::NotPositive("euclid_trace argument"));
    }
    let mut steps = Vec::new();
    let (mut dividend, mut divisor) = (a.clone(), b.clone());
    loop {
        let (quotient, remainder) = dividend.div_rem(&divisor);
        let done = remainder.is_zero();
        steps.push(DivisionStep {
            dividend,
            divisor: divisor.clone(),
            quotient,
            remainder: remainder.clone(),
        });
        if done {
            return Ok(EuclidTrace { steps });
        }
        dividend = divisor;
        divisor = remainder;
    }
}

/// Machine-width step count with the same convention as [`euclid_trace`].
///
/// Returns 0 if either argument is 0.
pub fn step_count(mut a: u64, mut b: u64) -> u32 {
    if a == 0 || b == 0 {
        return 0;
    }
    let mut steps = 0;
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
        steps += 1;
    }
    steps
}
