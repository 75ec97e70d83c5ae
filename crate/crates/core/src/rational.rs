//! Rational coefficients.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn zero() -> Rational {
    Rational::zero()
}

/// `p` or `p/q`, no surrounding whitespace.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// Magnitude as written in form notation: `1/2`, `3`.
pub fn magnitude_string(r: &Rational) -> String {
    let a = r.abs();
    if a.denom().is_one() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}
