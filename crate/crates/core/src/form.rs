//! Plain-text form notation.
//!
//! A form is a whitespace-separated list of signed hex index strings, e.g.
//! `+123 +145 -167`. Other coefficients are written in parentheses before an
//! `e`: `(1/2)e23`, `-(3)e1234567`. A bare `(c)` is a scalar and `0` is zero.

use thiserror::Error;

use crate::blade::Blade;
use crate::multivector::Multivector;
use crate::rational::{magnitude_string, parse_rational, Rational};
use num_traits::{One, Signed};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormParseError {
    #[error("empty form")]
    Empty,
    #[error("bad term `{0}`")]
    BadTerm(String),
    #[error("term `{term}` does not fit in Cl({dim})")]
    OutOfRange { term: String, dim: u8 },
}

fn parse_term(tok: &str) -> Result<(Blade, Rational), FormParseError> {
    let bad = || FormParseError::BadTerm(tok.to_string());
    let (neg, rest) = match tok.as_bytes().first() {
        Some(b'+') => (false, &tok[1..]),
        Some(b'-') => (true, &tok[1..]),
        _ => (false, tok),
    };
    let (coeff, rest) = if let Some(inner) = rest.strip_prefix('(') {
        let close = inner.find(')').ok_or_else(bad)?;
        let c = parse_rational(&inner[..close]).ok_or_else(bad)?;
        (c, &inner[close + 1..])
    } else {
        (Rational::one(), rest)
    };
    let hex = rest.strip_prefix('e').unwrap_or(rest);
    let blade = if hex.is_empty() {
        if rest.is_empty() && !tok.contains('(') {
            return Err(bad());
        }
        Blade::SCALAR
    } else {
        Blade::from_hex(hex).ok_or_else(bad)?
    };
    Ok((blade, if neg { -coeff } else { coeff }))
}

/// Parses a form into Cl(dim).
pub fn parse_form(s: &str, dim: u8) -> Result<Multivector, FormParseError> {
    let tokens: Vec<&str> = s.split_whitespace().collect();
    if tokens.is_empty() {
        return Err(FormParseError::Empty);
    }
    if tokens == ["0"] {
        return Ok(Multivector::zero(dim));
    }
    let mut terms = Vec::with_capacity(tokens.len());
    for tok in tokens {
        let (b, c) = parse_term(tok)?;
        if b.top() > dim {
            return Err(FormParseError::OutOfRange { term: tok.to_string(), dim });
        }
        terms.push((b, c));
    }
    Ok(Multivector::from_terms(dim, terms).expect("range checked above"))
}

/// Parses a form, sizing the algebra to its highest index.
pub fn parse_form_auto(s: &str) -> Result<Multivector, FormParseError> {
    let x = parse_form(s, crate::MAX_DIM)?;
    let top = x.blades().map(|b| b.top()).max().unwrap_or(0);
    Ok(x.embed(top).expect("fits"))
}

/// Parses the terms of a form in the order written, keeping duplicates.
pub fn parse_terms(s: &str) -> Result<Vec<(Blade, Rational)>, FormParseError> {
    let tokens: Vec<&str> = s.split_whitespace().collect();
    if tokens.is_empty() {
        return Err(FormParseError::Empty);
    }
    tokens.into_iter().map(parse_term).collect()
}

pub fn format_form(x: &Multivector) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::with_capacity(x.len());
    for (b, c) in x.terms() {
        let sign = if c.is_negative() { '-' } else { '+' };
        let unit = c.abs().is_one();
        let part = match (b == Blade::SCALAR, unit) {
            (true, _) => format!("{sign}({})", magnitude_string(c)),
            (false, true) => format!("{sign}{}", b.to_hex()),
            (false, false) => format!("{sign}({})e{}", magnitude_string(c), b.to_hex()),
        };
        parts.push(part);
    }
    parts.join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn parses_signed_terms() {
        let x = parse_form("+123 +145 -167 (1/2)e23", 7).unwrap();
        assert_eq!(x.len(), 4);
        assert_eq!(x.coeff(Blade::from_hex("167").unwrap()), int(-1));
        assert_eq!(x.coeff(Blade::from_hex("23").unwrap()), frac(1, 2));
    }

    #[test]
    fn round_trip() {
        let s = "+(3) +12 -(1/2)e34 +(7/8)e123456789ABCDEF";
        let x = parse_form(s, 15).unwrap();
        assert_eq!(format_form(&x), s);
        assert_eq!(parse_form(&format_form(&x), 15).unwrap(), x);
    }

    #[test]
    fn rejects_garbage() {
        assert_eq!(parse_form("", 7), Err(FormParseError::Empty));
        assert!(matches!(parse_form("+12x", 7), Err(FormParseError::BadTerm(_))));
        assert!(matches!(parse_form("+", 7), Err(FormParseError::BadTerm(_))));
        assert!(matches!(parse_form("+(1/0)e1", 7), Err(FormParseError::BadTerm(_))));
        assert!(matches!(parse_form("+18", 7), Err(FormParseError::OutOfRange { .. })));
    }

    #[test]
    fn auto_dimension() {
        assert_eq!(parse_form_auto("+12 -9F").unwrap().dim(), 15);
        assert!(parse_form("0", 3).unwrap().is_zero());
    }
}
