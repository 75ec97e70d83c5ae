//! Rational linear combinations of basis elements.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use sedenion_core::rational::magnitude_string;
use sedenion_core::Rational;

use crate::basis::{cd_sign, CdBasis};
use crate::CdError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CdElement {
    level: u8,
    terms: BTreeMap<CdBasis, Rational>,
}

impl CdElement {
    pub fn zero(level: u8) -> CdElement {
        CdElement { level, terms: BTreeMap::new() }
    }

    pub fn basis(level: u8, b: CdBasis) -> CdElement {
        CdElement::signed(level, 1, b)
    }

    pub fn signed(level: u8, sign: i8, b: CdBasis) -> CdElement {
        CdElement::from_terms(level, [(b, Rational::from_integer(sign.into()))])
    }

    pub fn scalar(level: u8, c: Rational) -> CdElement {
        CdElement::from_terms(level, [(CdBasis::ONE, c)])
    }

    pub fn from_terms(level: u8, terms: impl IntoIterator<Item = (CdBasis, Rational)>) -> CdElement {
        let mut out = CdElement::zero(level);
        for (b, c) in terms {
            assert!(b.0 >> level == 0, "{b} lies outside A({level})");
            out.accumulate(b, c);
        }
        out
    }

    fn accumulate(&mut self, b: CdBasis, c: Rational) {
        if c.is_zero() {
            return;
        }
        let v = self.terms.entry(b).or_insert_with(Rational::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&b);
        }
    }

    pub fn level(&self) -> u8 {
        self.level
    }

    pub fn terms(&self) -> impl Iterator<Item = (CdBasis, &Rational)> + '_ {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn coeff(&self, b: CdBasis) -> Rational {
        self.terms.get(&b).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_scalar(&self, v: &Rational) -> bool {
        if v.is_zero() {
            return self.is_zero();
        }
        self.terms.len() == 1 && self.terms.get(&CdBasis::ONE) == Some(v)
    }

    /// Single signed basis element, if that is what this is.
    pub fn as_signed_basis(&self) -> Option<(i8, CdBasis)> {
        let mut it = self.terms.iter();
        let (b, c) = it.next()?;
        if it.next().is_some() || !c.abs().is_one() {
            return None;
        }
        Some((if c.is_negative() { -1 } else { 1 }, *b))
    }

    pub fn scale(&self, k: &Rational) -> CdElement {
        CdElement::from_terms(self.level, self.terms.iter().map(|(b, c)| (*b, c * k)))
    }

    pub fn conj(&self) -> CdElement {
        CdElement {
            level: self.level,
            terms: self.terms.iter().map(|(b, c)| (*b, if b.is_pure() { -c } else { c.clone() })).collect(),
        }
    }

    pub fn checked_mul(&self, other: &CdElement) -> Result<CdElement, CdError> {
        if self.level != other.level {
            return Err(CdError::LevelMismatch(self.level, other.level));
        }
        let mut out = CdElement::zero(self.level);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let p = x * y;
                out.accumulate(CdBasis(a.0 ^ b.0), if cd_sign(a.0, b.0) < 0 { -p } else { p });
            }
        }
        Ok(out)
    }

    fn checked_add(&self, other: &CdElement) -> Result<CdElement, CdError> {
        if self.level != other.level {
            return Err(CdError::LevelMismatch(self.level, other.level));
        }
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.accumulate(*b, c.clone());
        }
        Ok(out)
    }
}

/// `(ab)c - a(bc)`.
pub fn associator(a: &CdElement, b: &CdElement, c: &CdElement) -> Result<CdElement, CdError> {
    let left = a.checked_mul(b)?.checked_mul(c)?;
    let right = a.checked_mul(&b.checked_mul(c)?)?;
    Ok(&left - &right)
}

impl fmt::Display for CdElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, c)| {
                let s = if c.is_negative() { '-' } else { '+' };
                match (b.is_pure(), c.abs().is_one()) {
                    (true, true) => format!("{s}{b}"),
                    (true, false) => format!("{s}({}){b}", magnitude_string(c)),
                    (false, _) => format!("{s}({})", magnitude_string(c)),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl<'a> Add<&'a CdElement> for &'a CdElement {
    type Output = CdElement;
    fn add(self, rhs: &CdElement) -> CdElement {
        self.checked_add(rhs).expect("level mismatch")
    }
}

impl<'a> Sub<&'a CdElement> for &'a CdElement {
    type Output = CdElement;
    fn sub(self, rhs: &CdElement) -> CdElement {
        self.checked_add(&-rhs).expect("level mismatch")
    }
}

impl<'a> Mul<&'a CdElement> for &'a CdElement {
    type Output = CdElement;
    fn mul(self, rhs: &CdElement) -> CdElement {
        self.checked_mul(rhs).expect("level mismatch")
    }
}

impl Neg for &CdElement {
    type Output = CdElement;
    fn neg(self) -> CdElement {
        CdElement { level: self.level, terms: self.terms.iter().map(|(b, c)| (*b, -c)).collect() }
    }
}
