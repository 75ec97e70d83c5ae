//! Sparse multivectors with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::blade::{product_sign, Blade};
use crate::error::AlgebraError;
use crate::rational::{frac, Rational};
use crate::MAX_DIM;

/// An element of Cl(dim). No zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multivector {
    dim: u8,
    terms: BTreeMap<Blade, Rational>,
}

impl Multivector {
    pub fn zero(dim: u8) -> Multivector {
        assert!(dim <= MAX_DIM, "dimension {dim} exceeds {MAX_DIM}");
        Multivector { dim, terms: BTreeMap::new() }
    }

    pub fn scalar(dim: u8, value: Rational) -> Multivector {
        Multivector::zero(dim).with_term(Blade::SCALAR, value)
    }

    pub fn one(dim: u8) -> Multivector {
        Multivector::scalar(dim, Rational::one())
    }

    /// `coeff * e_blade`. Panics if the blade does not fit in `dim`.
    pub fn blade(dim: u8, blade: Blade, coeff: Rational) -> Multivector {
        Multivector::from_terms(dim, [(blade, coeff)]).expect("blade outside dimension")
    }

    /// The unit pseudoscalar `e_{1..dim}`.
    pub fn pseudoscalar(dim: u8) -> Multivector {
        Multivector::blade(dim, Blade((1u32 << dim) - 1), Rational::one())
    }

    pub fn from_terms<I>(dim: u8, terms: I) -> Result<Multivector, AlgebraError>
    where
        I: IntoIterator<Item = (Blade, Rational)>,
    {
        if dim > MAX_DIM {
            return Err(AlgebraError::DimensionTooLarge(dim));
        }
        let mut out = Multivector::zero(dim);
        for (b, c) in terms {
            if b.top() > dim {
                return Err(AlgebraError::OutOfRange { blade: b.to_string(), dim });
            }
            out.accumulate(b, c);
        }
        Ok(out)
    }

    fn with_term(mut self, b: Blade, c: Rational) -> Multivector {
        self.accumulate(b, c);
        self
    }

    fn accumulate(&mut self, b: Blade, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&b);
                }
            }
            None => {
                self.terms.insert(b, c);
            }
        }
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    /// The same element viewed in Cl(dim).
    pub fn embed(&self, dim: u8) -> Result<Multivector, AlgebraError> {
        Multivector::from_terms(dim, self.terms.iter().map(|(b, c)| (*b, c.clone())))
    }

    pub fn terms(&self) -> impl Iterator<Item = (Blade, &Rational)> + '_ {
        self.terms.iter().map(|(b, c)| (*b, c))
    }

    pub fn blades(&self) -> impl Iterator<Item = Blade> + '_ {
        self.terms.keys().copied()
    }

    pub fn coeff(&self, b: Blade) -> Rational {
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

    /// True if this is exactly the scalar `value`.
    pub fn is_scalar(&self, value: &Rational) -> bool {
        if value.is_zero() {
            return self.is_zero();
        }
        self.terms.len() == 1 && self.terms.get(&Blade::SCALAR) == Some(value)
    }

    pub fn scale(&self, k: &Rational) -> Multivector {
        if k.is_zero() {
            return Multivector::zero(self.dim);
        }
        Multivector {
            dim: self.dim,
            terms: self.terms.iter().map(|(b, c)| (*b, c * k)).collect(),
        }
    }

    pub fn checked_add(&self, other: &Multivector) -> Result<Multivector, AlgebraError> {
        self.same_dim(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.accumulate(*b, c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Multivector) -> Result<Multivector, AlgebraError> {
        self.same_dim(other)?;
        let mut out = Multivector::zero(self.dim);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let p = x * y;
                let p = if product_sign(a.0, b.0) < 0 { -p } else { p };
                out.accumulate(Blade(a.0 ^ b.0), p);
            }
        }
        Ok(out)
    }

    fn same_dim(&self, other: &Multivector) -> Result<(), AlgebraError> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(AlgebraError::DimensionMismatch(self.dim, other.dim))
        }
    }

    pub fn reverse(&self) -> Multivector {
        Multivector {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(b, c)| (*b, if b.reverse_sign() < 0 { -c } else { c.clone() }))
                .collect(),
        }
    }

    pub fn grade_part(&self, k: u32) -> Multivector {
        self.filter(|b| b.grade() == k)
    }

    pub fn filter(&self, keep: impl Fn(Blade) -> bool) -> Multivector {
        Multivector {
            dim: self.dim,
            terms: self.terms.iter().filter(|(b, _)| keep(**b)).map(|(b, c)| (*b, c.clone())).collect(),
        }
    }

    /// Grades present, ascending.
    pub fn grades(&self) -> Vec<u32> {
        let mut g: Vec<u32> = self.terms.keys().map(|b| b.grade()).collect();
        g.sort_unstable();
        g.dedup();
        g
    }

    /// `-e_{1..n} x`.
    pub fn dual(&self) -> Multivector {
        -(&Multivector::pseudoscalar(self.dim) * self)
    }

    /// `(xy - yx) / 2`.
    pub fn commutator(&self, other: &Multivector) -> Multivector {
        (&(self * other) - &(other * self)).scale(&frac(1, 2))
    }

    /// `xy + yx`.
    pub fn anticommutator(&self, other: &Multivector) -> Multivector {
        &(self * other) + &(other * self)
    }

    pub fn pow(&self, k: u32) -> Multivector {
        let mut out = Multivector::one(self.dim);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Union of the generator masks of all terms.
    pub fn support(&self) -> u32 {
        self.terms.keys().fold(0, |m, b| m | b.0)
    }

    /// Coefficient-wise sign map; handy for comparing sign patterns.
    pub fn signs(&self) -> Vec<(Blade, i8)> {
        self.terms
            .iter()
            .map(|(b, c)| (*b, if c > &Rational::zero() { 1 } else { -1 }))
            .collect()
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::form::format_form(self))
    }
}

impl<'a> Add<&'a Multivector> for &'a Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        self.checked_add(rhs).expect("multivector addition")
    }
}

impl<'a> Sub<&'a Multivector> for &'a Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        self.checked_add(&-rhs).expect("multivector subtraction")
    }
}

impl<'a> Mul<&'a Multivector> for &'a Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.checked_mul(rhs).expect("multivector product")
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        &self + &rhs
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        &self - &rhs
    }
}

impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        &self * &rhs
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        Multivector { dim: self.dim, terms: self.terms.iter().map(|(b, c)| (*b, -c)).collect() }
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        -&self
    }
}
