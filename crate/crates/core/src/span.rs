//! Linear spans of multivectors over Q, kept in reduced row echelon form.

use num_traits::{One, Zero};

use crate::blade::Blade;
use crate::multivector::Multivector;
use crate::rational::Rational;

#[derive(Debug, Clone)]
pub struct Span {
    dim: u8,
    rows: Vec<(Blade, Multivector)>,
}

impl Span {
    pub fn new(dim: u8) -> Span {
        Span { dim, rows: Vec::new() }
    }

    pub fn from_vectors<'a>(dim: u8, xs: impl IntoIterator<Item = &'a Multivector>) -> Span {
        let mut s = Span::new(dim);
        for x in xs {
            s.insert(x);
        }
        s
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// What is left of `x` after removing its component in the span.
    pub fn reduce(&self, x: &Multivector) -> Multivector {
        let mut r = x.clone();
        for (pivot, row) in &self.rows {
            let c = r.coeff(*pivot);
            if !c.is_zero() {
                r = &r - &row.scale(&c);
            }
        }
        r
    }

    pub fn contains(&self, x: &Multivector) -> bool {
        self.reduce(x).is_zero()
    }

    /// Adds `x`; returns false if it was already in the span.
    pub fn insert(&mut self, x: &Multivector) -> bool {
        assert_eq!(x.dim(), self.dim, "span dimension");
        let r = self.reduce(x);
        let Some((pivot, c)) = r.terms().next().map(|(b, c)| (b, c.clone())) else {
            return false;
        };
        let row = r.scale(&(Rational::one() / c));
        for (_, other) in self.rows.iter_mut() {
            let k = other.coeff(pivot);
            if !k.is_zero() {
                *other = &*other - &row.scale(&k);
            }
        }
        self.rows.push((pivot, row));
        true
    }
}

/// Rank of a family of multivectors.
pub fn rank<'a>(dim: u8, xs: impl IntoIterator<Item = &'a Multivector>) -> usize {
    Span::from_vectors(dim, xs).rank()
}
