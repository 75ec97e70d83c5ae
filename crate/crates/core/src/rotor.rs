//! Products of 90 degree rotations.
//!
//! A 90 degree rotation in the plane of a unit 2-blade `b` is `(1 + b)/sqrt(2)`.
//! The irrational factors are tracked as a rational norm so everything stays in Q:
//! the stored element is the unscaled product and `norm` is `1/2^k`.

use num_traits::One;

use crate::blade::Blade;
use crate::error::AlgebraError;
use crate::multivector::Multivector;
use crate::rational::{frac, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rotor {
    element: Multivector,
    factors: Vec<(i8, Blade)>,
    norm: Rational,
}

impl Rotor {
    pub fn identity(dim: u8) -> Rotor {
        Rotor { element: Multivector::one(dim), factors: Vec::new(), norm: Rational::one() }
    }

    /// Builds `prod (1 + s_i b_i)` from pairwise disjoint signed 2-blades.
    pub fn from_bivectors(dim: u8, factors: &[(i8, Blade)]) -> Result<Rotor, AlgebraError> {
        let mut element = Multivector::one(dim);
        let mut used = 0u32;
        for &(s, b) in factors {
            if b.grade() != 2 {
                return Err(AlgebraError::NotBivector(b.to_string()));
            }
            if used & b.0 != 0 {
                let clash = factors.iter().find(|(_, c)| c.0 & b.0 != 0).map(|(_, c)| *c).unwrap();
                return Err(AlgebraError::OverlappingFactors(clash.to_string(), b.to_string()));
            }
            used |= b.0;
            let f = Multivector::from_terms(dim, [(Blade::SCALAR, Rational::one()), (b, Rational::from_integer(s.into()))])?;
            element = &element * &f;
        }
        let norm = frac(1, 1 << factors.len());
        Ok(Rotor { element, factors: factors.to_vec(), norm })
    }

    /// The unscaled product `prod (1 + b_i)`.
    pub fn element(&self) -> &Multivector {
        &self.element
    }

    pub fn factors(&self) -> &[(i8, Blade)] {
        &self.factors
    }

    /// `R reverse(R) = norm * element * reverse(element)`.
    pub fn norm(&self) -> &Rational {
        &self.norm
    }

    /// The unit rotor when the factor count is even, so the scale is rational.
    /// For four factors this is `prod (1 + b_i) / 4`.
    pub fn normalized(&self) -> Option<Multivector> {
        let k = self.factors.len();
        (k % 2 == 0).then(|| self.element.scale(&frac(1, 1 << (k / 2))))
    }

    /// `R reverse(R)`, which is exactly 1.
    pub fn unit_check(&self) -> Multivector {
        (&self.element * &self.element.reverse()).scale(&self.norm)
    }

    /// `R x reverse(R)`.
    pub fn conjugate(&self, x: &Multivector) -> Multivector {
        (&(&self.element * x) * &self.element.reverse()).scale(&self.norm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::form::parse_form;

    fn b(s: &str) -> Blade {
        Blade::from_hex(s).unwrap()
    }

    #[test]
    fn quad_rotor_expansion() {
        let r = Rotor::from_bivectors(15, &[(1, b("89")), (1, b("AB")), (1, b("CD")), (1, b("EF"))]).unwrap();
        let n = r.normalized().unwrap();
        assert_eq!(n.len(), 16);
        assert_eq!(n.grades(), vec![0, 2, 4, 6, 8]);
        assert!(n.terms().all(|(_, c)| *c == frac(1, 4)));
        assert!(r.unit_check().is_scalar(&Rational::one()));
    }

    #[test]
    fn axis_is_fixed() {
        let r = Rotor::from_bivectors(15, &[(1, b("89"))]).unwrap();
        let x = parse_form("+89", 15).unwrap();
        assert_eq!(r.conjugate(&x), x);
        assert!(r.unit_check().is_scalar(&Rational::one()));
        assert!(r.normalized().is_none());
    }

    #[test]
    fn quarter_turn_moves_vectors() {
        // (1+e12) e1 (1-e12) / 2 = -e2
        let r = Rotor::from_bivectors(3, &[(1, b("12"))]).unwrap();
        assert_eq!(r.conjugate(&parse_form("+1", 3).unwrap()), parse_form("-2", 3).unwrap());
    }

    #[test]
    fn identity() {
        let x = parse_form("+1 -23 +(1/2)e123", 3).unwrap();
        assert_eq!(Rotor::identity(3).conjugate(&x), x);
    }

    #[test]
    fn invalid_factors() {
        assert!(matches!(
            Rotor::from_bivectors(7, &[(1, b("12")), (1, b("23"))]),
            Err(AlgebraError::OverlappingFactors(..))
        ));
        assert!(matches!(Rotor::from_bivectors(7, &[(1, b("123"))]), Err(AlgebraError::NotBivector(_))));
    }
}
