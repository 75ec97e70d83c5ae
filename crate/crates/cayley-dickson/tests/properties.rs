use proptest::prelude::*;
use sedenion_cd::element::associator;
use sedenion_cd::{cd_sign, CdBasis, CdElement};
use sedenion_core::Rational;

fn element(level: u8) -> impl Strategy<Value = CdElement> {
    prop::collection::vec((0u32..1 << level, -3i64..=3), 1..5).prop_map(move |ts| {
        CdElement::from_terms(level, ts.into_iter().map(|(m, c)| (CdBasis(m), Rational::from_integer(c.into()))))
    })
}

proptest! {
    #[test]
    fn pure_units_are_power_associative(m in 1u32..64) {
        let x = CdElement::basis(6, CdBasis(m));
        let sq = &x * &x;
        prop_assert!(sq.is_scalar(&Rational::from_integer((-1).into())));
        prop_assert!((&sq * &sq).is_scalar(&Rational::from_integer(1.into())));
    }

    #[test]
    fn octonions_are_alternative(x in element(3), y in element(3)) {
        prop_assert!(associator(&x, &x, &y).unwrap().is_zero());
        prop_assert!(associator(&y, &x, &x).unwrap().is_zero());
    }

    #[test]
    fn quaternions_are_associative(x in element(2), y in element(2), z in element(2)) {
        prop_assert!(associator(&x, &y, &z).unwrap().is_zero());
    }

    #[test]
    fn conjugation_reverses_products(x in element(4), y in element(4)) {
        prop_assert_eq!((&x * &y).conj(), &y.conj() * &x.conj());
    }

    #[test]
    fn xor_law(a in 0u32..64, b in 0u32..64) {
        let p = &CdElement::basis(6, CdBasis(a)) * &CdElement::basis(6, CdBasis(b));
        prop_assert_eq!(p.as_signed_basis(), Some((cd_sign(a, b), CdBasis(a ^ b))));
    }
}
