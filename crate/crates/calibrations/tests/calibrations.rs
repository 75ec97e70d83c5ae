use sedenion_calibrations::named::{printed_theta_i, theta3, theta_i};
use sedenion_calibrations::quintets::quintet_product;
use sedenion_calibrations::sharp::Family;
use sedenion_calibrations::*;
use sedenion_cd::{census, octonion_like_classify, triad_class, AlgebraTag, Triad};
use sedenion_core::rational::int;
use sedenion_core::{parse_form, Blade, Multivector};
use sedenion_maps::GenMap;

fn e(s: &str) -> Blade {
    Blade::from_hex(s).unwrap()
}

/// Relabels the support of a 3-form onto `1..=7`, keeping order.
fn reindex(x: &Multivector) -> Multivector {
    let support: Vec<u8> = Blade(x.support()).indices().collect();
    let terms = x.terms().map(|(b, c)| {
        let idx: Vec<u8> = b.indices().map(|k| support.iter().position(|&s| s == k).unwrap() as u8 + 1).collect();
        (Blade::from_indices(&idx), c.clone())
    });
    Multivector::from_terms(7, terms).unwrap()
}

#[test]
fn every_identity_holds() {
    let reports = all_identities();
    assert_eq!(reports.len(), 23);
    for r in &reports {
        assert!(r.pass, "{} lhs {:?} rhs {:?}", r.identity, r.lhs_terms, r.rhs_terms);
    }
    let seven = verify_identity(IdentityId::SevenDc);
    assert_eq!(seven.lhs_terms, ["-(16)"]);
    let json = serde_json::to_value(&seven).unwrap();
    for k in ["identity", "pass", "lhs_terms", "rhs_terms"] {
        assert!(json.get(k).is_some());
    }
}

#[test]
fn cube_law_terms() {
    let expected = ["123", "145", "167", "246", "257", "347", "356"];
    for (i, t) in (9..=15).zip(expected) {
        assert_eq!(cube_law(i).admissible, [e(t)], "Theta_{i}");
    }
    for i in 1..=8 {
        assert!(cube_law(i).pass);
    }
}

#[test]
fn theta_terms_are_the_associative_triads() {
    let m = GenMap::map15();
    let t3 = theta3();
    assert_eq!(t3.len(), 35);
    let mut triads = Vec::new();
    for (b, c) in t3.terms() {
        let idx: Vec<u32> = b.indices().map(u32::from).collect();
        let t = Triad::new(idx[0], idx[1], idx[2]).unwrap();
        assert!(triad_class(t).tag.is_associative());
        triads.push(t);
        let (s, img) = m.map_blade(b).unwrap();
        assert_eq!(img.0, 0);
        assert_eq!(int(-s as i64), *c, "e{}", b.to_hex());
    }
    triads.dedup();
    assert_eq!(triads.len(), census(4).associative());
}

#[test]
fn subalgebra_three_forms_classify_by_row() {
    for row in sedenion_calibrations::fixtures::subalgebra_rows() {
        let t = theta_i(row.index).unwrap();
        assert_eq!(t.support(), row.phi.mask());
        let c = octonion_like_classify(&reindex(&t)).unwrap();
        assert_eq!(c.tag, row.class, "Theta_{}", row.index);
        assert_eq!(row.class, if row.index <= 8 { AlgebraTag::O } else { AlgebraTag::P4 });
    }
}

#[test]
fn printed_three_forms_are_invertible_partners() {
    // the printed 3-forms agree with the restriction up to signs and satisfy
    // (3 Phi_i + Theta_i)^2 = -16
    for i in 1..=15 {
        let p = printed_theta_i(i).unwrap();
        let t = theta_i(i).unwrap();
        assert_eq!(p.blades().collect::<Vec<_>>(), t.blades().collect::<Vec<_>>());
        let x = &build(NamedForm::PhiI(i)).unwrap().scale(&int(3)) + &p;
        assert!((&x * &x).is_scalar(&int(-16)), "Theta_{i}");
    }
    let restricted = theta_i(1).unwrap();
    let x = &build(NamedForm::PhiA).unwrap().scale(&int(3)) + &restricted;
    assert!(!(&x * &x).is_scalar(&int(-16)));
}

#[test]
fn octonion_terms_contain_e8() {
    let eight = e("8").mask();
    assert!(build(NamedForm::PhiO).unwrap().blades().all(|b| b.mask() & eight != 0));
    assert!(build(NamedForm::PhiP).unwrap().blades().all(|b| b.mask() & eight == 0));
    assert_eq!(build(NamedForm::PhiA).unwrap().support() & eight, 0);
}

#[test]
fn phi_is_the_loop_forms() {
    let mut from_loops: Vec<Blade> =
        sedenion_cd::loops(4).iter().map(|l| sedenion_maps::loop_to_form(l).unwrap()).collect();
    from_loops.sort();
    assert_eq!(build(NamedForm::Phi).unwrap().blades().collect::<Vec<_>>(), from_loops);
}

#[test]
fn quintets() {
    let counts = idempotent_quintets();
    assert_eq!(counts, QuintetCounts { total: 3003, passing: 2688, failing: 315 });
    let display = parse_form("+12478BDE +12479ACF +12568BCF +12569ADE +13468ADF", 15).unwrap();
    let blades: Vec<Blade> = display.blades().collect();
    let dual = build(NamedForm::PhiDual).unwrap();
    let doubled = (&Multivector::one(15) + &dual).scale(&int(2));
    let five = blades.iter().fold(Multivector::one(15), |acc, &b| {
        &acc * &(&Multivector::one(15) + &Multivector::blade(15, b, int(1)))
    });
    assert_eq!(five, doubled);
    assert_eq!(quintet_product(&blades).scale(&int(32)), five);
}

#[test]
fn sharp_algebras() {
    let (a7, r7) = sharp_algebra(7).unwrap();
    assert_eq!(a7.basis.len(), 8);
    assert_eq!(a7.extended.len(), 16);
    assert!(r7.pass());
    assert_eq!(r7.triples, 7);
    let (a15, r15) = sharp_algebra(15).unwrap();
    assert_eq!(a15.basis.len(), 16);
    assert!(r15.pass());
    assert_eq!(r15.triples, 35);
    assert!(sharp_algebra(9).is_err());
    // distinct dual terms multiply to a third dual term
    let terms = &a15.basis[1..];
    for (i, &x) in terms.iter().enumerate() {
        for &y in &terms[i + 1..] {
            assert!(terms.contains(&x.mul(y).1));
        }
    }
}

#[test]
fn pair_swap_rows() {
    for i in 1..=15 {
        let p = pair_swap_profile(i).unwrap();
        assert_eq!(p.to_pseudoscalar, 1);
        assert_eq!(p.elsewhere, 0);
        match Family::of(i) {
            Family::A => {
                assert_eq!(p.counts(), (0, 0, 0, 7));
                assert_eq!(p.a_partner, None);
            }
            Family::O => {
                assert_eq!(p.counts(), (1, 3, 3, 0));
                assert_eq!(p.a_partner, Some(Family::P));
            }
            Family::P => {
                assert_eq!(p.counts(), (1, 0, 0, 6));
                assert_eq!(p.a_partner, Some(Family::O));
            }
        }
    }
}

#[test]
fn unknown_names_fail() {
    assert!("Theta_0".parse::<NamedForm>().is_err());
    assert!(sedenion_calibrations::named::theta_i(16).is_err());
}
