use std::collections::BTreeSet;

use proptest::prelude::*;
use sedenion_core::{parse_form, Blade, Rotor};
use sedenion_invariants::candidate::{cyclic_invariants, mixed_invariants, primaries, signed_candidates, InvFamily, Pairing};
use sedenion_invariants::closure::{family_commutator_table, listed_cross_cases, CellLabel, ClosureTable, SignedFamilies};
use sedenion_invariants::decomposition::{alpha_beta_delta, stabilizer, stabilizer_check, QuadDecomposition};
use sedenion_invariants::fixtures::{resolve_table, resolved_fixtures};
use sedenion_invariants::invariance::{invariance, is_invariant, sign_search, Invariance};
use sedenion_invariants::{cl7, g2, profiles};

fn e(s: &str) -> Blade {
    Blade::from_hex(s).unwrap()
}

fn find(terms: [&str; 4], signs: [i8; 4]) -> sedenion_invariants::Candidate {
    let want: BTreeSet<Blade> = terms.iter().map(|t| e(t)).collect();
    let p = primaries().into_iter().find(|p| p.pairs.iter().copied().collect::<BTreeSet<_>>() == want).unwrap();
    let mut s = [0; 4];
    for (k, b) in p.pairs.iter().enumerate() {
        s[k] = signs[terms.iter().position(|t| e(t) == *b).unwrap()];
    }
    p.with_signs(s)
}

#[test]
fn generation_counts() {
    let p = primaries();
    assert_eq!(p.len(), 105);
    assert_eq!(p.iter().filter(|p| p.pairing == Pairing::Cyclic).count(), 45);
    assert_eq!(p.iter().collect::<BTreeSet<_>>().len(), 105);
    let s = signed_candidates();
    assert_eq!(s.len(), 420);
    assert_eq!(s.iter().map(|c| c.canonical()).collect::<BTreeSet<_>>().len(), 420);
    assert_eq!(signed_candidates(), s);
    let families: Vec<usize> = InvFamily::ALL.iter().map(|f| p.iter().filter(|x| x.family() == *f).count()).collect();
    assert_eq!(families, vec![7, 21, 21, 28, 28]);
}

#[test]
fn generation_examples() {
    let c = cyclic_invariants(e("234589EF")).unwrap();
    assert!(c.iter().any(|p| p.pairs == [e("23"), e("45"), e("89"), e("EF")]));
    let m = mixed_invariants(e("89ABCDEF")).unwrap();
    assert_eq!(m.len(), 4);
    assert!(mixed_invariants(e("1234")).is_err());
}

#[test]
fn published_examples_are_invariant() {
    assert!(is_invariant(&find(["89", "AB", "CD", "EF"], [1, 1, 1, 1])));
    assert!(is_invariant(&find(["23", "45", "AB", "CD"], [1, -1, 1, -1])));
}

#[test]
fn unpaired_quad_is_not_invariant() {
    let terms = [(1, e("12")), (1, e("34")), (1, e("56")), (1, e("78"))];
    let phi = sedenion_calibrations::named::build(sedenion_calibrations::named::NamedForm::Phi).unwrap();
    let r = Rotor::from_bivectors(15, &terms).unwrap();
    assert_ne!(r.conjugate(&phi), phi);
}

#[test]
fn every_primary_has_four_even_patterns() {
    for p in primaries() {
        let found = sign_search(&p);
        assert_eq!(found.len(), 4, "{}", p.with_signs([1; 4]));
        assert!(found.iter().all(|s| p.with_signs(*s).even()));
    }
}

#[test]
fn fixtures_resolve() {
    let all = resolved_fixtures().unwrap();
    let mut corrected = Vec::new();
    for (fam, entries) in &all {
        for x in entries {
            assert!(x.printed_invariance.is_relaxed_pass());
            assert!(is_invariant(&x.resolved));
            assert!(sign_search(&x.resolved.primary).contains(&x.resolved.canonical().signs));
            if x.corrected() {
                assert!(matches!(&x.printed_invariance, Invariance::ParityRelaxed { flipped } if flipped.len() == 8));
                assert!(!x.printed.even());
                corrected.push(format!("{fam}{} {}", x.row, x.resolved));
            }
        }
    }
    assert_eq!(
        corrected,
        [
            "OC6 -17 +24 -9F +AC",
            "OM4 -1F +2C -4A +79",
            "OM5 -19 +2A +5D -6E",
            "OM24 +2F +3E -6B -7A",
            "PM18 +29 +38 +4F +5E",
            "PM28 +4B +5A +69 +78",
        ]
    );
}

#[test]
fn odd_patterns_are_parity_relaxed() {
    let c = find(["89", "AB", "CD", "EF"], [1, 1, 1, -1]);
    assert!(matches!(invariance(&c), Invariance::ParityRelaxed { .. }));
}

#[test]
fn quad_relations_hold_for_every_primary() {
    for p in primaries() {
        let (d, r) = alpha_beta_delta(&p.with_signs([1; 4]));
        assert!(r.all(), "{}: {r:?}", p.with_signs([1; 4]));
        assert!(!d.delta.is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]
    #[test]
    fn alpha_beta_vanishes(k in 0usize..420) {
        let c = signed_candidates()[k];
        let (d, _) = alpha_beta_delta(&c);
        prop_assert!((&d.alpha * &d.beta).is_zero());
    }
}

#[test]
fn stabiliser_selects_octonion_cyclic() {
    for c in g2::octonion_cyclic().unwrap() {
        assert!(stabilizer_check(&c));
    }
    for f in [InvFamily::A, InvFamily::PC, InvFamily::OM, InvFamily::PM] {
        let first = resolve_table(f).unwrap()[0].resolved;
        assert!(!stabilizer_check(&first), "{f}");
    }
    let s = stabilizer(&QuadDecomposition::identity());
    assert!(s.pass && s.degenerate);
}

#[test]
fn automorphisms_are_the_octonion_cyclic_family() {
    let found: BTreeSet<_> = g2::automorphism_candidates().iter().map(|c| c.canonical()).collect();
    let oc: BTreeSet<_> = g2::octonion_cyclic().unwrap().iter().map(|c| c.canonical()).collect();
    assert_eq!(found.len(), 21);
    assert_eq!(found, oc);
}

#[test]
fn action_table_rows() {
    let rows = profiles::action_table();
    assert_eq!(rows.len(), 7);
    for r in &rows {
        assert!(r.pass(), "{r:?}");
    }
    let o4 = rows.iter().find(|r| r.kind == profiles::RowKind::MixedO4).unwrap();
    assert_eq!(o4.members, 7);
}

#[test]
fn g2_report_as_computed() {
    let r = g2::g2_report().unwrap();
    assert_eq!(r.rank, 14);
    assert_eq!(r.printed_rank, 15);
    assert_eq!(r.closure, (210, 210));
    assert_eq!(r.gt15_rank, 14);
    assert_eq!(r.gt15_outside, ["C", "F", "H", "I", "J", "K", "L", "M", "N"]);
    assert_ne!(r.gt15_closure.0, r.gt15_closure.1);
    let bad_support: Vec<&str> = r.gt7.iter().filter(|x| !x.support_match).map(|x| x.label.as_str()).collect();
    let bad_sign: Vec<&str> = r.gt7.iter().filter(|x| x.support_match && !x.signed_match).map(|x| x.label.as_str()).collect();
    assert_eq!(bad_support, ["D", "G"]);
    assert_eq!(bad_sign, ["E", "N"]);
    assert!(!r.pass());
}

#[test]
fn cl7_pairs_fix_theta() {
    let pairs = cl7::cl7_pairs();
    assert_eq!(pairs.len(), 21);
    assert!(pairs.iter().all(|p| p.fixing_signs.len() == 1));
    assert_eq!(cl7::cl7_rank(&pairs), 14);
    assert!(cl7::fixes([(1, e("12")), (1, e("47"))]));
    assert!(!cl7::fixes([(1, e("12")), (-1, e("47"))]));
}

#[test]
fn closure_tables_as_computed() {
    let fams = SignedFamilies::from_fixtures().unwrap();
    let label = |s: &str| s.parse::<CellLabel>().unwrap();
    let a = family_commutator_table(&fams, ClosureTable::A);
    assert_eq!(a[0].outcome.label, label("A(1+2)"));
    let failing: Vec<(u8, u8)> = a.iter().filter(|c| !c.pass()).map(|c| (c.alpha, c.beta)).collect();
    assert_eq!(failing, [(2, 3), (3, 2)]);
    assert_eq!(a[6].outcome.label, label("A(1+3)"));

    let oc = family_commutator_table(&fams, ClosureTable::OC);
    assert!(oc.iter().all(|c| c.pass() && c.outcome.unmatched == 0));
    assert_eq!(oc[0].outcome.label, label("OC(1)"));

    let m = family_commutator_table(&fams, ClosureTable::M);
    assert!(m.iter().all(|c| c.outcome.label == CellLabel::Nz));

    let pc = family_commutator_table(&fams, ClosureTable::PC);
    let failing: Vec<(u8, u8, String)> =
        pc.iter().filter(|c| !c.pass()).map(|c| (c.alpha, c.beta, c.outcome.label.to_string())).collect();
    assert_eq!(
        failing,
        [(3, 4, "OC(2)+PC(3)".into()), (4, 2, "OC(3+4)+PC".into()), (4, 3, "OC(2)+PC(3)".into())]
    );
}

#[test]
fn cross_cases_as_computed() {
    let fams = SignedFamilies::from_fixtures().unwrap();
    let cases = listed_cross_cases(&fams);
    let pass: Vec<bool> = cases.iter().map(|c| c.pass()).collect();
    assert_eq!(pass, [false, false, true, false, true]);
}

#[test]
fn candidate_forms_parse() {
    let c = find(["23", "45", "AB", "CD"], [1, -1, 1, -1]);
    assert_eq!(c.q(), parse_form("+(1/2)e23 -(1/2)e45 +(1/2)eAB -(1/2)eCD", 15).unwrap());
}
