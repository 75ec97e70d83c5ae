use sedenion_cd::{generate_loop, loops, CdBasis, CdElement, Triad};
use sedenion_core::{parse_form, Blade, Rational};
use sedenion_maps::{loop_to_form, GenMap};

fn e(s: &str) -> Blade {
    Blade::from_hex(s).unwrap()
}

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

#[test]
fn images_are_bijective_onto_pure_units() {
    for m in [GenMap::map3(), GenMap::map7(), GenMap::map15()] {
        let mut targets: Vec<u32> = m.images.iter().map(|&(_, b)| b.0).collect();
        targets.sort_unstable();
        assert_eq!(targets, (1..=m.dim as u32).collect::<Vec<_>>());
    }
    assert!(GenMap::map15().images.iter().all(|&(s, _)| s == 1));
}

#[test]
fn quaternion_generators() {
    let m = GenMap::map3();
    assert_eq!(m.map_blade(e("12")).unwrap(), (1, CdBasis(3)));
    assert_eq!(m.map_blade(e("23")).unwrap(), (1, CdBasis(1)));
    assert_eq!(m.map_blade(e("123")).unwrap(), (-1, CdBasis::ONE));
}

#[test]
fn disjoint_blades_map_multiplicatively_up_to_sign() {
    let m = GenMap::map7();
    for a in 0u32..128 {
        for b in 0u32..128 {
            if a & b != 0 {
                continue;
            }
            let (_, ab) = Blade(a).mul(Blade(b));
            let (_, x) = m.map_blade(Blade(a)).unwrap();
            let (_, y) = m.map_blade(Blade(b)).unwrap();
            let (_, z) = m.map_blade(ab).unwrap();
            assert_eq!(sedenion_cd::cd_mul(x, y).1, z);
        }
    }
}

#[test]
fn quaternion_rotor_demo() {
    // 1/2 (1 + e23)(1 + e12) maps to R = 1/2 (1 + o12)(1 + o1)
    let m = GenMap::map3();
    let a = parse_form("(1) +23", 3).unwrap();
    let b = parse_form("(1) +12", 3).unwrap();
    let rotor = (&a * &b).scale(&half());
    let r = m.map_multivector(&rotor).unwrap();
    let o = |s: &str| CdElement::basis(2, CdBasis::parse(s).unwrap());
    let expected = &(&CdElement::scalar(2, Rational::from_integer(1.into())) + &o("o12")) * &(&CdElement::scalar(2, Rational::from_integer(1.into())) + &o("o1"));
    assert_eq!(r, expected.scale(&half()));
    let x = &(&o("o1") + &o("o2")) + &o("o12");
    assert_eq!(&(&r * &x) * &r.conj(), x);
}

#[test]
fn map_filter_examples() {
    // with e7 -> -o123 the kernel pair is e12 + e47, the pair that fixes theta64
    let m7 = GenMap::map7();
    assert!(m7.automorphism_filter(&[(1, e("12")), (1, e("47"))]).unwrap());
    assert!(!m7.automorphism_filter(&[(1, e("12")), (-1, e("47"))]).unwrap());
    assert_eq!(m7.map_blade(e("47")).unwrap(), (-1, CdBasis(3)));
    // with all images positive it is e12 - e47
    let m15 = GenMap::map15();
    assert!(m15.automorphism_filter(&[(1, e("12")), (-1, e("47"))]).unwrap());
    assert!(!m15.automorphism_filter(&[(1, e("12")), (1, e("47"))]).unwrap());
    // all-positive four-pair candidate built from one dual term
    assert!(!m15.automorphism_filter(&[(1, e("12")), (1, e("47")), (1, e("8B")), (1, e("DE"))]).unwrap());
}

#[test]
fn kernel_pair_maps_to_unity() {
    let m = GenMap::map15();
    let q = parse_form("+12 -47", 7).unwrap().scale(&half());
    assert!(m.map_multivector(&q).unwrap().is_zero());
    // (1 + o12)(1 - o3 o123) / 2 = 1
    let one = Rational::from_integer(1.into());
    let a = &CdElement::scalar(4, one.clone()) + &CdElement::basis(4, CdBasis(3));
    let b = &CdElement::scalar(4, one.clone()) - &(&CdElement::basis(4, CdBasis(4)) * &CdElement::basis(4, CdBasis(7)));
    assert!((&a * &b).scale(&half()).is_scalar(&one));
}

#[test]
fn loops_give_the_seven_forms() {
    let phi = parse_form(
        "+1234567 +12389AB +14589CD +16789EF +2468ACE +2578ADF +3478BCF +3568BDE \
         +123CDEF +145ABEF +167ABCD +2469BDF +2579BCE +3479ADE +3569ACF",
        15,
    )
    .unwrap();
    let from_loops: Vec<Blade> = loops(4).iter().map(|l| loop_to_form(l).unwrap()).collect();
    let mut expected: Vec<Blade> = phi.blades().collect();
    let mut got = from_loops.clone();
    expected.sort();
    got.sort();
    assert_eq!(got, expected);
    let first = |a, b, c| loop_to_form(&generate_loop(Triad::new(a, b, c).unwrap()).unwrap()).unwrap();
    assert_eq!(first(1, 2, 4), e("1234567"));
    assert_eq!(first(1, 2, 8), e("12389AB"));
    assert_eq!(first(1, 2, 12), e("123CDEF"));
}

#[test]
fn map_serialises() {
    let m = GenMap::map7();
    let json = serde_json::to_string(&m).unwrap();
    assert_eq!(serde_json::from_str::<GenMap>(&json).unwrap(), m);
}

