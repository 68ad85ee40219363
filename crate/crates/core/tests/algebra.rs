use proptest::prelude::*;
use weakq::algebra::{
    maps, parse, reduce_j_power, relations, render, verify_relations, Element, Flavor, Gen,
    Monomial, RuleSet, Strategy, Tail, WAlgebra,
};
use weakq::coeff::{quantum_int, GenericField, ScalarField};
use weakq::Error;

type S = weakq::coeff::RationalFunction;

fn alg() -> WAlgebra<GenericField> {
    WAlgebra::new(GenericField)
}

fn nf(a: &WAlgebra<GenericField>, text: &str) -> Element<S> {
    a.normalize(&parse(text, Flavor::W, a.field()).unwrap()).unwrap()
}

fn nv(a: &WAlgebra<GenericField>, text: &str) -> Result<Element<S>, Error> {
    a.normalize_v(&parse(text, Flavor::V, a.field())?)
}

fn show(a: &WAlgebra<GenericField>, x: &Element<S>) -> String {
    render(x, Flavor::W, a.field())
}

#[test]
fn normalize_examples() {
    let a = alg();
    assert!(nf(&a, "K*E - q^2*E*K").is_zero());
    assert!(nf(&a, "(J-1)*E*K").is_zero());
    assert_eq!(show(&a, &nf(&a, "K^2*Kb")), "K");
    assert_eq!(nf(&a, "E*F - F*E"), nf(&a, "(q - q^-1)^-1*(K - Kb)"));
    assert_eq!(show(&a, &nf(&a, "1")), "1");
    assert_eq!(show(&a, &nf(&a, "E*F - F*E")), "(q)/(q^2 - 1)*K - (q)/(q^2 - 1)*Kb");
}

#[test]
fn rendering_round_trips_through_the_parser() {
    let a = alg();
    for text in ["F^2*E^2*K", "E*F*Kb^2 - q*F*E*J", "(q + 1)*F*E + 3/2", "Kb*F*E*K^3"] {
        let x = nf(&a, text);
        assert_eq!(nf(&a, &show(&a, &x)), x, "{text}");
    }
}

#[test]
fn normalize_v_examples() {
    let a = alg();
    assert_eq!(nv(&a, "K*Eh*Kb").unwrap(), nv(&a, "q^2*Eh").unwrap());
    assert_eq!(
        nv(&a, "Eh*J*Fh - Fh*J*Eh").unwrap(),
        nv(&a, "(K - Kb)/(q - q^-1)").unwrap()
    );
    assert_eq!(nv(&a, "J*Eh").unwrap(), nv(&a, "Eh*J").unwrap());
    assert!(matches!(nv(&a, "K*E"), Err(Error::UnsupportedWord(_))));
    assert!(matches!(nv(&a, "Fv"), Err(Error::UnsupportedWord(_))));
    assert_eq!(
        render(&nv(&a, "K*Eh*Kb").unwrap(), Flavor::V, a.field()),
        "q^2*Eh"
    );
}

#[test]
fn j_calculus() {
    let a = alg();
    let k = a.gen(Gen::K);
    let kb = a.gen(Gen::Kb);
    assert_eq!(a.j_conjugate(&k), k);
    assert_eq!(a.j_conjugate(&a.one()), a.gen(Gen::J));
    assert_eq!(a.j_conjugate(&nf(&a, "E + 1")), nf(&a, "E*J + J"));
    assert_eq!(a.j_product(&k, &kb), a.gen(Gen::J));
    assert_eq!(a.j_product(&a.one(), &a.one()), a.gen(Gen::J));
    assert_eq!(a.j_product(&a.gen(Gen::E), &a.gen(Gen::F)), nf(&a, "E*J*F"));
    assert_eq!(reduce_j_power(2, 1), Monomial::tail(Tail::K(1)));
}

#[test]
fn quotient_by_j_minus_one() {
    let a = WAlgebra::with_rules(GenericField, RuleSet::ModJ);
    assert_eq!(show(&a, &nf(&a, "K*Kb")), "1");
    assert_eq!(show(&a, &nf(&a, "Kb*K")), "1");
    for g in ["E", "F", "K", "Kb", "E*F*K"] {
        assert!(nf(&a, &format!("(J - 1)*{g}")).is_zero());
    }
    // the four quantum sl2 relations
    assert!(nf(&a, "K*E*Kb - q^2*E").is_zero());
    assert!(nf(&a, "K*F*Kb - q^-2*F").is_zero());
    assert_eq!(nf(&a, "E*F - F*E"), nf(&a, "(K - Kb)/(q - q^-1)"));
}

#[test]
fn centrality_of_j() {
    let a = alg();
    let j = a.gen(Gen::J);
    for m in Monomial::up_to_degree(5) {
        let x = a.monomial(m);
        assert!(a.commutator(&j, &x).is_zero(), "{m}");
    }
}

#[test]
fn zero_divisors() {
    let a = alg();
    for g in ["K", "Kb", "E*K", "F*K", "E*J", "F*J"] {
        assert!(nf(&a, &format!("(J - 1)*{g}")).is_zero(), "{g}");
        assert!(nf(&a, &format!("{g}*(J - 1)")).is_zero(), "{g}");
    }
    assert!(nv(&a, "Eh*(J - 1)").unwrap().is_zero());
    // E itself is not annihilated: E and E J are distinct basis elements
    assert!(!nf(&a, "(J - 1)*E").is_zero());
}

#[test]
fn noncancellativity_witness() {
    let a = alg();
    assert_eq!(nf(&a, "K*1"), nf(&a, "K*J"));
    assert_ne!(nf(&a, "1"), nf(&a, "J"));
}

fn pow(a: &WAlgebra<GenericField>, g: Gen, n: u32) -> Element<S> {
    a.word(&vec![g; n as usize])
}

#[test]
fn k_power_commutation() {
    let a = alg();
    let f = a.field();
    for m in 0..=5u32 {
        for n in 0..=5u32 {
            let (mi, ni) = (m as i64, n as i64);
            let cases = [
                (Gen::E, Gen::K, -2 * mi * ni),
                (Gen::F, Gen::K, 2 * mi * ni),
                (Gen::E, Gen::Kb, 2 * mi * ni),
                (Gen::F, Gen::Kb, -2 * mi * ni),
            ];
            for (x, k, e) in cases {
                let lhs = a.mul(&pow(&a, x, m), &pow(&a, k, n));
                let rhs = a.scale(&a.mul(&pow(&a, k, n), &pow(&a, x, m)), &f.q_pow(e));
                assert_eq!(lhs, rhs, "{x:?}^{m} {k:?}^{n}");
            }
        }
    }
}

/// `[m] (q^a K - q^-a Kb) / (q - q^-1)` with `a = s (m - 1)`.
fn cartan_factor(a: &WAlgebra<GenericField>, m: i64, s: i64) -> Element<S> {
    let f = a.field();
    let c = f
        .div(&quantum_int(m, f), &f.sub(&f.q_pow(1), &f.q_pow(-1)))
        .unwrap();
    let k = a.scale(&a.gen(Gen::K), &f.q_pow(s * (m - 1)));
    let kb = a.scale(&a.gen(Gen::Kb), &f.q_pow(-s * (m - 1)));
    a.scale(&a.sub(&k, &kb), &c)
}

#[test]
fn e_f_power_commutators() {
    let a = alg();
    let e = a.gen(Gen::E);
    let f = a.gen(Gen::F);
    for m in 1..=5u32 {
        let mi = m as i64;
        let fm1 = pow(&a, Gen::F, m - 1);
        let em1 = pow(&a, Gen::E, m - 1);
        let lhs1 = a.commutator(&e, &pow(&a, Gen::F, m));
        assert_eq!(lhs1, a.mul(&fm1, &cartan_factor(&a, mi, -1)), "ef1 m={m}");
        assert_eq!(lhs1, a.mul(&cartan_factor(&a, mi, 1), &fm1), "ef1' m={m}");
        let lhs2 = a.commutator(&pow(&a, Gen::E, m), &f);
        assert_eq!(lhs2, a.mul(&cartan_factor(&a, mi, -1), &em1), "ef2 m={m}");
        assert_eq!(lhs2, a.mul(&em1, &cartan_factor(&a, mi, 1)), "ef2' m={m}");
    }
    assert!(a.commutator(&e, &a.one()).is_zero());
}

#[test]
fn sandwiched_commutation() {
    let a = alg();
    let j = a.gen(Gen::J);
    let eh = nv(&a, "Eh").unwrap();
    let fh = nv(&a, "Fh").unwrap();
    let f = a.field();
    let p = |x: &Element<S>, n: u32| a.mul_all(std::iter::repeat_n(x, n as usize));
    for m in 0..=3u32 {
        for n in 0..=3u32 {
            let e = 2 * m as i64 * n as i64;
            for (x, k, sign) in [
                (&eh, Gen::K, -1),
                (&fh, Gen::K, 1),
                (&eh, Gen::Kb, 1),
                (&fh, Gen::Kb, -1),
            ] {
                let lhs = a.mul_all([&j, &p(x, m), &pow(&a, k, n)]);
                let rhs = a.scale(&a.mul_all([&pow(&a, k, n), &p(x, m), &j]), &f.q_pow(sign * e));
                assert_eq!(lhs, rhs);
            }
        }
        if m == 0 {
            continue;
        }
        let mi = m as i64;
        let lhs1 = a.sub(
            &a.mul_all([&j, &eh, &j, &p(&fh, m), &j]),
            &a.mul_all([&j, &p(&fh, m), &j, &eh, &j]),
        );
        let fm1 = p(&fh, m - 1);
        assert_eq!(lhs1, a.mul_all([&j, &fm1, &cartan_factor(&a, mi, -1)]));
        assert_eq!(lhs1, a.mul_all([&cartan_factor(&a, mi, 1), &fm1, &j]));
        let lhs2 = a.sub(
            &a.mul_all([&j, &p(&eh, m), &j, &fh, &j]),
            &a.mul_all([&j, &fh, &j, &p(&eh, m), &j]),
        );
        let em1 = p(&eh, m - 1);
        assert_eq!(lhs2, a.mul_all([&cartan_factor(&a, mi, -1), &em1, &j]));
        assert_eq!(lhs2, a.mul_all([&j, &em1, &cartan_factor(&a, mi, 1)]));
    }
}

#[test]
fn omega_is_an_involutive_automorphism() {
    let a = alg();
    let om = maps::omega_w(&a);
    assert!(verify_relations(&om, relations::W, &a).pass);
    for m in Monomial::up_to_degree(4) {
        let x = a.monomial(m);
        let free = weakq::algebra::to_free(&x, Flavor::W).unwrap();
        let once = weakq::algebra::apply_morphism(&om, &free, &a).unwrap();
        let free2 = weakq::algebra::to_free(&once, Flavor::W).unwrap();
        let twice = weakq::algebra::apply_morphism(&om, &free2, &a).unwrap();
        assert_eq!(twice, x, "{m}");
    }
    let e = parse("E", Flavor::W, a.field()).unwrap();
    assert_eq!(
        weakq::algebra::apply_morphism(&om, &e, &a).unwrap(),
        a.gen(Gen::F)
    );
}

#[test]
fn presentation_maps() {
    let a = alg();
    assert!(verify_relations(&maps::omega_v(&a), relations::V, &a).pass);
    assert!(verify_relations(&maps::chi(&a), relations::W, &a).pass);
    assert!(verify_relations(&maps::sandwich_model(&a), relations::V, &a).pass);
    assert!(verify_relations(&maps::psi_w(&a), relations::W_PRIME, &a).pass);
    assert!(verify_relations(&maps::phi_w(&a), relations::W, &a).pass);
    let swap = verify_relations(&maps::swap_e_k(&a), relations::W, &a);
    assert!(!swap.pass);
    assert!(swap.failures().any(|i| i.input.starts_with("w3a")));
}

#[test]
fn phi_after_psi_is_identity_on_generators() {
    let a = alg();
    let (phi, psi) = (maps::phi_w(&a), maps::psi_w(&a));
    for g in ["E", "F", "K", "Kb", "L"] {
        let x = parse(g, Flavor::W, a.field()).unwrap();
        let y = weakq::algebra::apply_morphism(&psi, &x, &a).unwrap();
        let back = weakq::algebra::to_free(&y, Flavor::W).unwrap();
        let z = weakq::algebra::apply_morphism(&phi, &back, &a).unwrap();
        assert_eq!(z, a.normalize(&x).unwrap(), "{g}");
    }
}

fn word_strategy() -> impl proptest::strategy::Strategy<Value = Vec<Gen>> {
    prop::collection::vec(
        prop::sample::select(vec![Gen::E, Gen::F, Gen::K, Gen::Kb, Gen::J]),
        0..=8,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn rewriting_is_confluent(
        words in prop::collection::vec((word_strategy(), -3i64..=3), 1..=3),
        s1 in any::<u64>(),
        s2 in any::<u64>(),
    ) {
        let a = alg();
        let f = a.field();
        let mut x = Element::zero();
        let mut y = Element::zero();
        let mut z = Element::zero();
        for (i, (w, c)) in words.iter().enumerate() {
            let c = f.from_int(*c);
            x.add_scaled(&a.rewrite_word(w, Strategy::Random(s1.wrapping_add(i as u64))), &c, f);
            y.add_scaled(&a.rewrite_word(w, Strategy::Random(s2.wrapping_add(i as u64))), &c, f);
            z.add_scaled(&a.word(w), &c, f);
        }
        prop_assert_eq!(&x, &y);
        prop_assert_eq!(&x, &z);
    }

    #[test]
    fn j_conjugation_is_idempotent(w in word_strategy(), v in word_strategy()) {
        let a = alg();
        let x = a.add(&a.word(&w), &a.word(&v));
        let once = a.j_conjugate(&x);
        prop_assert_eq!(a.j_conjugate(&once), once);
    }

    #[test]
    fn multiplication_is_associative(u in word_strategy(), v in word_strategy(), w in word_strategy()) {
        let a = alg();
        let (x, y, z) = (a.word(&u), a.word(&v), a.word(&w));
        prop_assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
    }
}

#[test]
fn library_suites_pass() {
    use weakq::algebra::checks::*;
    let a = alg();
    let mut reports = vec![
        check_k_commutation(&a, 5),
        check_ef_commutators(&a, 5),
        check_v_commutation(&a, 3),
        check_confluence(&a, 100, 7),
        check_mod_j(GenericField),
    ];
    reports.extend(check_j_structure(&a, 4));
    for r in reports {
        assert!(r.pass, "{}", r.to_text());
        assert!(!r.items.is_empty());
    }
}
