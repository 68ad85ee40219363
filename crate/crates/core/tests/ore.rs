use num_rational::BigRational;
use proptest::prelude::*;

use weakq::algebra::{parse, Flavor, Gen, Tail, WAlgebra};
use weakq::coeff::{GenericField, ScalarField};
use weakq::ore::*;
use weakq::Error;

mod common;

use common::*;

#[test]
fn snk_examples() {
    let ext = jackson();
    let ops = ext.ops().clone();
    let a = poly(&[1, -2, 0, 3]);
    let alpha_n = |n: usize| (0..n).fold(a.clone(), |x, _| (ops.alpha)(&x));
    let delta_n = |n: usize| (0..n).fold(a.clone(), |x, _| (ops.delta)(&x));
    for n in 0..5 {
        assert_eq!(ext.snk(n as i64, 0, &a).unwrap(), alpha_n(n));
        assert_eq!(ext.snk(n as i64, n as i64, &a).unwrap(), delta_n(n));
    }
    let ad = (ops.alpha)(&(ops.delta)(&a));
    let da = (ops.delta)(&(ops.alpha)(&a));
    assert_eq!(ext.snk(2, 1, &a).unwrap(), QPoly.add(&ad, &da));
    assert_eq!(ext.snk(2, 3, &a), Err(Error::IndexOutOfRange { n: 2, k: 3 }));
    assert_eq!(ext.snk(2, -1, &a), Err(Error::IndexOutOfRange { n: 2, k: -1 }));
}

#[test]
fn derivation_axioms_on_samples() {
    let ext = jackson();
    let ops = ext.ops();
    assert!(QPoly.is_zero(&(ops.delta)(&QPoly.one())));
    assert_eq!((ops.alpha)(&QPoly.one()), QPoly.one());
    let samples = [poly(&[1, 2]), poly(&[0, 0, 5]), poly(&[-3, 1, 0, 1])];
    for a in &samples {
        for b in &samples {
            let lhs = (ops.delta)(&QPoly.mul(a, b));
            let rhs = QPoly.add(
                &QPoly.mul(&(ops.alpha)(a), &(ops.delta)(b)),
                &QPoly.mul(&(ops.delta)(a), b),
            );
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn skew_mul_examples() {
    let ext = jackson();
    let ops = ext.ops().clone();
    let a = poly(&[2, 0, 1]);
    let ca = ext.constant(a.clone());
    let ta = ext.mul(&ext.t(), &ca);
    let expected = ext.add(&ext.monomial((ops.alpha)(&a), 1), &ext.constant((ops.delta)(&a)));
    assert_eq!(ta, expected);

    let t2a = ext.mul(&ext.mul(&ext.t(), &ext.t()), &ca);
    let twice = ext.mul(&ext.t(), &ta);
    assert_eq!(t2a, twice);
    let mid = QPoly.add(&(ops.alpha)(&(ops.delta)(&a)), &(ops.delta)(&(ops.alpha)(&a)));
    let explicit = [
        ext.monomial((ops.alpha)(&(ops.alpha)(&a)), 2),
        ext.monomial(mid, 1),
        ext.constant((ops.delta)(&(ops.delta)(&a))),
    ]
    .iter()
    .fold(ext.zero(), |acc, x| ext.add(&acc, x));
    assert_eq!(t2a, explicit);

    // delta = 0
    let alpha = ops.alpha.clone();
    let plain = OreExt::new(QPoly, EndoPair::new(move |p: &P| alpha(p), |_: &P| vec![]), "t");
    let tn = (0..4).fold(plain.one(), |acc, _| plain.mul(&acc, &plain.t()));
    let alpha4 = (0..4).fold(a.clone(), |x, _| (ops.alpha)(&x));
    assert_eq!(plain.mul(&tn, &plain.constant(a)), plain.monomial(alpha4, 4));
}

#[test]
fn right_form_examples() {
    let ext = jackson();
    let a = poly(&[1, 1]);
    assert_eq!(ext.right_form(&ext.constant(a.clone())).unwrap(), vec![a.clone()]);
    let no_inverse = OreExt::new(QPoly, EndoPair::new(|p: &P| p.clone(), |_: &P| vec![]), "t");
    assert_eq!(no_inverse.right_form(&no_inverse.t()), Err(Error::AlphaNotInvertible));
    let plain = OreExt::new(
        QPoly,
        EndoPair::new(|p: &P| scale_powers(p, &rat(2)), |_: &P| vec![])
            .with_inverse(|p: &P| scale_powers(p, &BigRational::new(1.into(), 2.into()))),
        "t",
    );
    let p = plain.add(&plain.monomial(scale_powers(&a, &rat(2)), 1), &plain.zero());
    assert_eq!(plain.right_form(&p).unwrap(), vec![vec![], a]);
}

fn arb_poly() -> impl Strategy<Value = P> {
    prop::collection::vec(-4i64..=4, 0..4).prop_map(|v| poly(&v))
}

fn arb_skew() -> impl Strategy<Value = SkewPoly<P>> {
    prop::collection::vec(arb_poly(), 0..4).prop_map(|cs| SkewPoly::new(cs, &QPoly))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn snk_matches_brute_force(a in arb_poly(), n in 0usize..=6, k in 0usize..=6) {
        prop_assume!(k <= n);
        let ext = jackson();
        prop_assert_eq!(ext.snk(n as i64, k as i64, &a).unwrap(), snk_brute(&ext, n, k, &a));
    }

    #[test]
    fn tn_a_expansion(a in arb_poly(), n in 0usize..=6) {
        let ext = jackson();
        let tn = (0..n).fold(ext.one(), |acc, _| ext.mul(&acc, &ext.t()));
        let lhs = ext.mul(&tn, &ext.constant(a.clone()));
        let mut rhs = ext.zero();
        for k in 0..=n {
            let s = ext.snk(n as i64, k as i64, &a).unwrap();
            rhs = ext.add(&rhs, &ext.monomial(s, n - k));
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn skew_mul_is_associative(p in arb_skew(), q in arb_skew(), r in arb_skew()) {
        let ext = jackson();
        prop_assert_eq!(ext.mul(&ext.mul(&p, &q), &r), ext.mul(&p, &ext.mul(&q, &r)));
    }

    #[test]
    fn degree_law(p in arb_skew(), q in arb_skew()) {
        let ext = jackson();
        let pq = ext.mul(&p, &q);
        if let (Some(m), Some(n)) = (p.degree(), q.degree()) {
            prop_assert!(pq.degree().is_some_and(|d| d <= m + n));
            let alpha = ext.ops().alpha.clone();
            let lead = (0..m).fold(q.leading().unwrap().clone(), |x, _| alpha(&x));
            if !QPoly.is_zero(&QPoly.mul(p.leading().unwrap(), &lead)) {
                prop_assert_eq!(pq.degree(), Some(m + n));
            }
        } else {
            prop_assert!(pq.degree().is_none());
        }
    }

    #[test]
    fn right_form_round_trip(p in arb_skew()) {
        let ext = jackson();
        let bs = ext.right_form(&p).unwrap();
        prop_assert_eq!(ext.left_form(&bs), p);
    }
}

#[test]
fn right_form_round_trip_over_k_algebra() {
    let ore = OreW::new(GenericField);
    let a1 = ore.inner();
    let k = a1.base();
    let g = GenericField;
    let mut x = a1.zero();
    for (i, t) in [Tail::K(2), Tail::J, Tail::Kb(1), Tail::One].into_iter().enumerate() {
        let c = weakq::lin::Lin::term(t, g.q_pow(i as i64 - 1), &g);
        x = a1.add(&x, &a1.monomial(k.add(&c, &k.basis(Tail::K(1))), i));
    }
    let bs = a1.right_form(&x).unwrap();
    assert_eq!(a1.left_form(&bs), x);
}

#[test]
fn ore_presentation_examples() {
    let g = GenericField;
    let ore = OreW::new(g);
    let e = ore.gen(Gen::E);
    let f = ore.gen(Gen::F);
    let k = ore.gen(Gen::K);
    let kb = ore.gen(Gen::Kb);
    let a2 = ore.ring();
    assert_eq!(ore.mul(&e, &k), ore.mul(&ore.scalar(g.q_pow(-2)), &ore.mul(&k, &e)));
    assert_eq!(ore.mul(&e, &kb), ore.mul(&ore.scalar(g.q_pow(2)), &ore.mul(&kb, &e)));
    let c = g.inv(&weakq::coeff::q_minus_q_inv(&g)).unwrap();
    let ef = a2.add(&ore.mul(&f, &e), &ore.mul(&ore.scalar(c), &a2.sub(&k, &kb)));
    assert_eq!(ore.mul(&e, &f), ef);
    let one = a2.one();
    assert_eq!(ore.mul(&one, &ef), ef);
    // (kk) collapse in A_0
    assert_eq!(ore.word(&[Gen::K, Gen::Kb]), ore.gen(Gen::J));
    assert_eq!(ore.word(&[Gen::J, Gen::K]), k);
}

#[test]
fn ore_matches_commutator_formula() {
    // [E, F^2] = [2] F (q^-1 K - q Kb) / (q - q^-1)
    let g = GenericField;
    let alg = WAlgebra::new(g);
    let ore = OreW::new(g);
    let formula = alg
        .normalize(&parse("(q + q^-1)*F*(q^-1*K - q*Kb)/(q - q^-1)", Flavor::W, &g).unwrap())
        .unwrap();
    let e = ore.gen(Gen::E);
    let f2 = ore.word(&[Gen::F, Gen::F]);
    let a2 = ore.ring();
    let comm = a2.sub(&ore.mul(&e, &f2), &ore.mul(&f2, &e));
    assert_eq!(comm, ore.element(&formula));
}

#[test]
fn engines_agree() {
    let r = crosscheck_engines(GenericField, 200, 3, 1);
    assert!(r.pass, "{}", r.to_text());
    assert_eq!(r.items.len(), 200);
    assert_eq!(r.items[0].input, "E * K");
    assert_eq!(r.items[1].input, "F^2 * E");
    assert_eq!(r.items[2].input, "1 * 1");
}
