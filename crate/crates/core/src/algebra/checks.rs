//! Identity suites for the algebra itself: commutation formulas, confluence
//! of the rewriting system, and the behaviour of `J`.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::{render, Element, Flavor, Gen, Monomial, RuleSet, Strategy, WAlgebra};
use crate::coeff::{quantum_int, ScalarField};
use crate::report::{CheckItem, Report};

fn pow<F: ScalarField>(a: &WAlgebra<F>, g: Gen, n: u32) -> Element<F::Elem> {
    a.word(&vec![g; n as usize])
}

fn power_of<F: ScalarField>(a: &WAlgebra<F>, x: &Element<F::Elem>, n: u32) -> Element<F::Elem> {
    a.mul_all(std::iter::repeat_n(x, n as usize))
}

fn item<F: ScalarField>(
    a: &WAlgebra<F>,
    input: String,
    lhs: &Element<F::Elem>,
    rhs: &Element<F::Elem>,
) -> CheckItem {
    let field = a.field();
    CheckItem::with_pass(
        input,
        render(rhs, Flavor::W, field),
        render(lhs, Flavor::W, field),
        lhs == rhs,
    )
}

/// `[m] (q^a K - q^-a Kb) / (q - q^-1)` with `a = s (m - 1)`.
pub fn cartan_factor<F: ScalarField>(a: &WAlgebra<F>, m: i64, s: i64) -> Element<F::Elem> {
    let f = a.field();
    let c = f
        .div(&quantum_int(m, f), &f.sub(&f.q_pow(1), &f.q_pow(-1)))
        .expect("q - q^-1 is invertible");
    let k = a.scale(&a.gen(Gen::K), &f.q_pow(s * (m - 1)));
    let kb = a.scale(&a.gen(Gen::Kb), &f.q_pow(-s * (m - 1)));
    a.scale(&a.sub(&k, &kb), &c)
}

/// `X^m K^n = q^(-+2mn) K^n X^m` and the `Kb` versions, `0 <= m, n <= max`.
pub fn check_k_commutation<F: ScalarField>(a: &WAlgebra<F>, max: u32) -> Report {
    let f = a.field();
    let mut items = Vec::new();
    for m in 0..=max {
        for n in 0..=max {
            let e = 2 * m as i64 * n as i64;
            let cases = [
                ("ek1", Gen::E, Gen::K, -e),
                ("ek2", Gen::F, Gen::K, e),
                ("ek1 (Kb)", Gen::E, Gen::Kb, e),
                ("ek2 (Kb)", Gen::F, Gen::Kb, -e),
            ];
            for (label, x, k, s) in cases {
                let lhs = a.mul(&pow(a, x, m), &pow(a, k, n));
                let rhs = a.scale(&a.mul(&pow(a, k, n), &pow(a, x, m)), &f.q_pow(s));
                items.push(item(a, format!("{label} m={m} n={n}"), &lhs, &rhs));
            }
        }
    }
    Report::new("k-commutation", items)
}

/// `[E, F^m]` and `[E^m, F]` against their closed forms, `1 <= m <= max`.
pub fn check_ef_commutators<F: ScalarField>(a: &WAlgebra<F>, max: u32) -> Report {
    let e = a.gen(Gen::E);
    let f = a.gen(Gen::F);
    let mut items = Vec::new();
    for m in 1..=max {
        let mi = m as i64;
        let fm1 = pow(a, Gen::F, m - 1);
        let em1 = pow(a, Gen::E, m - 1);
        let lhs1 = a.commutator(&e, &pow(a, Gen::F, m));
        items.push(item(a, format!("ef1 m={m}"), &lhs1, &a.mul(&fm1, &cartan_factor(a, mi, -1))));
        items.push(item(a, format!("ef1' m={m}"), &lhs1, &a.mul(&cartan_factor(a, mi, 1), &fm1)));
        let lhs2 = a.commutator(&pow(a, Gen::E, m), &f);
        items.push(item(a, format!("ef2 m={m}"), &lhs2, &a.mul(&cartan_factor(a, mi, -1), &em1)));
        items.push(item(a, format!("ef2' m={m}"), &lhs2, &a.mul(&em1, &cartan_factor(a, mi, 1))));
    }
    Report::new("ef-commutators", items)
}

/// The sandwiched analogs for `Eh = E J`, `Fh = F J`, `0 <= m, n <= max`.
pub fn check_v_commutation<F: ScalarField>(a: &WAlgebra<F>, max: u32) -> Report {
    let f = a.field();
    let j = a.gen(Gen::J);
    let eh = a.mul(&a.gen(Gen::E), &j);
    let fh = a.mul(&a.gen(Gen::F), &j);
    let mut items = Vec::new();
    for m in 0..=max {
        for n in 0..=max {
            let e = 2 * m as i64 * n as i64;
            for (label, x, k, s) in [
                ("ekv1", &eh, Gen::K, -e),
                ("ekv2", &fh, Gen::K, e),
                ("ekv1 (Kb)", &eh, Gen::Kb, e),
                ("ekv2 (Kb)", &fh, Gen::Kb, -e),
            ] {
                let lhs = a.mul_all([&j, &power_of(a, x, m), &pow(a, k, n)]);
                let rhs = a.scale(&a.mul_all([&pow(a, k, n), &power_of(a, x, m), &j]), &f.q_pow(s));
                items.push(item(a, format!("{label} m={m} n={n}"), &lhs, &rhs));
            }
        }
        if m == 0 {
            continue;
        }
        let mi = m as i64;
        let fm1 = power_of(a, &fh, m - 1);
        let em1 = power_of(a, &eh, m - 1);
        let lhs1 = a.sub(
            &a.mul_all([&j, &eh, &j, &power_of(a, &fh, m), &j]),
            &a.mul_all([&j, &power_of(a, &fh, m), &j, &eh, &j]),
        );
        items.push(item(a, format!("efv1 m={m}"), &lhs1, &a.mul_all([&j, &fm1, &cartan_factor(a, mi, -1)])));
        items.push(item(a, format!("efv1' m={m}"), &lhs1, &a.mul_all([&cartan_factor(a, mi, 1), &fm1, &j])));
        let lhs2 = a.sub(
            &a.mul_all([&j, &power_of(a, &eh, m), &j, &fh, &j]),
            &a.mul_all([&j, &fh, &j, &power_of(a, &eh, m), &j]),
        );
        items.push(item(a, format!("efv2 m={m}"), &lhs2, &a.mul_all([&cartan_factor(a, mi, -1), &em1, &j])));
        items.push(item(a, format!("efv2' m={m}"), &lhs2, &a.mul_all([&j, &em1, &cartan_factor(a, mi, 1)])));
    }
    Report::new("v-commutation", items)
}

/// A random word of length at most eight in all five generators.
pub fn random_word(rng: &mut StdRng) -> Vec<Gen> {
    const GENS: [Gen; 5] = [Gen::E, Gen::F, Gen::K, Gen::Kb, Gen::J];
    (0..rng.gen_range(0..=8)).map(|_| GENS[rng.gen_range(0..5)]).collect()
}

/// Random linear combinations of words reduced by leftmost rewriting, by two
/// random redex orders, and by multiplying basis elements must agree.
pub fn check_confluence<F: ScalarField>(a: &WAlgebra<F>, samples: usize, seed: u64) -> Report {
    let f = a.field();
    let mut rng = StdRng::seed_from_u64(seed);
    let mut items = Vec::with_capacity(samples);
    for _ in 0..samples {
        let mut text = Vec::new();
        let mut left = Element::zero();
        let mut random = [Element::zero(), Element::zero()];
        let mut product = Element::zero();
        for _ in 0..rng.gen_range(1..=3) {
            let w = random_word(&mut rng);
            let c = f.from_int(rng.gen_range(-3..=3));
            let seeds: [u64; 2] = rng.gen();
            left.add_scaled(&a.rewrite_word(&w, Strategy::Leftmost), &c, f);
            for (r, s) in random.iter_mut().zip(seeds) {
                r.add_scaled(&a.rewrite_word(&w, Strategy::Random(s)), &c, f);
            }
            product.add_scaled(&a.word(&w), &c, f);
            let word: Vec<&str> = w.iter().map(|g| g.name()).collect();
            text.push(format!("({c})*{}", if word.is_empty() { "1".into() } else { word.join("*") }));
        }
        let pass = random.iter().all(|r| *r == left) && product == left;
        let got = random
            .iter()
            .chain([&product])
            .map(|r| render(r, Flavor::W, f))
            .collect::<Vec<_>>()
            .join(" | ");
        items.push(CheckItem::with_pass(text.join(" + "), render(&left, Flavor::W, f), got, pass));
    }
    Report::new("confluence", items)
}

/// `J` commutes with every monomial up to `bound`, and `(J - 1)` kills the
/// generators that carry a `K`, `Kb` or `J` factor on either side.
pub fn check_j_structure<F: ScalarField>(a: &WAlgebra<F>, bound: u32) -> Vec<Report> {
    let j = a.gen(Gen::J);
    let zero = Element::zero();
    let central = Monomial::up_to_degree(bound)
        .into_iter()
        .map(|m| item(a, format!("[J, {m}]"), &a.commutator(&j, &a.monomial(m)), &zero))
        .collect();
    let j1 = a.sub(&j, &a.one());
    let mut items = Vec::new();
    let words: [&[Gen]; 6] = [
        &[Gen::K],
        &[Gen::Kb],
        &[Gen::E, Gen::K],
        &[Gen::F, Gen::K],
        &[Gen::E, Gen::J],
        &[Gen::F, Gen::J],
    ];
    for w in words {
        let x = a.word(w);
        let name: Vec<&str> = w.iter().map(|g| g.name()).collect();
        let name = name.join("*");
        items.push(item(a, format!("(J - 1)*{name}"), &a.mul(&j1, &x), &zero));
        items.push(item(a, format!("{name}*(J - 1)"), &a.mul(&x, &j1), &zero));
    }
    let e = a.gen(Gen::E);
    let witness = a.mul(&j1, &e);
    items.push(CheckItem::with_pass(
        "(J - 1)*E is nonzero",
        "nonzero".into(),
        render(&witness, Flavor::W, a.field()),
        !witness.is_zero(),
    ));
    vec![
        Report::new("j-central", central),
        Report::new("j-annihilation", items),
    ]
}

/// With the extra rule `J -> 1` the quantum `sl2` relations hold.
pub fn check_mod_j<F: ScalarField>(field: F) -> Report {
    let a = WAlgebra::with_rules(field, RuleSet::ModJ);
    let f = a.field().clone();
    let (e, fg, k, kb) = (a.gen(Gen::E), a.gen(Gen::F), a.gen(Gen::K), a.gen(Gen::Kb));
    let one = a.one();
    let cases = [
        ("u1: K Kb = 1", a.mul(&k, &kb), one.clone()),
        ("u1: Kb K = 1", a.mul(&kb, &k), one.clone()),
        ("u2: K E Kb = q^2 E", a.mul_all([&k, &e, &kb]), a.scale(&e, &f.q_pow(2))),
        ("u3: K F Kb = q^-2 F", a.mul_all([&k, &fg, &kb]), a.scale(&fg, &f.q_pow(-2))),
        ("u4: [E, F] = (K - Kb)/(q - q^-1)", a.commutator(&e, &fg), cartan_factor(&a, 1, 1)),
        ("J = 1", a.gen(Gen::J), one),
    ];
    let items = cases
        .into_iter()
        .map(|(label, lhs, rhs)| item(&a, label.to_string(), &lhs, &rhs))
        .collect();
    Report::new("mod-j", items)
}
