use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::algebra::{parse, verify_relations, Element, Flavor, FreeExpr, Gen, Monomial, Relation, Tail};
use crate::coeff::ScalarField;
use crate::error::Result;
use crate::lin::Lin;
use crate::report::{CheckItem, Report};

use super::{Hopf, LinearEndo, Tensor2};

const fn rel(name: &'static str, lhs: &'static str, rhs: &'static str) -> Relation {
    Relation { name, lhs, rhs }
}

/// Relations whose coproduct and counit images are compared, labelled
/// `d1`-`d5` / `d6`-`d10` on the w side and `dv1`-`dv6` / `dv7`-`dv12` on
/// the v side.
const W_RELATIONS: &[(&str, &str, &str, &str)] = &[
    ("d1", "d6", "K*Kb", "Kb*K"),
    ("d2", "d7", "K*Kb*K", "K"),
    ("d2a", "d7a", "Kb*K*Kb", "Kb"),
    ("d3", "d8", "K*E", "q^2*E*K"),
    ("d3a", "d8a", "Kb*E", "q^-2*E*Kb"),
    ("d4", "d9", "K*F", "q^-2*F*K"),
    ("d4a", "d9a", "Kb*F", "q^2*F*Kb"),
    ("d5", "d10", "E*F - F*E", "(K - Kb)/(q - q^-1)"),
];

const V_RELATIONS: &[(&str, &str, &str, &str)] = &[
    ("dv1", "dv7", "K*Kb", "Kb*K"),
    ("dv2", "dv8", "K*Kb*K", "K"),
    ("dv3", "dv9", "Kb*K*Kb", "Kb"),
    ("dv4", "dv10", "K*E*Kb", "q^2*E"),
    ("dv5", "dv11", "K*F*Kb", "q^-2*F"),
    ("dv6", "dv12", "E*J*F - F*J*E", "(K - Kb)/(q - q^-1)"),
];

/// Relations among antipode images, read literally: each symbol stands for
/// its image under `T`. `d13a` appears twice, as printed (with `T(K)` as the
/// last factor on the right) and in the form symmetric to `d13`.
pub const ANTIPODE_W_RELATIONS: &[Relation] = &[
    rel("d11", "Kb*K", "K*Kb"),
    rel("d12", "K*Kb*K", "K"),
    rel("d12a", "Kb*K*Kb", "Kb"),
    rel("d13", "E*K", "q^2*K*E"),
    rel("d13a (printed)", "E*Kb", "q^-2*Kb*K"),
    rel("d13a (symmetric)", "E*Kb", "q^-2*Kb*E"),
    rel("d14", "F*K", "q^-2*K*F"),
    rel("d14a", "F*Kb", "q^2*Kb*F"),
    rel("d15", "F*E - E*F", "(K - Kb)/(q - q^-1)"),
];

pub const ANTIPODE_V_RELATIONS: &[Relation] = &[
    rel("dv13", "K*Kb", "Kb*K"),
    rel("dv14", "K*Kb*K", "K"),
    rel("dv15", "Kb*K*Kb", "Kb"),
    rel("dv16", "Kb*E*K", "q^2*E"),
    rel("dv17", "Kb*F*K", "q^-2*F"),
    rel("dv18", "F*J*E - E*J*F", "(K - Kb)/(q - q^-1)"),
];

fn side_name(h: &Hopf<impl ScalarField>) -> &'static str {
    match h.side() {
        Flavor::W => "w",
        Flavor::V => "v",
    }
}

fn result_text<T>(r: Result<T>, f: impl FnOnce(T) -> String) -> String {
    match r {
        Ok(x) => f(x),
        Err(e) => format!("error: {e}"),
    }
}

/// Identities for one element: `lhs` should equal `rhs`.
fn item<F: ScalarField>(
    h: &Hopf<F>,
    input: String,
    lhs: Result<Element<F::Elem>>,
    rhs: Result<Element<F::Elem>>,
) -> CheckItem {
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => CheckItem::with_pass(input, h.render(&r), h.render(&l), l == r),
        (l, r) => CheckItem::with_pass(
            input,
            result_text(r, |x| h.render(&x)),
            result_text(l, |x| h.render(&x)),
            false,
        ),
    }
}

fn tensor_item<F: ScalarField, const N: usize>(
    h: &Hopf<F>,
    input: String,
    lhs: Result<Lin<[Monomial; N], F::Elem>>,
    rhs: Result<Lin<[Monomial; N], F::Elem>>,
) -> CheckItem {
    match (lhs, rhs) {
        (Ok(l), Ok(r)) => {
            CheckItem::with_pass(input, h.render_tensor(&r), h.render_tensor(&l), l == r)
        }
        (l, r) => CheckItem::with_pass(
            input,
            result_text(r, |x| h.render_tensor(&x)),
            result_text(l, |x| h.render_tensor(&x)),
            false,
        ),
    }
}

/// `id * T * id = id` and `T * id * T = T` on every basis monomial of total
/// degree at most `bound`.
pub fn check_weak_antipode_w<F: ScalarField>(h: &Hopf<F>, bound: u32) -> Report {
    use LinearEndo::*;
    let it1 = LinearEndo::chain([Identity, Antipode, Identity]);
    let it2 = LinearEndo::chain([Antipode, Identity, Antipode]);
    let mut items = Vec::new();
    for m in h.domain(bound) {
        let x = h.alg().monomial(m);
        items.push(item(h, format!("it1: (id*T*id)({m})"), h.apply(&it1, &x), Ok(x.clone())));
        items.push(item(h, format!("it2: (T*id*T)({m})"), h.apply(&it2, &x), h.antipode(&x)));
    }
    Report::new(format!("weak antipode ({}), degree <= {bound}", side_name(h)), items)
}

/// `(e * T * e)(x) = e(x)` and `(T * e * T)(x) = T(x)` on the sandwiched
/// basis monomials other than `1` up to `bound`, together with the squares
/// `T^2(K) = e(K)`, `T^2(Kb) = e(Kb)`, `T^2(Eh) = K Eh Kb`,
/// `T^2(Fh) = K Fh Kb`.
pub fn check_j_weak_antipode_v<F: ScalarField>(h: &Hopf<F>, bound: u32) -> Report {
    use LinearEndo::*;
    let et1 = LinearEndo::chain([JConjugate, Antipode, JConjugate]);
    let et2 = LinearEndo::chain([Antipode, JConjugate, Antipode]);
    let a = h.alg();
    let mut items = Vec::new();
    for m in h.domain(bound).into_iter().filter(|m| !m.is_one()) {
        let x = a.monomial(m);
        let name = m.render(h.side());
        items.push(item(h, format!("et1: (e*T*e)({name})"), h.apply(&et1, &x), Ok(a.j_conjugate(&x))));
        items.push(item(h, format!("et2: (T*e*T)({name})"), h.apply(&et2, &x), h.antipode(&x)));
    }
    let square = |x: &Element<F::Elem>| h.antipode(x).and_then(|t| h.antipode(&t));
    for (name, g) in [("K", Gen::K), ("Kb", Gen::Kb)] {
        let x = a.gen(g);
        items.push(item(h, format!("te: T^2({name}) = e({name})"), square(&x), Ok(a.j_conjugate(&x))));
    }
    for (name, w) in [("Eh", [Gen::E, Gen::J]), ("Fh", [Gen::F, Gen::J])] {
        let x = a.word(&w);
        let k = a.gen(Gen::K);
        let kb = a.gen(Gen::Kb);
        let conj = a.mul_all([&k, &x, &kb]);
        items.push(item(h, format!("te1: T^2({name}) = K*{name}*Kb"), square(&x), Ok(conj)));
    }
    let one = a.one();
    let et1_one = h.apply(&et1, &one).map(|x| h.render(&x));
    let et2_one = h.apply(&et2, &one).map(|x| h.render(&x));
    Report::new(format!("J-weak antipode (v), degree <= {bound}"), items).note(format!(
        "x = 1 is not in the sandwiched basis: (e*T*e)(1) = {}, e(1) = J; (T*e*T)(1) = {}, T(1) = 1",
        result_text(et1_one, |s| s),
        result_text(et2_one, |s| s),
    ))
}

/// `T^2(x)` and `K x Kb`.
pub fn antipode_square<F: ScalarField>(
    h: &Hopf<F>,
    x: &Element<F::Elem>,
) -> Result<(Element<F::Elem>, Element<F::Elem>)> {
    let a = h.alg();
    let t2 = h.antipode(&h.antipode(x)?)?;
    let conj = a.mul_all([&a.gen(Gen::K), x, &a.gen(Gen::Kb)]);
    Ok((t2, conj))
}

/// `T^2(x) = K x Kb` on basis monomials up to `bound`. The first report
/// covers the monomials with a `K`, `Kb` or `J` tail; the second covers
/// every monomial.
pub fn check_antipode_square<F: ScalarField>(h: &Hopf<F>, bound: u32) -> [Report; 2] {
    let mut ideal = Vec::new();
    let mut all = Vec::new();
    for m in h.domain(bound) {
        let x = h.alg().monomial(m);
        let r = antipode_square(h, &x);
        let it = match r {
            Ok((t2, conj)) => item(h, format!("T^2({m}) = K*{m}*Kb"), Ok(t2), Ok(conj)),
            Err(e) => CheckItem::with_pass(format!("T^2({m})"), String::new(), format!("error: {e}"), false),
        };
        if m.tail != Tail::One {
            ideal.push(it.clone());
        }
        all.push(it);
    }
    let s = side_name(h);
    [
        Report::new(format!("T^2 = K x Kb ({s}, tails K, Kb, J), degree <= {bound}"), ideal),
        Report::new(format!("T^2 = K x Kb ({s}, all monomials), degree <= {bound}"), all),
    ]
}

/// `(Delta (x) id) Delta = (id (x) Delta) Delta` on the basis up to `bound`.
pub fn check_coassociativity<F: ScalarField>(h: &Hopf<F>, bound: u32) -> Report {
    let items = h
        .domain(bound)
        .into_iter()
        .map(|m| {
            let d = h.coproduct(&h.alg().monomial(m));
            let l = d.as_ref().map_err(Clone::clone).and_then(|d| h.delta_left(d));
            let r = d.and_then(|d| h.delta_right(&d));
            tensor_item(h, format!("coassociativity at {}", m.render(h.side())), l, r)
        })
        .collect();
    Report::new(format!("coassociativity ({}), degree <= {bound}", side_name(h)), items)
}

/// `(eps (x) id) Delta(x) = x = (id (x) eps) Delta(x)` on the basis up to
/// `bound`.
pub fn check_counit_law<F: ScalarField>(h: &Hopf<F>, bound: u32) -> Report {
    let mut items = Vec::new();
    for m in h.domain(bound) {
        let x = h.alg().monomial(m);
        let name = m.render(h.side());
        let contract = |left: bool| -> Result<Element<F::Elem>> {
            let field = h.field();
            let mut out = Element::zero();
            for ([l, r], c) in &h.coproduct(&x)? {
                let (kill, keep) = if left { (l, r) } else { (r, l) };
                let e = field.mul(c, &h.counit_monomial(kill)?);
                out.add_term(*keep, e, field);
            }
            Ok(out)
        };
        items.push(item(h, format!("(eps x id)Delta({name})"), contract(true), Ok(x.clone())));
        items.push(item(h, format!("(id x eps)Delta({name})"), contract(false), Ok(x.clone())));
    }
    Report::new(format!("counit law ({}), degree <= {bound}", side_name(h)), items)
}

/// A random element of the domain: up to three basis monomials of degree at
/// most `bound` with small integer or `q`-power coefficients.
pub fn random_element<F: ScalarField>(h: &Hopf<F>, bound: u32, rng: &mut StdRng) -> Element<F::Elem> {
    let basis = h.domain(bound);
    let field = h.field();
    let mut x = Element::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let m = basis[rng.gen_range(0..basis.len())];
        let c = match rng.gen_range(0..3) {
            0 => field.from_int(rng.gen_range(-3..=3)),
            1 => field.q_pow(rng.gen_range(-2..=2)),
            _ => field.one(),
        };
        x.add_term(m, c, field);
    }
    x
}

/// `Delta(xy) = Delta(x) Delta(y)` on `pairs` random pairs.
pub fn check_multiplicativity<F: ScalarField>(h: &Hopf<F>, pairs: usize, seed: u64) -> Report {
    let mut rng = StdRng::seed_from_u64(seed);
    let a = h.alg();
    let items = (0..pairs)
        .map(|_| {
            let x = random_element(h, 2, &mut rng);
            let y = random_element(h, 2, &mut rng);
            let lhs = h.coproduct(&a.mul(&x, &y));
            let rhs = h
                .coproduct(&x)
                .and_then(|dx| Ok(crate::tensor::mul(a, &dx, &h.coproduct(&y)?)));
            tensor_item(h, format!("Delta(({}) * ({}))", h.render(&x), h.render(&y)), lhs, rhs)
        })
        .collect();
    Report::new(format!("Delta multiplicative ({}), {pairs} pairs", side_name(h)), items)
}

/// `T(xy) = T(y) T(x)` on `pairs` random pairs.
pub fn check_antimorphism<F: ScalarField>(h: &Hopf<F>, pairs: usize, seed: u64) -> Report {
    let mut rng = StdRng::seed_from_u64(seed);
    let a = h.alg();
    let items = (0..pairs)
        .map(|_| {
            let x = random_element(h, 2, &mut rng);
            let y = random_element(h, 2, &mut rng);
            let lhs = h.antipode(&a.mul(&x, &y));
            let rhs = h.antipode(&y).and_then(|ty| Ok(a.mul(&ty, &h.antipode(&x)?)));
            item(h, format!("T(({}) * ({}))", h.render(&x), h.render(&y)), lhs, rhs)
        })
        .collect();
    Report::new(format!("T anti-multiplicative ({}), {pairs} pairs", side_name(h)), items)
}

/// Coproduct, counit and antipode images of the defining relations.
pub fn check_structure_relations<F: ScalarField>(h: &Hopf<F>) -> Vec<Report> {
    let field = h.field();
    let table = match h.side() {
        Flavor::W => W_RELATIONS,
        Flavor::V => V_RELATIONS,
    };
    let parse_side = |text: &str| -> Result<FreeExpr<F::Elem>> { parse(text, h.side(), field) };
    let mut delta_items = Vec::new();
    let mut eps_items = Vec::new();
    for &(dname, ename, lhs, rhs) in table {
        let input = |n: &str| format!("{n}: {lhs} = {rhs}");
        let d = |t: &str| parse_side(t).and_then(|x| h.coproduct_free(&x));
        delta_items.push(tensor_item(h, input(dname), d(lhs), d(rhs)));
        let e = |t: &str| parse_side(t).and_then(|x| h.counit_free(&x));
        eps_items.push(match (e(lhs), e(rhs)) {
            (Ok(l), Ok(r)) => CheckItem::new(input(ename), r.to_string(), l.to_string()),
            (l, r) => CheckItem::with_pass(
                input(ename),
                result_text(r, |x| x.to_string()),
                result_text(l, |x| x.to_string()),
                false,
            ),
        });
    }
    let s = side_name(h);
    let anti_rels = match h.side() {
        Flavor::W => ANTIPODE_W_RELATIONS,
        Flavor::V => ANTIPODE_V_RELATIONS,
    };
    let mut anti = verify_relations(&h.antipode_images(), anti_rels, h.alg());
    anti.check = format!("antipode images of the relations ({s})");
    vec![
        Report::new(format!("coproduct of the relations ({s})"), delta_items),
        Report::new(format!("counit of the relations ({s})"), eps_items),
        anti,
    ]
}

/// Compares the v-side maps with the w-side maps after `e(x) = J x J`:
/// `Delta_v(x) = Delta_w(e(x))`, `T_v(x) = T_w(e(x))`,
/// `eps_v(x) = eps_w(e(x))`.
pub fn check_wv_connection<F: ScalarField>(
    w: &Hopf<F>,
    v: &Hopf<F>,
    x: &Element<F::Elem>,
) -> Report {
    let a = w.alg();
    let ex = a.j_conjugate(x);
    let name = v.render(x);
    let d: CheckItem = {
        let l = v.coproduct(x);
        let r = w.coproduct(&ex);
        tensor_item(v, format!("cn1: Delta_v({name}) = Delta_w(e({name}))"), l, r)
    };
    let t = item(
        v,
        format!("cn2: T_v({name}) = T_w(e({name}))"),
        v.antipode(x),
        w.antipode(&ex),
    );
    let e = match (v.counit(x), w.counit(&ex)) {
        (Ok(l), Ok(r)) => CheckItem::new(format!("cn3: eps_v({name}) = eps_w(e({name}))"), r.to_string(), l.to_string()),
        (l, r) => CheckItem::with_pass(
            format!("cn3: eps_v({name}) = eps_w(e({name}))"),
            result_text(r, |x| x.to_string()),
            result_text(l, |x| x.to_string()),
            false,
        ),
    };
    Report::new(format!("w-v connection at {name}"), vec![d, t, e])
}

/// Rank-2 tensor as a coefficient matrix, rows indexed by left legs.
pub fn tensor_matrix<F: ScalarField>(t: &Tensor2<F::Elem>, field: &F) -> Vec<Vec<F::Elem>> {
    let mut rows: Vec<Monomial> = t.keys().map(|k| k[0]).collect();
    let mut cols: Vec<Monomial> = t.keys().map(|k| k[1]).collect();
    rows.sort();
    rows.dedup();
    cols.sort();
    cols.dedup();
    rows.iter()
        .map(|r| {
            cols.iter()
                .map(|c| t.coeff(&[*r, *c]).cloned().unwrap_or_else(|| field.zero()))
                .collect()
        })
        .collect()
}
