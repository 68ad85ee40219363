use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::algebra::{Element, Gen, Monomial, Tail, WAlgebra};
use crate::coeff::{q_minus_q_inv, ScalarField};
use crate::lin::{join_terms, render_term, Lin};
use crate::report::{CheckItem, Report};

use super::{EndoPair, OreExt, Ring, SkewPoly};

/// The commutative algebra `k[K, Kb] / (J K - K, Kb J - Kb)` with basis
/// `1, J, K^l, Kb^m`.
#[derive(Clone, Debug)]
pub struct KAlgebra<F: ScalarField> {
    field: F,
}

type KElem<S> = Lin<Tail, S>;

fn powers(t: Tail) -> (u32, u32) {
    match t {
        Tail::One => (0, 0),
        Tail::J => (1, 1),
        Tail::K(l) => (l, 0),
        Tail::Kb(m) => (0, m),
    }
}

/// `i - j` for `K^i Kb^j`.
fn weight(t: Tail) -> i64 {
    let (i, j) = powers(t);
    i as i64 - j as i64
}

impl<F: ScalarField> KAlgebra<F> {
    pub fn new(field: F) -> Self {
        KAlgebra { field }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn basis(&self, t: Tail) -> KElem<F::Elem> {
        Lin::basis(t, &self.field)
    }

    /// Scales each `K^i Kb^j` by `q^(s (i - j))`.
    pub fn twist(&self, a: &KElem<F::Elem>, s: i64) -> KElem<F::Elem> {
        let mut out = Lin::zero();
        for (t, c) in a {
            out.add_term(*t, self.field.mul(c, &self.field.q_pow(s * weight(*t))), &self.field);
        }
        out
    }
}

impl<F: ScalarField> Ring for KAlgebra<F> {
    type Elem = KElem<F::Elem>;

    fn zero(&self) -> Self::Elem {
        Lin::zero()
    }
    fn one(&self) -> Self::Elem {
        self.basis(Tail::One)
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.add(b, &self.field)
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.neg(&self.field)
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut out = Lin::zero();
        for (s, c) in a {
            for (t, d) in b {
                let (i, j) = powers(*s);
                let (k, l) = powers(*t);
                out.add_term(Tail::from_powers(i + k, j + l), self.field.mul(c, d), &self.field);
            }
        }
        out
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_zero()
    }
    fn render(&self, a: &Self::Elem) -> String {
        join_terms(
            a.iter()
                .map(|(t, c)| render_term(c, &Monomial::tail(*t).to_string(), &self.field)),
        )
    }
}

type A1<F> = OreExt<Arc<KAlgebra<F>>>;
type A1Elem<S> = SkewPoly<KElem<S>>;
type A2<F> = OreExt<Arc<A1<F>>>;
pub type A2Elem<S> = SkewPoly<A1Elem<S>>;

/// `wsl_q(2)` as `A_2 = A_1[E, alpha_2, delta]` over `A_1 = A_0[F, alpha_1, 0]`,
/// `A_0` the [`KAlgebra`].
pub struct OreW<F: ScalarField> {
    a0: Arc<KAlgebra<F>>,
    a1: Arc<A1<F>>,
    a2: A2<F>,
}

impl<F: ScalarField> OreW<F> {
    pub fn new(field: F) -> Self {
        let a0 = Arc::new(KAlgebra::new(field.clone()));
        let (p, m) = (a0.clone(), a0.clone());
        let ops1 = EndoPair::new(move |a| p.twist(a, 2), |_| Lin::zero()).with_inverse(move |a| m.twist(a, -2));
        let a1 = Arc::new(OreExt::new(a0.clone(), ops1, "F"));

        let twist_a1 = |r: Arc<A1<F>>, s: i64| {
            move |x: &A1Elem<F::Elem>| {
                let k = r.base();
                SkewPoly::new(x.coeffs().iter().map(|c| k.twist(c, s)).collect(), &**k)
            }
        };
        let (r1, r2, r3) = (a1.clone(), a1.clone(), a1.clone());
        let ops2 = EndoPair::new(twist_a1(r1, -2), move |x| delta(&r3, x)).with_inverse(twist_a1(r2, 2));
        let a2 = OreExt::new(a1.clone(), ops2, "E");
        OreW { a0, a1, a2 }
    }

    pub fn field(&self) -> &F {
        self.a0.field()
    }

    pub fn ring(&self) -> &A2<F> {
        &self.a2
    }

    pub fn inner(&self) -> &A1<F> {
        &self.a1
    }

    pub fn scalar(&self, c: F::Elem) -> A2Elem<F::Elem> {
        let k = Lin::term(Tail::One, c, self.field());
        self.a2.constant(self.a1.constant(k))
    }

    pub fn gen(&self, g: Gen) -> A2Elem<F::Elem> {
        match g {
            Gen::E => self.a2.t(),
            Gen::F => self.a2.constant(self.a1.t()),
            Gen::K => self.tail(Tail::K(1)),
            Gen::Kb => self.tail(Tail::Kb(1)),
            Gen::J => self.tail(Tail::J),
        }
    }

    fn tail(&self, t: Tail) -> A2Elem<F::Elem> {
        self.a2.constant(self.a1.constant(self.a0.basis(t)))
    }

    pub fn word(&self, w: &[Gen]) -> A2Elem<F::Elem> {
        w.iter()
            .fold(self.a2.one(), |acc, &g| self.a2.mul(&acc, &self.gen(g)))
    }

    /// Image of the PBW monomial `E^e F^f tail`.
    pub fn monomial(&self, m: &Monomial) -> A2Elem<F::Elem> {
        self.word(&m.word())
    }

    /// Image of a normal-form element of the rewriting engine.
    pub fn element(&self, x: &Element<F::Elem>) -> A2Elem<F::Elem> {
        x.iter().fold(self.a2.zero(), |acc, (m, c)| {
            let t = self.a2.mul(&self.scalar(c.clone()), &self.monomial(m));
            self.a2.add(&acc, &t)
        })
    }

    pub fn mul(&self, a: &A2Elem<F::Elem>, b: &A2Elem<F::Elem>) -> A2Elem<F::Elem> {
        self.a2.mul(a, b)
    }

    pub fn render(&self, a: &A2Elem<F::Elem>) -> String {
        self.a2.render(a)
    }
}

/// `delta(F^j a) = sum_{i<j} F^(j-1) (q^-2i K - q^2i Kb)/(q - q^-1) a` for
/// `a` in `{1, K^l, Kb^m, J}`, extended linearly; elements of `A_1` are
/// stored as `a F^j`, and `a F^j = q^(-2 j w(a)) F^j a`.
fn delta<F: ScalarField>(a1: &A1<F>, x: &A1Elem<F::Elem>) -> A1Elem<F::Elem> {
    let a0 = a1.base();
    let field = a0.field();
    let c = field.inv(&q_minus_q_inv(field)).expect("q - q^-1 is invertible");
    let mut out = a1.zero();
    for (j, coeff) in x.coeffs().iter().enumerate().skip(1) {
        let fj1 = a1.monomial(a0.one(), j - 1);
        for (t, lambda) in coeff {
            let scale = field.mul(lambda, &field.q_pow(-2 * j as i64 * weight(*t)));
            let mut sum = a0.zero();
            for i in 0..j as i64 {
                let mut ci = Lin::zero();
                ci.add_term(Tail::K(1), field.mul(&c, &field.q_pow(-2 * i)), field);
                ci.add_term(Tail::Kb(1), field.neg(&field.mul(&c, &field.q_pow(2 * i))), field);
                sum = a0.add(&sum, &ci);
            }
            let tail = a0.mul(&sum, &Lin::term(*t, scale, field));
            out = a1.add(&out, &a1.mul(&fj1, &a1.constant(tail)));
        }
    }
    out
}

/// Multiplies random pairs of PBW monomials of degree at most `bound` with
/// the rewriting engine and with the iterated Ore extension, and compares
/// the results inside the extension. The pairs `(E, K)`, `(F^2, E)` and
/// `(1, 1)` are always included.
pub fn crosscheck_engines<F: ScalarField>(field: F, samples: usize, bound: u32, seed: u64) -> Report {
    let alg = WAlgebra::new(field.clone());
    let ore = OreW::new(field);
    let basis = Monomial::up_to_degree(bound);
    let mut rng = StdRng::seed_from_u64(seed);
    let fixed = [
        (Monomial::new(1, 0, Tail::One), Monomial::tail(Tail::K(1))),
        (Monomial::new(0, 2, Tail::One), Monomial::new(1, 0, Tail::One)),
        (Monomial::ONE, Monomial::ONE),
    ];
    let pairs = fixed.into_iter().chain(
        std::iter::repeat_with(|| {
            (basis[rng.gen_range(0..basis.len())], basis[rng.gen_range(0..basis.len())])
        })
        .take(samples.saturating_sub(3)),
    );
    let items = pairs
        .map(|(x, y)| {
            let by_ore = ore.mul(&ore.monomial(&x), &ore.monomial(&y));
            let by_engine = ore.element(&alg.mul_monomials(&x, &y));
            CheckItem::with_pass(
                format!("{x} * {y}"),
                ore.render(&by_ore),
                ore.render(&by_engine),
                by_ore == by_engine,
            )
        })
        .collect::<Vec<_>>();
    Report::new(
        format!("engine cross-check, {} samples, degree <= {bound}", items.len()),
        items,
    )
}
