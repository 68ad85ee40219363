//! Coproducts, counits and weak antipodes of `wsl_q(2)` and of the
//! sandwiched model of `vsl_q(2)`, convolution of linear maps, and the
//! verification suites built on them.

mod checks;
mod grouplike;

pub use checks::*;
pub use grouplike::{grouplike_check, grouplike_nonmembers, grouplike_set, regular_monoid_check};

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::algebra::{
    apply_morphism, render, to_free, Element, Flavor, FreeExpr, Gen, MorphismSpec, Monomial, Symbol,
    Tail, WAlgebra,
};
use crate::coeff::ScalarField;
use crate::error::{Error, Result};
use crate::lin::Lin;
use crate::tensor::{self, BasisAlgebra};

pub type Tensor2<S> = Lin<[Monomial; 2], S>;
pub type Tensor3<S> = Lin<[Monomial; 3], S>;

impl<F: ScalarField> BasisAlgebra for WAlgebra<F> {
    type Field = F;
    type Key = Monomial;

    fn field(&self) -> &F {
        WAlgebra::field(self)
    }

    fn mul_basis(&self, a: &Monomial, b: &Monomial) -> Element<F::Elem> {
        self.mul_monomials(a, b)
    }

    fn render_key(&self, k: &Monomial) -> String {
        k.to_string()
    }
}

/// A linear endomorphism of the algebra, built from the structure maps.
#[derive(Clone, Debug)]
pub enum LinearEndo<S> {
    Identity,
    /// The weak antipode of the active side.
    Antipode,
    /// `x -> eps(x) 1`.
    CounitUnit,
    /// `x -> J x J`.
    JConjugate,
    /// Extension of generator images (see [`MorphismSpec`]).
    Morphism(MorphismSpec<S>),
    Convolution(Box<LinearEndo<S>>, Box<LinearEndo<S>>),
}

impl<S> LinearEndo<S> {
    pub fn name(&self) -> String {
        match self {
            LinearEndo::Identity => "id".into(),
            LinearEndo::Antipode => "T".into(),
            LinearEndo::CounitUnit => "eta.eps".into(),
            LinearEndo::JConjugate => "e".into(),
            LinearEndo::Morphism(m) => m.name.clone(),
            LinearEndo::Convolution(a, b) => format!("({} * {})", a.name(), b.name()),
        }
    }

    /// Left-nested convolution of the given maps.
    pub fn chain(maps: impl IntoIterator<Item = LinearEndo<S>>) -> Self {
        let mut it = maps.into_iter();
        let first = it.next().expect("at least one map");
        it.fold(first, |acc, m| LinearEndo::Convolution(Box::new(acc), Box::new(m)))
    }
}

/// The coalgebra structure of one side. With [`Flavor::W`] the maps are
/// `Delta_w`, `eps_w`, `T_w` on all of `wsl_q(2)`; with [`Flavor::V`] they are
/// `Delta_v`, `eps_v`, `T_v` on the span of sandwiched monomials, where
/// `Eh = J E J` and `Fh = J F J` stand for the generators of `vsl_q(2)`.
pub struct Hopf<F: ScalarField> {
    alg: Arc<WAlgebra<F>>,
    side: Flavor,
    delta: RwLock<HashMap<Monomial, Tensor2<F::Elem>>>,
    anti: RwLock<HashMap<Monomial, Element<F::Elem>>>,
}

impl<F: ScalarField> Hopf<F> {
    pub fn new(alg: Arc<WAlgebra<F>>, side: Flavor) -> Self {
        Hopf {
            alg,
            side,
            delta: RwLock::new(HashMap::new()),
            anti: RwLock::new(HashMap::new()),
        }
    }

    pub fn w(alg: Arc<WAlgebra<F>>) -> Self {
        Self::new(alg, Flavor::W)
    }

    pub fn v(alg: Arc<WAlgebra<F>>) -> Self {
        Self::new(alg, Flavor::V)
    }

    pub fn alg(&self) -> &WAlgebra<F> {
        &self.alg
    }

    pub fn alg_arc(&self) -> &Arc<WAlgebra<F>> {
        &self.alg
    }

    pub fn side(&self) -> Flavor {
        self.side
    }

    pub fn field(&self) -> &F {
        self.alg.field()
    }

    fn check_domain(&self, m: &Monomial) -> Result<()> {
        if self.side == Flavor::V && !m.is_sandwiched() {
            return Err(Error::UnsupportedWord(format!(
                "{m} is not in the span of sandwiched words"
            )));
        }
        Ok(())
    }

    /// Basis monomials of the domain with total degree at most `bound`.
    pub fn domain(&self, bound: u32) -> Vec<Monomial> {
        Monomial::up_to_degree(bound)
            .into_iter()
            .filter(|m| self.side == Flavor::W || m.is_sandwiched())
            .collect()
    }

    fn t1(&self, a: &Element<F::Elem>, b: &Element<F::Elem>) -> Tensor2<F::Elem> {
        tensor::outer(&*self.alg, [a, b])
    }

    fn m(&self, m: Monomial) -> Element<F::Elem> {
        self.alg.monomial(m)
    }

    /// Coproduct of a generator image: `E`/`F` on the w side, `Eh`/`Fh` on
    /// the v side.
    fn delta_gen(&self, g: Gen) -> Tensor2<F::Elem> {
        let a = &*self.alg;
        let one = a.one();
        let j = a.gen(Gen::J);
        let k = a.gen(Gen::K);
        let kb = a.gen(Gen::Kb);
        match (self.side, g) {
            (Flavor::W, Gen::E) => {
                let e = a.gen(Gen::E);
                self.t1(&one, &e).add(&self.t1(&e, &k), a.field())
            }
            (Flavor::W, Gen::F) => {
                let f = a.gen(Gen::F);
                self.t1(&f, &one).add(&self.t1(&kb, &f), a.field())
            }
            (Flavor::V, Gen::E) => {
                let e = a.word(&[Gen::E, Gen::J]);
                self.t1(&j, &e).add(&self.t1(&e, &k), a.field())
            }
            (Flavor::V, Gen::F) => {
                let f = a.word(&[Gen::F, Gen::J]);
                self.t1(&f, &j).add(&self.t1(&kb, &f), a.field())
            }
            (_, g) => {
                let x = a.gen(g);
                self.t1(&x, &x)
            }
        }
    }

    fn delta_monomial(&self, m: &Monomial) -> Result<Tensor2<F::Elem>> {
        self.check_domain(m)?;
        if let Some(hit) = self.delta.read().unwrap().get(m) {
            return Ok(hit.clone());
        }
        let acc = if m.e > 0 {
            let rest = self.delta_monomial(&Monomial::new(m.e - 1, m.f, m.tail))?;
            tensor::mul(&*self.alg, &self.delta_gen(Gen::E), &rest)
        } else if m.f > 0 {
            let rest = self.delta_monomial(&Monomial::new(0, m.f - 1, m.tail))?;
            tensor::mul(&*self.alg, &self.delta_gen(Gen::F), &rest)
        } else {
            let t = self.m(*m);
            self.t1(&t, &t)
        };
        self.delta.write().unwrap().insert(*m, acc.clone());
        Ok(acc)
    }

    /// `Delta(x)`, both legs in normal form.
    pub fn coproduct(&self, x: &Element<F::Elem>) -> Result<Tensor2<F::Elem>> {
        let mut out = Lin::zero();
        for (m, c) in x {
            out.add_scaled(&self.delta_monomial(m)?, c, self.field());
        }
        Ok(out)
    }

    pub fn counit_monomial(&self, m: &Monomial) -> Result<F::Elem> {
        self.check_domain(m)?;
        Ok(if m.e + m.f > 0 {
            self.field().zero()
        } else {
            self.field().one()
        })
    }

    pub fn counit(&self, x: &Element<F::Elem>) -> Result<F::Elem> {
        let field = self.field();
        let mut acc = field.zero();
        for (m, c) in x {
            acc = field.add(&acc, &field.mul(c, &self.counit_monomial(m)?));
        }
        Ok(acc)
    }

    fn antipode_gen(&self, g: Gen) -> Element<F::Elem> {
        let a = &*self.alg;
        let minus = a.field().from_int(-1);
        match (self.side, g) {
            (Flavor::W, Gen::E) => a.scale(&a.word(&[Gen::E, Gen::Kb]), &minus),
            (Flavor::W, Gen::F) => a.scale(&a.word(&[Gen::K, Gen::F]), &minus),
            (Flavor::V, Gen::E) => a.scale(&a.word(&[Gen::J, Gen::E, Gen::Kb]), &minus),
            (Flavor::V, Gen::F) => a.scale(&a.word(&[Gen::K, Gen::F, Gen::J]), &minus),
            (_, Gen::K) => a.gen(Gen::Kb),
            (_, Gen::Kb) => a.gen(Gen::K),
            (_, Gen::J) => a.gen(Gen::J),
        }
    }

    fn antipode_monomial(&self, m: &Monomial) -> Result<Element<F::Elem>> {
        self.check_domain(m)?;
        if let Some(hit) = self.anti.read().unwrap().get(m) {
            return Ok(hit.clone());
        }
        let a = &*self.alg;
        let tail = match m.tail {
            Tail::One => a.one(),
            Tail::J => a.gen(Gen::J),
            Tail::K(l) => a.monomial(Monomial::tail(Tail::Kb(l))),
            Tail::Kb(l) => a.monomial(Monomial::tail(Tail::K(l))),
        };
        let mut acc = tail;
        for _ in 0..m.f {
            acc = a.mul(&acc, &self.antipode_gen(Gen::F));
        }
        for _ in 0..m.e {
            acc = a.mul(&acc, &self.antipode_gen(Gen::E));
        }
        self.anti.write().unwrap().insert(*m, acc.clone());
        Ok(acc)
    }

    /// The weak antipode, extended as an anti-morphism.
    pub fn antipode(&self, x: &Element<F::Elem>) -> Result<Element<F::Elem>> {
        x.try_map_linear(self.field(), |m| self.antipode_monomial(m))
    }

    /// `eta(eps(x))`.
    pub fn counit_unit(&self, x: &Element<F::Elem>) -> Result<Element<F::Elem>> {
        Ok(self.alg.scalar(self.counit(x)?))
    }

    pub fn apply(&self, f: &LinearEndo<F::Elem>, x: &Element<F::Elem>) -> Result<Element<F::Elem>> {
        match f {
            LinearEndo::Identity => Ok(x.clone()),
            LinearEndo::Antipode => self.antipode(x),
            LinearEndo::CounitUnit => self.counit_unit(x),
            LinearEndo::JConjugate => Ok(self.alg.j_conjugate(x)),
            LinearEndo::Morphism(spec) => apply_morphism(spec, &to_free(x, Flavor::W)?, &self.alg),
            LinearEndo::Convolution(a, b) => self.convolve(a, b, x),
        }
    }

    /// `(f * g)(x) = mu (f (x) g) Delta(x)`.
    pub fn convolve(
        &self,
        f: &LinearEndo<F::Elem>,
        g: &LinearEndo<F::Elem>,
        x: &Element<F::Elem>,
    ) -> Result<Element<F::Elem>> {
        let field = self.field();
        let mut out = Element::zero();
        for ([l, r], c) in &self.coproduct(x)? {
            let fl = self.apply(f, &self.m(*l))?;
            let gr = self.apply(g, &self.m(*r))?;
            out.add_scaled(&self.alg.mul(&fl, &gr), c, field);
        }
        Ok(out)
    }

    /// `(Delta (x) id)` applied to a rank-2 tensor.
    pub fn delta_left(&self, t: &Tensor2<F::Elem>) -> Result<Tensor3<F::Elem>> {
        let field = self.field();
        let mut out = Lin::zero();
        for ([l, r], c) in t {
            for ([a, b], d) in &self.delta_monomial(l)? {
                out.add_term([*a, *b, *r], field.mul(c, d), field);
            }
        }
        Ok(out)
    }

    /// `(id (x) Delta)` applied to a rank-2 tensor.
    pub fn delta_right(&self, t: &Tensor2<F::Elem>) -> Result<Tensor3<F::Elem>> {
        let field = self.field();
        let mut out = Lin::zero();
        for ([l, r], c) in t {
            for ([a, b], d) in &self.delta_monomial(r)? {
                out.add_term([*l, *a, *b], field.mul(c, d), field);
            }
        }
        Ok(out)
    }

    /// Coproduct of an unreduced expression computed by substituting the
    /// coproducts of the input symbols and multiplying in the tensor square.
    pub fn coproduct_free(&self, x: &FreeExpr<F::Elem>) -> Result<Tensor2<F::Elem>> {
        let field = self.field();
        let mut out = Lin::zero();
        for (c, w) in &x.terms {
            let mut acc = self.t1(&self.alg.one(), &self.alg.one());
            for s in w {
                acc = tensor::mul(&*self.alg, &acc, &self.delta_symbol(*s)?);
            }
            out.add_scaled(&acc, c, field);
        }
        Ok(out)
    }

    /// Counit of an unreduced expression, by substitution.
    pub fn counit_free(&self, x: &FreeExpr<F::Elem>) -> Result<F::Elem> {
        let field = self.field();
        let mut out = field.zero();
        for (c, w) in &x.terms {
            let mut acc = c.clone();
            for s in w {
                let v = match self.gen_of(*s)? {
                    Gen::E | Gen::F => field.zero(),
                    _ => field.one(),
                };
                acc = field.mul(&acc, &v);
            }
            out = field.add(&out, &acc);
        }
        Ok(out)
    }

    /// Generator images of the antipode, as a map for
    /// [`crate::algebra::verify_relations`]. The kind is
    /// [`crate::algebra::MorphismKind::Morphism`] so that a relation written
    /// in terms of images is checked literally.
    pub fn antipode_images(&self) -> MorphismSpec<F::Elem> {
        use crate::algebra::MorphismKind;
        let (e, f) = match self.side {
            Flavor::W => (Symbol::E, Symbol::F),
            Flavor::V => (Symbol::Ev, Symbol::Fv),
        };
        MorphismSpec::new("T", MorphismKind::Morphism, self.side, Flavor::W)
            .image(e, self.antipode_gen(Gen::E))
            .image(f, self.antipode_gen(Gen::F))
            .image(Symbol::K, self.antipode_gen(Gen::K))
            .image(Symbol::Kb, self.antipode_gen(Gen::Kb))
            .image(Symbol::J, self.antipode_gen(Gen::J))
    }

    fn gen_of(&self, s: Symbol) -> Result<Gen> {
        Ok(match (self.side, s) {
            (Flavor::W, Symbol::E) | (Flavor::V, Symbol::Ev | Symbol::Eh) => Gen::E,
            (Flavor::W, Symbol::F) | (Flavor::V, Symbol::Fv | Symbol::Fh) => Gen::F,
            (_, Symbol::K) => Gen::K,
            (_, Symbol::Kb) => Gen::Kb,
            (_, Symbol::J) => Gen::J,
            (_, s) => {
                return Err(Error::UnsupportedWord(format!(
                    "{} is not a generator on this side",
                    s.name()
                )))
            }
        })
    }

    fn delta_symbol(&self, s: Symbol) -> Result<Tensor2<F::Elem>> {
        Ok(self.delta_gen(self.gen_of(s)?))
    }

    pub fn render(&self, x: &Element<F::Elem>) -> String {
        render(x, self.side, self.field())
    }

    pub fn render_tensor<const N: usize>(&self, x: &Lin<[Monomial; N], F::Elem>) -> String {
        tensor::render_with(x, self.field(), |m| m.render(self.side))
    }
}
