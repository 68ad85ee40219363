//! The quotient of `wsl_q(2)` by `I = (E^d, F^d, K^d - J)` at a primitive
//! odd root of unity `q` of order `d`, and its regular quasi-R-matrix.

mod rmatrix;

pub use rmatrix::*;

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use serde::Serialize;

use crate::algebra::{Element, Gen, Monomial, Tail, WAlgebra};
use crate::coeff::{CoeffError, Cyclotomic, CyclotomicField, ScalarField};
use crate::lin::{join_terms, render_term, Lin};
use crate::tensor::{self, BasisAlgebra};

/// Basis element `E^e F^f K^t` of the quotient, `0 <= e, f < d`. `t = 0`
/// means no group-like factor (the `Y` part); `1 <= t <= d` is the `W` part,
/// with `K^d = J`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct QKey {
    pub e: u32,
    pub f: u32,
    pub t: u32,
}

impl QKey {
    pub fn new(e: u32, f: u32, t: u32) -> Self {
        QKey { e, f, t }
    }

    pub fn in_w(&self) -> bool {
        self.t > 0
    }

    /// `e - f`, preserved by products.
    pub fn grade(&self) -> i64 {
        self.e as i64 - self.f as i64
    }
}

pub type QElem = Lin<QKey, Cyclotomic>;
pub type QTensor<const N: usize> = Lin<[QKey; N], Cyclotomic>;

/// Which coproduct is used on the quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scope {
    /// `Delta^W` of the ideal `W`: `E -> J (x) E + E (x) K`,
    /// `F -> F (x) J + Kb (x) F`.
    W,
    /// `Delta_w` of the whole algebra: `E -> 1 (x) E + E (x) K`,
    /// `F -> F (x) 1 + Kb (x) F`.
    Full,
}

pub struct QuotientAlgebra {
    d: u32,
    alg: WAlgebra<CyclotomicField>,
    products: RwLock<HashMap<(QKey, QKey), QElem>>,
    coproducts: RwLock<HashMap<(QKey, Scope), QTensor<2>>>,
}

impl fmt::Debug for QuotientAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuotientAlgebra(d = {})", self.d)
    }
}

/// The quotient for a primitive `d`-th root of unity; `d` must be odd and
/// greater than one.
pub fn build_quotient(d: u32) -> Result<QuotientAlgebra, CoeffError> {
    QuotientAlgebra::new(d)
}

impl QuotientAlgebra {
    pub fn new(d: u32) -> Result<Self, CoeffError> {
        let field = CyclotomicField::new(d)?;
        Ok(QuotientAlgebra {
            d,
            alg: WAlgebra::new(field),
            products: RwLock::new(HashMap::new()),
            coproducts: RwLock::new(HashMap::new()),
        })
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn field(&self) -> &CyclotomicField {
        self.alg.field()
    }

    pub fn basis(&self) -> Vec<QKey> {
        let d = self.d;
        let mut out = Vec::with_capacity((d * d * (d + 1)) as usize);
        for e in 0..d {
            for f in 0..d {
                for t in 0..=d {
                    out.push(QKey::new(e, f, t));
                }
            }
        }
        out
    }

    pub fn w_basis(&self) -> Vec<QKey> {
        self.basis().into_iter().filter(QKey::in_w).collect()
    }

    pub fn dim(&self) -> usize {
        self.basis().len()
    }

    pub fn one_key(&self) -> QKey {
        QKey::new(0, 0, 0)
    }

    pub fn j_key(&self) -> QKey {
        QKey::new(0, 0, self.d)
    }

    pub fn basis_elem(&self, k: QKey) -> QElem {
        Lin::basis(k, self.field())
    }

    pub fn monomial_of(&self, k: &QKey) -> Monomial {
        let tail = match k.t {
            0 => Tail::One,
            t if t == self.d => Tail::J,
            t => Tail::K(t),
        };
        Monomial::new(k.e, k.f, tail)
    }

    /// Image of a PBW monomial, `None` if it lies in `I`.
    pub fn reduce_monomial(&self, m: &Monomial) -> Option<QKey> {
        let d = self.d;
        if m.e >= d || m.f >= d {
            return None;
        }
        // K^l = K^((l - 1) mod d + 1) and Kb = Kb J = Kb K^d = K^(d - 1)
        let wrap = |l: u64| ((l - 1) % d as u64) as u32 + 1;
        let t = match m.tail {
            Tail::One => 0,
            Tail::J => d,
            Tail::K(l) => wrap(l as u64),
            Tail::Kb(l) => wrap(l as u64 * (d as u64 - 1)),
        };
        Some(QKey::new(m.e, m.f, t))
    }

    pub fn reduce(&self, x: &Element<Cyclotomic>) -> QElem {
        let mut out = Lin::zero();
        for (m, c) in x {
            if let Some(k) = self.reduce_monomial(m) {
                out.add_term(k, c.clone(), self.field());
            }
        }
        out
    }

    /// Parses and normalizes an expression, then reduces it modulo `I`.
    pub fn parse(&self, text: &str) -> crate::error::Result<QElem> {
        let x = crate::algebra::parse(text, crate::algebra::Flavor::W, self.field())?;
        Ok(self.reduce(&self.alg.normalize(&x)?))
    }

    pub fn gen(&self, g: Gen) -> QElem {
        let d = self.d;
        self.basis_elem(match g {
            Gen::E => QKey::new(1, 0, 0),
            Gen::F => QKey::new(0, 1, 0),
            Gen::K => QKey::new(0, 0, 1),
            Gen::Kb => QKey::new(0, 0, d - 1),
            Gen::J => QKey::new(0, 0, d),
        })
    }

    /// `rho(g) = g J`, the generator inside `W`.
    pub fn rho(&self, g: Gen) -> QElem {
        self.mul(&self.gen(g), &self.gen(Gen::J))
    }

    pub fn mul(&self, x: &QElem, y: &QElem) -> QElem {
        let field = self.field();
        let mut out = Lin::zero();
        for (a, c) in x {
            for (b, e) in y {
                out.add_scaled(&self.mul_keys(a, b), &field.mul(c, e), field);
            }
        }
        out
    }

    pub fn mul_keys(&self, a: &QKey, b: &QKey) -> QElem {
        if let Some(hit) = self.products.read().unwrap().get(&(*a, *b)) {
            return hit.clone();
        }
        // right-multiply by the generators of b one at a time
        let field = self.field();
        let mut p = self.basis_elem(*a);
        for g in self.gens_of(b) {
            let mut next = Lin::zero();
            for (k, c) in &p {
                let m = self.alg.mul_monomials(&self.monomial_of(k), &Monomial::from_normal_word(&[g]).unwrap());
                next.add_scaled(&self.reduce(&m), c, field);
            }
            p = next;
        }
        self.products.write().unwrap().insert((*a, *b), p.clone());
        p
    }

    fn gens_of(&self, k: &QKey) -> Vec<Gen> {
        let mut w = vec![Gen::E; k.e as usize];
        w.extend(std::iter::repeat_n(Gen::F, k.f as usize));
        if k.t == self.d {
            w.push(Gen::J);
        } else {
            w.extend(std::iter::repeat_n(Gen::K, k.t as usize));
        }
        w
    }

    pub fn word(&self, w: &[Gen]) -> QElem {
        w.iter()
            .fold(self.basis_elem(self.one_key()), |acc, &g| self.mul(&acc, &self.gen(g)))
    }

    fn tensor2(&self, a: &QElem, b: &QElem) -> QTensor<2> {
        tensor::outer(self, [a, b])
    }

    fn coproduct_gen(&self, g: Gen, scope: Scope) -> QTensor<2> {
        let unit = match scope {
            Scope::W => self.gen(Gen::J),
            Scope::Full => self.basis_elem(self.one_key()),
        };
        let field = self.field();
        match g {
            Gen::E => {
                let e = self.gen(Gen::E);
                self.tensor2(&unit, &e).add(&self.tensor2(&e, &self.gen(Gen::K)), field)
            }
            Gen::F => {
                let f = self.gen(Gen::F);
                self.tensor2(&f, &unit).add(&self.tensor2(&self.gen(Gen::Kb), &f), field)
            }
            g => {
                let x = self.gen(g);
                self.tensor2(&x, &x)
            }
        }
    }

    /// Coproduct of a basis element, as the product of generator images.
    pub fn coproduct_key(&self, k: &QKey, scope: Scope) -> QTensor<2> {
        if let Some(hit) = self.coproducts.read().unwrap().get(&(*k, scope)) {
            return hit.clone();
        }
        let one = self.one_key();
        let mut acc = self.tensor2(&self.basis_elem(one), &self.basis_elem(one));
        for g in self.gens_of(k) {
            acc = tensor::mul(self, &acc, &self.coproduct_gen(g, scope));
        }
        self.coproducts.write().unwrap().insert((*k, scope), acc.clone());
        acc
    }

    pub fn coproduct(&self, x: &QElem, scope: Scope) -> QTensor<2> {
        x.map_linear(self.field(), |k| self.coproduct_key(k, scope))
    }

    /// The weak antipode `E -> -E Kb`, `F -> -K F`, `K <-> Kb`, extended
    /// anti-multiplicatively.
    pub fn antipode_key(&self, k: &QKey) -> QElem {
        let minus = self.field().from_int(-1);
        let te = self.word(&[Gen::E, Gen::Kb]).scale(&minus, self.field());
        let tf = self.word(&[Gen::K, Gen::F]).scale(&minus, self.field());
        let mut acc = self.basis_elem(self.one_key());
        for _ in 0..k.t {
            acc = self.mul(&acc, &self.gen(Gen::Kb));
        }
        for _ in 0..k.f {
            acc = self.mul(&acc, &tf);
        }
        for _ in 0..k.e {
            acc = self.mul(&acc, &te);
        }
        acc
    }

    pub fn render_key(&self, k: &QKey) -> String {
        self.monomial_of(k).to_string()
    }

    pub fn render(&self, x: &QElem) -> String {
        join_terms(x.iter().map(|(k, c)| render_term(c, &self.render_key(k), self.field())))
    }

    pub fn render_tensor<const N: usize>(&self, x: &QTensor<N>) -> String {
        tensor::render(self, x)
    }

    pub fn cache_len(&self) -> usize {
        self.products.read().unwrap().len()
    }
}

impl BasisAlgebra for QuotientAlgebra {
    type Field = CyclotomicField;
    type Key = QKey;

    fn field(&self) -> &CyclotomicField {
        QuotientAlgebra::field(self)
    }

    fn mul_basis(&self, a: &QKey, b: &QKey) -> QElem {
        self.mul_keys(a, b)
    }

    fn render_key(&self, k: &QKey) -> String {
        QuotientAlgebra::render_key(self, k)
    }
}
