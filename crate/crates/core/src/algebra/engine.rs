//! Term rewriting to the PBW normal form `E^i F^j (K^l | Kb^m | J | 1)`.

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::coeff::{q_minus_q_inv, ScalarField};
use crate::error::{Error, Result};
use crate::lin::Lin;

use super::free::{FreeExpr, Symbol};
use super::monomial::{Gen, Monomial, Tail};

pub type Element<S> = Lin<Monomial, S>;

/// Which relations the rewriting system uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RuleSet {
    /// The defining relations of `wsl_q(2)` plus the derived rules for `J`.
    Standard,
    /// Additionally `J -> 1`, i.e. the quotient by the ideal `(J - 1)`.
    ModJ,
}

/// Order in which redexes are rewritten.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    /// Picks a uniformly random redex at every step.
    Random(u64),
}

type Rhs<S> = Vec<(Vec<Gen>, S)>;

/// The algebra `wsl_q(2)` over a scalar field, with memoized products of
/// basis monomials.
pub struct WAlgebra<F: ScalarField> {
    field: F,
    rules: RuleSet,
    q2: F::Elem,
    qm2: F::Elem,
    /// `1 / (q - q^-1)`.
    c: F::Elem,
    cache: RwLock<HashMap<(Monomial, Monomial), Element<F::Elem>>>,
}

impl<F: ScalarField> WAlgebra<F> {
    pub fn new(field: F) -> Self {
        Self::with_rules(field, RuleSet::Standard)
    }

    pub fn with_rules(field: F, rules: RuleSet) -> Self {
        let c = field
            .inv(&q_minus_q_inv(&field))
            .expect("q - q^-1 is invertible in every supported field");
        WAlgebra {
            q2: field.q_pow(2),
            qm2: field.q_pow(-2),
            c,
            field,
            rules,
            cache: RwLock::new(HashMap::new()),
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rules(&self) -> RuleSet {
        self.rules
    }

    fn one_s(&self) -> F::Elem {
        self.field.one()
    }

    fn pair_rule(&self, a: Gen, b: Gen) -> Option<Rhs<F::Elem>> {
        use Gen::*;
        let one = self.one_s();
        Some(match (a, b) {
            (K, E) => vec![(vec![E, K], self.q2.clone())],
            (Kb, E) => vec![(vec![E, Kb], self.qm2.clone())],
            (J, E) => vec![(vec![E, J], one)],
            (K, F) => vec![(vec![F, K], self.qm2.clone())],
            (Kb, F) => vec![(vec![F, Kb], self.q2.clone())],
            (J, F) => vec![(vec![F, J], one)],
            (F, E) => vec![
                (vec![E, F], one),
                (vec![K], self.field.neg(&self.c)),
                (vec![Kb], self.c.clone()),
            ],
            (K, Kb) | (Kb, K) | (J, J) => vec![(vec![J], one)],
            (K, J) | (J, K) => vec![(vec![K], one)],
            (Kb, J) | (J, Kb) => vec![(vec![Kb], one)],
            _ => return None,
        })
    }

    /// Rewrites at `p`: a single-letter rule or a rule for `w[p] w[p+1]`.
    fn rule_at(&self, w: &[Gen], p: usize) -> Option<(usize, Rhs<F::Elem>)> {
        if self.rules == RuleSet::ModJ && w[p] == Gen::J {
            return Some((1, vec![(vec![], self.one_s())]));
        }
        let b = *w.get(p + 1)?;
        self.pair_rule(w[p], b).map(|r| (2, r))
    }

    fn has_rule_at(&self, w: &[Gen], p: usize) -> bool {
        self.rule_at(w, p).is_some()
    }

    /// Rewrites a single word to normal form by exhaustive rule application.
    /// Equal words in flight are merged, so the work is polynomial in the
    /// word length.
    pub fn rewrite_word(&self, word: &[Gen], strategy: Strategy) -> Element<F::Elem> {
        let mut rng = match strategy {
            Strategy::Random(seed) => Some(StdRng::seed_from_u64(seed)),
            Strategy::Leftmost => None,
        };
        let mut pending: BTreeMap<Vec<Gen>, F::Elem> = BTreeMap::new();
        pending.insert(word.to_vec(), self.one_s());
        let mut out = Element::zero();
        while !pending.is_empty() {
            let mut next: BTreeMap<Vec<Gen>, F::Elem> = BTreeMap::new();
            for (w, c) in std::mem::take(&mut pending) {
                if self.field.is_zero(&c) {
                    continue;
                }
                let p = match rng.as_mut() {
                    None => (0..w.len()).find(|&p| self.has_rule_at(&w, p)),
                    Some(rng) => {
                        let redexes: Vec<usize> =
                            (0..w.len()).filter(|&p| self.has_rule_at(&w, p)).collect();
                        (!redexes.is_empty()).then(|| redexes[rng.gen_range(0..redexes.len())])
                    }
                };
                let Some(p) = p else {
                    let m = Monomial::from_normal_word(&w)
                        .expect("irreducible words are PBW monomials");
                    out.add_term(m, c, &self.field);
                    continue;
                };
                let (len, rhs) = self.rule_at(&w, p).unwrap();
                for (r, k) in rhs {
                    let mut nw = Vec::with_capacity(w.len() + 1);
                    nw.extend_from_slice(&w[..p]);
                    nw.extend_from_slice(&r);
                    nw.extend_from_slice(&w[p + len..]);
                    let v = self.field.mul(&c, &k);
                    match next.get_mut(&nw) {
                        Some(acc) => *acc = self.field.add(acc, &v),
                        None => {
                            next.insert(nw, v);
                        }
                    }
                }
            }
            pending = next;
        }
        out
    }

    /// Product of two basis monomials, memoized.
    pub fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Element<F::Elem> {
        if b.is_one() {
            return self.reduce(a);
        }
        if a.is_one() {
            return self.reduce(b);
        }
        if let Some(hit) = self.cache.read().unwrap().get(&(*a, *b)) {
            return hit.clone();
        }
        let mut w = a.word();
        w.extend(b.word());
        let r = self.rewrite_word(&w, Strategy::Leftmost);
        self.cache.write().unwrap().insert((*a, *b), r.clone());
        r
    }

    /// Normal form of a single monomial under the active rule set.
    fn reduce(&self, m: &Monomial) -> Element<F::Elem> {
        if self.rules == RuleSet::ModJ && m.tail == Tail::J {
            Element::basis(Monomial::new(m.e, m.f, Tail::One), &self.field)
        } else {
            Element::basis(*m, &self.field)
        }
    }

    pub fn mul(&self, x: &Element<F::Elem>, y: &Element<F::Elem>) -> Element<F::Elem> {
        let mut out = Element::zero();
        for (a, c) in x {
            for (b, d) in y {
                let p = self.mul_monomials(a, b);
                out.add_scaled(&p, &self.field.mul(c, d), &self.field);
            }
        }
        out
    }

    pub fn mul_all<'a>(&self, xs: impl IntoIterator<Item = &'a Element<F::Elem>>) -> Element<F::Elem>
    where
        F::Elem: 'a,
    {
        xs.into_iter()
            .fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    pub fn one(&self) -> Element<F::Elem> {
        Element::basis(Monomial::ONE, &self.field)
    }

    pub fn scalar(&self, c: F::Elem) -> Element<F::Elem> {
        Element::term(Monomial::ONE, c, &self.field)
    }

    pub fn gen(&self, g: Gen) -> Element<F::Elem> {
        let m = Monomial::from_normal_word(&[g]).unwrap();
        self.reduce(&m)
    }

    pub fn monomial(&self, m: Monomial) -> Element<F::Elem> {
        self.reduce(&m)
    }

    /// Normal form of a word in the generators.
    pub fn word(&self, w: &[Gen]) -> Element<F::Elem> {
        let mut acc = self.one();
        for &g in w {
            acc = self.mul(&acc, &self.gen(g));
        }
        acc
    }

    pub fn add(&self, x: &Element<F::Elem>, y: &Element<F::Elem>) -> Element<F::Elem> {
        x.add(y, &self.field)
    }

    pub fn sub(&self, x: &Element<F::Elem>, y: &Element<F::Elem>) -> Element<F::Elem> {
        x.sub(y, &self.field)
    }

    pub fn scale(&self, x: &Element<F::Elem>, c: &F::Elem) -> Element<F::Elem> {
        x.scale(c, &self.field)
    }

    /// `x y - y x`.
    pub fn commutator(&self, x: &Element<F::Elem>, y: &Element<F::Elem>) -> Element<F::Elem> {
        self.sub(&self.mul(x, y), &self.mul(y, x))
    }

    /// Image of an input symbol. Bare `Ev`/`Fv` have no image.
    pub fn symbol(&self, s: Symbol) -> Result<Element<F::Elem>> {
        Ok(match s {
            Symbol::E => self.gen(Gen::E),
            Symbol::F => self.gen(Gen::F),
            Symbol::K => self.gen(Gen::K),
            Symbol::Kb => self.gen(Gen::Kb),
            Symbol::J => self.gen(Gen::J),
            Symbol::Eh => self.word(&[Gen::J, Gen::E, Gen::J]),
            Symbol::Fh => self.word(&[Gen::J, Gen::F, Gen::J]),
            Symbol::L => self.scale(
                &self.sub(&self.gen(Gen::K), &self.gen(Gen::Kb)),
                &self.c,
            ),
            Symbol::Ev | Symbol::Fv => {
                return Err(Error::UnsupportedWord(format!(
                    "bare {} is not in the span of sandwiched words",
                    s.name()
                )))
            }
        })
    }

    /// Normal form of a parsed expression over the `w` generators.
    pub fn normalize(&self, x: &FreeExpr<F::Elem>) -> Result<Element<F::Elem>> {
        let mut out = Element::zero();
        for (c, w) in &x.terms {
            let mut acc = self.scalar(c.clone());
            for &s in w {
                acc = self.mul(&acc, &self.symbol(s)?);
            }
            out.add_scaled(&acc, &self.field.one(), &self.field);
        }
        Ok(out)
    }

    /// Normal form of an expression over the sandwiched alphabet
    /// `{Eh, Fh, K, Kb, J}`. Any bare `E`/`F` is rejected.
    pub fn normalize_v(&self, x: &FreeExpr<F::Elem>) -> Result<Element<F::Elem>> {
        for (_, w) in &x.terms {
            if let Some(s) = w
                .iter()
                .find(|s| matches!(s, Symbol::E | Symbol::F | Symbol::Ev | Symbol::Fv))
            {
                return Err(Error::UnsupportedWord(format!(
                    "bare {} is not in the span of sandwiched words",
                    s.name()
                )));
            }
        }
        self.normalize(x)
    }

    /// `J x J`.
    pub fn j_conjugate(&self, x: &Element<F::Elem>) -> Element<F::Elem> {
        let j = self.gen(Gen::J);
        self.mul(&self.mul(&j, x), &j)
    }

    /// `x J y`.
    pub fn j_product(&self, x: &Element<F::Elem>, y: &Element<F::Elem>) -> Element<F::Elem> {
        self.mul(&self.mul(x, &self.gen(Gen::J)), y)
    }

    pub fn cache_len(&self) -> usize {
        self.cache.read().unwrap().len()
    }
}
