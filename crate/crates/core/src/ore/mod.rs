//! Weak Ore extensions `R[t, alpha, delta]` over an arbitrary coefficient
//! algebra, and the presentation of `wsl_q(2)` as an iterated extension,
//! which gives a multiplication independent of the rewriting engine.

mod uqw;

pub use uqw::{crosscheck_engines, KAlgebra, OreW};

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// An associative unital algebra with a fixed element representation.
pub trait Ring: Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn render(&self, a: &Self::Elem) -> String;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

impl<R: Ring + ?Sized> Ring for Arc<R> {
    type Elem = R::Elem;

    fn zero(&self) -> R::Elem {
        (**self).zero()
    }
    fn one(&self) -> R::Elem {
        (**self).one()
    }
    fn add(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        (**self).add(a, b)
    }
    fn neg(&self, a: &R::Elem) -> R::Elem {
        (**self).neg(a)
    }
    fn mul(&self, a: &R::Elem, b: &R::Elem) -> R::Elem {
        (**self).mul(a, b)
    }
    fn is_zero(&self, a: &R::Elem) -> bool {
        (**self).is_zero(a)
    }
    fn render(&self, a: &R::Elem) -> String {
        (**self).render(a)
    }
}

pub type Endo<E> = Arc<dyn Fn(&E) -> E + Send + Sync>;

/// An algebra endomorphism `alpha` and an `alpha`-derivation `delta`,
/// optionally with the inverse of `alpha`.
#[derive(Clone)]
pub struct EndoPair<E> {
    pub alpha: Endo<E>,
    pub delta: Endo<E>,
    pub alpha_inv: Option<Endo<E>>,
}

impl<E> EndoPair<E> {
    pub fn new(
        alpha: impl Fn(&E) -> E + Send + Sync + 'static,
        delta: impl Fn(&E) -> E + Send + Sync + 'static,
    ) -> Self {
        EndoPair {
            alpha: Arc::new(alpha),
            delta: Arc::new(delta),
            alpha_inv: None,
        }
    }

    pub fn with_inverse(mut self, inv: impl Fn(&E) -> E + Send + Sync + 'static) -> Self {
        self.alpha_inv = Some(Arc::new(inv));
        self
    }
}

/// `sum a_i t^i` with coefficients on the left, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewPoly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone> SkewPoly<E> {
    pub fn zero() -> Self {
        SkewPoly { coeffs: Vec::new() }
    }

    pub fn new<R: Ring<Elem = E>>(mut coeffs: Vec<E>, ring: &R) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        SkewPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&E> {
        self.coeffs.last()
    }
}

/// The weak Ore extension `R[t, alpha, delta]`.
pub struct OreExt<R: Ring> {
    base: R,
    ops: EndoPair<R::Elem>,
    var: String,
}

impl<R: Ring> OreExt<R> {
    pub fn new(base: R, ops: EndoPair<R::Elem>, var: impl Into<String>) -> Self {
        OreExt {
            base,
            ops,
            var: var.into(),
        }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn ops(&self) -> &EndoPair<R::Elem> {
        &self.ops
    }

    pub fn constant(&self, a: R::Elem) -> SkewPoly<R::Elem> {
        SkewPoly::new(vec![a], &self.base)
    }

    /// `a t^n`.
    pub fn monomial(&self, a: R::Elem, n: usize) -> SkewPoly<R::Elem> {
        let mut coeffs = vec![self.base.zero(); n];
        coeffs.push(a);
        SkewPoly::new(coeffs, &self.base)
    }

    pub fn t(&self) -> SkewPoly<R::Elem> {
        self.monomial(self.base.one(), 1)
    }

    /// `S_{n,k}(a)`, the sum of all compositions of `k` copies of `delta`
    /// and `n - k` copies of `alpha`.
    pub fn snk(&self, n: i64, k: i64, a: &R::Elem) -> Result<R::Elem> {
        if n < 0 || k < 0 || k > n {
            return Err(Error::IndexOutOfRange { n, k });
        }
        Ok(self.snk_row(n as usize, a).swap_remove(k as usize))
    }

    /// `[S_{n,0}(a), ..., S_{n,n}(a)]` by `S_{n,k} = alpha S_{n-1,k} + delta S_{n-1,k-1}`.
    pub fn snk_row(&self, n: usize, a: &R::Elem) -> Vec<R::Elem> {
        let mut row = vec![a.clone()];
        for _ in 0..n {
            row = self.next_row(&row);
        }
        row
    }

    fn next_row(&self, row: &[R::Elem]) -> Vec<R::Elem> {
        let b = &self.base;
        let mut next = Vec::with_capacity(row.len() + 1);
        for k in 0..=row.len() {
            let mut s = b.zero();
            if k < row.len() {
                s = (self.ops.alpha)(&row[k]);
            }
            if k > 0 {
                s = b.add(&s, &(self.ops.delta)(&row[k - 1]));
            }
            next.push(s);
        }
        next
    }

    /// Product with `c_i = sum_p a_p sum_k S_{p,k}(b_{i-p+k})`, i.e.
    /// `a_p t^p b_j t^j = sum_k a_p S_{p,k}(b_j) t^{p-k+j}`.
    pub fn skew_mul(&self, p: &SkewPoly<R::Elem>, q: &SkewPoly<R::Elem>) -> SkewPoly<R::Elem> {
        let b = &self.base;
        let (Some(n), Some(m)) = (p.degree(), q.degree()) else {
            return SkewPoly::zero();
        };
        let mut c = vec![b.zero(); n + m + 1];
        for (j, bj) in q.coeffs.iter().enumerate() {
            if b.is_zero(bj) {
                continue;
            }
            let mut row = vec![bj.clone()];
            for (deg, ap) in p.coeffs.iter().enumerate() {
                if deg > 0 {
                    row = self.next_row(&row);
                }
                if b.is_zero(ap) {
                    continue;
                }
                for (k, s) in row.iter().enumerate() {
                    if !b.is_zero(s) {
                        let i = deg - k + j;
                        c[i] = b.add(&c[i], &b.mul(ap, s));
                    }
                }
            }
        }
        SkewPoly::new(c, b)
    }

    /// Coefficients `b_i` with `P = sum t^i b_i`.
    pub fn right_form(&self, p: &SkewPoly<R::Elem>) -> Result<Vec<R::Elem>> {
        let inv = self.ops.alpha_inv.as_ref().ok_or(Error::AlphaNotInvertible)?;
        let Some(n) = p.degree() else {
            return Ok(Vec::new());
        };
        let mut out = vec![self.base.zero(); n + 1];
        let mut rest = p.clone();
        while let Some(d) = rest.degree() {
            // t^d b has leading coefficient alpha^d(b)
            let mut b = rest.coeffs[d].clone();
            for _ in 0..d {
                b = inv(&b);
            }
            let tdb = self.left_form_term(d, &b);
            rest = self.sub(&rest, &tdb);
            if rest.degree() >= Some(d) {
                // alpha^d(b) did not reproduce the leading coefficient
                return Err(Error::AlphaNotInvertible);
            }
            out[d] = b;
        }
        Ok(out)
    }

    /// `t^d b` in left form.
    fn left_form_term(&self, d: usize, b: &R::Elem) -> SkewPoly<R::Elem> {
        let row = self.snk_row(d, b);
        let mut coeffs = vec![self.base.zero(); d + 1];
        for (k, s) in row.into_iter().enumerate() {
            coeffs[d - k] = s;
        }
        SkewPoly::new(coeffs, &self.base)
    }

    /// `sum t^i b_i` in left form.
    pub fn left_form(&self, bs: &[R::Elem]) -> SkewPoly<R::Elem> {
        bs.iter()
            .enumerate()
            .fold(SkewPoly::zero(), |acc, (i, b)| self.add(&acc, &self.left_form_term(i, b)))
    }
}

impl<R: Ring> Ring for OreExt<R> {
    type Elem = SkewPoly<R::Elem>;

    fn zero(&self) -> Self::Elem {
        SkewPoly::zero()
    }

    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let n = a.coeffs.len().max(b.coeffs.len());
        let zero = self.base.zero();
        let coeffs = (0..n)
            .map(|i| {
                self.base
                    .add(a.coeffs.get(i).unwrap_or(&zero), b.coeffs.get(i).unwrap_or(&zero))
            })
            .collect();
        SkewPoly::new(coeffs, &self.base)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        SkewPoly {
            coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect(),
        }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.skew_mul(a, b)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.coeffs.is_empty()
    }

    fn render(&self, a: &Self::Elem) -> String {
        let terms: Vec<String> = a
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.base.is_zero(c))
            .map(|(i, c)| {
                let coeff = format!("({})", self.base.render(c));
                match i {
                    0 => coeff,
                    1 => format!("{coeff}*{}", self.var),
                    _ => format!("{coeff}*{}^{i}", self.var),
                }
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}
