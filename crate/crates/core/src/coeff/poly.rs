//! Dense univariate polynomials in `q` with arbitrary-precision integer
//! coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Polynomial `c_0 + c_1 q + ... + c_n q^n`, stored ascending with no
/// trailing zero coefficients. The zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * q^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Index of the lowest nonzero coefficient (the power of `q` dividing it).
    pub fn low_order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Whether the polynomial is a single term `c q^k`.
    pub fn as_monomial(&self) -> Option<(&BigInt, usize)> {
        let lo = self.low_order()?;
        (lo + 1 == self.coeffs.len()).then(|| (&self.coeffs[lo], lo))
    }

    pub fn neg(&self) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Divide by `q^k`; the caller guarantees `q^k` divides `self`.
    pub fn unshift(&self, k: usize) -> Self {
        IntPoly {
            coeffs: self.coeffs[k.min(self.coeffs.len())..].to_vec(),
        }
    }

    /// Divide every coefficient by `c`, which must divide all of them exactly.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a / c).collect(),
        }
    }

    /// gcd of the coefficients, always nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.lead().unwrap().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    /// Pseudo-remainder of `self` by `divisor`: `lc(divisor)^k * self mod divisor`.
    pub fn pseudo_rem(&self, divisor: &Self) -> Self {
        let dd = divisor.degree().expect("pseudo_rem by zero polynomial");
        let lc = divisor.lead().unwrap();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let rl = r.lead().unwrap().clone();
            // r <- lc * r - rl * q^(rd-dd) * divisor
            r = r.scale(lc).sub(&divisor.scale(&rl).shift(rd - dd));
        }
        r
    }

    /// Exact division over the integers. Returns `None` if `divisor` does not
    /// divide `self` in `Z[q]`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.lead().unwrap();
        let mut r = self.clone();
        let Some(sd) = r.degree() else {
            return Some(Self::zero());
        };
        if sd < dd {
            return None;
        }
        let mut quot = vec![BigInt::zero(); sd - dd + 1];
        while let Some(rd) = r.degree() {
            if rd < dd {
                return None;
            }
            let (qc, rem) = r.lead().unwrap().div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            r = r.sub(&divisor.scale(&qc).shift(rd - dd));
            quot[rd - dd] = qc;
        }
        Some(Self::from_coeffs(quot))
    }

    /// Greatest common divisor, primitive with positive leading coefficient
    /// (primitive pseudo-remainder sequence).
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return Self::one();
            }
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a
    }

    /// Evaluate at an integer point.
    pub fn eval_i64(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        acc
    }

    /// Render in descending powers of `q`, treating coefficient `i` as the
    /// power `i + offset`.
    pub(crate) fn render_with_offset(&self, offset: i64) -> String {
        let terms: Vec<(BigInt, i64)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), i as i64 + offset))
            .collect();
        render_terms(terms.iter().map(|(c, e)| (c.to_string(), c.is_negative(), *e)))
    }
}

/// Joins `(|coeff| text, negative, exponent)` terms in the order given.
pub(crate) fn render_terms<I>(terms: I) -> String
where
    I: IntoIterator<Item = (String, bool, i64)>,
{
    let mut out = String::new();
    for (idx, (coeff, neg, exp)) in terms.into_iter().enumerate() {
        let abs = coeff.trim_start_matches('-');
        let body = match (abs, exp) {
            (c, 0) => c.to_string(),
            ("1", e) => q_power(e),
            (c, e) => format!("{c}*{}", q_power(e)),
        };
        match (idx, neg) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub(crate) fn q_power(e: i64) -> String {
    if e == 1 {
        "q".to_string()
    } else {
        format!("q^{e}")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with_offset(0))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}
