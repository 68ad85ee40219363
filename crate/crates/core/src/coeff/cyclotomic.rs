//! The cyclotomic field `Q(zeta_d) = Q[q] / Phi_d(q)` for odd `d > 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{render_terms, IntPoly};
use super::ratfunc::{rational_text, RationalFunction};
use super::CoeffError;

/// Shared data for one cyclotomic field.
#[derive(Debug)]
pub struct CycloCtx {
    d: u32,
    /// `Phi_d`, monic with integer coefficients.
    phi: IntPoly,
    /// `q^k mod Phi_d` for `k = n .. 2n-1` where `n = deg Phi_d`.
    high_powers: Vec<Vec<BigInt>>,
}

impl CycloCtx {
    pub fn new(d: u32) -> Result<Arc<Self>, CoeffError> {
        if d <= 1 || d.is_multiple_of(2) {
            return Err(CoeffError::InvalidOrder(d));
        }
        let phi = cyclotomic_polynomial(d);
        let n = phi.degree().unwrap();
        let mut high_powers = Vec::with_capacity(n);
        // q^n = -(phi_0 + ... + phi_{n-1} q^{n-1})
        let mut cur: Vec<BigInt> = phi.coeffs()[..n].iter().map(|c| -c).collect();
        for _ in 0..n {
            high_powers.push(cur.clone());
            // multiply by q and reduce
            let top = cur[n - 1].clone();
            let mut next = vec![BigInt::zero(); n];
            next[1..n].clone_from_slice(&cur[..(n - 1)]);
            for (i, c) in next.iter_mut().enumerate() {
                *c -= &top * &phi.coeffs()[i];
            }
            cur = next;
        }
        Ok(Arc::new(CycloCtx { d, phi, high_powers }))
    }

    pub fn order(&self) -> u32 {
        self.d
    }

    /// `phi(d)`, the dimension of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.phi.degree().unwrap()
    }

    pub fn phi(&self) -> &IntPoly {
        &self.phi
    }
}

/// `Phi_d(q)` computed as `(q^d - 1) / prod_{e | d, e < d} Phi_e(q)`.
pub fn cyclotomic_polynomial(d: u32) -> IntPoly {
    let mut p = IntPoly::monomial(BigInt::one(), d as usize).sub(&IntPoly::one());
    for e in 1..d {
        if d.is_multiple_of(e) {
            p = p
                .div_exact(&cyclotomic_polynomial(e))
                .expect("cyclotomic factors divide q^d - 1");
        }
    }
    p
}

/// An element `c_0 + c_1 z + ... + c_{n-1} z^{n-1}` of `Q(zeta_d)`, where
/// `n = phi(d)`. The coefficient vector always has length exactly `n`.
#[derive(Clone)]
pub struct Cyclotomic {
    ctx: Arc<CycloCtx>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.d == other.ctx.d && self.coeffs == other.coeffs
    }
}
impl Eq for Cyclotomic {}

impl std::hash::Hash for Cyclotomic {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ctx.d.hash(state);
        self.coeffs.hash(state);
    }
}

impl Cyclotomic {
    pub fn zero(ctx: &Arc<CycloCtx>) -> Self {
        Cyclotomic {
            ctx: ctx.clone(),
            coeffs: vec![BigRational::zero(); ctx.degree()],
        }
    }

    pub fn from_rational(ctx: &Arc<CycloCtx>, r: BigRational) -> Self {
        let mut z = Self::zero(ctx);
        z.coeffs[0] = r;
        z
    }

    pub fn from_int(ctx: &Arc<CycloCtx>, n: i64) -> Self {
        Self::from_rational(ctx, BigRational::from_integer(n.into()))
    }

    /// Builds an element from rational coefficients of `1, z, z^2, ...`,
    /// reducing any powers `>= n`.
    pub fn from_coeffs(ctx: &Arc<CycloCtx>, coeffs: Vec<BigRational>) -> Self {
        let n = ctx.degree();
        let mut out = Self::zero(ctx);
        for (k, c) in coeffs.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out.add_power_scaled(k % ctx.d as usize, &c);
        }
        debug_assert_eq!(out.coeffs.len(), n);
        out
    }

    /// `zeta^e` for any integer `e`.
    pub fn q_pow(ctx: &Arc<CycloCtx>, e: i64) -> Self {
        let r = e.rem_euclid(ctx.d as i64) as usize;
        let mut out = Self::zero(ctx);
        out.add_power_scaled(r, &BigRational::one());
        out
    }

    /// `self += c * z^k` for `0 <= k < d`.
    fn add_power_scaled(&mut self, k: usize, c: &BigRational) {
        let n = self.ctx.degree();
        if k < n {
            self.coeffs[k] += c;
            return;
        }
        // z^k for n <= k < d: reduce by repeated use of the table
        let ctx = self.ctx.clone();
        if k < 2 * n {
            for (i, t) in ctx.high_powers[k - n].iter().enumerate() {
                if !t.is_zero() {
                    self.coeffs[i] += c * BigRational::from_integer(t.clone());
                }
            }
        } else {
            let mut tmp = vec![BigRational::zero(); k + 1];
            tmp[k] = c.clone();
            let reduced = reduce_rational(&ctx, tmp);
            for (a, b) in self.coeffs.iter_mut().zip(reduced) {
                *a += b;
            }
        }
    }

    pub fn ctx(&self) -> &Arc<CycloCtx> {
        &self.ctx
    }

    pub fn order(&self) -> u32 {
        self.ctx.d
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Cyclotomic {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm in `Q[q]`.
    pub fn inv(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        let phi: Vec<BigRational> = self
            .ctx
            .phi
            .coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let s = rpoly::inverse_mod(&self.coeffs, &phi).ok_or(CoeffError::DivisionByZero)?;
        Ok(Self::from_coeffs(&self.ctx, s))
    }

    pub fn div(&self, other: &Self) -> Result<Self, CoeffError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self, CoeffError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::from_int(&self.ctx, 1);
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn check_same_field(&self, other: &Self) {
        assert_eq!(
            self.ctx.d, other.ctx.d,
            "mixing elements of different cyclotomic fields"
        );
    }
}

/// Reduce a rational-coefficient polynomial modulo `Phi_d`.
fn reduce_rational(ctx: &CycloCtx, mut c: Vec<BigRational>) -> Vec<BigRational> {
    let n = ctx.degree();
    let phi = ctx.phi.coeffs();
    while c.len() > n {
        let top = c.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = c.len() - n;
        for i in 0..n {
            if !phi[i].is_zero() {
                c[shift + i] -= &top * BigRational::from_integer(phi[i].clone());
            }
        }
    }
    c.resize(n, BigRational::zero());
    c
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_same_field(rhs);
        Cyclotomic {
            ctx: self.ctx.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_same_field(rhs);
        Cyclotomic {
            ctx: self.ctx.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.check_same_field(rhs);
        let n = self.ctx.degree();
        let mut wide = vec![BigRational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    wide[i + j] += a * b;
                }
            }
        }
        let mut coeffs: Vec<BigRational> = wide.drain(..n).collect();
        for (k, c) in wide.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, t) in self.ctx.high_powers[k].iter().enumerate() {
                if !t.is_zero() {
                    coeffs[i] += &c * BigRational::from_integer(t.clone());
                }
            }
        }
        Cyclotomic {
            ctx: self.ctx.clone(),
            coeffs,
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Cyclotomic, Add add, Sub sub, Mul mul);

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (rational_text(c), c.is_negative(), i as i64));
        f.write_str(&render_terms(terms))
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic<{}>({self})", self.ctx.d)
    }
}

/// Image of a generic rational function in `Q(zeta_d)`.
pub fn specialize(x: &RationalFunction, ctx: &Arc<CycloCtx>) -> Result<Cyclotomic, CoeffError> {
    let image = |p: &IntPoly| {
        let coeffs = p
            .coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        Cyclotomic::from_coeffs(ctx, coeffs)
    };
    let den = image(x.denom());
    if den.is_zero() {
        return Err(CoeffError::DenominatorVanishes(ctx.d));
    }
    Ok(&image(x.numer()) * &den.inv()?)
}

/// Dense polynomials over `Q`, ascending, used for the extended gcd.
mod rpoly {
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
        p
    }

    fn sub_scaled_shift(a: &mut Vec<BigRational>, b: &[BigRational], c: &BigRational, k: usize) {
        if a.len() < b.len() + k {
            a.resize(b.len() + k, BigRational::zero());
        }
        for (i, x) in b.iter().enumerate() {
            a[i + k] -= c * x;
        }
    }

    fn divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut r = trim(a.to_vec());
        let b = trim(b.to_vec());
        let db = b.len() - 1;
        let lb = b[db].clone();
        let mut q = vec![BigRational::zero(); r.len().saturating_sub(db).max(1)];
        while r.len() > db && !r.is_empty() {
            let k = r.len() - 1 - db;
            let c = r.last().unwrap() / &lb;
            sub_scaled_shift(&mut r, &b, &c, k);
            q[k] = c;
            r = trim(r);
        }
        (trim(q), r)
    }

    fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out)
    }

    fn sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let n = a.len().max(b.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, x) in a.iter().enumerate() {
            out[i] += x;
        }
        for (i, y) in b.iter().enumerate() {
            out[i] -= y;
        }
        trim(out)
    }

    /// `s` with `s * a = 1 mod m`, if `gcd(a, m) = 1`.
    pub fn inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
        let (mut r0, mut r1) = (trim(m.to_vec()), divrem(a, m).1);
        let (mut s0, mut s1) = (Vec::<BigRational>::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (qt, r2) = divrem(&r0, &r1);
            let s2 = sub(&s0, &mul(&qt, &s1));
            r0 = std::mem::replace(&mut r1, r2);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is the gcd; it must be a nonzero constant
        if r0.len() != 1 {
            return None;
        }
        let c = r0[0].clone();
        Some(s0.into_iter().map(|x| x / &c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(d: u32) -> Arc<CycloCtx> {
        CycloCtx::new(d).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(3), IntPoly::from_i64s(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(9), IntPoly::from_i64s(&[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(15).degree(), Some(8));
    }

    #[test]
    fn rejects_even_or_trivial_orders() {
        assert_eq!(CycloCtx::new(4).unwrap_err(), CoeffError::InvalidOrder(4));
        assert_eq!(CycloCtx::new(1).unwrap_err(), CoeffError::InvalidOrder(1));
    }

    #[test]
    fn q_squared_mod_phi3() {
        let c = ctx(3);
        let q2 = Cyclotomic::q_pow(&c, 2);
        assert_eq!(q2.to_string(), "-q - 1");
        assert!(Cyclotomic::q_pow(&c, 3).is_one());
        assert_eq!(Cyclotomic::q_pow(&c, -1), q2);
    }

    #[test]
    fn inverse_round_trips() {
        let c = ctx(5);
        let x = &Cyclotomic::q_pow(&c, 1) - &Cyclotomic::q_pow(&c, -1);
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        assert_eq!(Cyclotomic::zero(&c).inv(), Err(CoeffError::DivisionByZero));
    }

    #[test]
    fn specialize_detects_pole() {
        let c = ctx(3);
        // 1 / (q^2 + q + 1) has a pole at a primitive cube root
        let x = RationalFunction::new(IntPoly::one(), IntPoly::from_i64s(&[1, 1, 1])).unwrap();
        assert_eq!(specialize(&x, &c), Err(CoeffError::DenominatorVanishes(3)));
    }
}
