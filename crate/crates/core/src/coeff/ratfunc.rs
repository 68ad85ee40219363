//! Elements of the field `Q(q)` as reduced fractions of integer polynomials.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{render_terms, IntPoly};
use super::CoeffError;

/// `num / den` with `gcd(num, den) = 1` in `Z[q]`, the combined content of
/// numerator and denominator equal to one, and a positive leading coefficient
/// in the denominator. Zero is `0 / 1`. This form is unique, so structural
/// equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_bigint(BigInt::from(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        RationalFunction {
            num: IntPoly::constant(n),
            den: IntPoly::one(),
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::new(
            IntPoly::constant(r.numer().clone()),
            IntPoly::constant(r.denom().clone()),
        )
        .expect("rational has nonzero denominator")
    }

    /// `q^e` for any integer `e`.
    pub fn q_pow(e: i64) -> Self {
        let k = e.unsigned_abs() as usize;
        let m = IntPoly::monomial(BigInt::one(), k);
        if e >= 0 {
            RationalFunction {
                num: m,
                den: IntPoly::one(),
            }
        } else {
            RationalFunction {
                num: IntPoly::one(),
                den: m,
            }
        }
    }

    /// Builds `num / den` in canonical form.
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (mut num, mut den) = if den.degree() == Some(0) {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.div_scalar_exact(&c);
            den = den.div_scalar_exact(&c);
        }
        if den.lead().unwrap().is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(RationalFunction { num, den })
    }

    pub fn numer(&self) -> &IntPoly {
        &self.num
    }

    pub fn denom(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self, CoeffError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self, CoeffError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..e.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    /// If the denominator is `c q^k`, the Laurent form `sum a_i q^i` with
    /// rational coefficients, highest power first.
    pub fn laurent_terms(&self) -> Option<Vec<(BigRational, i64)>> {
        let (c, k) = self.den.as_monomial()?;
        Some(
            self.num
                .coeffs()
                .iter()
                .enumerate()
                .rev()
                .filter(|(_, a)| !a.is_zero())
                .map(|(i, a)| (BigRational::new(a.clone(), c.clone()), i as i64 - k as i64))
                .collect(),
        )
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let r = if self.den == rhs.den {
            RationalFunction::new(self.num.add(&rhs.num), self.den.clone())
        } else {
            RationalFunction::new(
                self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
                self.den.mul(&rhs.den),
            )
        };
        r.expect("product of nonzero denominators")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RationalFunction {
                num: self.num.mul(&rhs.num),
                den: IntPoly::one(),
            };
        }
        RationalFunction::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
            .expect("product of nonzero denominators")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
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
forward_owned!(RationalFunction, Add add, Sub sub, Mul mul);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(terms) = self.laurent_terms() {
            if terms.is_empty() {
                return f.write_str("0");
            }
            return f.write_str(&render_terms(
                terms
                    .iter()
                    .map(|(c, e)| (rational_text(c), c.is_negative(), *e)),
            ));
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

pub(crate) fn rational_text(c: &BigRational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}
