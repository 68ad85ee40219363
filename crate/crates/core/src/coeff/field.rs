use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use num_rational::BigRational;

use super::cyclotomic::{specialize, CycloCtx, Cyclotomic};
use super::ratfunc::RationalFunction;
use super::CoeffError;

/// Which scalar field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldMode {
    Generic,
    Cyclotomic(u32),
}

impl fmt::Display for FieldMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldMode::Generic => f.write_str("Q(q)"),
            FieldMode::Cyclotomic(d) => write!(f, "Q(zeta_{d})"),
        }
    }
}

/// A field of scalars containing a distinguished invertible element `q`.
pub trait ScalarField: Clone + Send + Sync + fmt::Debug + 'static {
    type Elem: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync;

    fn mode(&self) -> FieldMode;
    fn zero(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn from_rational(&self, r: &BigRational) -> Self::Elem;
    fn q_pow(&self, e: i64) -> Self::Elem;
    /// Image of an element of `Q(q)`.
    fn from_generic(&self, x: &RationalFunction) -> Result<Self::Elem, CoeffError>;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, CoeffError>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;

    fn one(&self) -> Self::Elem {
        self.from_int(1)
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, CoeffError> {
        Ok(self.mul(a, &self.inv(b)?))
    }
}

/// The field `Q(q)` of rational functions.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GenericField;

impl ScalarField for GenericField {
    type Elem = RationalFunction;

    fn mode(&self) -> FieldMode {
        FieldMode::Generic
    }
    fn zero(&self) -> RationalFunction {
        RationalFunction::zero()
    }
    fn from_int(&self, n: i64) -> RationalFunction {
        RationalFunction::from_int(n)
    }
    fn from_rational(&self, r: &BigRational) -> RationalFunction {
        RationalFunction::from_rational(r)
    }
    fn q_pow(&self, e: i64) -> RationalFunction {
        RationalFunction::q_pow(e)
    }
    fn from_generic(&self, x: &RationalFunction) -> Result<RationalFunction, CoeffError> {
        Ok(x.clone())
    }
    fn add(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a + b
    }
    fn sub(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a - b
    }
    fn mul(&self, a: &RationalFunction, b: &RationalFunction) -> RationalFunction {
        a * b
    }
    fn neg(&self, a: &RationalFunction) -> RationalFunction {
        -a
    }
    fn inv(&self, a: &RationalFunction) -> Result<RationalFunction, CoeffError> {
        a.inv()
    }
    fn is_zero(&self, a: &RationalFunction) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &RationalFunction) -> bool {
        a.is_one()
    }
}

/// The cyclotomic field `Q(zeta_d)`, `q` being a primitive `d`-th root of unity.
#[derive(Debug, Clone)]
pub struct CyclotomicField {
    ctx: Arc<CycloCtx>,
}

impl CyclotomicField {
    pub fn new(d: u32) -> Result<Self, CoeffError> {
        Ok(CyclotomicField {
            ctx: CycloCtx::new(d)?,
        })
    }

    pub fn order(&self) -> u32 {
        self.ctx.order()
    }

    pub fn ctx(&self) -> &Arc<CycloCtx> {
        &self.ctx
    }
}

impl ScalarField for CyclotomicField {
    type Elem = Cyclotomic;

    fn mode(&self) -> FieldMode {
        FieldMode::Cyclotomic(self.ctx.order())
    }
    fn zero(&self) -> Cyclotomic {
        Cyclotomic::zero(&self.ctx)
    }
    fn from_int(&self, n: i64) -> Cyclotomic {
        Cyclotomic::from_int(&self.ctx, n)
    }
    fn from_rational(&self, r: &BigRational) -> Cyclotomic {
        Cyclotomic::from_rational(&self.ctx, r.clone())
    }
    fn q_pow(&self, e: i64) -> Cyclotomic {
        Cyclotomic::q_pow(&self.ctx, e)
    }
    fn from_generic(&self, x: &RationalFunction) -> Result<Cyclotomic, CoeffError> {
        specialize(x, &self.ctx)
    }
    fn add(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        a + b
    }
    fn sub(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        a - b
    }
    fn mul(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        a * b
    }
    fn neg(&self, a: &Cyclotomic) -> Cyclotomic {
        -a
    }
    fn inv(&self, a: &Cyclotomic) -> Result<Cyclotomic, CoeffError> {
        a.inv()
    }
    fn is_zero(&self, a: &Cyclotomic) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &Cyclotomic) -> bool {
        a.is_one()
    }
}
