//! Exact scalars: the rational function field `Q(q)` and the cyclotomic
//! fields `Q(zeta_d)`, behind the common [`ScalarField`] interface.

mod cyclotomic;
mod field;
mod poly;
mod qint;
mod ratfunc;

pub use cyclotomic::{cyclotomic_polynomial, specialize, CycloCtx, Cyclotomic};
pub use field::{CyclotomicField, FieldMode, GenericField, ScalarField};
pub use poly::IntPoly;
pub use qint::{q_minus_q_inv, quantum_factorial, quantum_int};
pub use ratfunc::RationalFunction;

use crate::expr::{self, Expr, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("[{0}]! vanishes at this root of unity")]
    DivisorVanishes(u32),
    #[error("denominator vanishes at a primitive {0}-th root of unity")]
    DenominatorVanishes(u32),
    #[error("root of unity order must be odd and greater than 1, got {0}")]
    InvalidOrder(u32),
}

/// Parses a scalar such as `q^2 + 1 + q^-2`, `3/2*q` or `(q)/(q^2 - 1)`.
pub fn parse_scalar(text: &str) -> Result<RationalFunction, ParseError> {
    eval_scalar(&expr::parse(text)?)
}

pub(crate) fn eval_scalar(e: &Expr) -> Result<RationalFunction, ParseError> {
    Ok(match e {
        Expr::Int(n) => RationalFunction::from_bigint(n.clone()),
        Expr::Sym { name, pos } => {
            if name == "q" {
                RationalFunction::q_pow(1)
            } else {
                return Err(ParseError::UnknownSymbol {
                    name: name.clone(),
                    pos: *pos,
                });
            }
        }
        Expr::Neg(a) => -eval_scalar(a)?,
        Expr::Add(a, b) => eval_scalar(a)? + eval_scalar(b)?,
        Expr::Sub(a, b) => eval_scalar(a)? - eval_scalar(b)?,
        Expr::Mul(a, b) => eval_scalar(a)? * eval_scalar(b)?,
        Expr::Div(a, b, pos) => eval_scalar(a)?
            .div(&eval_scalar(b)?)
            .map_err(|_| ParseError::Syntax {
                pos: *pos,
                msg: "division by zero".into(),
            })?,
        Expr::Pow(a, k, pos) => eval_scalar(a)?
            .pow(*k)
            .map_err(|_| ParseError::Syntax {
                pos: *pos,
                msg: "negative power of zero".into(),
            })?,
    })
}
