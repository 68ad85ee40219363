//! Unreduced expressions: sums of scalar multiples of words in the input
//! symbols, as produced by the parser.

use std::fmt;

use crate::coeff::ScalarField;
use crate::error::{Error, Result};
use crate::expr::{self, Expr, ParseError};

use super::monomial::Flavor;

/// Input symbols. `Eh`/`Fh` are the sandwiched generators `J E J`, `J F J`;
/// `Ev`/`Fv` are the bare generators of `vsl_q(2)`; `L` is the extra
/// generator `[E, F]` of the five-generator presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    E,
    F,
    K,
    Kb,
    J,
    Eh,
    Fh,
    Ev,
    Fv,
    L,
}

impl Symbol {
    pub fn lookup(name: &str, flavor: Flavor) -> Option<Symbol> {
        Some(match (name, flavor) {
            ("E", Flavor::W) => Symbol::E,
            ("F", Flavor::W) => Symbol::F,
            ("E", Flavor::V) | ("Ev", _) => Symbol::Ev,
            ("F", Flavor::V) | ("Fv", _) => Symbol::Fv,
            ("K" | "Kv", _) => Symbol::K,
            ("Kb" | "Kbv", _) => Symbol::Kb,
            ("J" | "Jv", _) => Symbol::J,
            ("Eh", _) => Symbol::Eh,
            ("Fh", _) => Symbol::Fh,
            ("L", _) => Symbol::L,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Symbol::E => "E",
            Symbol::F => "F",
            Symbol::K => "K",
            Symbol::Kb => "Kb",
            Symbol::J => "J",
            Symbol::Eh => "Eh",
            Symbol::Fh => "Fh",
            Symbol::Ev => "Ev",
            Symbol::Fv => "Fv",
            Symbol::L => "L",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FreeExpr<S> {
    pub terms: Vec<(S, Vec<Symbol>)>,
}

impl<S: Clone> FreeExpr<S> {
    pub fn zero() -> Self {
        FreeExpr { terms: Vec::new() }
    }

    pub fn scalar(c: S) -> Self {
        FreeExpr {
            terms: vec![(c, Vec::new())],
        }
    }

    pub fn word<F: ScalarField<Elem = S>>(w: Vec<Symbol>, field: &F) -> Self {
        FreeExpr {
            terms: vec![(field.one(), w)],
        }
    }

    fn is_scalar(&self) -> bool {
        self.terms.iter().all(|(_, w)| w.is_empty())
    }

    fn scalar_value<F: ScalarField<Elem = S>>(&self, field: &F) -> S {
        self.terms
            .iter()
            .fold(field.zero(), |acc, (c, _)| field.add(&acc, c))
    }

    pub fn add(mut self, other: Self) -> Self {
        self.terms.extend(other.terms);
        self
    }

    pub fn neg<F: ScalarField<Elem = S>>(self, field: &F) -> Self {
        FreeExpr {
            terms: self
                .terms
                .into_iter()
                .map(|(c, w)| (field.neg(&c), w))
                .collect(),
        }
    }

    pub fn mul<F: ScalarField<Elem = S>>(&self, other: &Self, field: &F) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, u) in &self.terms {
            for (b, v) in &other.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                terms.push((field.mul(a, b), w));
            }
        }
        FreeExpr { terms }
    }

    /// Whether any word uses one of `syms`.
    pub fn uses(&self, syms: &[Symbol]) -> bool {
        self.terms
            .iter()
            .any(|(_, w)| w.iter().any(|s| syms.contains(s)))
    }
}

impl<S: fmt::Display> fmt::Display for FreeExpr<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (c, w)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            let word: Vec<&str> = w.iter().map(|s| s.name()).collect();
            if word.is_empty() {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{}", word.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Parses an expression over the generators of the given flavor, resolving
/// scalar literals in `field`.
pub fn parse<F: ScalarField>(text: &str, flavor: Flavor, field: &F) -> Result<FreeExpr<F::Elem>> {
    eval(&expr::parse(text)?, flavor, field)
}

fn eval<F: ScalarField>(e: &Expr, flavor: Flavor, field: &F) -> Result<FreeExpr<F::Elem>> {
    Ok(match e {
        Expr::Int(n) => {
            let r = num_rational::BigRational::from_integer(n.clone());
            FreeExpr::scalar(field.from_rational(&r))
        }
        Expr::Sym { name, pos } => {
            if name == "q" {
                FreeExpr::scalar(field.q_pow(1))
            } else {
                let s = Symbol::lookup(name, flavor).ok_or_else(|| ParseError::UnknownSymbol {
                    name: name.clone(),
                    pos: *pos,
                })?;
                FreeExpr::word(vec![s], field)
            }
        }
        Expr::Neg(a) => eval(a, flavor, field)?.neg(field),
        Expr::Add(a, b) => eval(a, flavor, field)?.add(eval(b, flavor, field)?),
        Expr::Sub(a, b) => eval(a, flavor, field)?.add(eval(b, flavor, field)?.neg(field)),
        Expr::Mul(a, b) => eval(a, flavor, field)?.mul(&eval(b, flavor, field)?, field),
        Expr::Div(a, b, pos) => {
            let d = eval(b, flavor, field)?;
            if !d.is_scalar() {
                return Err(Error::NonScalarDivisor(*pos));
            }
            let inv = field.inv(&d.scalar_value(field))?;
            eval(a, flavor, field)?.mul(&FreeExpr::scalar(inv), field)
        }
        Expr::Pow(a, k, pos) => {
            let base = eval(a, flavor, field)?;
            if *k < 0 {
                if !base.is_scalar() {
                    return Err(Error::NegativePower(*pos));
                }
                let inv = field.inv(&base.scalar_value(field))?;
                let mut acc = field.one();
                for _ in 0..k.unsigned_abs() {
                    acc = field.mul(&acc, &inv);
                }
                FreeExpr::scalar(acc)
            } else {
                let mut acc = FreeExpr::scalar(field.one());
                for _ in 0..*k {
                    acc = acc.mul(&base, field);
                }
                acc
            }
        }
    })
}
