use std::collections::BTreeMap;

use crate::coeff::ScalarField;
use crate::error::{Error, Result};
use crate::report::{CheckItem, Report};

use super::engine::{Element, WAlgebra};
use super::free::{parse, FreeExpr, Symbol};
use super::monomial::Flavor;
use super::render;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismKind {
    Morphism,
    /// Reverses products: `m(xy) = m(y) m(x)`.
    AntiMorphism,
}

/// A map defined on generators, extended multiplicatively (or
/// anti-multiplicatively) and linearly. Images live in the target algebra.
#[derive(Clone, Debug)]
pub struct MorphismSpec<S> {
    pub name: String,
    pub kind: MorphismKind,
    /// Presentation used to parse source-side relations.
    pub source: Flavor,
    /// Flavor used to render target elements.
    pub target: Flavor,
    pub images: BTreeMap<Symbol, Element<S>>,
}

impl<S: Clone> MorphismSpec<S> {
    pub fn new(name: impl Into<String>, kind: MorphismKind, source: Flavor, target: Flavor) -> Self {
        MorphismSpec {
            name: name.into(),
            kind,
            source,
            target,
            images: BTreeMap::new(),
        }
    }

    pub fn image(mut self, s: Symbol, x: Element<S>) -> Self {
        self.images.insert(s, x);
        self
    }
}

/// Substitutes generator images and renormalizes in `target`.
pub fn apply_morphism<F: ScalarField>(
    m: &MorphismSpec<F::Elem>,
    x: &FreeExpr<F::Elem>,
    target: &WAlgebra<F>,
) -> Result<Element<F::Elem>> {
    let field = target.field();
    let mut out = Element::zero();
    for (c, w) in &x.terms {
        let mut imgs = Vec::with_capacity(w.len());
        for s in w {
            let img = match m.images.get(s) {
                Some(img) => img.clone(),
                None if *s == Symbol::J => {
                    // J = K Kb is not a generator; derive its image.
                    let k = m.images.get(&Symbol::K);
                    let kb = m.images.get(&Symbol::Kb);
                    match (k, kb, m.kind) {
                        (Some(k), Some(kb), MorphismKind::Morphism) => target.mul(k, kb),
                        (Some(k), Some(kb), MorphismKind::AntiMorphism) => target.mul(kb, k),
                        _ => return Err(missing(m, *s)),
                    }
                }
                None => return Err(missing(m, *s)),
            };
            imgs.push(img);
        }
        if m.kind == MorphismKind::AntiMorphism {
            imgs.reverse();
        }
        let prod = target.mul_all(imgs.iter());
        out.add_scaled(&prod, c, field);
    }
    Ok(out)
}

fn missing<S>(m: &MorphismSpec<S>, s: Symbol) -> Error {
    Error::UnsupportedWord(format!("{} has no image for {}", m.name, s.name()))
}

/// A named defining relation `lhs = rhs`, written in the expression grammar.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Relation {
    pub name: &'static str,
    pub lhs: &'static str,
    pub rhs: &'static str,
}

const fn rel(name: &'static str, lhs: &'static str, rhs: &'static str) -> Relation {
    Relation { name, lhs, rhs }
}

/// Defining relations of the supported presentations.
pub mod relations {
    use super::{rel, Relation};

    pub const W: &[Relation] = &[
        rel("w1", "K*Kb", "Kb*K"),
        rel("w2a", "K*Kb*K", "K"),
        rel("w2b", "Kb*K*Kb", "Kb"),
        rel("w3a", "K*E", "q^2*E*K"),
        rel("w3b", "Kb*E", "q^-2*E*Kb"),
        rel("w4a", "K*F", "q^-2*F*K"),
        rel("w4b", "Kb*F", "q^2*F*Kb"),
        rel("w5", "E*F - F*E", "(K - Kb)/(q - q^-1)"),
    ];

    /// The bare `vsl_q(2)` relations, over `Ev`, `Fv`.
    pub const V: &[Relation] = &[
        rel("v1", "K*Kb", "Kb*K"),
        rel("v2a", "K*Kb*K", "K"),
        rel("v2b", "Kb*K*Kb", "Kb"),
        rel("v3", "K*Ev*Kb", "q^2*Ev"),
        rel("v4", "K*Fv*Kb", "q^-2*Fv"),
        rel("v5", "Ev*J*Fv - Fv*J*Ev", "(K - Kb)/(q - q^-1)"),
    ];

    /// The five-generator presentation with `L` standing for `[E, F]`.
    pub const W_PRIME: &[Relation] = &[
        rel("q1", "K*Kb", "Kb*K"),
        rel("q2a", "K*Kb*K", "K"),
        rel("q2b", "Kb*K*Kb", "Kb"),
        rel("q3a", "K*E", "q^2*E*K"),
        rel("q3b", "Kb*E", "q^-2*E*Kb"),
        rel("q4a", "K*F", "q^-2*F*K"),
        rel("q4b", "Kb*F", "q^2*F*Kb"),
        rel("q5", "L*E - E*L", "q*(E*K + Kb*E)"),
        rel("q6", "L*F - F*L", "-q^-1*(F*K + Kb*F)"),
        rel("q7a", "E*F - F*E", "L"),
        rel("q7b", "(q - q^-1)*L", "K - Kb"),
    ];
}

/// Checks `m(lhs) = m(rhs)` in `target` for every relation.
pub fn verify_relations<F: ScalarField>(
    m: &MorphismSpec<F::Elem>,
    rels: &[Relation],
    target: &WAlgebra<F>,
) -> Report {
    let field = target.field();
    let items = rels
        .iter()
        .map(|r| {
            let input = format!("{}: {} = {}", r.name, r.lhs, r.rhs);
            let side = |text: &str| -> Result<String> {
                let x = parse(text, m.source, field)?;
                Ok(render(&apply_morphism(m, &x, target)?, m.target, field))
            };
            match (side(r.lhs), side(r.rhs)) {
                (Ok(l), Ok(r)) => CheckItem::new(input, r, l),
                (l, r) => {
                    let err = l.err().or(r.err()).unwrap();
                    CheckItem::with_pass(input, "<defined>".into(), format!("error: {err}"), false)
                }
            }
        })
        .collect();
    Report::new(format!("relations under {}", m.name), items)
}
