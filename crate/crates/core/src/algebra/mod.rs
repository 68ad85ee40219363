//! Words, PBW normal forms and algebra morphisms for `wsl_q(2)` and the
//! sandwiched model of `vsl_q(2)`.

pub mod checks;
mod engine;
pub mod maps;
mod free;
mod monomial;
mod morphism;

pub use engine::{Element, RuleSet, Strategy, WAlgebra};
pub use free::{parse, FreeExpr, Symbol};
pub use monomial::{reduce_j_power, Flavor, Gen, Monomial, Tail};
pub use morphism::{
    apply_morphism, relations, verify_relations, MorphismKind, MorphismSpec, Relation,
};

use crate::coeff::ScalarField;
use crate::error::{Error, Result};
use crate::lin::{join_terms, render_term};

/// Canonical text of an element, terms in basis order.
pub fn render<F: ScalarField>(x: &Element<F::Elem>, flavor: Flavor, field: &F) -> String {
    join_terms(
        x.iter()
            .map(|(m, c)| render_term(c, &m.render(flavor), field)),
    )
}

/// An element written back as an expression in the input symbols.
pub fn to_free<S: Clone>(x: &Element<S>, flavor: Flavor) -> Result<FreeExpr<S>> {
    let mut terms = Vec::new();
    for (m, c) in x {
        let mut w = Vec::new();
        match flavor {
            Flavor::W => {
                w.extend(std::iter::repeat_n(Symbol::E, m.e as usize));
                w.extend(std::iter::repeat_n(Symbol::F, m.f as usize));
            }
            Flavor::V => {
                if !m.is_sandwiched() {
                    return Err(Error::UnsupportedWord(format!(
                        "{m} is not in the span of sandwiched words"
                    )));
                }
                w.extend(std::iter::repeat_n(Symbol::Eh, m.e as usize));
                w.extend(std::iter::repeat_n(Symbol::Fh, m.f as usize));
            }
        }
        match m.tail {
            Tail::One => {}
            Tail::J => w.push(Symbol::J),
            Tail::K(l) => w.extend(std::iter::repeat_n(Symbol::K, l as usize)),
            Tail::Kb(l) => w.extend(std::iter::repeat_n(Symbol::Kb, l as usize)),
        }
        terms.push((c.clone(), w));
    }
    Ok(FreeExpr { terms })
}
